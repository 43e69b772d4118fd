#pragma once

// Metric, uniform, and topological structures as situses: the filter of
// uniform neighbourhoods of the main diagonal, the Bourbaki uniformity
// axioms, the filter of coverings, and the completeness / compactness
// lifting properties.

#include <string>
#include <vector>

#include "situskit/simplex.hpp"

namespace situskit {

struct FinMetric {
  Carrier points;  // width-1 tuples
  std::vector<std::vector<long long>> dist;

  int size() const { return static_cast<int>(points.size()); }
  long long d(int a, int b) const {
    return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  void check() const;  // symmetry, zero diagonal, triangle inequality
};

TruncatedSitus metric_situs(const FinMetric& M, int depth);

struct UniformityReport {
  bool contains_diagonal = false;   // U_I
  bool inverse_closed = false;      // U_II
  bool half_size_exists = false;    // U_III: some W with W∘W ⊆ V
  bool level3_composition = false;  // continuity of [1,3] from the coarsest
                                    // filter generated by [1,2] and [2,3]
  std::string detail;
  bool all() const {
    return contains_diagonal && inverse_closed && half_size_exists &&
           level3_composition;
  }
};

// U is a filter on an n×n carrier, pairs indexed as a*n+b.
UniformityReport uniformity_axioms(const Filter& U, int npoints);

struct FinTopology {
  int npoints = 0;
  std::vector<IndexSet> opens;

  void check() const;
  bool connected() const;
  IndexSet min_nbhd(int x) const;  // smallest open set containing x
};

TruncatedSitus covering_situs(const FinTopology& T, int depth);

bool is_morphism_uniform(const SetMap& f, const FinMetric& M1,
                         const FinMetric& M2, int depth);

struct CompleteReport {
  bool shift_lifting = false;     // ⊥ → |I|^tails ⋔ M∘[+∞] → M
  bool adjoined_top_lifting = false;  // I^{≤tails} → (I⊔{∞})^{≤tails∪{∞}} ⋔ M → ⊤
  bool holds() const { return shift_lifting && adjoined_top_lifting; }
};

CompleteReport is_complete_lp(const FinMetric& M, int chain_len, int depth);

struct CompactReport {
  bool factor_lifting = false;  // every map to α^> factors through some β^>
  bool no_surjection = false;
  std::size_t maps_checked = 0;
  std::string witness;  // a surjective map, when one exists
  bool holds() const { return factor_lifting && no_surjection; }
};

CompactReport compactness_lp(const FinTopology& T, int alpha, int depth);

}  // namespace situskit
