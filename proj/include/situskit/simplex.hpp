#pragma once

// Truncated simplicial filters.  A situs of depth N stores, for each level
// n = 1..N, a carrier of n-simplices with a filter, plus the full table of
// structure maps [i1<=..<=in] : level m -> level n (coordinate selection for
// corepresented objects), covering faces and degeneracies alike.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "situskit/filters.hpp"
#include "situskit/fostruct.hpp"

namespace situskit {

struct FinPreorder {
  Carrier elems;  // width-1 tuples
  std::vector<std::vector<bool>> leq;

  bool le(int a, int b) const {
    return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int size() const { return static_cast<int>(elems.size()); }

  bool transitive() const;
  bool reflexive() const;
  bool total() const;
  bool antisymmetric() const;
  bool linear() const { return reflexive() && total() && antisymmetric(); }
  // the "set" preorder: one equivalence class
  bool set_like() const;

  static FinPreorder chain(int n);
  static FinPreorder set(int n);
  static FinPreorder from_leq(int n, const std::vector<std::pair<int, int>>& le,
                              bool reflexive_close = true);
};

// Weakly increasing index list [i1<=..<=in] with entries in 1..m, the source
// level; the map sends level m to level n = list size.
using FaceKey = std::pair<int, std::vector<int>>;

struct TruncatedSitus {
  int depth = 0;
  std::vector<Carrier> levels;   // levels[n-1]
  std::vector<Filter> filters;   // filters[n-1]
  std::map<FaceKey, SetMap> faces;
  // False for objects whose carriers are not closed under degeneracies (the
  // strict antichain object); only the stored faces are then meaningful.
  bool complete_faces = true;
  std::optional<FinPreorder> corep;

  const Carrier& level(int n) const {
    return levels[static_cast<std::size_t>(n - 1)];
  }
  const Filter& filter(int n) const {
    return filters[static_cast<std::size_t>(n - 1)];
  }
  Filter& filter(int n) { return filters[static_cast<std::size_t>(n - 1)]; }
  const SetMap& face(int m, const std::vector<int>& idx) const;
  bool has_face(int m, const std::vector<int>& idx) const;
};

struct Violation {
  int level_from = 0;
  int level_to = 0;
  std::vector<int> face;
  std::string kind;    // "identity" | "continuity" | "missing" | "typing"
  std::string detail;  // witness base element or composite description
};

std::vector<int> compose_index_lists(const std::vector<int>& outer,
                                     const std::vector<int>& inner);

// All weakly increasing lists over 1..m of length n.
std::vector<std::vector<int>> weakly_increasing_lists(int m, int n);

// Builds every structure map by coordinate selection on tuple carriers.
// Carriers must consist of width-n tuples at level n and be selection-closed.
void build_faces_from_tuples(TruncatedSitus& X);

TruncatedSitus corepresented_by_preorder(
    const FinPreorder& P, int depth,
    const std::vector<Filter>* level_filters = nullptr);

std::vector<Violation> validate(const TruncatedSitus& X);

TruncatedSitus terminal_situs(int depth);
TruncatedSitus initial_situs(int depth);

// X ∘ [+∞]: level n of the result is level n+1 of X; depth drops by one.
TruncatedSitus shift(const TruncatedSitus& X);

struct SitusMorphism {
  std::vector<SetMap> level_maps;  // level_maps[n-1] : X(n) -> Y(n)

  int depth() const { return static_cast<int>(level_maps.size()); }
  const SetMap& level(int n) const {
    return level_maps[static_cast<std::size_t>(n - 1)];
  }
  bool operator==(const SitusMorphism&) const = default;
};

// The natural map shift(X) -> X, [1<=..<=n] at every level (drops the last
// coordinate; at level 1 it is (a,b) |-> a).
SitusMorphism shift_nat(const TruncatedSitus& X);

TruncatedSitus quotient(const TruncatedSitus& X, const LevelEquivalence& E);
SitusMorphism quotient_projection(const TruncatedSitus& X,
                                  const TruncatedSitus& Q,
                                  const LevelEquivalence& E);

// Coproduct.  Atom ids of summand k are offset by the total size of earlier
// summands' level-1 carriers, so tuples remain disjoint.
TruncatedSitus disjoint_union(const std::vector<const TruncatedSitus*>& parts);

bool morphism_commutes_with_faces(const TruncatedSitus& X,
                                  const TruncatedSitus& Y,
                                  const SitusMorphism& h);
bool morphism_continuous(const TruncatedSitus& X, const TruncatedSitus& Y,
                         const SitusMorphism& h);

SitusMorphism compose(const SitusMorphism& g, const SitusMorphism& f);

}  // namespace situskit
