#pragma once

// Constructors for the named situses: generalized Stone spaces of structures,
// linear-order objects with tails filters, star-adjoined orders, monotone-
// pieces orders, initial-interval chains, the existential consistency space,
// tree objects with the antichain neighbourhood system, and shifted
// structures.

#include <vector>

#include "situskit/fostruct.hpp"
#include "situskit/indisc.hpp"
#include "situskit/simplex.hpp"

namespace situskit {

enum class StoneVariant { Extendable, Plain, Consecutive };

IndiscKind kind_of(StoneVariant v);

// M_•^Σ truncated at `depth`; carriers are |M|^n, filters are generated per
// formula by the tuples that are indiscernible (Plain) or N-extendable
// (Extendable / Consecutive) in the matching sense.
TruncatedSitus stone_space(const FinStructure& M,
                           const std::vector<TruthTable>& sigma,
                           StoneVariant variant, int N, int depth);

// M_•/A: stone space quotiented by same-orbit-over-A per level.
TruncatedSitus stone_quotient(const FinStructure& M,
                              const std::vector<TruthTable>& sigma,
                              const std::vector<int>& A, StoneVariant variant,
                              int N, int depth,
                              LevelEquivalence* out_equiv = nullptr);

LevelEquivalence orbit_equivalence(const FinStructure& M,
                                   const std::vector<int>& A, int depth);

enum class OrderFlavor { Ordered, SetFlavor };
enum class OrderFilterKind { Antidiscrete, Tails };

TruncatedSitus order_object(const FinPreorder& I, OrderFlavor flavor,
                            OrderFilterKind filt, int depth);

// The linear order 0<..<len-1 with a new top element adjoined (atom id =
// len).  Tails generators run over final segments of the original chain;
// `tails_include_top` controls whether the adjoined point belongs to them.
TruncatedSitus chain_with_top(int len, bool tails_include_top, int depth);

// ({*} ⊔ k)^
//  atom 0 is *, atoms 1..k are the chain; single generator per level: tuples
//  whose non-* entries occur in weakly increasing order.
TruncatedSitus star_order(int k, int depth);

// I^{<=_n}: generator = tuples decomposable into at most `pieces` monotone
// subsequences (each weakly increasing or weakly decreasing).  pieces = 1 is
// the NSOP object I^{<>}.
TruncatedSitus monotone_pieces_order(const FinPreorder& I, int pieces,
                                     int depth);

// α^>: set-corepresented chain with the weakly-decreasing-tuple generator.
TruncatedSitus initial_interval_order(int len, int depth);

// M_•^{∃xφ(x,-)}: phi must have exactly two free variables (witness,
// parameter); generator at level n is the set of parameter tuples whose
// instances admit a common witness.
TruncatedSitus consistency_space(const FinStructure& M, const Formula& phi,
                                 int depth);
TruncatedSitus consistency_space(const FinStructure& M, const TruthTable& phi,
                                 int depth);

struct FinTree {
  int branching = 0;
  int depth_d = 0;
  Carrier nodes;  // sequences over {1..b} of length <= d, including the root

  static FinTree make(int branching, int depth_d);
  bool prefix_le(int a, int b) const;
  bool lex_le(int a, int b) const;
  bool fan_le(int a, int b) const;  // same parent, child index order
  FinPreorder prefix_preorder() const;
  FinPreorder lex_preorder() const;
};

struct TreeObjects {
  TruncatedSitus prefix;
  TruncatedSitus lex;
  // Strict antichain object: lex-sorted tuples of distinct pairwise-prefix-
  // incomparable nodes; only strictly increasing index lists act on it.
  TruncatedSitus antichain;
  // Face-closed union of the prefix object and the antichain tuples, with the
  // neighbourhood system "contains all prefix tuples and meets every embedded
  // full subtree's antichain tuples"; this is the middle object of the tree
  // property lifting.
  TruncatedSitus prefix_union_antichain;
  // Embedded full (b,d)-subtree copies, as sorted node-id sets.
  std::vector<std::vector<int>> copies;
};

TreeObjects tree_objects(const FinTree& T, int depth);

// M[+∞]_•: level n carrier is |M|^{n+1}; faces fix the last coordinate.
// Filters are generated per (r+1)-ary formula by the tuples (a,p) whose head
// is indiscernible with consecutive repetitions for phi(-,p).
TruncatedSitus shifted_structure(const FinStructure& M,
                                 const std::vector<TruthTable>& sigma_param,
                                 int depth);

// Extendable flavour used for non-dividing: (a,p) is in the generator when a
// embeds into a sequence with at least N distinct values indiscernible with
// repetitions for every parameter-free formula and every phi(-,p).
TruncatedSitus shifted_structure_extendable(
    const FinStructure& M, const std::vector<TruthTable>& sigma_free,
    const std::vector<TruthTable>& sigma_param, int N, int depth);

// Level-wise map (a_1..a_n, p) -> (a_1..a_n) from a shifted structure to a
// stone space over the same universe.
SitusMorphism shifted_projection(const TruncatedSitus& shifted,
                                 const TruncatedSitus& base);

}  // namespace situskit
