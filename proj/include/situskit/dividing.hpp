#pragma once

// Paired checkers for the classification-theoretic dividing lines: a direct
// combinatorial oracle next to the lifting-property reformulation, with both
// results and the run configuration recorded in a Verdict.

#include <map>
#include <string>
#include <vector>

#include "situskit/geometry.hpp"
#include "situskit/homlift.hpp"
#include "situskit/indisc.hpp"
#include "situskit/stone.hpp"

namespace situskit {

struct CheckConfig {
  int depth = 3;
  int chain = 0;     // 0: |universe| + 2
  int distinct = 0;  // 0: |universe|
  int qdepth = 1;
  int kernel_literals = 2;
  StoneVariant variant = StoneVariant::Extendable;

  int chain_for(const FinStructure& M) const {
    return chain > 0 ? chain : M.size() + 2;
  }
  int distinct_for(const FinStructure& M) const {
    return distinct > 0 ? distinct : M.size();
  }
  CutoffOptions cutoff() const { return {qdepth, kernel_literals, true}; }
};

struct Verdict {
  std::string property;
  bool holds = false;         // lifting-side result
  bool oracle_holds = false;  // direct oracle result
  std::map<std::string, bool> parts;
  std::map<std::string, std::string> witness;
  std::map<std::string, std::string> config;

  bool agree() const { return holds == oracle_holds; }
};

Verdict stability(const FinStructure& M, const TruthTable& phi,
                  const CheckConfig& cfg = {});
Verdict eventual_stability(const FinStructure& M, const TruthTable& phi,
                           const CheckConfig& cfg = {});

// oracle (eventual phi(-,b)-indiscernibility), the injective almost-lifting
// of the parameter-free spaces, and the exact lifting with consecutive-
// repetition spaces; `holds` is the exact lifting.
Verdict nip(const FinStructure& M, const CheckConfig& cfg = {});

// Order property at length k (2k pairwise distinct elements) against the
// existence of a continuous surjection onto the star order, plus the NSOP
// searches and the boundedness liftings.
Verdict op_nsop(const FinStructure& M, int k, const CheckConfig& cfg = {});

Verdict non_dividing(const FinStructure& M, const std::vector<int>& A, int a,
                     int b, const CheckConfig& cfg = {});

enum class TreeCheckMode { Oracle, Lifting, Both };

Verdict tree_property(const FinStructure& M, const TruthTable& phi,
                      int branching, int tree_depth, int k,
                      TreeCheckMode mode = TreeCheckMode::Both,
                      const CheckConfig& cfg = {});

enum class RepresentMode { EM, EMinfty, Represents };

bool em_represents(const FinStructure& I, const FinStructure& M,
                   const SetMap& f, RepresentMode mode, int L,
                   const CheckConfig& cfg = {});

FinStructure unary_reduct(const FinStructure& I);

// Every coordinate permutation of every level is a continuous self-map.
bool is_symmetric(const TruncatedSitus& X);
// Each level-n filter (n > 3) is the coarsest one induced by the [i<=j<=k]
// faces into level 3.
bool is_two_dimensional(const TruncatedSitus& X);

// Parameter-free cutoff family of arities 1 and 2.
std::vector<TruthTable> base_cutoff(const FinStructure& M,
                                    const CheckConfig& cfg);
// Parameter formulas phi(-, b): bound unary (from binary, full qdepth) and
// bound binary (from ternary atoms).
std::vector<TruthTable> parameter_cutoff(const FinStructure& M,
                                         const CheckConfig& cfg);

}  // namespace situskit
