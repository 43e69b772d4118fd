#pragma once

// Indiscernibility predicates on finite sequences and the EM formula
// constructors that express them as single formulas.

#include <vector>

#include "situskit/fostruct.hpp"

namespace situskit {

enum class IndiscKind {
  Sequence,                     // truth constant on weakly increasing index tuples
  OrderIndiscernible,           // truth constant on all index tuples
  WithRepetitions,              // strictly increasing indices, distinct values
  OrderWithRepetitions,         // distinct indices any order, distinct values
  ConsecutiveRepetitions,       // subsequences with distinct consecutive entries
  OrderConsecutiveRepetitions,  // order variant of the previous
};

bool is_indiscernible(const FinStructure& M, const TruthTable& phi,
                      const Tuple& seq, IndiscKind kind);
bool is_indiscernible(const FinStructure& M, const Formula& phi,
                      const Tuple& seq, IndiscKind kind);

// A sequence is N-extendable when it embeds as a subsequence of a sequence
// that passes is_indiscernible for every listed formula and carries at least
// N distinct values.  Insertions at arbitrary positions are allowed: this is
// what makes the coordinate-selection maps of the associated spaces
// continuous at a fixed N.
bool is_extendable(const FinStructure& M, const std::vector<TruthTable>& sigma,
                   const Tuple& seq, int N, IndiscKind kind);

enum class EMVariant { EM, EMprime, EMoneprime };

struct EMFormulaSpec {
  Formula base;  // arity r (EM, EMprime) or r+1 (EMoneprime, last = parameter)
  int width = 1;
  EMVariant variant = EMVariant::EM;
};

// The guarded conjunction asserting that a width-n tuple is phi-indiscernible
// with (consecutive) repetitions.  The consecutive variants carry
// separability disjuncts so that the formula agrees with the subsequence
// reading of "indiscernible with consecutive repetitions".
Formula em_formula(const EMFormulaSpec& spec);

}  // namespace situskit
