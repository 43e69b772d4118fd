#pragma once

// Finite first-order structures: relational signatures with optional unary
// functions and constants, a small formula language with parser and Tarskian
// evaluator, automorphism groups by backtracking, and type orbits.
//
// Formula grammar (surface syntax):
//   formula := quant | bool
//   quant   := ("forall"|"exists") var "." formula
//   bool    := atom | "~" bool | "(" formula ("&"|"|"|"->"|"<->") formula ")"
//   atom    := term "=" term | RelName "(" term {"," term} ")" | term RelOp term
//   term    := var | FunName "(" term ")" | ConstName
// RelOp covers symbolically named binary relations (e.g. "<=") used infix.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "situskit/filters.hpp"

namespace situskit {

struct Signature {
  struct Rel {
    std::string name;
    int arity = 0;
  };
  std::vector<Rel> rels;
  std::vector<std::string> funs;  // unary
  std::vector<std::string> consts;

  const Rel* find_rel(const std::string& n) const;
  bool has_fun(const std::string& n) const;
  bool has_const(const std::string& n) const;
};

struct FinStructure {
  Signature sig;
  std::vector<std::string> universe;  // element names; index is the id
  std::map<std::string, std::set<Tuple>> rels;
  std::map<std::string, std::vector<int>> funs;  // total tables
  std::map<std::string, int> consts;

  int size() const { return static_cast<int>(universe.size()); }
  int element(const std::string& name) const;  // throws when absent
  bool rel_holds(const std::string& r, const Tuple& t) const;
};

struct Term {
  enum Kind { Var, Fun, Const, Param };
  Kind kind = Var;
  std::string name;            // var / fun / const name
  std::unique_ptr<Term> arg;   // Fun only
  int param = -1;              // Param only: a universe element id

  Term clone() const;
};

struct Formula {
  enum Kind { Eq, Rel, Not, And, Or, Imp, Iff, Forall, Exists, Truth };
  Kind kind = Truth;
  std::string name;                       // Rel name / quantified var
  std::vector<Term> terms;                // Eq (2) or Rel args
  std::vector<std::unique_ptr<Formula>> sub;

  Formula() = default;
  Formula(const Formula&) = delete;
  Formula(Formula&&) = default;
  Formula& operator=(Formula&&) = default;

  Formula clone() const;

  // Free variables in order of first occurrence.
  std::vector<std::string> free_vars() const;
  std::string to_string() const;
};

Formula parse_formula(const std::string& text, const Signature& sig);

// assignment[i] is the value of the i-th free variable (first-occurrence
// order); its length must match free_vars().
bool eval(const FinStructure& M, const Formula& phi, const Tuple& assignment);

// Truth table of a formula over universe^arity, row-major with the first
// variable as the most significant digit.
struct TruthTable {
  int arity = 0;
  int universe = 0;
  std::vector<char> vals;
  std::string label;

  bool at(const Tuple& t) const;
  bool operator==(const TruthTable& o) const {
    return arity == o.arity && universe == o.universe && vals == o.vals;
  }
};

TruthTable truth_table(const FinStructure& M, const Formula& phi);

// Substitutes universe element `value` for the last free variable.
Formula bind_last_var(const Formula& phi, int value,
                      const FinStructure& M);

std::vector<std::vector<int>> automorphisms(const FinStructure& M);

struct LevelEquivalence {
  // classes[n-1][i] is the class id of element i of the level-n carrier.
  std::vector<std::vector<int>> classes;
};

// Partition of universe^n into orbits of the pointwise-A-fixing automorphism
// subgroup.  Tuples are indexed in lexicographic order.
std::vector<int> type_orbits(const FinStructure& M, const std::vector<int>& A,
                             int n);

// --- formula cutoffs -------------------------------------------------------
//
// "All formulas of quantifier depth <= q with <= v variables" is approximated
// by atomic formulas plus quantified conjunctions of at most
// `max_kernel_literals` literals, with semantic deduplication by truth table.
// Boolean combinations are omitted: indiscernibility relative to a family is
// unchanged by closing it under Boolean connectives.  Negations are included
// (they matter for order-property searches).

struct CutoffOptions {
  int qdepth = 1;
  int max_kernel_literals = 2;
  bool include_negations = true;
};

std::vector<TruthTable> cutoff_formulas(const FinStructure& M, int free_vars,
                                        const CutoffOptions& opt = {});

// Quantifier-free fragment (atoms over function-term closure, plus
// negations), used for EM-representation checks.
std::vector<TruthTable> qf_atom_tables(const FinStructure& M, int free_vars,
                                       bool include_negations = true);

// phi(x_1..x_r, y) |-> family { phi(x_1..x_r, b) : b in M } for every table
// in `base` of arity r+1.
std::vector<TruthTable> bind_parameters(const FinStructure& M,
                                        const std::vector<TruthTable>& base);

// Composition closure of the unary functions, identity included.
std::vector<std::vector<int>> function_monoid(const FinStructure& M,
                                              std::vector<std::string>* names);

// Fixes the last variable of a table to the element b.
TruthTable slice_last(const TruthTable& t, int b,
                      const std::string& label_suffix = "");

}  // namespace situskit
