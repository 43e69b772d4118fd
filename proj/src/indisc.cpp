#include "situskit/indisc.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace situskit {

namespace {

// Position tuples whose value tuples must give constant truth of phi.
// `separable` marks increasing tuples whose adjacent equal-valued picks can
// be split by an intermediate element of a different value; those are exactly
// the tuples reachable inside a subsequence with distinct consecutive
// entries.
bool separable(const Tuple& seq, const std::vector<int>& pos) {
  for (std::size_t s = 0; s + 1 < pos.size(); ++s) {
    int a = pos[s], b = pos[s + 1];
    if (seq[static_cast<std::size_t>(a)] != seq[static_cast<std::size_t>(b)])
      continue;
    bool split = false;
    for (int t = a + 1; t < b && !split; ++t)
      if (seq[static_cast<std::size_t>(t)] != seq[static_cast<std::size_t>(a)])
        split = true;
    if (!split) return false;
  }
  return true;
}

bool distinct_values(const Tuple& seq, const std::vector<int>& pos) {
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (seq[static_cast<std::size_t>(pos[i])] ==
          seq[static_cast<std::size_t>(pos[j])])
        return false;
  return true;
}

template <typename Fn>
bool for_each_position_tuple(int len, int r, IndiscKind kind, const Tuple& seq,
                             Fn&& fn) {
  std::vector<int> pos;
  bool ordered = kind == IndiscKind::Sequence ||
                 kind == IndiscKind::WithRepetitions ||
                 kind == IndiscKind::ConsecutiveRepetitions;
  bool strict = kind != IndiscKind::Sequence && kind != IndiscKind::OrderIndiscernible;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(pos.size()) == r) {
      switch (kind) {
        case IndiscKind::Sequence:
        case IndiscKind::OrderIndiscernible:
          break;
        case IndiscKind::WithRepetitions:
        case IndiscKind::OrderWithRepetitions:
          if (!distinct_values(seq, pos)) return true;
          break;
        case IndiscKind::ConsecutiveRepetitions:
          if (!separable(seq, pos)) return true;
          break;
        case IndiscKind::OrderConsecutiveRepetitions: {
          std::vector<int> sorted = pos;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return true;  // repeated position
          if (!separable(seq, sorted)) return true;
          break;
        }
      }
      return fn(pos);
    }
    int lo = 0;
    if (ordered && !pos.empty()) lo = pos.back() + (strict ? 1 : 0);
    for (int i = lo; i < len; ++i) {
      if (!ordered && kind == IndiscKind::OrderWithRepetitions) {
        if (std::find(pos.begin(), pos.end(), i) != pos.end()) continue;
      }
      if (!ordered && kind == IndiscKind::OrderConsecutiveRepetitions) {
        if (std::find(pos.begin(), pos.end(), i) != pos.end()) continue;
      }
      pos.push_back(i);
      if (!rec()) return false;
      pos.pop_back();
    }
    return true;
  };
  return rec();
}

}  // namespace

bool is_indiscernible(const FinStructure& M, const TruthTable& phi,
                      const Tuple& seq, IndiscKind kind) {
  (void)M;
  const int r = phi.arity;
  const int len = static_cast<int>(seq.size());
  if (r == 0 || len < r) return true;
  int seen = -1;  // -1 unseen, else 0/1
  bool constant = for_each_position_tuple(
      len, r, kind, seq, [&](const std::vector<int>& pos) {
        Tuple vals;
        vals.reserve(pos.size());
        for (int p : pos) vals.push_back(seq[static_cast<std::size_t>(p)]);
        int v = phi.at(vals) ? 1 : 0;
        if (seen < 0) seen = v;
        return seen == v;
      });
  return constant;
}

bool is_indiscernible(const FinStructure& M, const Formula& phi,
                      const Tuple& seq, IndiscKind kind) {
  return is_indiscernible(M, truth_table(M, phi), seq, kind);
}

namespace {

bool all_indiscernible(const FinStructure& M,
                       const std::vector<TruthTable>& sigma, const Tuple& seq,
                       IndiscKind kind) {
  for (const auto& phi : sigma)
    if (!is_indiscernible(M, phi, seq, kind)) return false;
  return true;
}

bool extend_search(const FinStructure& M, const std::vector<TruthTable>& sigma,
                   const Tuple& cur, int need, IndiscKind kind) {
  if (!all_indiscernible(M, sigma, cur, kind)) return false;
  if (need <= 0) return true;
  std::set<int> present(cur.begin(), cur.end());
  for (int v = 0; v < M.size(); ++v) {
    if (present.count(v)) continue;
    for (std::size_t at = 0; at <= cur.size(); ++at) {
      Tuple next = cur;
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(at), v);
      if (extend_search(M, sigma, next, need - 1, kind)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_extendable(const FinStructure& M, const std::vector<TruthTable>& sigma,
                   const Tuple& seq, int N, IndiscKind kind) {
  std::set<int> vals(seq.begin(), seq.end());
  int need = N - static_cast<int>(vals.size());
  if (need > 0 && static_cast<int>(vals.size()) + (M.size() - static_cast<int>(vals.size())) < N)
    return false;  // not enough elements in the structure
  return extend_search(M, sigma, seq, need, kind);
}

// --- EM formulas -----------------------------------------------------------

namespace {

std::string xvar(int i) { return "x" + std::to_string(i); }

Formula mk_true() {
  Formula f;
  f.kind = Formula::Truth;
  return f;
}

Formula var_term_eq(int a, int b) {
  Formula f;
  f.kind = Formula::Eq;
  Term ta, tb;
  ta.kind = Term::Var;
  ta.name = xvar(a);
  tb.kind = Term::Var;
  tb.name = xvar(b);
  f.terms.push_back(std::move(ta));
  f.terms.push_back(std::move(tb));
  return f;
}

Formula mk_not(Formula f) {
  Formula g;
  g.kind = Formula::Not;
  g.sub.push_back(std::make_unique<Formula>(std::move(f)));
  return g;
}

Formula mk_bin(Formula::Kind k, Formula a, Formula b) {
  Formula g;
  g.kind = k;
  g.sub.push_back(std::make_unique<Formula>(std::move(a)));
  g.sub.push_back(std::make_unique<Formula>(std::move(b)));
  return g;
}

Formula conj(std::vector<Formula> fs) {
  if (fs.empty()) return mk_true();
  Formula acc = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    acc = mk_bin(Formula::And, std::move(fs.back()), std::move(acc));
    fs.pop_back();
  }
  return acc;
}

Formula disj(std::vector<Formula> fs) {
  if (fs.empty()) return mk_not(mk_true());
  Formula acc = std::move(fs.back());
  fs.pop_back();
  while (!fs.empty()) {
    acc = mk_bin(Formula::Or, std::move(fs.back()), std::move(acc));
    fs.pop_back();
  }
  return acc;
}

void rename_term_vars(Term& t, const std::map<std::string, std::string>& ren) {
  if (t.kind == Term::Var) {
    auto it = ren.find(t.name);
    if (it != ren.end()) t.name = it->second;
  } else if (t.kind == Term::Fun && t.arg) {
    rename_term_vars(*t.arg, ren);
  }
}

void rename_free_vars(Formula& f, std::map<std::string, std::string> ren) {
  switch (f.kind) {
    case Formula::Eq:
    case Formula::Rel:
      for (auto& t : f.terms) rename_term_vars(t, ren);
      return;
    case Formula::Forall:
    case Formula::Exists:
      ren.erase(f.name);
      rename_free_vars(*f.sub[0], std::move(ren));
      return;
    default:
      for (auto& s : f.sub) rename_free_vars(*s, ren);
  }
}

// phi with its free variables substituted by x_{idx[0]}, x_{idx[1]}, ...
Formula instantiate(const Formula& phi, const std::vector<int>& idx) {
  Formula g = phi.clone();
  auto fv = phi.free_vars();
  std::map<std::string, std::string> ren;
  for (std::size_t k = 0; k < fv.size(); ++k)
    ren[fv[k]] = "#" + std::to_string(k);  // two-step to avoid collisions
  rename_free_vars(g, ren);
  ren.clear();
  for (std::size_t k = 0; k < fv.size(); ++k)
    ren["#" + std::to_string(k)] = xvar(idx[k]);
  rename_free_vars(g, ren);
  return g;
}

std::vector<std::vector<int>> increasing_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Guard for one index tuple.  EM: all picks pairwise distinct.  EMprime /
// EMoneprime: each adjacent pick pair distinct or separated by an
// intermediate variable with a different value.
Formula guard_for(const std::vector<int>& I, EMVariant variant) {
  std::vector<Formula> parts;
  if (variant == EMVariant::EM) {
    for (std::size_t s = 0; s < I.size(); ++s)
      for (std::size_t t = s + 1; t < I.size(); ++t)
        parts.push_back(mk_not(var_term_eq(I[s], I[t])));
  } else {
    for (std::size_t s = 0; s + 1 < I.size(); ++s) {
      std::vector<Formula> alts;
      alts.push_back(mk_not(var_term_eq(I[s], I[s + 1])));
      for (int t = I[s] + 1; t < I[s + 1]; ++t)
        alts.push_back(mk_not(var_term_eq(t, I[s])));
      parts.push_back(disj(std::move(alts)));
    }
  }
  return conj(std::move(parts));
}

}  // namespace

Formula em_formula(const EMFormulaSpec& spec) {
  const int n = spec.width;
  if (n < 1) throw DomainError("em_formula: width must be positive");
  auto fv = spec.base.free_vars();
  int r = static_cast<int>(fv.size());
  int param_slot = 0;
  if (spec.variant == EMVariant::EMoneprime) {
    if (r < 2) throw DomainError("em_formula: EM1' base must have arity >= 2");
    r -= 1;  // last base variable is the parameter slot
    param_slot = n + 1;
  }
  if (r < 1) throw DomainError("em_formula: base formula has no free variables");

  // Leading x_i = x_i conjuncts pin the free-variable order and the width.
  std::vector<Formula> parts;
  int total_vars = spec.variant == EMVariant::EMoneprime ? n + 1 : n;
  for (int i = 1; i <= total_vars; ++i) parts.push_back(var_term_eq(i, i));

  auto tuples = increasing_subsets(n, r);
  for (const auto& I : tuples)
    for (const auto& J : tuples) {
      std::vector<int> argsI = I, argsJ = J;
      if (spec.variant == EMVariant::EMoneprime) {
        argsI.push_back(param_slot);
        argsJ.push_back(param_slot);
      }
      Formula body = mk_bin(Formula::Iff, instantiate(spec.base, argsI),
                            instantiate(spec.base, argsJ));
      Formula g = mk_bin(
          Formula::And,
          guard_for(I, spec.variant),
          guard_for(J, spec.variant));
      parts.push_back(mk_bin(Formula::Imp, std::move(g), std::move(body)));
    }
  return conj(std::move(parts));
}

}  // namespace situskit
