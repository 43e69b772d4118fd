#include "situskit/fostruct.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace situskit {

const Signature::Rel* Signature::find_rel(const std::string& n) const {
  for (const auto& r : rels)
    if (r.name == n) return &r;
  return nullptr;
}

bool Signature::has_fun(const std::string& n) const {
  return std::find(funs.begin(), funs.end(), n) != funs.end();
}

bool Signature::has_const(const std::string& n) const {
  return std::find(consts.begin(), consts.end(), n) != consts.end();
}

int FinStructure::element(const std::string& name) const {
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (universe[i] == name) return static_cast<int>(i);
  throw DomainError("unknown element: " + name);
}

bool FinStructure::rel_holds(const std::string& r, const Tuple& t) const {
  auto it = rels.find(r);
  return it != rels.end() && it->second.count(t) > 0;
}

Term Term::clone() const {
  Term t;
  t.kind = kind;
  t.name = name;
  t.param = param;
  if (arg) t.arg = std::make_unique<Term>(arg->clone());
  return t;
}

Formula Formula::clone() const {
  Formula f;
  f.kind = kind;
  f.name = name;
  for (const auto& t : terms) f.terms.push_back(t.clone());
  for (const auto& s : sub) f.sub.push_back(std::make_unique<Formula>(s->clone()));
  return f;
}

namespace {

void collect_term_vars(const Term& t, std::vector<std::string>& out,
                       const std::vector<std::string>& bound) {
  if (t.kind == Term::Var) {
    if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
        std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
  } else if (t.kind == Term::Fun && t.arg) {
    collect_term_vars(*t.arg, out, bound);
  }
}

void collect_free(const Formula& f, std::vector<std::string>& out,
                  std::vector<std::string>& bound) {
  switch (f.kind) {
    case Formula::Eq:
    case Formula::Rel:
      for (const auto& t : f.terms) collect_term_vars(t, out, bound);
      break;
    case Formula::Forall:
    case Formula::Exists:
      bound.push_back(f.name);
      collect_free(*f.sub[0], out, bound);
      bound.pop_back();
      break;
    case Formula::Truth:
      break;
    default:
      for (const auto& s : f.sub) collect_free(*s, out, bound);
  }
}

}  // namespace

std::vector<std::string> Formula::free_vars() const {
  std::vector<std::string> out, bound;
  collect_free(*this, out, bound);
  return out;
}

namespace {

std::string term_str(const Term& t) {
  switch (t.kind) {
    case Term::Var:
    case Term::Const:
      return t.name;
    case Term::Fun:
      return t.name + "(" + term_str(*t.arg) + ")";
    case Term::Param:
      return "<" + std::to_string(t.param) + ">";
  }
  return "?";
}

}  // namespace

std::string Formula::to_string() const {
  switch (kind) {
    case Eq:
      return term_str(terms[0]) + "=" + term_str(terms[1]);
    case Rel: {
      std::string s = name + "(";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ",";
        s += term_str(terms[i]);
      }
      return s + ")";
    }
    case Not:
      return "~" + sub[0]->to_string();
    case And:
      return "(" + sub[0]->to_string() + " & " + sub[1]->to_string() + ")";
    case Or:
      return "(" + sub[0]->to_string() + " | " + sub[1]->to_string() + ")";
    case Imp:
      return "(" + sub[0]->to_string() + " -> " + sub[1]->to_string() + ")";
    case Iff:
      return "(" + sub[0]->to_string() + " <-> " + sub[1]->to_string() + ")";
    case Forall:
      return "forall " + name + ". " + sub[0]->to_string();
    case Exists:
      return "exists " + name + ". " + sub[0]->to_string();
    case Truth:
      return "true";
  }
  return "?";
}

// --- parser ------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Name, Sym, End } kind = End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_ = {Token::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                               s_[j] == '_'))
        ++j;
      cur_ = {Token::Name, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    // multi-char operators first
    for (const char* op : {"<->", "->", "<=", ">=", "!="}) {
      std::size_t n = std::string(op).size();
      if (s_.compare(i_, n, op) == 0) {
        cur_ = {Token::Sym, op, i_};
        i_ += n;
        return;
      }
    }
    cur_ = {Token::Sym, std::string(1, c), i_};
    ++i_;
  }

  std::string s_;
  std::size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig)
      : lex_(text), sig_(sig) {}

  Formula parse() {
    Formula f = formula();
    if (lex_.peek().kind != Token::End) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("formula parse error at offset " +
                     std::to_string(lex_.peek().pos) + ": " + msg);
  }

  bool at_sym(const std::string& s) {
    return lex_.peek().kind == Token::Sym && lex_.peek().text == s;
  }

  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    lex_.next();
  }

  Formula formula() {
    if (lex_.peek().kind == Token::Name &&
        (lex_.peek().text == "forall" || lex_.peek().text == "exists")) {
      Token q = lex_.next();
      if (lex_.peek().kind != Token::Name) fail("expected variable");
      std::string var = lex_.next().text;
      expect_sym(".");
      Formula body = formula();
      Formula f;
      f.kind = q.text == "forall" ? Formula::Forall : Formula::Exists;
      f.name = var;
      f.sub.push_back(std::make_unique<Formula>(std::move(body)));
      return f;
    }
    return boolean();
  }

  Formula boolean() {
    if (at_sym("~")) {
      lex_.next();
      Formula inner = boolean();
      Formula f;
      f.kind = Formula::Not;
      f.sub.push_back(std::make_unique<Formula>(std::move(inner)));
      return f;
    }
    if (at_sym("(")) {
      lex_.next();
      Formula lhs = formula();
      if (at_sym(")")) {  // plain parenthesized formula
        lex_.next();
        return lhs;
      }
      Formula::Kind k;
      if (at_sym("&"))
        k = Formula::And;
      else if (at_sym("|"))
        k = Formula::Or;
      else if (at_sym("->"))
        k = Formula::Imp;
      else if (at_sym("<->"))
        k = Formula::Iff;
      else
        fail("expected connective");
      lex_.next();
      Formula rhs = formula();
      expect_sym(")");
      Formula f;
      f.kind = k;
      f.sub.push_back(std::make_unique<Formula>(std::move(lhs)));
      f.sub.push_back(std::make_unique<Formula>(std::move(rhs)));
      return f;
    }
    return atom();
  }

  Formula atom() {
    if (lex_.peek().kind == Token::Name || lex_.peek().kind == Token::Sym) {
      const std::string name = lex_.peek().text;
      const auto* rel = sig_.find_rel(name);
      if (rel && !sig_.has_fun(name) && !sig_.has_const(name)) {
        // prefix relation application unless the name is also a term symbol
        lex_.next();
        expect_sym("(");
        Formula f;
        f.kind = Formula::Rel;
        f.name = name;
        f.terms.push_back(term());
        while (at_sym(",")) {
          lex_.next();
          f.terms.push_back(term());
        }
        expect_sym(")");
        if (static_cast<int>(f.terms.size()) != rel->arity)
          fail("arity mismatch for relation " + name);
        return f;
      }
    }
    Term lhs = term();
    if (at_sym("=")) {
      lex_.next();
      Formula f;
      f.kind = Formula::Eq;
      f.terms.push_back(std::move(lhs));
      f.terms.push_back(term());
      return f;
    }
    if (lex_.peek().kind == Token::Sym) {
      const std::string op = lex_.peek().text;
      const auto* rel = sig_.find_rel(op);
      if (rel && rel->arity == 2) {
        lex_.next();
        Formula f;
        f.kind = Formula::Rel;
        f.name = op;
        f.terms.push_back(std::move(lhs));
        f.terms.push_back(term());
        return f;
      }
    }
    fail("expected atom");
  }

  Term term() {
    if (lex_.peek().kind != Token::Name) fail("expected term");
    std::string name = lex_.next().text;
    if (sig_.has_fun(name)) {
      expect_sym("(");
      Term inner = term();
      expect_sym(")");
      Term t;
      t.kind = Term::Fun;
      t.name = name;
      t.arg = std::make_unique<Term>(std::move(inner));
      return t;
    }
    Term t;
    if (sig_.has_const(name)) {
      t.kind = Term::Const;
    } else {
      t.kind = Term::Var;
    }
    t.name = name;
    return t;
  }

  Lexer lex_;
  const Signature& sig_;
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse();
}

// --- evaluation ----------------------------------------------------------

namespace {

struct Env {
  std::vector<std::pair<std::string, int>> vals;
  int lookup(const std::string& n) const {
    for (auto it = vals.rbegin(); it != vals.rend(); ++it)
      if (it->first == n) return it->second;
    throw DomainError("unbound variable: " + n);
  }
};

int eval_term(const FinStructure& M, const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Var:
      return env.lookup(t.name);
    case Term::Const: {
      auto it = M.consts.find(t.name);
      if (it == M.consts.end()) throw DomainError("unknown constant " + t.name);
      return it->second;
    }
    case Term::Fun: {
      auto it = M.funs.find(t.name);
      if (it == M.funs.end()) throw DomainError("unknown function " + t.name);
      int a = eval_term(M, *t.arg, env);
      return it->second[static_cast<std::size_t>(a)];
    }
    case Term::Param:
      return t.param;
  }
  throw DomainError("bad term");
}

bool eval_rec(const FinStructure& M, const Formula& f, Env& env) {
  switch (f.kind) {
    case Formula::Truth:
      return true;
    case Formula::Eq:
      return eval_term(M, f.terms[0], env) == eval_term(M, f.terms[1], env);
    case Formula::Rel: {
      Tuple t;
      for (const auto& tm : f.terms) t.push_back(eval_term(M, tm, env));
      return M.rel_holds(f.name, t);
    }
    case Formula::Not:
      return !eval_rec(M, *f.sub[0], env);
    case Formula::And:
      return eval_rec(M, *f.sub[0], env) && eval_rec(M, *f.sub[1], env);
    case Formula::Or:
      return eval_rec(M, *f.sub[0], env) || eval_rec(M, *f.sub[1], env);
    case Formula::Imp:
      return !eval_rec(M, *f.sub[0], env) || eval_rec(M, *f.sub[1], env);
    case Formula::Iff:
      return eval_rec(M, *f.sub[0], env) == eval_rec(M, *f.sub[1], env);
    case Formula::Forall:
    case Formula::Exists: {
      bool want_all = f.kind == Formula::Forall;
      for (int v = 0; v < M.size(); ++v) {
        env.vals.emplace_back(f.name, v);
        bool r = eval_rec(M, *f.sub[0], env);
        env.vals.pop_back();
        if (want_all && !r) return false;
        if (!want_all && r) return true;
      }
      return want_all;
    }
  }
  throw DomainError("bad formula");
}

}  // namespace

bool eval(const FinStructure& M, const Formula& phi, const Tuple& assignment) {
  auto fv = phi.free_vars();
  if (fv.size() != assignment.size())
    throw DomainError("eval: assignment length != free variable count");
  Env env;
  for (std::size_t i = 0; i < fv.size(); ++i)
    env.vals.emplace_back(fv[i], assignment[i]);
  return eval_rec(M, phi, env);
}

bool TruthTable::at(const Tuple& t) const {
  std::size_t idx = 0;
  for (int v : t) idx = idx * static_cast<std::size_t>(universe) +
                        static_cast<std::size_t>(v);
  return vals[idx] != 0;
}

TruthTable truth_table(const FinStructure& M, const Formula& phi) {
  auto fv = phi.free_vars();
  TruthTable t;
  t.arity = static_cast<int>(fv.size());
  t.universe = M.size();
  t.label = phi.to_string();
  std::size_t n = 1;
  for (int i = 0; i < t.arity; ++i) n *= static_cast<std::size_t>(M.size());
  t.vals.resize(n);
  Tuple a(static_cast<std::size_t>(t.arity), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx;
    for (int i = t.arity - 1; i >= 0; --i) {
      a[static_cast<std::size_t>(i)] = static_cast<int>(rem % M.universe.size());
      rem /= M.universe.size();
    }
    t.vals[idx] = eval(M, phi, a) ? 1 : 0;
  }
  return t;
}

Formula bind_last_var(const Formula& phi, int value, const FinStructure& M) {
  auto fv = phi.free_vars();
  if (fv.empty()) throw DomainError("bind_last_var: no free variables");
  const std::string target = fv.back();
  Formula g = phi.clone();
  std::function<void(Term&)> fix_term = [&](Term& t) {
    if (t.kind == Term::Var && t.name == target) {
      t.kind = Term::Param;
      t.param = value;
      t.name = M.universe[static_cast<std::size_t>(value)];
    } else if (t.kind == Term::Fun && t.arg) {
      fix_term(*t.arg);
    }
  };
  std::function<void(Formula&, std::vector<std::string>&)> walk =
      [&](Formula& f, std::vector<std::string>& bound) {
        if (f.kind == Formula::Forall || f.kind == Formula::Exists) {
          bound.push_back(f.name);
          walk(*f.sub[0], bound);
          bound.pop_back();
          return;
        }
        if (f.kind == Formula::Eq || f.kind == Formula::Rel) {
          if (std::find(bound.begin(), bound.end(), target) == bound.end())
            for (auto& t : f.terms) fix_term(t);
          return;
        }
        for (auto& s : f.sub) walk(*s, bound);
      };
  std::vector<std::string> bound;
  walk(g, bound);
  return g;
}

// --- automorphisms ---------------------------------------------------------

namespace {

bool preserves_assigned(const FinStructure& M, const std::vector<int>& img,
                        int just_set) {
  // Check every relation tuple all of whose entries are assigned and which
  // mentions `just_set`, in both directions.
  for (const auto& [name, tuples] : M.rels) {
    for (const auto& t : tuples) {
      bool mentions = false, total = true;
      for (int v : t) {
        if (v == just_set) mentions = true;
        if (img[static_cast<std::size_t>(v)] < 0) total = false;
      }
      if (!mentions || !total) continue;
      Tuple u;
      for (int v : t) u.push_back(img[static_cast<std::size_t>(v)]);
      if (!M.rel_holds(name, u)) return false;
    }
  }
  // Inverse direction: image tuples must come from relation tuples.
  std::vector<int> inv(M.universe.size(), -1);
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] >= 0) inv[static_cast<std::size_t>(img[i])] = static_cast<int>(i);
  for (const auto& [name, tuples] : M.rels) {
    for (const auto& t : tuples) {
      bool mentions = false, total = true;
      for (int v : t) {
        if (v == img[static_cast<std::size_t>(just_set)]) mentions = true;
        if (inv[static_cast<std::size_t>(v)] < 0) total = false;
      }
      if (!mentions || !total) continue;
      Tuple u;
      for (int v : t) u.push_back(inv[static_cast<std::size_t>(v)]);
      if (!M.rel_holds(name, u)) return false;
    }
  }
  // Functions: f(img(x)) = img(f(x)) whenever both sides are assigned.
  for (const auto& [name, tab] : M.funs) {
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (img[x] < 0) continue;
      int fx = tab[x];
      if (img[static_cast<std::size_t>(fx)] < 0) continue;
      if (tab[static_cast<std::size_t>(img[x])] !=
          img[static_cast<std::size_t>(fx)])
        return false;
    }
  }
  for (const auto& [name, c] : M.consts) {
    if (img[static_cast<std::size_t>(c)] >= 0 &&
        img[static_cast<std::size_t>(c)] != c)
      return false;
  }
  return true;
}

void search_autos(const FinStructure& M, std::vector<int>& img,
                  std::vector<bool>& used, std::size_t next,
                  std::vector<std::vector<int>>& out) {
  if (next == img.size()) {
    out.push_back(img);
    return;
  }
  for (std::size_t v = 0; v < img.size(); ++v) {
    if (used[v]) continue;
    img[next] = static_cast<int>(v);
    used[v] = true;
    if (preserves_assigned(M, img, static_cast<int>(next)))
      search_autos(M, img, used, next + 1, out);
    used[v] = false;
    img[next] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const FinStructure& M) {
  if (M.universe.size() > 8) throw ResourceError("automorphisms: universe too large");
  std::vector<int> img(M.universe.size(), -1);
  std::vector<bool> used(M.universe.size(), false);
  std::vector<std::vector<int>> out;
  search_autos(M, img, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> type_orbits(const FinStructure& M, const std::vector<int>& A,
                             int n) {
  const std::size_t u = M.universe.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= u;
    if (total > 200000 * guard_scale()) throw ResourceError("type_orbits: level too large");
  }
  auto autos = automorphisms(M);
  std::vector<std::vector<int>> fixing;
  for (const auto& g : autos) {
    bool ok = true;
    for (int a : A)
      if (g[static_cast<std::size_t>(a)] != a) ok = false;
    if (ok) fixing.push_back(g);
  }
  // union-find over tuple indices
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  Tuple t(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int i = n - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(rem % u);
      rem /= u;
    }
    for (const auto& g : fixing) {
      std::size_t jdx = 0;
      for (int i = 0; i < n; ++i)
        jdx = jdx * u +
              static_cast<std::size_t>(g[static_cast<std::size_t>(
                  t[static_cast<std::size_t>(i)])]);
      unite(static_cast<int>(idx), static_cast<int>(jdx));
    }
  }
  // canonical class ids in order of first appearance
  std::vector<int> cls(total, -1);
  std::map<int, int> remap;
  for (std::size_t i = 0; i < total; ++i) {
    int r = find(static_cast<int>(i));
    auto it = remap.find(r);
    if (it == remap.end())
      it = remap.emplace(r, static_cast<int>(remap.size())).first;
    cls[i] = it->second;
  }
  return cls;
}

// --- cutoffs ----------------------------------------------------------------

std::vector<std::vector<int>> function_monoid(const FinStructure& M,
                                              std::vector<std::string>* names_out) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> tabs;
  std::vector<int> id(M.universe.size());
  std::iota(id.begin(), id.end(), 0);
  names.push_back("id");
  tabs.push_back(id);
  auto add = [&](const std::string& n, const std::vector<int>& t) {
    for (const auto& e : tabs)
      if (e == t) return false;
    names.push_back(n);
    tabs.push_back(t);
    return true;
  };
  for (const auto& [n, t] : M.funs) add(n, t);
  bool grew = true;
  while (grew && tabs.size() < 64) {
    grew = false;
    std::size_t cur = tabs.size();
    for (std::size_t i = 0; i < cur; ++i)
      for (const auto& [n, t] : M.funs) {
        std::vector<int> c(M.universe.size());
        for (std::size_t x = 0; x < c.size(); ++x)
          c[x] = t[static_cast<std::size_t>(tabs[i][x])];
        if (add(n + "." + names[i], c)) grew = true;
      }
  }
  if (names_out) *names_out = names;
  return tabs;
}

namespace {

void dedupe(std::vector<TruthTable>& v) {
  std::vector<TruthTable> out;
  for (auto& t : v) {
    bool dup = false;
    for (const auto& o : out)
      if (o == t) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(t));
  }
  v = std::move(out);
}

bool constant_table(const TruthTable& t) {
  for (char c : t.vals)
    if (c != t.vals[0]) return false;
  return true;
}

// Raw atomic tables on `vars` variables: equalities and relation atoms over
// the function-term closure.
std::vector<TruthTable> raw_atoms(const FinStructure& M, int vars) {
  std::vector<std::string> fun_names;
  auto fun_tabs = function_monoid(M, &fun_names);
  const std::size_t u = M.universe.size();
  std::size_t total = 1;
  for (int i = 0; i < vars; ++i) total *= u;

  struct TermRef {
    std::size_t fun;
    int var;
  };
  std::vector<TermRef> terms;
  for (std::size_t f = 0; f < fun_tabs.size(); ++f)
    for (int v = 0; v < vars; ++v) terms.push_back({f, v});

  auto term_val = [&](const TermRef& tr, const Tuple& a) {
    return fun_tabs[tr.fun][static_cast<std::size_t>(
        a[static_cast<std::size_t>(tr.var)])];
  };
  auto fill = [&](const std::string& label, auto&& pred) {
    TruthTable t;
    t.arity = vars;
    t.universe = static_cast<int>(u);
    t.label = label;
    t.vals.resize(total);
    Tuple a(static_cast<std::size_t>(vars), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (int i = vars - 1; i >= 0; --i) {
        a[static_cast<std::size_t>(i)] = static_cast<int>(rem % u);
        rem /= u;
      }
      t.vals[idx] = pred(a) ? 1 : 0;
    }
    return t;
  };

  std::vector<TruthTable> out;
  auto term_label = [&](const TermRef& tr) {
    std::string v = "x" + std::to_string(tr.var + 1);
    return tr.fun == 0 ? v : fun_names[tr.fun] + "(" + v + ")";
  };
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      out.push_back(fill(term_label(terms[i]) + "=" + term_label(terms[j]),
                         [&](const Tuple& a) {
                           return term_val(terms[i], a) == term_val(terms[j], a);
                         }));
    }
  for (const auto& r : M.sig.rels) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(r.arity), 0);
    while (true) {
      out.push_back(fill(
          [&] {
            std::string s = r.name + "(";
            for (std::size_t k = 0; k < pick.size(); ++k) {
              if (k) s += ",";
              s += term_label(terms[pick[k]]);
            }
            return s + ")";
          }(),
          [&](const Tuple& a) {
            Tuple t;
            for (auto p : pick) t.push_back(term_val(terms[p], a));
            return M.rel_holds(r.name, t);
          }));
      std::size_t k = 0;
      for (; k < pick.size(); ++k) {
        if (++pick[k] < terms.size()) break;
        pick[k] = 0;
      }
      if (k == pick.size()) break;
    }
  }
  dedupe(out);
  return out;
}

}  // namespace

std::vector<TruthTable> qf_atom_tables(const FinStructure& M, int free_vars,
                                       bool include_negations) {
  auto out = raw_atoms(M, free_vars);
  if (include_negations) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      TruthTable t = out[i];
      for (auto& c : t.vals) c = c ? 0 : 1;
      t.label = "~" + out[i].label;
      out.push_back(std::move(t));
    }
    dedupe(out);
  }
  out.erase(std::remove_if(out.begin(), out.end(), constant_table), out.end());
  return out;
}

std::vector<TruthTable> cutoff_formulas(const FinStructure& M, int free_vars,
                                        const CutoffOptions& opt) {
  std::vector<TruthTable> out = raw_atoms(M, free_vars);
  if (opt.include_negations) {
    // negated atoms come before the quantified layer so that deduplication
    // keeps the simpler label
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      TruthTable t = out[i];
      for (auto& c : t.vals) c = c ? 0 : 1;
      t.label = "~" + out[i].label;
      out.push_back(std::move(t));
    }
  }
  if (opt.qdepth >= 1) {
    // One quantifier over conjunctions of at most max_kernel_literals
    // literals on free_vars+1 variables.  Deeper nesting is cut off.
    auto kernel_atoms = raw_atoms(M, free_vars + 1);
    std::vector<TruthTable> lits = kernel_atoms;
    for (const auto& a : kernel_atoms) {
      TruthTable t = a;
      for (auto& c : t.vals) c = c ? 0 : 1;
      t.label = "~" + a.label;
      lits.push_back(std::move(t));
    }
    const std::size_t u = M.universe.size();
    std::size_t outer = 1;
    for (int i = 0; i < free_vars; ++i) outer *= u;
    auto project = [&](const TruthTable& k, bool exists) {
      TruthTable t;
      t.arity = free_vars;
      t.universe = static_cast<int>(u);
      t.label = (exists ? "exists y. " : "forall y. ") + k.label;
      t.vals.resize(outer);
      for (std::size_t idx = 0; idx < outer; ++idx) {
        bool acc = !exists;
        for (std::size_t y = 0; y < u; ++y) {
          bool v = k.vals[idx * u + y] != 0;
          if (exists && v) {
            acc = true;
            break;
          }
          if (!exists && !v) {
            acc = false;
            break;
          }
        }
        t.vals[idx] = acc ? 1 : 0;
      }
      return t;
    };
    std::vector<TruthTable> kernels;
    for (std::size_t i = 0; i < lits.size(); ++i) kernels.push_back(lits[i]);
    if (opt.max_kernel_literals >= 2) {
      for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j) {
          TruthTable t = lits[i];
          for (std::size_t k = 0; k < t.vals.size(); ++k)
            t.vals[k] = (t.vals[k] && lits[j].vals[k]) ? 1 : 0;
          t.label = "(" + lits[i].label + " & " + lits[j].label + ")";
          kernels.push_back(std::move(t));
        }
    }
    dedupe(kernels);
    for (const auto& k : kernels) {
      out.push_back(project(k, true));
      out.push_back(project(k, false));
    }
  }
  if (opt.include_negations) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      TruthTable t = out[i];
      for (auto& c : t.vals) c = c ? 0 : 1;
      t.label = "~" + out[i].label;
      out.push_back(std::move(t));
    }
  }
  dedupe(out);
  out.erase(std::remove_if(out.begin(), out.end(), constant_table), out.end());
  return out;
}

TruthTable slice_last(const TruthTable& t, int b,
                      const std::string& label_suffix) {
  if (t.arity < 1) throw DomainError("slice_last: nullary table");
  TruthTable s;
  s.arity = t.arity - 1;
  s.universe = t.universe;
  s.label = t.label + "[:=" + (label_suffix.empty() ? std::to_string(b)
                                                    : label_suffix) +
            "]";
  std::size_t u = static_cast<std::size_t>(t.universe);
  std::size_t inner = t.vals.size() / u;
  s.vals.resize(inner);
  for (std::size_t idx = 0; idx < inner; ++idx)
    s.vals[idx] = t.vals[idx * u + static_cast<std::size_t>(b)];
  return s;
}

std::vector<TruthTable> bind_parameters(const FinStructure& M,
                                        const std::vector<TruthTable>& base) {
  std::vector<TruthTable> out;
  for (const auto& t : base) {
    if (t.arity < 2) continue;
    for (int b = 0; b < M.size(); ++b)
      out.push_back(slice_last(t, b, M.universe[static_cast<std::size_t>(b)]));
  }
  dedupe(out);
  out.erase(std::remove_if(out.begin(), out.end(), constant_table), out.end());
  return out;
}

}  // namespace situskit
