// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line each.  Exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "situskit/dividing.hpp"
#include "situskit/formats.hpp"
#include "situskit/ramsey.hpp"

using namespace situskit;

namespace {

// ---- corpora ---------------------------------------------------------------

FinStructure rel_structure(int n, unsigned mask) {
  FinStructure M;
  for (int i = 0; i < n; ++i)
    M.universe.push_back(std::string(1, static_cast<char>('a' + i)));
  M.sig.rels.push_back({"R", 2});
  auto& t = M.rels["R"];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1) t.insert({i, j});
  return M;
}

// all structures with universe of size 3 and one binary relation: 512
std::vector<FinStructure> binary_corpus() {
  std::vector<FinStructure> out;
  for (unsigned mask = 0; mask < 512; ++mask) out.push_back(rel_structure(3, mask));
  return out;
}

std::vector<FinMetric> metric_corpus() {
  std::vector<FinMetric> out;
  auto mk = [&](const std::vector<std::vector<long long>>& d) {
    FinMetric M;
    std::vector<Tuple> pts;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) pts.push_back({i});
    M.points = Carrier::from(pts);
    M.dist = d;
    try {
      M.check();
    } catch (const DomainError&) {
      return;
    }
    out.push_back(M);
  };
  mk({{0}});
  for (long long d01 = 1; d01 <= 3; ++d01) mk({{0, d01}, {d01, 0}});
  for (long long a = 1; a <= 3; ++a)
    for (long long b = 1; b <= 3; ++b)
      for (long long c = 1; c <= 3; ++c)
        mk({{0, a, b}, {a, 0, c}, {b, c, 0}});
  return out;
}

std::vector<FinTopology> topology_corpus(int max_points) {
  std::vector<FinTopology> out;
  for (int n = 1; n <= max_points; ++n) {
    std::size_t middle = (1u << n) - 2;  // proper nonempty subsets
    std::vector<IndexSet> subsets;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) {
      IndexSet s(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s.insert(static_cast<std::size_t>(i));
      subsets.push_back(s);
    }
    for (std::uint64_t pick = 0; pick < (1ull << middle); ++pick) {
      FinTopology T;
      T.npoints = n;
      T.opens.push_back(IndexSet(static_cast<std::size_t>(n)));
      T.opens.push_back(IndexSet::full(static_cast<std::size_t>(n)));
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if ((pick >> i) & 1) T.opens.push_back(subsets[i]);
      try {
        T.check();
      } catch (const DomainError&) {
        continue;
      }
      out.push_back(T);
    }
  }
  return out;
}

// set partitions of {0..n-1}, as class lists
void partitions_rec(int n, int i, std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k < cur.size(); ++k) {
    cur[k].push_back(i);
    partitions_rec(n, i + 1, cur, out);
    cur[k].pop_back();
  }
  cur.push_back({i});
  partitions_rec(n, i + 1, cur, out);
  cur.pop_back();
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  partitions_rec(n, 0, cur, out);
  return out;
}

FinStructure equiv_structure(const std::vector<std::vector<int>>& classes) {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  FinStructure M;
  for (int i = 0; i < n; ++i)
    M.universe.push_back(std::string(1, static_cast<char>('a' + i)));
  M.sig.rels.push_back({"E", 2});
  auto& t = M.rels["E"];
  for (const auto& c : classes)
    for (int x : c)
      for (int y : c) t.insert({x, y});
  return M;
}

TruthTable rel_as_table(const FinStructure& M) {
  return truth_table(M, parse_formula(M.sig.rels[0].name + "(x,y)", M.sig));
}

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> cs;

  // 1 -----------------------------------------------------------------------
  cs.push_back({1, "filter laws on 10000 randomized filters", [](std::string& d) {
    std::mt19937 rng(0x5174);
    std::uniform_int_distribution<int> size(1, 5), ngen(0, 3), bit(0, 1);
    std::size_t checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      int n = size(rng);
      std::vector<IndexSet> gens;
      for (int g = ngen(rng); g > 0; --g) {
        IndexSet s(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          if (bit(rng)) s.insert(static_cast<std::size_t>(j));
        gens.push_back(s);
      }
      Filter f = make_filter(n, gens);
      IndexSet m = f.min_neighborhood();
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        IndexSet s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) s.insert(static_cast<std::size_t>(i));
        bool big = f.is_neighborhood(s);
        if (big != m.subset_of(s)) return false;
        if (big && !f.is_neighborhood(s | m)) return false;
        if (big && !f.is_neighborhood(s & (s | m))) return false;
      }
      int n2 = size(rng), n3 = size(rng);
      std::vector<IndexSet> g2s, g3s;
      for (int g = ngen(rng); g > 0; --g) {
        IndexSet s(static_cast<std::size_t>(n2));
        for (int j = 0; j < n2; ++j)
          if (bit(rng)) s.insert(static_cast<std::size_t>(j));
        g2s.push_back(s);
      }
      for (int g = ngen(rng); g > 0; --g) {
        IndexSet s(static_cast<std::size_t>(n3));
        for (int j = 0; j < n3; ++j)
          if (bit(rng)) s.insert(static_cast<std::size_t>(j));
        g3s.push_back(s);
      }
      Filter f2 = make_filter(n2, g2s), f3 = make_filter(n3, g3s);
      SetMap ab(n, n2), bc(n2, n3);
      std::uniform_int_distribution<int> p2(0, n2 - 1), p3(0, n3 - 1);
      for (auto& v : ab.tab) v = p2(rng);
      for (auto& v : bc.tab) v = p3(rng);
      if (is_continuous(ab, f, f2) && is_continuous(bc, f2, f3))
        if (!is_continuous(SetMap::compose(bc, ab), f, f3)) return false;
      if (n2 <= 4) {
        bool fast = is_continuous(ab, f, f2);
        bool slow = true;
        for (std::uint64_t mask = 0; mask < (1ull << n2); ++mask) {
          IndexSet s(static_cast<std::size_t>(n2));
          for (int i = 0; i < n2; ++i)
            if ((mask >> i) & 1) s.insert(static_cast<std::size_t>(i));
          if (f2.is_neighborhood(s) && !f.is_neighborhood(ab.preimage(s)))
            slow = false;
        }
        if (fast != slow) return false;
        ++checked;
      }
    }
    d = "exhaustive-agreement checks: " + std::to_string(checked);
    return true;
  }});

  // 2 -----------------------------------------------------------------------
  cs.push_back({2, "functoriality of the stone/geometry constructors", [](std::string& d) {
    std::size_t objects = 0;
    for (const auto& M : binary_corpus()) {
      TruthTable phi = rel_as_table(M);
      for (StoneVariant v : {StoneVariant::Extendable, StoneVariant::Plain,
                             StoneVariant::Consecutive}) {
        if (!validate(stone_space(M, {phi}, v, 3, 3)).empty()) return false;
        ++objects;
      }
      if (!validate(consistency_space(M, phi, 3)).empty()) return false;
      CutoffOptions qf{0, 2, true};
      if (!validate(shifted_structure(M, cutoff_formulas(M, 2, qf), 2)).empty())
        return false;
      if (!validate(stone_quotient(M, {phi}, {}, StoneVariant::Extendable, 3, 3))
               .empty())
        return false;
      objects += 3;
    }
    for (const auto& M : metric_corpus()) {
      if (!validate(metric_situs(M, 3)).empty()) return false;
      ++objects;
    }
    for (const auto& T : topology_corpus(3)) {
      if (!validate(covering_situs(T, 3)).empty()) return false;
      ++objects;
    }
    for (int len = 1; len <= 4; ++len) {
      if (!validate(order_object(FinPreorder::chain(len), OrderFlavor::Ordered,
                                 OrderFilterKind::Tails, 3)).empty())
        return false;
      if (!validate(order_object(FinPreorder::chain(len), OrderFlavor::SetFlavor,
                                 OrderFilterKind::Tails, 3)).empty())
        return false;
      if (!validate(star_order(len, 3)).empty()) return false;
      if (!validate(monotone_pieces_order(FinPreorder::chain(len), 2, 3)).empty())
        return false;
      if (!validate(initial_interval_order(len, 3)).empty()) return false;
      if (!validate(chain_with_top(len, true, 3)).empty()) return false;
      if (!validate(chain_with_top(len, false, 3)).empty()) return false;
      objects += 7;
    }
    d = "objects validated: " + std::to_string(objects);
    return true;
  }});

  // 3 -----------------------------------------------------------------------
  cs.push_back({3, "vertex maps exhaust the natural transformations", [](std::string& d) {
    std::vector<FinPreorder> preorders;
    for (int n = 1; n <= 3; ++n) {
      int pairs = n * (n - 1);
      for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<std::pair<int, int>> le;
        int bitidx = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if ((mask >> bitidx) & 1) le.emplace_back(a, b);
            ++bitidx;
          }
        FinPreorder P = FinPreorder::from_leq(n, le);
        bool already = true;
        std::set<std::pair<int, int>> given(le.begin(), le.end());
        for (int a = 0; a < n && already; ++a)
          for (int b = 0; b < n; ++b)
            if (a != b && P.le(a, b) && !given.count({a, b})) already = false;
        if (already) preorders.push_back(P);
      }
    }
    std::size_t pairs_checked = 0;
    for (const auto& P : preorders)
      for (const auto& Q : preorders) {
        TruncatedSitus X = corepresented_by_preorder(P, 3);
        TruncatedSitus Y = corepresented_by_preorder(Q, 3);
        auto fast = hom_set(X, Y);
        TruncatedSitus Xg = X, Yg = Y;
        Xg.corep.reset();
        Yg.corep.reset();
        auto slow = hom_set(Xg, Yg);
        std::set<std::vector<int>> a, b;
        for (const auto& h : fast) a.insert(h.level(1).tab);
        for (const auto& h : slow) b.insert(h.level(1).tab);
        if (a != b || fast.size() != slow.size()) return false;
        ++pairs_checked;
      }
    d = "preorder pairs: " + std::to_string(pairs_checked);
    return true;
  }});

  // 4 -----------------------------------------------------------------------
  cs.push_back({4, "stability: oracle equals lifting on the corpus", [](std::string& d) {
    CheckConfig cfg;
    cfg.chain = 5;
    cfg.distinct = 3;
    cfg.depth = 3;
    std::size_t holds = 0, fails = 0;
    unsigned mask = 0;
    for (const auto& M : binary_corpus()) {
      Verdict v = stability(M, rel_as_table(M), cfg);
      if (!v.agree()) {
        d = "disagreement on relation mask " + std::to_string(mask);
        return false;
      }
      (v.holds ? holds : fails)++;
      ++mask;
    }
    FinStructure peq;
    peq.universe = {"a", "b", "c", "d"};
    peq.sig.rels.push_back({"E", 2});
    for (int i = 0; i < 4; ++i) peq.rels["E"].insert({i, i});
    Verdict vp = stability(peq, rel_as_table(peq), cfg);
    if (!vp.holds || !vp.oracle_holds) return false;
    FinStructure ch;
    ch.universe = {"1", "2", "3", "4"};
    ch.sig.rels.push_back({"<=", 2});
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) ch.rels["<="].insert({i, j});
    Verdict vc = stability(ch, rel_as_table(ch), cfg);
    if (vc.holds || vc.oracle_holds) return false;
    d = "corpus split holds/fails: " + std::to_string(holds) + "/" +
        std::to_string(fails);
    return true;
  }});

  // 5 -----------------------------------------------------------------------
  cs.push_back({5, "eventual stability and NIP agree with their oracles", [](std::string& d) {
    CheckConfig cfg;
    cfg.chain = 5;
    cfg.distinct = 3;
    cfg.qdepth = 1;
    std::size_t nip_holds = 0;
    for (const auto& M : binary_corpus()) {
      Verdict ev = eventual_stability(M, rel_as_table(M), cfg);
      if (!ev.agree()) {
        d = "eventual-stability disagreement";
        return false;
      }
      Verdict nv = nip(M, cfg);
      if (nv.oracle_holds != nv.parts.at("exact_lifting")) {
        d = "nip exact-lifting disagreement";
        return false;
      }
      if (!nv.parts.at("almost_injective")) {
        d = "nip injective almost-lifting failed";
        return false;
      }
      if (nv.holds) ++nip_holds;
    }
    // the (a,b,a,b) non-injective counterexample square
    FinStructure P;
    P.universe = {"a", "b"};
    CheckConfig pc;
    auto sigma0 = base_cutoff(P, pc);
    auto sigmap = parameter_cutoff(P, pc);
    auto sigLM = sigma0;
    sigLM.insert(sigLM.end(), sigmap.begin(), sigmap.end());
    TruncatedSitus B = order_object(FinPreorder::chain(4), OrderFlavor::Ordered,
                                    OrderFilterKind::Antidiscrete, 3);
    TruncatedSitus Mb = stone_space(P, sigma0, StoneVariant::Plain, 2, 3);
    TruncatedSitus MbL = stone_space(P, sigLM, StoneVariant::Plain, 2, 3);
    std::vector<int> abab = {0, 1, 0, 1};
    auto induce = [&](const TruncatedSitus& Y) {
      SitusMorphism h;
      for (int n = 1; n <= 3; ++n) {
        SetMap m(static_cast<int>(B.level(n).size()),
                 static_cast<int>(Y.level(n).size()));
        for (std::size_t e = 0; e < B.level(n).size(); ++e) {
          Tuple t;
          for (int v : B.level(n).elems[e])
            t.push_back(abab[static_cast<std::size_t>(v)]);
          m.tab[e] = Y.level(n).at(t);
        }
        h.level_maps.push_back(std::move(m));
      }
      return h;
    };
    if (!morphism_continuous(B, Mb, induce(Mb))) return false;
    if (morphism_continuous(B, MbL, induce(MbL))) return false;
    d = "nip holds on " + std::to_string(nip_holds) + "/512";
    return true;
  }});

  // 6 -----------------------------------------------------------------------
  cs.push_back({6, "order property: oracle equals star-order surjection", [](std::string& d) {
    CheckConfig cfg;
    std::size_t op_count = 0;
    for (int k : {2, 3}) {
      unsigned mask = 0;
      for (const auto& M : binary_corpus()) {
        Verdict v = op_nsop(M, k, cfg);
        if (!v.agree()) {
          std::ostringstream os;
          os << "disagreement at k=" << k << " mask=" << mask
             << " oracle=" << v.oracle_holds << " surjection=" << v.holds;
          d = os.str();
          return false;
        }
        if (k == 2 && v.holds) ++op_count;
        ++mask;
      }
    }
    for (int k : {2, 3}) {
      FinStructure ch;
      for (int i = 1; i <= 2 * k; ++i) ch.universe.push_back(std::to_string(i));
      ch.sig.rels.push_back({"<=", 2});
      for (int i = 0; i < 2 * k; ++i)
        for (int j = i; j < 2 * k; ++j) ch.rels["<="].insert({i, j});
      Verdict v = op_nsop(ch, k, cfg);
      if (!v.oracle_holds || !v.holds) {
        d = "2k-chain regression failed at k=" + std::to_string(k);
        return false;
      }
    }
    d = "corpus structures with OP at k=2: " + std::to_string(op_count);
    return true;
  }});

  // 7 -----------------------------------------------------------------------
  cs.push_back({7, "non-dividing: oracle equals the lifting square", [](std::string& d) {
    CheckConfig cfg;
    cfg.chain = 2;
    cfg.distinct = 2;
    std::size_t instances = 0, holds = 0;
    for (int u = 2; u <= 4 && instances < 30; ++u)
      for (const auto& part : set_partitions(u)) {
        if (instances >= 30) break;
        FinStructure M = equiv_structure(part);
        std::set<int> seen;
        auto orbits2 = type_orbits(M, {}, 2);
        for (int a = 0; a < M.size() && instances < 30; ++a)
          for (int b = 0; b < M.size() && instances < 30; ++b) {
            int key = orbits2[static_cast<std::size_t>(a * M.size() + b)];
            if (!seen.insert(key).second) continue;
            Verdict v = non_dividing(M, {}, a, b, cfg);
            ++instances;
            if (!v.agree()) {
              std::ostringstream os;
              os << "disagreement: universe " << u << " a=" << a << " b=" << b
                 << " oracle=" << v.oracle_holds << " lifting=" << v.holds;
              d = os.str();
              return false;
            }
            if (v.holds) ++holds;
          }
      }
    d = "instances: " + std::to_string(instances) + ", non-dividing holds on " +
        std::to_string(holds);
    return true;
  }});

  // 8 -----------------------------------------------------------------------
  cs.push_back({8, "tree-property experiment: oracle vs lifting", [](std::string& d) {
    CheckConfig cfg;
    std::size_t agreements = 0, divergences = 0, tp_count = 0;
    for (const auto& M : binary_corpus()) {
      Verdict v = tree_property(M, rel_as_table(M), 2, 2, 2,
                                TreeCheckMode::Both, cfg);
      if (v.holds == v.oracle_holds) {
        ++agreements;
      } else {
        ++divergences;
        bool well_formed = v.witness.count("tree") > 0 ||
                           v.witness.count("lifting_parameters") > 0;
        if (!well_formed) {
          d = "divergence without a counterexample report";
          return false;
        }
      }
      if (!v.oracle_holds) ++tp_count;
    }
    std::ostringstream os;
    os << "agreement " << agreements << "/512, divergences " << divergences
       << ", oracle tree property on " << tp_count;
    d = os.str();
    return true;
  }});

  // 9 -----------------------------------------------------------------------
  cs.push_back({9, "Ramsey recovery of R(3,3)=6", [](std::string& d) {
    TruncatedSitus X6 = corepresented_by_preorder(FinPreorder::set(6), 3);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      Coloring c;
      c.level = 2;
      c.color.assign(X6.level(2).size(), 0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        int col = static_cast<int>((mask >> p) & 1);
        c.color[static_cast<std::size_t>(
            X6.level(2).at({pairs[p].first, pairs[p].second}))] = col;
        c.color[static_cast<std::size_t>(
            X6.level(2).at({pairs[p].second, pairs[p].first}))] = col;
      }
      bool found = false;
      for (int e : homogeneous_simplices(X6, c, 3))
        if (is_hereditarily_nondegenerate(X6, 3, e)) {
          found = true;
          break;
        }
      if (!found) {
        d = "a 6-atom coloring without a homogeneous triple";
        return false;
      }
    }
    TruncatedSitus X5 = corepresented_by_preorder(FinPreorder::set(5), 3);
    std::vector<std::pair<int, int>> pairs5;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) pairs5.emplace_back(a, b);
    bool bad_found = false;
    for (std::uint64_t mask = 0; mask < (1ull << pairs5.size()) && !bad_found;
         ++mask) {
      Coloring c;
      c.level = 2;
      c.color.assign(X5.level(2).size(), 0);
      for (std::size_t p = 0; p < pairs5.size(); ++p) {
        int col = static_cast<int>((mask >> p) & 1);
        c.color[static_cast<std::size_t>(
            X5.level(2).at({pairs5[p].first, pairs5[p].second}))] = col;
        c.color[static_cast<std::size_t>(
            X5.level(2).at({pairs5[p].second, pairs5[p].first}))] = col;
      }
      bool found = false;
      for (int e : homogeneous_simplices(X5, c, 3))
        if (is_hereditarily_nondegenerate(X5, 3, e)) {
          found = true;
          break;
        }
      if (!found) bad_found = true;
    }
    if (!bad_found) {
      d = "no 5-atom coloring without a homogeneous triple";
      return false;
    }
    d = "all 32768 colorings on 6 atoms covered; 5-atom counterexample found";
    return true;
  }});

  // 10 ----------------------------------------------------------------------
  cs.push_back({10, "completeness and compactness liftings", [](std::string& d) {
    std::size_t metrics = 0, tops = 0;
    for (const auto& M : metric_corpus()) {
      if (!is_complete_lp(M, 3, 3).holds()) {
        d = "a finite metric failed the completeness lifting";
        return false;
      }
      ++metrics;
    }
    for (const auto& T : topology_corpus(3)) {
      if (!T.connected()) continue;
      if (!compactness_lp(T, T.npoints + 1, 3).holds()) {
        d = "a connected finite topology failed the compactness lifting";
        return false;
      }
      ++tops;
    }
    d = "metrics: " + std::to_string(metrics) +
        ", connected topologies: " + std::to_string(tops);
    return true;
  }});

  // 11 ----------------------------------------------------------------------
  cs.push_back({11, "Shelah representation predicates", [](std::string& d) {
    CheckConfig cfg;
    std::size_t total = 0, good = 0;
    std::string first_bad;
    for (int u = 1; u <= 4; ++u) {
      std::size_t tables = 1;
      for (int i = 0; i < u; ++i) tables *= static_cast<std::size_t>(u);
      for (std::size_t code = 0; code < tables; ++code) {
        FinStructure M;
        for (int i = 0; i < u; ++i)
          M.universe.push_back(std::string(1, static_cast<char>('a' + i)));
        M.sig.funs.push_back("f");
        std::vector<int> tab(static_cast<std::size_t>(u));
        std::size_t rem = code;
        for (int i = 0; i < u; ++i) {
          tab[static_cast<std::size_t>(i)] = static_cast<int>(rem % u);
          rem /= static_cast<std::size_t>(u);
        }
        M.funs["f"] = tab;
        FinStructure R = unary_reduct(M);
        ++total;
        if (em_represents(R, M, SetMap::identity(u), RepresentMode::EMinfty, 4,
                          cfg)) {
          ++good;
        } else if (first_bad.empty()) {
          std::ostringstream os;
          os << "u=" << u << " f=(";
          for (int i = 0; i < u; ++i)
            os << (i ? "," : "") << tab[static_cast<std::size_t>(i)];
          os << ")";
          first_bad = os.str();
        }
      }
    }
    bool second = true;
    CheckConfig qcfg;
    qcfg.qdepth = 0;
    for (int u = 2; u <= 4 && second; ++u)
      for (const auto& part : set_partitions(u)) {
        FinStructure E = equiv_structure(part);
        auto sigma = base_cutoff(E, qcfg);
        TruncatedSitus S = stone_space(E, sigma, StoneVariant::Plain, u, 4);
        if (!is_symmetric(S) || !is_two_dimensional(S)) {
          second = false;
          break;
        }
      }
    std::ostringstream os;
    os << "EM-inf representation " << good << "/" << total;
    if (!first_bad.empty()) os << " (first failure: " << first_bad << ")";
    os << "; equivalence stone spaces symmetric+2dim: " << (second ? "yes" : "no");
    d = os.str();
    return good == total && second;
  }});

  int failures = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("criterion %2d: %s — %s%s%s [%lld ms]\n", c.id,
                ok ? "PASS" : "FAIL", c.name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("acceptance: %d/%d criteria pass\n",
              static_cast<int>(cs.size()) - failures,
              static_cast<int>(cs.size()));
  return failures;
}
