#include "situskit/stone.hpp"

#include <algorithm>
#include <functional>

namespace situskit {

IndiscKind kind_of(StoneVariant v) {
  switch (v) {
    case StoneVariant::Extendable:
    case StoneVariant::Plain:
      return IndiscKind::WithRepetitions;
    case StoneVariant::Consecutive:
      return IndiscKind::ConsecutiveRepetitions;
  }
  return IndiscKind::WithRepetitions;
}

namespace {

std::vector<Tuple> all_tuples(int universe, int width) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == width) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < universe; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TruncatedSitus stone_space(const FinStructure& M,
                           const std::vector<TruthTable>& sigma,
                           StoneVariant variant, int N, int depth) {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(M.size()), depth);
  const IndiscKind kind = kind_of(variant);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    std::vector<IndexSet> gens;
    for (const auto& phi : sigma) {
      IndexSet g(car.size());
      for (std::size_t e = 0; e < car.size(); ++e) {
        const Tuple& t = car.elems[e];
        bool in;
        if (variant == StoneVariant::Extendable)
          in = is_extendable(M, {phi}, t, N, kind);
        else
          in = is_indiscernible(M, phi, t, kind);
        if (in) g.insert(e);
      }
      gens.push_back(std::move(g));
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), gens);
  }
  return X;
}

LevelEquivalence orbit_equivalence(const FinStructure& M,
                                   const std::vector<int>& A, int depth) {
  LevelEquivalence E;
  for (int n = 1; n <= depth; ++n) E.classes.push_back(type_orbits(M, A, n));
  return E;
}

TruncatedSitus stone_quotient(const FinStructure& M,
                              const std::vector<TruthTable>& sigma,
                              const std::vector<int>& A, StoneVariant variant,
                              int N, int depth, LevelEquivalence* out_equiv) {
  TruncatedSitus X = stone_space(M, sigma, variant, N, depth);
  LevelEquivalence E = orbit_equivalence(M, A, depth);
  if (out_equiv) *out_equiv = E;
  return quotient(X, E);
}

TruncatedSitus order_object(const FinPreorder& I, OrderFlavor flavor,
                            OrderFilterKind filt, int depth) {
  if (filt == OrderFilterKind::Tails && !I.linear())
    throw DomainError("order_object: tails filter requires a linear order");
  const FinPreorder base =
      flavor == OrderFlavor::Ordered ? I : FinPreorder::set(I.size());
  TruncatedSitus X = corepresented_by_preorder(base, depth);
  if (filt == OrderFilterKind::Tails) {
    // Elements sorted by the linear order coincide with atom id order only
    // when ids are already monotone; recover the order rank explicitly.
    std::vector<int> rank(static_cast<std::size_t>(I.size()), 0);
    for (int a = 0; a < I.size(); ++a)
      for (int b = 0; b < I.size(); ++b)
        if (I.le(b, a) && !I.le(a, b)) ++rank[static_cast<std::size_t>(a)];
    for (int n = 1; n <= depth; ++n) {
      const Carrier& car = X.level(n);
      std::vector<IndexSet> gens;
      for (int i = 0; i < I.size(); ++i) {
        IndexSet g(car.size());
        for (std::size_t e = 0; e < car.size(); ++e) {
          bool in = true;
          for (int v : car.elems[e])
            if (rank[static_cast<std::size_t>(v)] <
                rank[static_cast<std::size_t>(i)])
              in = false;
          if (in) g.insert(e);
        }
        gens.push_back(std::move(g));
      }
      X.filter(n) = make_filter(static_cast<int>(car.size()), gens);
    }
  }
  return X;
}

TruncatedSitus chain_with_top(int len, bool tails_include_top, int depth) {
  TruncatedSitus X =
      corepresented_by_preorder(FinPreorder::chain(len + 1), depth);
  const int top = len;
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    std::vector<IndexSet> gens;
    for (int i = 0; i < len; ++i) {
      IndexSet g(car.size());
      for (std::size_t e = 0; e < car.size(); ++e) {
        bool in = true;
        for (int v : car.elems[e]) {
          if (v == top) {
            if (!tails_include_top) in = false;
          } else if (v < i) {
            in = false;
          }
        }
        if (in) g.insert(e);
      }
      gens.push_back(std::move(g));
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), gens);
  }
  return X;
}

TruncatedSitus star_order(int k, int depth) {
  if (k < 1) throw DomainError("star_order: k must be positive");
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(k + 1), depth);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    IndexSet g(car.size());
    for (std::size_t e = 0; e < car.size(); ++e) {
      int last = 0;
      bool mono = true;
      for (int v : car.elems[e]) {
        if (v == 0) continue;  // star
        if (v < last) mono = false;
        last = v;
      }
      if (mono) g.insert(e);
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
  }
  return X;
}

namespace {

bool splits_into_monotone(const Tuple& t, int pieces) {
  // assign each position to one of `pieces` classes; each class must be
  // weakly increasing or weakly decreasing as a subsequence
  std::vector<int> cls(t.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == t.size()) {
      for (int p = 0; p < pieces; ++p) {
        Tuple sub;
        for (std::size_t j = 0; j < t.size(); ++j)
          if (cls[j] == p) sub.push_back(t[j]);
        bool inc = std::is_sorted(sub.begin(), sub.end());
        bool dec = std::is_sorted(sub.rbegin(), sub.rend());
        if (!inc && !dec) return false;
      }
      return true;
    }
    for (int p = 0; p < pieces; ++p) {
      cls[i] = p;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TruncatedSitus monotone_pieces_order(const FinPreorder& I, int pieces,
                                     int depth) {
  if (pieces < 1) throw DomainError("monotone_pieces_order: pieces >= 1");
  if (!I.linear()) throw DomainError("monotone_pieces_order: linear order required");
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(I.size()), depth);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    IndexSet g(car.size());
    for (std::size_t e = 0; e < car.size(); ++e)
      if (splits_into_monotone(car.elems[e], pieces)) g.insert(e);
    X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
  }
  return X;
}

TruncatedSitus initial_interval_order(int len, int depth) {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(len), depth);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    IndexSet g(car.size());
    for (std::size_t e = 0; e < car.size(); ++e) {
      const Tuple& t = car.elems[e];
      if (std::is_sorted(t.rbegin(), t.rend())) g.insert(e);
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
  }
  return X;
}

TruncatedSitus consistency_space(const FinStructure& M, const TruthTable& phi,
                                 int depth) {
  if (phi.arity != 2)
    throw DomainError("consistency_space: phi must have one witness and one parameter variable");
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(M.size()), depth);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    IndexSet g(car.size());
    for (std::size_t e = 0; e < car.size(); ++e) {
      const Tuple& t = car.elems[e];
      bool consistent = false;
      for (int x = 0; x < M.size() && !consistent; ++x) {
        bool all = true;
        for (int b : t)
          if (!phi.at({x, b})) {
            all = false;
            break;
          }
        consistent = all;
      }
      if (consistent) g.insert(e);
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
  }
  return X;
}

TruncatedSitus consistency_space(const FinStructure& M, const Formula& phi,
                                 int depth) {
  auto fv = phi.free_vars();
  if (fv.size() != 2)
    throw DomainError("consistency_space: phi must have exactly two free variables");
  return consistency_space(M, truth_table(M, phi), depth);
}

// --- trees -------------------------------------------------------------

FinTree FinTree::make(int branching, int depth_d) {
  if (branching < 1 || depth_d < 0) throw DomainError("tree: bad parameters");
  double count = 1, layer = 1;
  for (int i = 0; i < depth_d; ++i) {
    layer *= branching;
    count += layer;
    if (count > 4096 * static_cast<double>(guard_scale())) throw ResourceError("tree: node count exceeds the guard");
  }
  FinTree T;
  T.branching = branching;
  T.depth_d = depth_d;
  std::vector<Tuple> ns;
  std::function<void(Tuple&)> rec = [&](Tuple& cur) {
    ns.push_back(cur);
    if (static_cast<int>(cur.size()) == depth_d) return;
    for (int c = 1; c <= branching; ++c) {
      cur.push_back(c);
      rec(cur);
      cur.pop_back();
    }
  };
  Tuple cur;
  rec(cur);
  T.nodes = Carrier::from(std::move(ns));
  return T;
}

bool FinTree::prefix_le(int a, int b) const {
  const Tuple& s = nodes.elems[static_cast<std::size_t>(a)];
  const Tuple& t = nodes.elems[static_cast<std::size_t>(b)];
  if (s.size() > t.size()) return false;
  return std::equal(s.begin(), s.end(), t.begin());
}

bool FinTree::lex_le(int a, int b) const {
  // shorter-prefix-first lexicographic order; coincides with Tuple's operator<
  return nodes.elems[static_cast<std::size_t>(a)] <=
         nodes.elems[static_cast<std::size_t>(b)];
}

bool FinTree::fan_le(int a, int b) const {
  const Tuple& s = nodes.elems[static_cast<std::size_t>(a)];
  const Tuple& t = nodes.elems[static_cast<std::size_t>(b)];
  if (s.size() != t.size() || s.empty()) return false;
  if (!std::equal(s.begin(), s.end() - 1, t.begin())) return false;
  return s.back() <= t.back();
}

FinPreorder FinTree::prefix_preorder() const {
  std::vector<std::pair<int, int>> le;
  int n = static_cast<int>(nodes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (prefix_le(a, b)) le.emplace_back(a, b);
  return FinPreorder::from_leq(n, le);
}

FinPreorder FinTree::lex_preorder() const {
  std::vector<std::pair<int, int>> le;
  int n = static_cast<int>(nodes.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lex_le(a, b)) le.emplace_back(a, b);
  return FinPreorder::from_leq(n, le);
}

namespace {

// Embeddings of the full (b,d) tree shape: the root maps to any node with d
// levels of room; children map to pairwise-incomparable strict descendants in
// lex order, recursively.  Copies are collected as node sets.  Images are
// assigned to template nodes parents-first.
void enumerate_copies(const FinTree& T, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(T.nodes.size());
  const int b = T.branching;
  auto depth_of = [&](int v) {
    return static_cast<int>(T.nodes.elems[static_cast<std::size_t>(v)].size());
  };
  FinTree shape = FinTree::make(b, T.depth_d);
  const int tn = static_cast<int>(shape.nodes.size());
  std::vector<int> img(static_cast<std::size_t>(tn), -1);
  // template children lists
  std::vector<std::vector<int>> children(static_cast<std::size_t>(tn));
  for (int v = 0; v < tn; ++v) {
    const Tuple& s = shape.nodes.elems[static_cast<std::size_t>(v)];
    for (int w = 0; w < tn; ++w) {
      const Tuple& t = shape.nodes.elems[static_cast<std::size_t>(w)];
      if (t.size() == s.size() + 1 && std::equal(s.begin(), s.end(), t.begin()))
        children[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  std::vector<int> order;  // template nodes, parents before children
  for (int v = 0; v < tn; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int bnode) {
    return shape.nodes.elems[static_cast<std::size_t>(a)].size() <
           shape.nodes.elems[static_cast<std::size_t>(bnode)].size();
  });
  std::function<void(std::size_t)> rec = [&](std::size_t oi) {
    if (oi == order.size()) {
      std::vector<int> copy(img.begin(), img.end());
      std::sort(copy.begin(), copy.end());
      copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
      if (std::find(out.begin(), out.end(), copy) == out.end())
        out.push_back(copy);
      return;
    }
    int v = order[oi];
    const Tuple& s = shape.nodes.elems[static_cast<std::size_t>(v)];
    int remaining = T.depth_d - static_cast<int>(s.size());
    for (int cand = 0; cand < n; ++cand) {
      // image must leave room for `remaining` more strict levels
      if (depth_of(cand) + remaining > T.depth_d) continue;
      bool ok = true;
      if (!s.empty()) {
        // find the parent's image
        Tuple par(s.begin(), s.end() - 1);
        int pv = shape.nodes.at(par);
        int pimg = img[static_cast<std::size_t>(pv)];
        if (!(pimg != cand && T.prefix_le(pimg, cand))) ok = false;
        // lex order and incomparability with earlier siblings
        if (ok)
          for (int sib : children[static_cast<std::size_t>(pv)]) {
            if (sib == v) break;
            int simg = img[static_cast<std::size_t>(sib)];
            if (simg < 0) continue;
            if (T.prefix_le(simg, cand) || T.prefix_le(cand, simg)) ok = false;
            if (!T.lex_le(simg, cand) || simg == cand) ok = false;
          }
      }
      // distinct from all assigned images
      if (ok)
        for (int w : order)
          if (img[static_cast<std::size_t>(w)] == cand) ok = false;
      if (!ok) continue;
      img[static_cast<std::size_t>(v)] = cand;
      rec(oi + 1);
      img[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
}

}  // namespace

TreeObjects tree_objects(const FinTree& T, int depth) {
  TreeObjects R;
  R.prefix = corepresented_by_preorder(T.prefix_preorder(), depth);
  R.lex = corepresented_by_preorder(T.lex_preorder(), depth);
  enumerate_copies(T, R.copies);

  const int n = static_cast<int>(T.nodes.size());
  auto incomparable = [&](int a, int b) {
    return a != b && !T.prefix_le(a, b) && !T.prefix_le(b, a);
  };

  // strict antichain tuples per level: lex-sorted, distinct, pairwise
  // incomparable
  auto antichain_tuples = [&](int width) {
    std::vector<Tuple> out;
    Tuple cur;
    std::function<void(int)> rec = [&](int lo) {
      if (static_cast<int>(cur.size()) == width) {
        out.push_back(cur);
        return;
      }
      for (int v = lo; v < n; ++v) {
        bool ok = true;
        for (int p : cur)
          if (!incomparable(p, v)) ok = false;
        if (!ok) continue;
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };

  // Strict antichain object: partial face table (strictly increasing lists).
  {
    TruncatedSitus A;
    A.depth = depth;
    A.complete_faces = false;
    for (int lvl = 1; lvl <= depth; ++lvl) {
      A.levels.push_back(Carrier::from(antichain_tuples(lvl)));
      Filter f;
      f.carrier = static_cast<int>(A.levels.back().size());
      Filter::Hits h;
      h.core = IndexSet(A.levels.back().size());
      for (const auto& copy : R.copies) {
        IndexSet target(A.levels.back().size());
        for (std::size_t e = 0; e < A.levels.back().size(); ++e) {
          bool inside = true;
          for (int v : A.levels.back().elems[e])
            if (!std::binary_search(copy.begin(), copy.end(), v)) inside = false;
          if (inside) target.insert(e);
        }
        if (!target.empty()) h.targets.push_back(std::move(target));
      }
      f.hits = std::move(h);
      A.filters.push_back(std::move(f));
    }
    for (int m = 1; m <= depth; ++m)
      for (int lvl = 1; lvl <= m; ++lvl)
        for (const auto& idx : weakly_increasing_lists(m, lvl)) {
          bool strict = true;
          for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] <= idx[i - 1]) strict = false;
          if (!strict) continue;
          const Carrier& src = A.level(m);
          const Carrier& dst = A.level(lvl);
          SetMap f(static_cast<int>(src.size()), static_cast<int>(dst.size()));
          for (std::size_t e = 0; e < src.size(); ++e) {
            Tuple t;
            for (int i : idx)
              t.push_back(src.elems[e][static_cast<std::size_t>(i - 1)]);
            f.tab[e] = dst.at(t);
          }
          A.faces.emplace(FaceKey{m, idx}, std::move(f));
        }
    R.antichain = std::move(A);
  }

  // Union object: prefix tuples plus the closure of antichain tuples under
  // coordinate selection (lex-sorted tuples whose distinct values form an
  // antichain).
  {
    TruncatedSitus U;
    U.depth = depth;
    for (int lvl = 1; lvl <= depth; ++lvl) {
      std::vector<Tuple> tuples;
      std::function<void(Tuple&)> rec = [&](Tuple& cur) {
        if (static_cast<int>(cur.size()) == lvl) {
          tuples.push_back(cur);
          return;
        }
        for (int v = 0; v < n; ++v) {
          if (!cur.empty()) {
            const Tuple& pv = T.nodes.elems[static_cast<std::size_t>(cur.back())];
            const Tuple& tv = T.nodes.elems[static_cast<std::size_t>(v)];
            if (tv < pv) continue;  // keep lex-sorted
          }
          cur.push_back(v);
          rec(cur);
          cur.pop_back();
        }
      };
      Tuple cur;
      rec(cur);
      std::vector<Tuple> keep;
      for (auto& t : tuples) {
        bool prefix_chain = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
          if (!T.prefix_le(t[i], t[i + 1])) prefix_chain = false;
        bool anti = true;
        for (std::size_t i = 0; i < t.size(); ++i)
          for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] != t[j] && !incomparable(t[i], t[j])) anti = false;
        if (prefix_chain || anti) keep.push_back(t);
      }
      U.levels.push_back(Carrier::from(std::move(keep)));
      Filter f;
      f.carrier = static_cast<int>(U.levels.back().size());
      Filter::Hits h;
      IndexSet core(U.levels.back().size());
      for (std::size_t e = 0; e < U.levels.back().size(); ++e) {
        const Tuple& t = U.levels.back().elems[e];
        bool prefix_chain = true;
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
          if (!T.prefix_le(t[i], t[i + 1])) prefix_chain = false;
        if (prefix_chain) core.insert(e);
      }
      h.core = std::move(core);
      for (const auto& copy : R.copies) {
        IndexSet target(U.levels.back().size());
        for (std::size_t e = 0; e < U.levels.back().size(); ++e) {
          const Tuple& t = U.levels.back().elems[e];
          bool inside = true;
          for (std::size_t i = 0; i < t.size() && inside; ++i) {
            if (!std::binary_search(copy.begin(), copy.end(), t[i])) inside = false;
            for (std::size_t j = i + 1; j < t.size(); ++j)
              if (!incomparable(t[i], t[j])) inside = false;
          }
          if (inside) target.insert(e);
        }
        if (!target.empty()) h.targets.push_back(std::move(target));
      }
      f.hits = std::move(h);
      U.filters.push_back(std::move(f));
    }
    build_faces_from_tuples(U);
    R.prefix_union_antichain = std::move(U);
  }
  return R;
}

TruncatedSitus shifted_structure(const FinStructure& M,
                                 const std::vector<TruthTable>& sigma_param,
                                 int depth) {
  TruncatedSitus X;
  X.depth = depth;
  double projected = static_cast<double>(M.size());
  for (int n = 1; n <= depth; ++n) {
    projected *= std::max(1, M.size());
    if (projected > 200000 * static_cast<double>(guard_scale()))
      throw ResourceError("shifted_structure: carrier exceeds the size guard");
    X.levels.push_back(Carrier::from(all_tuples(M.size(), n + 1)));
    const Carrier& car = X.levels.back();
    std::vector<IndexSet> gens;
    for (const auto& phi : sigma_param) {
      if (phi.arity < 2) continue;
      IndexSet g(car.size());
      for (std::size_t e = 0; e < car.size(); ++e) {
        const Tuple& t = car.elems[e];
        Tuple head(t.begin(), t.end() - 1);
        if (is_indiscernible(M, slice_last(phi, t.back()), head,
                             IndiscKind::ConsecutiveRepetitions))
          g.insert(e);
      }
      gens.push_back(std::move(g));
    }
    X.filters.push_back(make_filter(static_cast<int>(car.size()), gens));
  }
  for (int m = 1; m <= depth; ++m)
    for (int n = 1; n <= depth; ++n)
      for (const auto& idx : weakly_increasing_lists(m, n)) {
        const Carrier& src = X.level(m);
        const Carrier& dst = X.level(n);
        SetMap f(static_cast<int>(src.size()), static_cast<int>(dst.size()));
        for (std::size_t e = 0; e < src.size(); ++e) {
          const Tuple& t = src.elems[e];
          Tuple u;
          for (int i : idx) u.push_back(t[static_cast<std::size_t>(i - 1)]);
          u.push_back(t.back());  // frozen last coordinate
          f.tab[e] = dst.at(u);
        }
        X.faces.emplace(FaceKey{m, idx}, std::move(f));
      }
  return X;
}

TruncatedSitus shifted_structure_extendable(
    const FinStructure& M, const std::vector<TruthTable>& sigma_free,
    const std::vector<TruthTable>& sigma_param, int N, int depth) {
  TruncatedSitus X = shifted_structure(M, sigma_param, depth);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    // one generator per parameter value: joint extendability of the head for
    // the free formulas plus the formulas with that parameter bound
    IndexSet g(car.size());
    for (std::size_t e = 0; e < car.size(); ++e) {
      const Tuple& t = car.elems[e];
      Tuple head(t.begin(), t.end() - 1);
      std::vector<TruthTable> sigma = sigma_free;
      for (const auto& phi : sigma_param)
        if (phi.arity >= 2) sigma.push_back(slice_last(phi, t.back()));
      int target = std::min(N, M.size() - 1);
      if (is_extendable(M, sigma, head, target, IndiscKind::WithRepetitions))
        g.insert(e);
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
  }
  return X;
}

SitusMorphism shifted_projection(const TruncatedSitus& shifted,
                                 const TruncatedSitus& base) {
  SitusMorphism h;
  int d = std::min(shifted.depth, base.depth);
  for (int n = 1; n <= d; ++n) {
    SetMap m(static_cast<int>(shifted.level(n).size()),
             static_cast<int>(base.level(n).size()));
    for (std::size_t e = 0; e < shifted.level(n).size(); ++e) {
      const Tuple& t = shifted.level(n).elems[e];
      Tuple head(t.begin(), t.end() - 1);
      m.tab[e] = base.level(n).at(head);
    }
    h.level_maps.push_back(std::move(m));
  }
  return h;
}

}  // namespace situskit
