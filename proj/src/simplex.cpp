#include "situskit/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace situskit {

bool FinPreorder::transitive() const {
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c)) return false;
  return true;
}

bool FinPreorder::reflexive() const {
  for (int a = 0; a < size(); ++a)
    if (!le(a, a)) return false;
  return true;
}

bool FinPreorder::total() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (!le(a, b) && !le(b, a)) return false;
  return true;
}

bool FinPreorder::antisymmetric() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != b && le(a, b) && le(b, a)) return false;
  return true;
}

bool FinPreorder::set_like() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (!le(a, b)) return false;
  return true;
}

FinPreorder FinPreorder::chain(int n) {
  FinPreorder p;
  std::vector<Tuple> es;
  for (int i = 0; i < n; ++i) es.push_back({i});
  p.elems = Carrier::from(es);
  p.leq.assign(static_cast<std::size_t>(n),
               std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  return p;
}

FinPreorder FinPreorder::set(int n) {
  FinPreorder p = chain(n);
  for (auto& row : p.leq) std::fill(row.begin(), row.end(), true);
  return p;
}

FinPreorder FinPreorder::from_leq(int n,
                                  const std::vector<std::pair<int, int>>& le,
                                  bool reflexive_close) {
  FinPreorder p;
  std::vector<Tuple> es;
  for (int i = 0; i < n; ++i) es.push_back({i});
  p.elems = Carrier::from(es);
  p.leq.assign(static_cast<std::size_t>(n),
               std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [a, b] : le)
    p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  if (reflexive_close)
    for (int a = 0; a < n; ++a)
      p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.le(a, k) && p.le(k, b))
          p.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  return p;
}

const SetMap& TruncatedSitus::face(int m, const std::vector<int>& idx) const {
  auto it = faces.find({m, idx});
  if (it == faces.end()) throw DomainError("face map not present");
  return it->second;
}

bool TruncatedSitus::has_face(int m, const std::vector<int>& idx) const {
  return faces.count({m, idx}) > 0;
}

std::vector<int> compose_index_lists(const std::vector<int>& outer,
                                     const std::vector<int>& inner) {
  // inner : l -> m, outer : m -> n  =>  composite : l -> n, [inner[outer-1]]
  std::vector<int> r;
  r.reserve(outer.size());
  for (int i : outer) r.push_back(inner[static_cast<std::size_t>(i - 1)]);
  return r;
}

std::vector<std::vector<int>> weakly_increasing_lists(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i <= m; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  if (m >= 1 && n >= 1) rec(1);
  return out;
}

void build_faces_from_tuples(TruncatedSitus& X) {
  X.faces.clear();
  for (int m = 1; m <= X.depth; ++m) {
    const Carrier& src = X.level(m);
    for (int n = 1; n <= X.depth; ++n) {
      const Carrier& dst = X.level(n);
      for (const auto& idx : weakly_increasing_lists(m, n)) {
        SetMap f(static_cast<int>(src.size()), static_cast<int>(dst.size()));
        for (std::size_t e = 0; e < src.size(); ++e) {
          Tuple t;
          t.reserve(idx.size());
          for (int i : idx)
            t.push_back(src.elems[e][static_cast<std::size_t>(i - 1)]);
          f.tab[e] = dst.at(t);
        }
        X.faces.emplace(FaceKey{m, idx}, std::move(f));
      }
    }
  }
}

TruncatedSitus corepresented_by_preorder(const FinPreorder& P, int depth,
                                         const std::vector<Filter>* level_filters) {
  if (depth < 1) throw DomainError("depth must be positive");
  if (!P.transitive()) throw DomainError("preorder relation not transitive");
  if (!P.reflexive())
    throw DomainError("corepresented carriers need a reflexive preorder");
  TruncatedSitus X;
  X.depth = depth;
  X.corep = P;
  double projected = 1;
  for (int n = 1; n <= depth; ++n) {
    projected *= std::max(1, P.size());
    if (projected > 200000 * static_cast<double>(guard_scale()))
      throw ResourceError("corepresented carrier exceeds the size guard");
    std::vector<Tuple> tuples;
    std::vector<Tuple> cur;
    std::function<void(Tuple&)> rec = [&](Tuple& t) {
      if (static_cast<int>(t.size()) == n) {
        tuples.push_back(t);
        return;
      }
      for (int e = 0; e < P.size(); ++e) {
        if (!t.empty() && !P.le(t.back(), e)) continue;
        t.push_back(e);
        rec(t);
        t.pop_back();
      }
    };
    Tuple t;
    rec(t);
    X.levels.push_back(Carrier::from(std::move(tuples)));
    X.filters.push_back(
        antidiscrete_filter(static_cast<int>(X.levels.back().size())));
  }
  if (level_filters) {
    if (static_cast<int>(level_filters->size()) != depth)
      throw DomainError("level filter count != depth");
    for (int n = 1; n <= depth; ++n) {
      if ((*level_filters)[static_cast<std::size_t>(n - 1)].carrier !=
          static_cast<int>(X.level(n).size()))
        throw DomainError("level filter carrier mismatch");
      X.filter(n) = (*level_filters)[static_cast<std::size_t>(n - 1)];
    }
  }
  build_faces_from_tuples(X);
  if (level_filters) {
    auto issues = validate(X);
    if (!issues.empty())
      throw DomainError("supplied filter violates face continuity: level " +
                        std::to_string(issues.front().level_from) + " -> " +
                        std::to_string(issues.front().level_to) + " " +
                        issues.front().detail);
  }
  return X;
}

std::vector<Violation> validate(const TruncatedSitus& X) {
  std::vector<Violation> out;
  auto face_str = [](const std::vector<int>& idx) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) os << "<=";
      os << idx[i];
    }
    os << ']';
    return os.str();
  };
  // completeness + typing
  for (int m = 1; m <= X.depth; ++m)
    for (int n = 1; n <= X.depth; ++n)
      for (const auto& idx : weakly_increasing_lists(m, n)) {
        if (!X.has_face(m, idx)) {
          if (X.complete_faces)
            out.push_back({m, n, idx, "missing", "face map not constructed"});
          continue;
        }
        const SetMap& f = X.face(m, idx);
        if (f.src != static_cast<int>(X.level(m).size()) ||
            f.dst != static_cast<int>(X.level(n).size()))
          out.push_back({m, n, idx, "typing", "face map has wrong carriers"});
      }
  // simplicial identities
  for (const auto& [key_i, inner] : X.faces) {
    const int l = key_i.first;
    const int m = static_cast<int>(key_i.second.size());
    for (const auto& [key_o, outer] : X.faces) {
      if (key_o.first != m) continue;
      auto composite = compose_index_lists(key_o.second, key_i.second);
      auto it = X.faces.find({l, composite});
      if (it == X.faces.end()) {
        if (X.complete_faces)
          out.push_back({l, static_cast<int>(composite.size()), composite,
                         "identity", "composite face absent"});
        continue;
      }
      if (!(SetMap::compose(outer, inner) == it->second))
        out.push_back({l, static_cast<int>(composite.size()), composite,
                       "identity",
                       "composite of " + face_str(key_i.second) + " then " +
                           face_str(key_o.second) + " differs"});
    }
  }
  // continuity of every stored face
  for (const auto& [key, f] : X.faces) {
    const int m = key.first;
    const int n = static_cast<int>(key.second.size());
    const Filter& src = X.filter(m);
    const Filter& dst = X.filter(n);
    bool ok;
    std::string witness;
    try {
      ok = is_continuous(f, src, dst);
      if (!ok && !dst.hits) {
        for (const auto& b : dst.base)
          if (!src.is_neighborhood(f.preimage(b))) {
            witness = to_string(b);
            break;
          }
      }
    } catch (const ResourceError& e) {
      ok = false;
      witness = e.what();
    }
    if (!ok)
      out.push_back({m, n, key.second, "continuity",
                     witness.empty() ? "preimage of a neighbourhood is not large"
                                     : "witness base element " + witness});
  }
  return out;
}

TruncatedSitus terminal_situs(int depth) {
  return corepresented_by_preorder(FinPreorder::set(1), depth);
}

TruncatedSitus initial_situs(int depth) {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(0), depth);
  for (auto& f : X.filters) {
    f.base.clear();
    f.base.push_back(IndexSet(0));  // the empty set is a neighbourhood
  }
  return X;
}

TruncatedSitus shift(const TruncatedSitus& X) {
  if (X.depth < 2) throw DomainError("shift: depth must be at least 2");
  TruncatedSitus Y;
  Y.depth = X.depth - 1;
  for (int n = 1; n <= Y.depth; ++n) {
    Y.levels.push_back(X.level(n + 1));
    Y.filters.push_back(X.filter(n + 1));
  }
  for (int m = 1; m <= Y.depth; ++m)
    for (int n = 1; n <= Y.depth; ++n)
      for (const auto& idx : weakly_increasing_lists(m, n)) {
        std::vector<int> lifted = idx;
        lifted.push_back(m + 1);  // keep the frozen last coordinate
        Y.faces.emplace(FaceKey{m, idx}, X.face(m + 1, lifted));
      }
  return Y;
}

SitusMorphism shift_nat(const TruncatedSitus& X) {
  SitusMorphism h;
  for (int n = 1; n < X.depth; ++n) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i) idx.push_back(i);
    h.level_maps.push_back(X.face(n + 1, idx));
  }
  return h;
}

TruncatedSitus quotient(const TruncatedSitus& X, const LevelEquivalence& E) {
  if (static_cast<int>(E.classes.size()) != X.depth)
    throw DomainError("quotient: equivalence level count != depth");
  // compatibility: faces of equivalent simplices are equivalent
  for (const auto& [key, f] : X.faces) {
    const auto& src_cls = E.classes[static_cast<std::size_t>(key.first - 1)];
    const auto& dst_cls =
        E.classes[static_cast<std::size_t>(key.second.size() - 1)];
    for (std::size_t a = 0; a < src_cls.size(); ++a)
      for (std::size_t b = a + 1; b < src_cls.size(); ++b)
        if (src_cls[a] == src_cls[b] &&
            dst_cls[static_cast<std::size_t>(f(static_cast<int>(a)))] !=
                dst_cls[static_cast<std::size_t>(f(static_cast<int>(b)))])
          throw DomainError(
              "quotient: equivalence incompatible with faces, witness pair (" +
              std::to_string(a) + "," + std::to_string(b) + ") at level " +
              std::to_string(key.first));
  }
  TruncatedSitus Q;
  Q.depth = X.depth;
  // carrier per level: canonical representative = minimal member tuple
  std::vector<SetMap> proj;
  for (int n = 1; n <= X.depth; ++n) {
    const auto& cls = E.classes[static_cast<std::size_t>(n - 1)];
    if (cls.size() != X.level(n).size())
      throw DomainError("quotient: class table size mismatch");
    int nclasses = 0;
    for (int c : cls) nclasses = std::max(nclasses, c + 1);
    std::vector<Tuple> reps(static_cast<std::size_t>(nclasses));
    std::vector<bool> seen(static_cast<std::size_t>(nclasses), false);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto c = static_cast<std::size_t>(cls[i]);
      if (!seen[c] || X.level(n).elems[i] < reps[c]) {
        reps[c] = X.level(n).elems[i];
        seen[c] = true;
      }
    }
    Carrier qc = Carrier::from(reps);
    SetMap p(static_cast<int>(X.level(n).size()), static_cast<int>(qc.size()));
    for (std::size_t i = 0; i < cls.size(); ++i)
      p.tab[i] = qc.at(reps[static_cast<std::size_t>(cls[i])]);
    Q.levels.push_back(std::move(qc));
    // finest filter making the projection continuous
    Q.filters.push_back(finest_filter(p, X.filter(n)));
    proj.push_back(std::move(p));
  }
  for (const auto& [key, f] : X.faces) {
    const auto& psrc = proj[static_cast<std::size_t>(key.first - 1)];
    const auto& pdst = proj[static_cast<std::size_t>(key.second.size() - 1)];
    SetMap g(psrc.dst, pdst.dst);
    for (int i = 0; i < f.src; ++i) g.tab[static_cast<std::size_t>(psrc(i))] = pdst(f(i));
    Q.faces.emplace(key, std::move(g));
  }
  Q.complete_faces = X.complete_faces;
  return Q;
}

SitusMorphism quotient_projection(const TruncatedSitus& X,
                                  const TruncatedSitus& Q,
                                  const LevelEquivalence& E) {
  SitusMorphism h;
  for (int n = 1; n <= X.depth; ++n) {
    const auto& cls = E.classes[static_cast<std::size_t>(n - 1)];
    // recompute representatives exactly as quotient() does
    int nclasses = 0;
    for (int c : cls) nclasses = std::max(nclasses, c + 1);
    std::vector<Tuple> reps(static_cast<std::size_t>(nclasses));
    std::vector<bool> seen(static_cast<std::size_t>(nclasses), false);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto c = static_cast<std::size_t>(cls[i]);
      if (!seen[c] || X.level(n).elems[i] < reps[c]) {
        reps[c] = X.level(n).elems[i];
        seen[c] = true;
      }
    }
    SetMap p(static_cast<int>(X.level(n).size()),
             static_cast<int>(Q.level(n).size()));
    for (std::size_t i = 0; i < cls.size(); ++i)
      p.tab[i] = Q.level(n).at(reps[static_cast<std::size_t>(cls[i])]);
    h.level_maps.push_back(std::move(p));
  }
  return h;
}

TruncatedSitus disjoint_union(const std::vector<const TruncatedSitus*>& parts) {
  if (parts.empty()) throw DomainError("disjoint_union: no summands");
  int depth = parts.front()->depth;
  for (const auto* p : parts)
    if (p->depth != depth) throw DomainError("disjoint_union: depths differ");
  // offset atoms by earlier summands' level-1 sizes
  std::vector<int> offset(parts.size(), 0);
  for (std::size_t k = 1; k < parts.size(); ++k)
    offset[k] = offset[k - 1] + static_cast<int>(parts[k - 1]->level(1).size());
  TruncatedSitus U;
  U.depth = depth;
  for (int n = 1; n <= depth; ++n) {
    std::vector<Tuple> tuples;
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (const auto& t : parts[k]->level(n).elems) {
        Tuple s = t;
        for (auto& v : s) v += offset[k];
        tuples.push_back(std::move(s));
      }
    U.levels.push_back(Carrier::from(std::move(tuples)));
    std::vector<IndexSet> gens;
    IndexSet g(U.levels.back().size());
    bool any = false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const Filter& f = parts[k]->filter(n);
      if (f.hits) throw ResourceError("disjoint_union: intensional summand");
      IndexSet m = f.min_neighborhood();
      for (int i : m.to_vector()) {
        Tuple s = parts[k]->level(n).elems[static_cast<std::size_t>(i)];
        for (auto& v : s) v += offset[k];
        g.insert(static_cast<std::size_t>(U.levels.back().at(s)));
        any = true;
      }
    }
    // the union of the summands' minimal neighbourhoods generates the
    // coproduct filter
    U.filters.push_back(any ? make_filter(static_cast<int>(U.levels.back().size()), {g})
                            : antidiscrete_filter(
                                  static_cast<int>(U.levels.back().size())));
  }
  build_faces_from_tuples(U);
  return U;
}

bool morphism_commutes_with_faces(const TruncatedSitus& X,
                                  const TruncatedSitus& Y,
                                  const SitusMorphism& h) {
  int d = std::min({X.depth, Y.depth, h.depth()});
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      for (const auto& idx : weakly_increasing_lists(m, n)) {
        if (!X.has_face(m, idx) || !Y.has_face(m, idx)) continue;
        const SetMap& fx = X.face(m, idx);
        const SetMap& fy = Y.face(m, idx);
        for (int e = 0; e < fx.src; ++e)
          if (h.level(n)(fx(e)) != fy(h.level(m)(e))) return false;
      }
  return true;
}

bool morphism_continuous(const TruncatedSitus& X, const TruncatedSitus& Y,
                         const SitusMorphism& h) {
  int d = std::min({X.depth, Y.depth, h.depth()});
  for (int n = 1; n <= d; ++n)
    if (!is_continuous(h.level(n), X.filter(n), Y.filter(n))) return false;
  return true;
}

SitusMorphism compose(const SitusMorphism& g, const SitusMorphism& f) {
  SitusMorphism h;
  int d = std::min(g.depth(), f.depth());
  for (int n = 1; n <= d; ++n)
    h.level_maps.push_back(SetMap::compose(g.level(n), f.level(n)));
  return h;
}

}  // namespace situskit
