#include "situskit/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "situskit/homlift.hpp"
#include "situskit/stone.hpp"

namespace situskit {

void FinMetric::check() const {
  const int n = size();
  if (static_cast<int>(dist.size()) != n)
    throw DomainError("metric: table size mismatch");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(dist[static_cast<std::size_t>(a)].size()) != n)
      throw DomainError("metric: table row size mismatch");
    if (d(a, a) != 0) throw DomainError("metric: nonzero diagonal");
    for (int b = 0; b < n; ++b) {
      if (d(a, b) < 0) throw DomainError("metric: negative distance");
      if (d(a, b) != d(b, a)) throw DomainError("metric: not symmetric");
      for (int c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c))
          throw DomainError("metric: triangle inequality fails");
    }
  }
}

TruncatedSitus metric_situs(const FinMetric& M, int depth) {
  M.check();
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(M.size()), depth);
  // thresholds: realized positive distances plus one value above the diameter
  std::set<long long> eps;
  long long diam = 0;
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b) {
      if (M.d(a, b) > 0) eps.insert(M.d(a, b));
      diam = std::max(diam, M.d(a, b));
    }
  eps.insert(diam + 1);
  for (int n = 1; n <= depth; ++n) {
    const Carrier& car = X.level(n);
    std::vector<IndexSet> gens;
    for (long long e : eps) {
      IndexSet g(car.size());
      for (std::size_t t = 0; t < car.size(); ++t) {
        const Tuple& tup = car.elems[t];
        bool small = true;
        for (std::size_t i = 0; i < tup.size() && small; ++i)
          for (std::size_t j = i + 1; j < tup.size(); ++j)
            if (M.d(tup[i], tup[j]) >= e) {
              small = false;
              break;
            }
        if (small) g.insert(t);
      }
      gens.push_back(std::move(g));
    }
    X.filter(n) = make_filter(static_cast<int>(car.size()), gens);
  }
  return X;
}

namespace {

IndexSet compose_entourage(const IndexSet& W1, const IndexSet& W2, int n) {
  IndexSet r(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      bool found = false;
      for (int b = 0; b < n && !found; ++b)
        found = W1.contains(static_cast<std::size_t>(a * n + b)) &&
                W2.contains(static_cast<std::size_t>(b * n + c));
      if (found) r.insert(static_cast<std::size_t>(a * n + c));
    }
  return r;
}

IndexSet inverse_entourage(const IndexSet& W, int n) {
  IndexSet r(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (W.contains(static_cast<std::size_t>(a * n + b)))
        r.insert(static_cast<std::size_t>(b * n + a));
  return r;
}

}  // namespace

UniformityReport uniformity_axioms(const Filter& U, int npoints) {
  if (U.carrier != npoints * npoints)
    throw DomainError("uniformity_axioms: carrier is not a square");
  if (U.hits) throw DomainError("uniformity_axioms: intensional filter");
  UniformityReport rep;
  IndexSet diag(static_cast<std::size_t>(U.carrier));
  for (int a = 0; a < npoints; ++a)
    diag.insert(static_cast<std::size_t>(a * npoints + a));
  IndexSet m = U.min_neighborhood();
  rep.contains_diagonal = diag.subset_of(m);
  rep.inverse_closed = U.is_neighborhood(inverse_entourage(m, npoints));
  // The smallest candidate W is the minimal neighbourhood itself; W∘W must
  // sit inside every V, i.e. inside the minimal neighbourhood.
  IndexSet ww = compose_entourage(m, m, npoints);
  rep.half_size_exists = ww.subset_of(m);
  // Level-3 coarsest filter from [1,2],[2,3] has minimal element
  // {(x,y,z) : (x,y) ∈ m, (y,z) ∈ m}; the [1,3]-image of that set is m∘m,
  // so [1,3] is continuous exactly when m∘m sits inside every neighbourhood.
  rep.level3_composition = ww.subset_of(m);
  if (!rep.all()) {
    std::ostringstream os;
    os << "min=" << to_string(m);
    rep.detail = os.str();
  }
  return rep;
}

void FinTopology::check() const {
  bool has_empty = false, has_full = false;
  for (const auto& o : opens) {
    if (o.universe() != static_cast<std::size_t>(npoints))
      throw DomainError("topology: open set over wrong point set");
    if (o.empty()) has_empty = true;
    if (o.is_full()) has_full = true;
  }
  if (!has_empty || !has_full)
    throw DomainError("topology: must contain the empty and the full set");
  for (const auto& a : opens)
    for (const auto& b : opens) {
      IndexSet u = a | b;
      IndexSet i = a & b;
      bool fu = false, fi = false;
      for (const auto& o : opens) {
        if (o == u) fu = true;
        if (o == i) fi = true;
      }
      if (!fu) throw DomainError("topology: not closed under union");
      if (!fi) throw DomainError("topology: not closed under intersection");
    }
}

IndexSet FinTopology::min_nbhd(int x) const {
  IndexSet m = IndexSet::full(static_cast<std::size_t>(npoints));
  for (const auto& o : opens)
    if (o.contains(static_cast<std::size_t>(x))) m = m & o;
  return m;
}

bool FinTopology::connected() const {
  for (const auto& o : opens) {
    if (o.empty() || o.is_full()) continue;
    // clopen iff the complement is open
    IndexSet comp(static_cast<std::size_t>(npoints));
    for (int i = 0; i < npoints; ++i)
      if (!o.contains(static_cast<std::size_t>(i)))
        comp.insert(static_cast<std::size_t>(i));
    for (const auto& p : opens)
      if (p == comp) return false;
  }
  return true;
}

TruncatedSitus covering_situs(const FinTopology& T, int depth) {
  T.check();
  if (T.npoints > 6) throw ResourceError("covering_situs: too many points");
  TruncatedSitus X =
      corepresented_by_preorder(FinPreorder::set(T.npoints), depth);
  if (depth >= 2) {
    // level 2: minimal covering set from the minimal neighbourhoods
    const Carrier& car2 = X.level(2);
    IndexSet c(car2.size());
    for (int x = 0; x < T.npoints; ++x) {
      IndexSet nb = T.min_nbhd(x);
      for (int y = 0; y < T.npoints; ++y)
        if (nb.contains(static_cast<std::size_t>(y)))
          c.insert(static_cast<std::size_t>(car2.at({x, y})));
    }
    X.filter(2) = make_filter(static_cast<int>(car2.size()), {c});
    // higher levels: coarsest filter making consecutive-pair maps continuous
    for (int n = 3; n <= depth; ++n) {
      const Carrier& car = X.level(n);
      IndexSet g(car.size());
      for (std::size_t e = 0; e < car.size(); ++e) {
        const Tuple& t = car.elems[e];
        bool ok = true;
        for (std::size_t i = 0; i + 1 < t.size() && ok; ++i)
          ok = T.min_nbhd(t[i]).contains(static_cast<std::size_t>(t[i + 1]));
        if (ok) g.insert(e);
      }
      X.filter(n) = make_filter(static_cast<int>(car.size()), {g});
    }
  }
  return X;
}

bool is_morphism_uniform(const SetMap& f, const FinMetric& M1,
                         const FinMetric& M2, int depth) {
  TruncatedSitus X = metric_situs(M1, depth);
  TruncatedSitus Y = metric_situs(M2, depth);
  SitusMorphism h;
  for (int n = 1; n <= depth; ++n) {
    SetMap m(static_cast<int>(X.level(n).size()),
             static_cast<int>(Y.level(n).size()));
    for (std::size_t e = 0; e < X.level(n).size(); ++e) {
      Tuple t;
      for (int v : X.level(n).elems[e]) t.push_back(f(v));
      m.tab[e] = Y.level(n).at(t);
    }
    h.level_maps.push_back(std::move(m));
  }
  return morphism_commutes_with_faces(X, Y, h) && morphism_continuous(X, Y, h);
}

CompleteReport is_complete_lp(const FinMetric& M, int chain_len, int depth) {
  CompleteReport rep;
  if (chain_len == 0) {
    rep.shift_lifting = rep.adjoined_top_lifting = true;
    return rep;
  }
  // (iv'): ⊥ → |I|^tails ⋔ M∘[+∞] → M
  {
    TruncatedSitus met = metric_situs(M, depth);
    TruncatedSitus shifted = shift(met);
    TruncatedSitus A = initial_situs(depth - 1);
    TruncatedSitus B = order_object(FinPreorder::chain(chain_len),
                                    OrderFlavor::SetFlavor,
                                    OrderFilterKind::Tails, depth - 1);
    LiftingInstance inst;
    inst.A = &A;
    inst.B = &B;
    inst.X = &shifted;
    inst.Y = &met;
    inst.i = hom_set(A, B).front();
    inst.p = shift_nat(met);
    rep.shift_lifting = lifting_property(inst).holds;
  }
  // (v''): I^{≤tails} → (I⊔{+∞})^{≤tails⊔{+∞}} ⋔ M → ⊤
  {
    TruncatedSitus met = metric_situs(M, depth);
    TruncatedSitus A = order_object(FinPreorder::chain(chain_len),
                                    OrderFlavor::Ordered,
                                    OrderFilterKind::Tails, depth);
    TruncatedSitus B = chain_with_top(chain_len, true, depth);
    TruncatedSitus top = terminal_situs(depth);
    // inclusion vertex map i |-> i
    SitusMorphism inc;
    for (int n = 1; n <= depth; ++n) {
      SetMap m(static_cast<int>(A.level(n).size()),
               static_cast<int>(B.level(n).size()));
      for (std::size_t e = 0; e < A.level(n).size(); ++e)
        m.tab[e] = B.level(n).at(A.level(n).elems[e]);
      inc.level_maps.push_back(std::move(m));
    }
    LiftingInstance inst;
    inst.A = &A;
    inst.B = &B;
    inst.X = &met;
    inst.Y = &top;
    inst.i = std::move(inc);
    inst.p = hom_set(met, top).front();
    rep.adjoined_top_lifting = lifting_property(inst).holds;
  }
  return rep;
}

CompactReport compactness_lp(const FinTopology& T, int alpha, int depth) {
  if (!T.connected())
    throw DomainError("compactness_lp: topology is not connected");
  CompactReport rep;
  if (alpha <= 1) {
    rep.factor_lifting = true;
    rep.no_surjection = true;
    return rep;
  }
  TruncatedSitus X = covering_situs(T, depth);
  TruncatedSitus target = initial_interval_order(alpha, depth);
  auto gs = hom_set(X, target);
  rep.maps_checked = gs.size();
  rep.factor_lifting = true;
  rep.no_surjection = true;
  for (const auto& g : gs) {
    // factor through some β^> (β < alpha) along a monotone injection
    std::set<int> image;
    for (int v : g.level(1).tab) image.insert(v);
    if (static_cast<int>(image.size()) >= alpha) {
      rep.no_surjection = false;
      rep.factor_lifting = false;
      std::ostringstream os;
      for (std::size_t i = 0; i < g.level(1).tab.size(); ++i)
        os << (i ? "," : "") << g.level(1).tab[i];
      rep.witness = os.str();
      break;
    }
    int beta = std::max<int>(1, static_cast<int>(image.size()));
    TruncatedSitus small = initial_interval_order(beta, depth);
    // monotone injection of the image enumeration into alpha
    std::vector<int> ordered(image.begin(), image.end());
    SetMap vertex(static_cast<int>(X.level(1).size()), beta);
    for (std::size_t e = 0; e < X.level(1).size(); ++e) {
      int v = g.level(1).tab[e];
      vertex.tab[e] = static_cast<int>(
          std::lower_bound(ordered.begin(), ordered.end(), v) - ordered.begin());
    }
    SitusMorphism h;
    bool ok = true;
    for (int n = 1; n <= depth && ok; ++n) {
      SetMap m(static_cast<int>(X.level(n).size()),
               static_cast<int>(small.level(n).size()));
      for (std::size_t e = 0; e < X.level(n).size(); ++e) {
        Tuple t;
        for (int v : X.level(n).elems[e]) t.push_back(vertex(v));
        m.tab[e] = small.level(n).at(t);
      }
      h.level_maps.push_back(std::move(m));
    }
    ok = ok && morphism_continuous(X, small, h);
    if (!ok) {
      rep.factor_lifting = false;
      break;
    }
  }
  return rep;
}

}  // namespace situskit
