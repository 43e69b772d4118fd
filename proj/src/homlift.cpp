#include "situskit/homlift.hpp"

#include <algorithm>

namespace situskit {

namespace {

struct LevelState {
  std::vector<std::vector<int>> img;  // img[n-1][e], -1 = unassigned
};

// Checks every face constraint whose source and target values are all
// assigned and which involves level `n` up to the element prefix.
bool faces_consistent(const TruncatedSitus& X, const TruncatedSitus& Y,
                      const LevelState& st, int upto_level) {
  for (const auto& [key, fx] : X.faces) {
    int m = key.first;
    int n = static_cast<int>(key.second.size());
    if (m > upto_level || n > upto_level) continue;
    if (!Y.has_face(m, key.second)) continue;
    const SetMap& fy = Y.face(m, key.second);
    const auto& hm = st.img[static_cast<std::size_t>(m - 1)];
    const auto& hn = st.img[static_cast<std::size_t>(n - 1)];
    for (int e = 0; e < fx.src; ++e) {
      int he = hm[static_cast<std::size_t>(e)];
      int hf = hn[static_cast<std::size_t>(fx(e))];
      if (he < 0 || hf < 0) continue;
      if (fy(he) != hf) return false;
    }
  }
  return true;
}

struct Enumerator {
  const TruncatedSitus& X;
  const TruncatedSitus& Y;
  const HomOptions& opt;
  int depth;
  LevelState st;
  std::vector<SitusMorphism> out;
  std::size_t steps = 0;

  Enumerator(const TruncatedSitus& x, const TruncatedSitus& y,
             const HomOptions& o)
      : X(x), Y(y), opt(o), depth(std::min(x.depth, y.depth)) {
    for (int n = 1; n <= depth; ++n)
      st.img.emplace_back(X.level(n).size(), -1);
  }

  bool pin_ok(int n, int e, int y) const {
    if (opt.pre_i && opt.pre_f && n <= opt.pre_i->depth() &&
        n <= opt.pre_f->depth()) {
      const SetMap& in = opt.pre_i->level(n);
      const SetMap& fn = opt.pre_f->level(n);
      for (int a = 0; a < in.src; ++a)
        if (in(a) == e && fn(a) != y) return false;
    }
    if (opt.post_p && opt.post_g && n <= opt.post_p->depth() &&
        n <= opt.post_g->depth()) {
      if (opt.post_p->level(n)(y) != opt.post_g->level(n)(e)) return false;
    }
    return true;
  }

  bool vertex_options_ok() const {
    const auto& v = st.img[0];
    if (opt.injective_vertex) {
      std::vector<int> seen(Y.level(1).size(), 0);
      for (int y : v)
        if (seen[static_cast<std::size_t>(y)]++) return false;
    }
    if (opt.surjective_vertex) {
      std::vector<int> seen(Y.level(1).size(), 0);
      for (int y : v) seen[static_cast<std::size_t>(y)] = 1;
      for (int s : seen)
        if (!s) return false;
    }
    return true;
  }

  bool done() const { return opt.limit && out.size() >= opt.limit; }

  void emit() {
    SitusMorphism h;
    for (int n = 1; n <= depth; ++n) {
      SetMap m(static_cast<int>(X.level(n).size()),
               static_cast<int>(Y.level(n).size()));
      m.tab = st.img[static_cast<std::size_t>(n - 1)];
      h.level_maps.push_back(std::move(m));
    }
    out.push_back(std::move(h));
  }

  bool level_continuous(int n) const {
    SetMap m(static_cast<int>(X.level(n).size()),
             static_cast<int>(Y.level(n).size()));
    m.tab = st.img[static_cast<std::size_t>(n - 1)];
    return is_continuous(m, X.filter(n), Y.filter(n));
  }

  void assign_level(int n, std::size_t e) {
    if (done()) return;
    if (++steps > opt.guard) throw ResourceError("hom_set: search guard exceeded");
    auto& img = st.img[static_cast<std::size_t>(n - 1)];
    if (e == img.size()) {
      if (n == 1 && !vertex_options_ok()) return;
      if (!level_continuous(n)) return;
      if (n == depth)
        emit();
      else
        assign_level(n + 1, 0);
      return;
    }
    if (img[e] >= 0) {  // forced earlier
      assign_level(n, e + 1);
      return;
    }
    for (int y = 0; y < static_cast<int>(Y.level(n).size()); ++y) {
      if (!pin_ok(n, static_cast<int>(e), y)) continue;
      img[e] = y;
      if (faces_consistent(X, Y, st, n)) assign_level(n, e + 1);
      img[e] = -1;
      if (done()) return;
    }
  }

  void run() {
    if (depth == 0) {
      emit();
      return;
    }
    assign_level(1, 0);
  }
};

bool vertex_monotone(const FinPreorder& P, const FinPreorder& Q,
                     const std::vector<int>& v) {
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b)
      if (P.le(a, b) &&
          !Q.le(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

std::optional<SitusMorphism> induce_from_vertices(const TruncatedSitus& X,
                                                  const TruncatedSitus& Y,
                                                  const std::vector<int>& v,
                                                  int depth) {
  SitusMorphism h;
  for (int n = 1; n <= depth; ++n) {
    SetMap m(static_cast<int>(X.level(n).size()),
             static_cast<int>(Y.level(n).size()));
    for (std::size_t e = 0; e < X.level(n).size(); ++e) {
      Tuple t;
      for (int a : X.level(n).elems[e]) {
        // vertex ids are positions in the level-1 carrier
        int pos = X.level(1).at({a});
        t.push_back(Y.level(1).elems[static_cast<std::size_t>(
            v[static_cast<std::size_t>(pos)])][0]);
      }
      int idx = Y.level(n).find(t);
      if (idx < 0) return std::nullopt;
      m.tab[e] = idx;
    }
    h.level_maps.push_back(std::move(m));
  }
  return h;
}

bool satisfies_pins(const SitusMorphism& h, const HomOptions& opt) {
  if (opt.pre_i && opt.pre_f) {
    int d = std::min({h.depth(), opt.pre_i->depth(), opt.pre_f->depth()});
    for (int n = 1; n <= d; ++n)
      if (!(SetMap::compose(h.level(n), opt.pre_i->level(n)) ==
            opt.pre_f->level(n)))
        return false;
  }
  if (opt.post_p && opt.post_g) {
    int d = std::min({h.depth(), opt.post_p->depth(), opt.post_g->depth()});
    for (int n = 1; n <= d; ++n)
      if (!(SetMap::compose(opt.post_p->level(n), h.level(n)) ==
            opt.post_g->level(n)))
        return false;
  }
  return true;
}

}  // namespace

std::vector<SitusMorphism> hom_set(const TruncatedSitus& X,
                                   const TruncatedSitus& Y,
                                   const HomOptions& opt) {
  int depth = std::min(X.depth, Y.depth);
  if (X.corep && Y.corep && X.complete_faces && Y.complete_faces &&
      !X.filter(1).hits) {
    // Natural transformations between corepresented objects are induced by
    // monotone vertex maps; enumerate those and keep the continuous ones.
    std::vector<SitusMorphism> out;
    const int nx = static_cast<int>(X.level(1).size());
    const int ny = static_cast<int>(Y.level(1).size());
    if (nx == 0) {
      SitusMorphism h;
      for (int n = 1; n <= depth; ++n)
        h.level_maps.push_back(
            SetMap(0, static_cast<int>(Y.level(n).size())));
      if (satisfies_pins(h, opt)) out.push_back(std::move(h));
      return out;
    }
    double total = 1;
    for (int i = 0; i < nx; ++i) {
      total *= std::max(1, ny);
      if (total > static_cast<double>(opt.guard))
        throw ResourceError("hom_set: vertex map space exceeds guard");
    }
    std::vector<int> v(static_cast<std::size_t>(nx), 0);
    while (true) {
      bool keep = !opt.injective_vertex && !opt.surjective_vertex;
      if (!keep) {
        std::vector<int> seen(static_cast<std::size_t>(ny), 0);
        bool inj = true;
        for (int y : v)
          if (seen[static_cast<std::size_t>(y)]++) inj = false;
        bool sur = std::all_of(seen.begin(), seen.end(),
                               [](int s) { return s > 0; });
        keep = (!opt.injective_vertex || inj) && (!opt.surjective_vertex || sur);
      }
      if (keep && vertex_monotone(*X.corep, *Y.corep, v)) {
        auto h = induce_from_vertices(X, Y, v, depth);
        if (h && satisfies_pins(*h, opt) && morphism_continuous(X, Y, *h)) {
          out.push_back(std::move(*h));
          if (opt.limit && out.size() >= opt.limit) return out;
        }
      }
      int i = nx - 1;
      for (; i >= 0; --i) {
        if (++v[static_cast<std::size_t>(i)] < ny) break;
        v[static_cast<std::size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
    return out;
  }
  Enumerator en(X, Y, opt);
  en.run();
  return en.out;
}

std::optional<SitusMorphism> has_lift(const LiftingInstance& inst,
                                      const SitusMorphism& f,
                                      const SitusMorphism& g) {
  // square commutation: p ∘ f = g ∘ i
  int d = std::min({f.depth(), g.depth(), inst.i.depth(), inst.p.depth()});
  for (int n = 1; n <= d; ++n)
    if (!(SetMap::compose(inst.p.level(n), f.level(n)) ==
          SetMap::compose(g.level(n), inst.i.level(n))))
      throw DomainError("has_lift: square does not commute");
  HomOptions opt;
  opt.pre_i = &inst.i;
  opt.pre_f = &f;
  opt.post_p = &inst.p;
  opt.post_g = &g;
  opt.limit = 1;
  auto hs = hom_set(*inst.B, *inst.X, opt);
  if (hs.empty()) return std::nullopt;
  return hs.front();
}

LiftReport lifting_property(const LiftingInstance& inst) {
  LiftReport rep;
  auto fs = hom_set(*inst.A, *inst.X);
  auto gs = hom_set(*inst.B, *inst.Y);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      int d = std::min({f.depth(), g.depth(), inst.i.depth(), inst.p.depth()});
      bool commutes = true;
      for (int n = 1; n <= d && commutes; ++n)
        commutes = SetMap::compose(inst.p.level(n), f.level(n)) ==
                   SetMap::compose(g.level(n), inst.i.level(n));
      if (!commutes) continue;
      ++rep.squares_checked;
      if (!has_lift(inst, f, g)) {
        rep.holds = false;
        rep.witness_f = f;
        rep.witness_g = g;
        return rep;
      }
    }
  return rep;
}

bool right_negation(const std::vector<LiftingInstance>& family) {
  for (const auto& inst : family)
    if (!lifting_property(inst).holds) return false;
  return true;
}

bool left_negation(const std::vector<LiftingInstance>& family) {
  return right_negation(family);
}

std::optional<SitusMorphism> exists_surjection(const TruncatedSitus& X,
                                               const TruncatedSitus& Y) {
  HomOptions opt;
  opt.surjective_vertex = true;
  opt.limit = 1;
  auto hs = hom_set(X, Y, opt);
  if (hs.empty()) return std::nullopt;
  return hs.front();
}

}  // namespace situskit
