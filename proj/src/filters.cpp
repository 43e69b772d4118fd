#include "situskit/filters.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace situskit {

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IndexSet::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool IndexSet::subset_of(const IndexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool IndexSet::intersects(const IndexSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  IndexSet r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  IndexSet r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

bool IndexSet::operator<(const IndexSet& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < n_; ++i) {
    bool a = contains(i), b = o.contains(i);
    if (a != b) return b;  // sets containing smaller elements come first
  }
  return false;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> v;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(i)) v.push_back(static_cast<int>(i));
  return v;
}

Carrier Carrier::from(std::vector<Tuple> ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  Carrier c;
  c.elems = std::move(ts);
  for (std::size_t i = 0; i < c.elems.size(); ++i)
    c.pos.emplace(c.elems[i], static_cast<int>(i));
  return c;
}

int Carrier::find(const Tuple& t) const {
  auto it = pos.find(t);
  return it == pos.end() ? -1 : it->second;
}

int Carrier::at(const Tuple& t) const {
  int i = find(t);
  if (i < 0) throw DomainError("carrier: element not present");
  return i;
}

IndexSet SetMap::preimage(const IndexSet& s) const {
  IndexSet r(static_cast<std::size_t>(src));
  for (int i = 0; i < src; ++i)
    if (s.contains(static_cast<std::size_t>(tab[static_cast<std::size_t>(i)])))
      r.insert(static_cast<std::size_t>(i));
  return r;
}

IndexSet SetMap::image(const IndexSet& s) const {
  IndexSet r(static_cast<std::size_t>(dst));
  for (int i = 0; i < src; ++i)
    if (s.contains(static_cast<std::size_t>(i)))
      r.insert(static_cast<std::size_t>(tab[static_cast<std::size_t>(i)]));
  return r;
}

bool SetMap::surjective() const {
  return image_full().count() == static_cast<std::size_t>(dst);
}

bool SetMap::injective() const {
  return image_full().count() == static_cast<std::size_t>(src);
}

SetMap SetMap::compose(const SetMap& g, const SetMap& f) {
  if (f.dst != g.src) throw DomainError("compose: middle carriers differ");
  SetMap r(f.src, g.dst);
  for (int i = 0; i < f.src; ++i) r.tab[static_cast<std::size_t>(i)] = g(f(i));
  return r;
}

SetMap SetMap::identity(int n) {
  SetMap r(n, n);
  for (int i = 0; i < n; ++i) r.tab[static_cast<std::size_t>(i)] = i;
  return r;
}

bool Filter::is_neighborhood(const IndexSet& s) const {
  if (static_cast<std::size_t>(carrier) != s.universe())
    throw DomainError("is_neighborhood: set not over this carrier");
  if (hits) {
    if (!hits->core.subset_of(s)) return false;
    for (const auto& t : hits->targets)
      if (!s.intersects(t)) return false;
    return true;
  }
  if (base.empty()) return s.is_full();
  for (const auto& b : base)
    if (b.subset_of(s)) return true;
  return false;
}

IndexSet Filter::min_neighborhood() const {
  if (hits) throw DomainError("min_neighborhood: intensional filter");
  if (base.empty()) return IndexSet::full(static_cast<std::size_t>(carrier));
  IndexSet m = base.front();
  for (std::size_t i = 1; i < base.size(); ++i) m = m & base[i];
  return m;
}

Filter antidiscrete_filter(int n) {
  Filter f;
  f.carrier = n;
  return f;
}

Filter discrete_filter(int n) {
  // All subsets are neighbourhoods; the minimal element of the closure of the
  // singleton base is the empty set.
  Filter f;
  f.carrier = n;
  f.base.push_back(IndexSet(static_cast<std::size_t>(n)));
  return f;
}

Filter make_filter(int n, const std::vector<IndexSet>& generators) {
  Filter f;
  f.carrier = n;
  if (generators.empty()) return f;  // antidiscrete
  IndexSet m = generators.front();
  for (std::size_t i = 1; i < generators.size(); ++i) {
    if (generators[i].universe() != static_cast<std::size_t>(n))
      throw DomainError("make_filter: generator over wrong carrier");
    m = m & generators[i];
  }
  f.base.push_back(m);
  return f;
}

namespace {

// Enumerates minimal neighbourhoods of an intensional filter (core plus one
// element per target) and applies `fn`; returns false if `fn` ever does.
template <typename Fn>
bool for_each_minimal_hit_neighborhood(const Filter& dst, Fn&& fn) {
  const auto& h = *dst.hits;
  std::vector<std::vector<int>> choices;
  std::size_t prod = 1;
  for (const auto& t : h.targets) {
    choices.push_back(t.to_vector());
    prod *= choices.back().size();
    if (prod > (1u << 16))
      throw ResourceError("intensional filter: too many minimal neighbourhoods");
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    IndexSet nb = h.core;
    for (std::size_t j = 0; j < choices.size(); ++j)
      nb.insert(static_cast<std::size_t>(choices[j][idx[j]]));
    if (!fn(nb)) return false;
    std::size_t j = 0;
    for (; j < idx.size(); ++j) {
      if (++idx[j] < choices[j].size()) break;
      idx[j] = 0;
    }
    if (j == idx.size()) return true;
    if (idx.empty()) return true;
  }
}

}  // namespace

bool is_continuous(const SetMap& f, const Filter& src, const Filter& dst) {
  if (f.src != src.carrier || f.dst != dst.carrier)
    throw DomainError("is_continuous: carrier mismatch");
  if (dst.hits) {
    if (dst.hits->targets.empty()) {
      return src.is_neighborhood(f.preimage(dst.hits->core));
    }
    return for_each_minimal_hit_neighborhood(dst, [&](const IndexSet& nb) {
      return src.is_neighborhood(f.preimage(nb));
    });
  }
  if (dst.base.empty()) return true;  // preimage of the full carrier is full
  for (const auto& b : dst.base)
    if (!src.is_neighborhood(f.preimage(b))) return false;
  return true;
}

Filter coarsest_filter(int src_carrier,
                       const std::vector<std::pair<SetMap, Filter>>& targets) {
  std::vector<IndexSet> gens;
  for (const auto& [m, flt] : targets) {
    if (m.src != src_carrier)
      throw DomainError("coarsest_filter: inconsistent source carriers");
    if (m.dst != flt.carrier)
      throw DomainError("coarsest_filter: map/filter carrier mismatch");
    if (flt.hits)
      throw ResourceError("coarsest_filter: intensional target unsupported");
    for (const auto& b : flt.base) gens.push_back(m.preimage(b));
  }
  return make_filter(src_carrier, gens);
}

Filter finest_filter(const SetMap& f, const Filter& src) {
  if (f.src != src.carrier)
    throw DomainError("finest_filter: carrier mismatch");
  if (src.hits) throw ResourceError("finest_filter: intensional source unsupported");
  return make_filter(f.dst, {f.image(src.min_neighborhood())});
}

bool filter_finer(const Filter& a, const Filter& b) {
  if (a.carrier != b.carrier) throw DomainError("filter_finer: carriers differ");
  if (b.hits) {
    return for_each_minimal_hit_neighborhood(
        b, [&](const IndexSet& nb) { return a.is_neighborhood(nb); });
  }
  if (b.base.empty()) return true;
  for (const auto& x : b.base)
    if (!a.is_neighborhood(x)) return false;
  return true;
}

bool filters_equal(const Filter& a, const Filter& b) {
  return filter_finer(a, b) && filter_finer(b, a);
}

namespace {
std::size_t g_guard_scale = 1;
}

std::size_t guard_scale() { return g_guard_scale; }
void set_guard_scale(std::size_t s) { g_guard_scale = s ? s : 1; }

std::string to_string(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.to_vector()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace situskit
