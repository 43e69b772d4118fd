#include "situskit/ramsey.hpp"

#include <algorithm>
#include <set>

namespace situskit {

bool is_degenerate(const TruncatedSitus& X, int level, int elem) {
  if (level == 1) return false;
  // degenerate iff in the image of some map from the level below (all index
  // lists from level-1 to level have a repeated index)
  for (const auto& idx : weakly_increasing_lists(level - 1, level)) {
    if (!X.has_face(level - 1, idx)) continue;
    const SetMap& f = X.face(level - 1, idx);
    for (int z = 0; z < f.src; ++z)
      if (f(z) == elem) return true;
  }
  return false;
}

bool is_hereditarily_nondegenerate(const TruncatedSitus& X, int level,
                                   int elem) {
  for (int n = 1; n <= level; ++n)
    for (const auto& idx : weakly_increasing_lists(level, n)) {
      bool strict = true;
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) strict = false;
      if (!strict) continue;
      if (!X.has_face(level, idx)) continue;
      if (is_degenerate(X, n, X.face(level, idx)(elem))) return false;
    }
  return true;
}

std::vector<int> homogeneous_simplices(const TruncatedSitus& X,
                                       const Coloring& c, int m) {
  if (c.color.size() != X.level(c.level).size())
    throw DomainError("homogeneous_simplices: coloring not total");
  std::vector<int> out;
  auto lists = weakly_increasing_lists(m, c.level);
  for (int e = 0; e < static_cast<int>(X.level(m).size()); ++e) {
    std::set<int> colors;
    for (const auto& idx : lists) {
      bool strict = true;
      for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) strict = false;
      if (!strict || !X.has_face(m, idx)) continue;
      int face = X.face(m, idx)(e);
      if (!is_hereditarily_nondegenerate(X, c.level, face)) continue;
      colors.insert(c.color[static_cast<std::size_t>(face)]);
    }
    if (colors.size() <= 1) out.push_back(e);
  }
  return out;
}

ColoringQuotient coloring_quotient(const TruncatedSitus& X, const Coloring& c) {
  ColoringQuotient R;
  R.source = X;
  for (int m = 1; m <= X.depth; ++m) {
    auto hom = homogeneous_simplices(X, c, m);
    IndexSet g(X.level(m).size());
    for (int e : hom) g.insert(static_cast<std::size_t>(e));
    R.source.filter(m) =
        make_filter(static_cast<int>(X.level(m).size()), {g});
  }
  // ≈_c: equal colors on matching hereditarily non-degenerate faces into the
  // coloring level, and matching degeneracy patterns.
  for (int m = 1; m <= X.depth; ++m) {
    auto lists = weakly_increasing_lists(m, c.level);
    struct Key {
      std::vector<int> pattern;  // -1 = not hereditarily non-degenerate
      bool operator<(const Key& o) const { return pattern < o.pattern; }
    };
    std::map<Key, int> ids;
    std::vector<int> cls(X.level(m).size(), -1);
    for (int e = 0; e < static_cast<int>(X.level(m).size()); ++e) {
      Key k;
      for (const auto& idx : lists) {
        int face = X.face(m, idx)(e);
        bool hnd = is_hereditarily_nondegenerate(X, c.level, face);
        k.pattern.push_back(hnd ? c.color[static_cast<std::size_t>(face)] : -1);
      }
      auto it = ids.find(k);
      if (it == ids.end()) it = ids.emplace(k, static_cast<int>(ids.size())).first;
      cls[static_cast<std::size_t>(e)] = it->second;
    }
    R.equiv.classes.push_back(std::move(cls));
  }
  R.quotient = quotient(R.source, R.equiv);
  R.projection = quotient_projection(R.source, R.quotient, R.equiv);
  return R;
}

}  // namespace situskit
