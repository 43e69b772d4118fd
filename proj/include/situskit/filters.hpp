#pragma once

// Finite filters in the modified Bourbaki sense: the empty set is admitted as
// a neighbourhood, so the degenerate filter {all subsets} is a filter and the
// category has an initial object.  On a finite carrier every filter generated
// by finitely many sets is principal; the base is stored as the ⊆-minimal
// elements of its intersection closure, which collapses to a single set.
//
// One construction (the antichain filter on tree objects) is not a filter in
// the intersection-closed sense but only a monotone neighbourhood system; it
// is represented by the intensional `Hits` form: S is a neighbourhood iff
// S ⊇ core and S meets every target set.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace situskit {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of {0,..,n-1} as a packed bitset.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static IndexSet full(std::size_t n) {
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }

  void insert(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void erase(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == n_; }

  bool subset_of(const IndexSet& o) const;
  bool intersects(const IndexSet& o) const;

  IndexSet operator&(const IndexSet& o) const;
  IndexSet operator|(const IndexSet& o) const;

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  // Lexicographic on the element list; used only for deterministic ordering.
  bool operator<(const IndexSet& o) const;

  std::vector<int> to_vector() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// A tuple of atom ids.  Level-n simplices are width-n tuples; plain atoms are
// width-1 tuples.  Quotient carriers use canonical representative tuples.
using Tuple = std::vector<int>;

// Ordered finite set of simplices, indexed densely.  Elements are kept sorted
// lexicographically so all downstream enumeration is deterministic.
struct Carrier {
  std::vector<Tuple> elems;
  std::map<Tuple, int> pos;

  static Carrier from(std::vector<Tuple> ts);

  std::size_t size() const { return elems.size(); }
  int find(const Tuple& t) const;
  int at(const Tuple& t) const;  // throws DomainError when absent
  const Tuple& operator[](std::size_t i) const { return elems[i]; }
};

// Total map between index ranges.
struct SetMap {
  int src = 0;
  int dst = 0;
  std::vector<int> tab;

  SetMap() = default;
  SetMap(int s, int d) : src(s), dst(d), tab(s, 0) {}

  int operator()(int i) const { return tab[static_cast<std::size_t>(i)]; }

  IndexSet preimage(const IndexSet& s) const;
  IndexSet image(const IndexSet& s) const;
  IndexSet image_full() const { return image(IndexSet::full(src)); }
  bool surjective() const;
  bool injective() const;

  static SetMap compose(const SetMap& g, const SetMap& f);  // g ∘ f
  static SetMap identity(int n);

  bool operator==(const SetMap&) const = default;
};

struct Filter {
  int carrier = 0;
  // ⊆-minimal intersection-closed base; empty base = antidiscrete {carrier}.
  std::vector<IndexSet> base;

  // Intensional form: S is large iff S ⊇ core and S ∩ t ≠ ∅ for every target.
  // Targets with no candidates at this truncation are dropped by constructors.
  struct Hits {
    IndexSet core;
    std::vector<IndexSet> targets;
  };
  std::optional<Hits> hits;

  bool is_neighborhood(const IndexSet& s) const;
  // Unique minimal neighbourhood (base-backed filters only).
  IndexSet min_neighborhood() const;
};

Filter antidiscrete_filter(int n);
Filter discrete_filter(int n);
Filter make_filter(int n, const std::vector<IndexSet>& generators);

bool is_continuous(const SetMap& f, const Filter& src, const Filter& dst);

// Coarsest filter on `src_carrier` making every listed map continuous.
Filter coarsest_filter(int src_carrier,
                       const std::vector<std::pair<SetMap, Filter>>& targets);

// Finest filter on f.dst making f continuous.
Filter finest_filter(const SetMap& f, const Filter& src);

bool filters_equal(const Filter& a, const Filter& b);
// True when every b-neighbourhood is an a-neighbourhood.
bool filter_finer(const Filter& a, const Filter& b);

std::string to_string(const IndexSet& s);

// Multiplier applied to the built-in size guards; raised by --guard-override.
std::size_t guard_scale();
void set_guard_scale(std::size_t s);

}  // namespace situskit
