#include <doctest.h>

#include <random>

#include "situskit/ramsey.hpp"
#include "test_helpers.hpp"

using namespace situskit;

TEST_CASE("hereditary non-degeneracy") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(3), 3);
  CHECK(is_hereditarily_nondegenerate(X, 3, X.level(3).at({0, 1, 2})));
  CHECK_FALSE(is_hereditarily_nondegenerate(X, 3, X.level(3).at({0, 0, 1})));
  for (int e = 0; e < 3; ++e) CHECK(is_hereditarily_nondegenerate(X, 1, e));
  // (a,b,a)-like simplices do not exist in corepresented carriers of a set,
  // but a pair with distinct entries is fine
  CHECK(is_hereditarily_nondegenerate(X, 2, X.level(2).at({1, 2})));
}

TEST_CASE("homogeneous simplices under a constant coloring") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(3), 3);
  Coloring c;
  c.level = 2;
  c.color.assign(X.level(2).size(), 7);
  CHECK(homogeneous_simplices(X, c, 3).size() == X.level(3).size());
}

TEST_CASE("the pentagon coloring has no homogeneous triple") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(5), 3);
  Coloring c;
  c.level = 2;
  c.color.assign(X.level(2).size(), 0);
  auto edge = [&](int a, int b, int col) {
    c.color[static_cast<std::size_t>(X.level(2).at({a, b}))] = col;
    c.color[static_cast<std::size_t>(X.level(2).at({b, a}))] = col;
  };
  for (int i = 0; i < 5; ++i) edge(i, (i + 1) % 5, 1);
  bool found = false;
  for (int e : homogeneous_simplices(X, c, 3))
    if (is_hereditarily_nondegenerate(X, 3, e)) found = true;
  CHECK_FALSE(found);
}

TEST_CASE("homogeneity is face-hereditary") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(4), 3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> col(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Coloring c;
    c.level = 2;
    c.color.resize(X.level(2).size());
    for (auto& v : c.color) v = col(rng);
    auto hom3 = homogeneous_simplices(X, c, 3);
    auto hom2 = homogeneous_simplices(X, c, 2);
    std::set<int> hom2set(hom2.begin(), hom2.end());
    for (int e : hom3)
      for (const auto& idx : weakly_increasing_lists(3, 2))
        CHECK(hom2set.count(X.face(3, idx)(e)) == 1);
  }
}

TEST_CASE("coloring quotients") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(3), 3);

  // constant coloring: classes are the degeneracy patterns
  Coloring c;
  c.level = 2;
  c.color.assign(X.level(2).size(), 0);
  ColoringQuotient R = coloring_quotient(X, c);
  CHECK(R.quotient.level(1).size() == 1);
  CHECK(R.quotient.level(2).size() == 2);  // diagonal vs off-diagonal
  CHECK(morphism_continuous(R.source, R.quotient, R.projection));
  CHECK(morphism_commutes_with_faces(R.source, R.quotient, R.projection));

  // an injective coloring on pairs identifies no distinct non-degenerate pair
  Coloring inj;
  inj.level = 2;
  inj.color.resize(X.level(2).size());
  for (std::size_t i = 0; i < inj.color.size(); ++i)
    inj.color[i] = static_cast<int>(i);
  ColoringQuotient R2 = coloring_quotient(X, inj);
  const auto& cls = R2.equiv.classes[1];
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      bool ndi = is_hereditarily_nondegenerate(X, 2, static_cast<int>(i));
      bool ndj = is_hereditarily_nondegenerate(X, 2, static_cast<int>(j));
      if (ndi && ndj) CHECK(cls[i] != cls[j]);
    }

  // the pullback of the quotient filter along the projection is the
  // c-neighbourhood filter
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> col(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Coloring rc;
    rc.level = 2;
    rc.color.resize(X.level(2).size());
    for (auto& v : rc.color) v = col(rng);
    ColoringQuotient RR = coloring_quotient(X, rc);
    for (int n = 1; n <= 3; ++n) {
      Filter pulled = coarsest_filter(
          static_cast<int>(X.level(n).size()),
          {{RR.projection.level(n), RR.quotient.filter(n)}});
      CHECK(filters_equal(pulled, RR.source.filter(n)));
    }
  }
}
