#include <doctest.h>

#include "situskit/simplex.hpp"
#include "situskit/stone.hpp"
#include "test_helpers.hpp"

using namespace situskit;

TEST_CASE("corepresented carriers") {
  TruncatedSitus chain3 = corepresented_by_preorder(FinPreorder::chain(3), 2);
  CHECK(chain3.level(2).size() == 6);  // weakly increasing pairs of a 3-chain

  TruncatedSitus set2 = corepresented_by_preorder(FinPreorder::set(2), 2);
  CHECK(set2.level(2).size() == 4);

  // face [1<=1] of (a,b) is (a,a)
  int ab = set2.level(2).at({0, 1});
  const SetMap& f = set2.face(2, {1, 1});
  CHECK(set2.level(2).elems[static_cast<std::size_t>(f(ab))] == Tuple{0, 0});
}

TEST_CASE("index list composition follows the displayed rule") {
  // [j..] : l -> m then [i..] : m -> n equals [j_{i_1} <= .. <= j_{i_n}]
  for (int l = 1; l <= 4; ++l)
    for (const auto& inner : weakly_increasing_lists(l, 3))
      for (const auto& outer : weakly_increasing_lists(3, 2)) {
        auto composite = compose_index_lists(outer, inner);
        REQUIRE(composite.size() == 2);
        CHECK(composite[0] == inner[static_cast<std::size_t>(outer[0] - 1)]);
        CHECK(composite[1] == inner[static_cast<std::size_t>(outer[1] - 1)]);
      }
}

TEST_CASE("validate on corepresented objects with default filters") {
  for (int atoms = 1; atoms <= 4; ++atoms) {
    CHECK(validate(corepresented_by_preorder(FinPreorder::chain(atoms), 3)).empty());
    CHECK(validate(corepresented_by_preorder(FinPreorder::set(atoms), 3)).empty());
  }
  // a poset that is neither a chain nor a set
  FinPreorder p = FinPreorder::from_leq(3, {{0, 1}, {0, 2}});
  CHECK(validate(corepresented_by_preorder(p, 3)).empty());
  // the degeneracy maps need reflexivity
  FinPreorder bad = FinPreorder::from_leq(2, {{0, 1}}, false);
  CHECK_THROWS_AS(corepresented_by_preorder(bad, 2), DomainError);
}

TEST_CASE("validate flags a corrupted filter") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(2), 2);
  IndexSet aa(X.level(2).size());
  aa.insert(static_cast<std::size_t>(X.level(2).at({0, 0})));
  X.filter(2) = make_filter(static_cast<int>(X.level(2).size()), {aa});
  auto issues = validate(X);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == "continuity");
  CHECK(issues[0].level_from == 1);
  CHECK(issues[0].face == std::vector<int>{1, 1});
}

TEST_CASE("supplying a discontinuous filter at construction is an error") {
  std::vector<Filter> filters;
  TruncatedSitus probe = corepresented_by_preorder(FinPreorder::set(2), 2);
  filters.push_back(antidiscrete_filter(static_cast<int>(probe.level(1).size())));
  IndexSet aa(probe.level(2).size());
  aa.insert(static_cast<std::size_t>(probe.level(2).at({0, 0})));
  filters.push_back(make_filter(static_cast<int>(probe.level(2).size()), {aa}));
  CHECK_THROWS_AS(corepresented_by_preorder(FinPreorder::set(2), 2, &filters),
                  DomainError);
}

TEST_CASE("terminal and initial objects") {
  TruncatedSitus top = terminal_situs(3);
  CHECK(top.level(3).size() == 1);
  TruncatedSitus bot = initial_situs(3);
  CHECK(bot.level(1).size() == 0);
  CHECK(bot.filter(1).is_neighborhood(IndexSet(0)));
  CHECK(validate(top).empty());
  CHECK(validate(bot).empty());
}

TEST_CASE("shift and its natural transformation") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(2), 3);
  TruncatedSitus S = shift(X);
  CHECK(S.depth == 2);
  CHECK(S.level(1).size() == 4);  // X(2)
  SitusMorphism nat = shift_nat(X);
  // at level 1: (a,b) -> a
  int ab = X.level(2).at({0, 1});
  CHECK(X.level(1).elems[static_cast<std::size_t>(nat.level(1)(ab))] == Tuple{0});
  CHECK(morphism_commutes_with_faces(S, X, nat));
  CHECK(morphism_continuous(S, X, nat));

  TruncatedSitus top = terminal_situs(3);
  TruncatedSitus stop = shift(top);
  CHECK(stop.level(1).size() == 1);
  CHECK(stop.level(2).size() == 1);
}

TEST_CASE("quotients") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(2), 2);

  // identity equivalence: an isomorphic copy
  LevelEquivalence id;
  id.classes.push_back({0, 1});
  id.classes.push_back({0, 1, 2, 3});
  TruncatedSitus Q1 = quotient(X, id);
  CHECK(Q1.level(1).size() == 2);
  CHECK(Q1.level(2).size() == 4);
  CHECK(validate(Q1).empty());

  // total equivalence: the terminal object's shape
  LevelEquivalence total;
  total.classes.push_back({0, 0});
  total.classes.push_back({0, 0, 0, 0});
  TruncatedSitus Q2 = quotient(X, total);
  CHECK(Q2.level(1).size() == 1);
  CHECK(Q2.level(2).size() == 1);

  // same-type-over-empty-set on the two-element pure-equality structure
  using situskit::testing::pure_set;
  FinStructure M = pure_set(2);
  LevelEquivalence E = orbit_equivalence(M, {}, 2);
  TruncatedSitus Q3 = quotient(X, E);
  CHECK(Q3.level(1).size() == 1);
  CHECK(validate(Q3).empty());

  // incompatible equivalence is rejected with a witness
  LevelEquivalence bad;
  bad.classes.push_back({0, 0});
  bad.classes.push_back({0, 1, 2, 3});
  CHECK_THROWS_AS(quotient(X, bad), DomainError);
}

TEST_CASE("quotient projection is continuous and couniversal") {
  TruncatedSitus X = corepresented_by_preorder(FinPreorder::set(3), 2);
  LevelEquivalence E = orbit_equivalence(situskit::testing::pure_set(3), {}, 2);
  TruncatedSitus Q = quotient(X, E);
  SitusMorphism pr = quotient_projection(X, Q, E);
  CHECK(morphism_commutes_with_faces(X, Q, pr));
  CHECK(morphism_continuous(X, Q, pr));
  // couniversality at level 1: any map constant on classes factors
  const auto& cls = E.classes[0];
  std::vector<int> constant_map(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i)
    constant_map[i] = cls[i] % 2;
  std::vector<int> through(Q.level(1).size(), -1);
  bool factors = true;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    int q = pr.level(1)(static_cast<int>(i));
    if (through[static_cast<std::size_t>(q)] == -1)
      through[static_cast<std::size_t>(q)] = constant_map[i];
    else if (through[static_cast<std::size_t>(q)] != constant_map[i])
      factors = false;
  }
  CHECK(factors);
}

TEST_CASE("disjoint unions") {
  TruncatedSitus A = corepresented_by_preorder(FinPreorder::chain(2), 2);
  TruncatedSitus B = corepresented_by_preorder(FinPreorder::chain(1), 2);
  TruncatedSitus U = disjoint_union({&A, &B});
  CHECK(U.level(1).size() == 3);
  CHECK(U.level(2).size() == A.level(2).size() + B.level(2).size());
  CHECK(validate(U).empty());
}
