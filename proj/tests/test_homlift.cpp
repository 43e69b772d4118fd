#include <doctest.h>

#include "situskit/homlift.hpp"
#include "situskit/stone.hpp"
#include "test_helpers.hpp"

using namespace situskit;
using namespace situskit::testing;

namespace {

// strips the corepresentation tag so hom_set takes the generic search path
TruncatedSitus as_generic(TruncatedSitus X) {
  X.corep.reset();
  return X;
}

std::set<std::vector<int>> vertex_maps(const std::vector<SitusMorphism>& hs) {
  std::set<std::vector<int>> out;
  for (const auto& h : hs) out.insert(h.level(1).tab);
  return out;
}

}  // namespace

TEST_CASE("hom sets of corepresented objects") {
  TruncatedSitus bot = initial_situs(2);
  TruncatedSitus chain2 = corepresented_by_preorder(FinPreorder::chain(2), 2);
  CHECK(hom_set(bot, chain2).size() == 1);

  // monotone self-maps of the 2-chain
  CHECK(hom_set(chain2, chain2).size() == 3);

  TruncatedSitus top = terminal_situs(2);
  TruncatedSitus set3 = corepresented_by_preorder(FinPreorder::set(3), 2);
  CHECK(hom_set(set3, top).size() == 1);
  CHECK(hom_set(chain2, top).size() == 1);
}

TEST_CASE("vertex enumeration matches level-wise enumeration") {
  std::vector<FinPreorder> orders;
  for (int n = 1; n <= 3; ++n) {
    orders.push_back(FinPreorder::chain(n));
    orders.push_back(FinPreorder::set(n));
  }
  orders.push_back(FinPreorder::from_leq(3, {{0, 1}}));  // a fork-ish poset
  for (const auto& P : orders)
    for (const auto& Q : orders) {
      TruncatedSitus X = corepresented_by_preorder(P, 3);
      TruncatedSitus Y = corepresented_by_preorder(Q, 3);
      auto fast = hom_set(X, Y);
      auto slow = hom_set(as_generic(X), as_generic(Y));
      CHECK(vertex_maps(fast) == vertex_maps(slow));
      CHECK(fast.size() == slow.size());
    }
}

TEST_CASE("morphisms into a stone space are order-indiscernible sequences") {
  // |I| antidiscrete -> M^{phi}: continuous vertex maps = order-indiscernible
  // sequences with repetitions (extendable variant)
  FinStructure M = chain_struct(3);
  TruthTable le = rel_table(M, "x<=y");
  TruncatedSitus I2 = corepresented_by_preorder(FinPreorder::set(2), 3);
  TruncatedSitus S = stone_space(M, {le}, StoneVariant::Extendable, 3, 3);
  auto hs = hom_set(I2, S);
  // only the constant sequences survive on a chain
  CHECK(hs.size() == 3);
  for (const auto& h : hs) CHECK(h.level(1).tab[0] == h.level(1).tab[1]);

  FinStructure P = pure_set(3);
  TruthTable eq = rel_table(P, "x=y");
  TruncatedSitus SP = stone_space(P, {eq}, StoneVariant::Extendable, 3, 3);
  CHECK(hom_set(I2, SP).size() == 9);  // every pair is an indiscernible set
}

TEST_CASE("trivial lifting instances") {
  TruncatedSitus A = corepresented_by_preorder(FinPreorder::chain(2), 2);
  TruncatedSitus top = terminal_situs(2);

  // i identity
  LiftingInstance inst;
  inst.A = &A;
  inst.B = &A;
  inst.X = &A;
  inst.Y = &top;
  SitusMorphism id;
  for (int n = 1; n <= 2; ++n)
    id.level_maps.push_back(SetMap::identity(static_cast<int>(A.level(n).size())));
  inst.i = id;
  inst.p = hom_set(A, top).front();
  CHECK(lifting_property(inst).holds);

  // p identity
  LiftingInstance inst2;
  TruncatedSitus B = corepresented_by_preorder(FinPreorder::set(2), 2);
  inst2.A = &A;
  inst2.B = &B;
  inst2.X = &A;
  inst2.Y = &A;
  SitusMorphism inc;
  for (int n = 1; n <= 2; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    for (std::size_t e = 0; e < A.level(n).size(); ++e)
      m.tab[e] = B.level(n).at(A.level(n).elems[e]);
    inc.level_maps.push_back(std::move(m));
  }
  inst2.i = inc;
  inst2.p = id;
  CHECK(lifting_property(inst2).holds);

  // any square with X terminal
  LiftingInstance inst3;
  inst3.A = &A;
  inst3.B = &B;
  inst3.X = &top;
  inst3.Y = &top;
  inst3.i = inc;
  inst3.p = hom_set(top, top).front();
  CHECK(lifting_property(inst3).holds);
}

TEST_CASE("has_lift rejects non-commuting squares") {
  TruncatedSitus A = corepresented_by_preorder(FinPreorder::set(1), 2);
  TruncatedSitus B = corepresented_by_preorder(FinPreorder::set(2), 2);
  LiftingInstance inst;
  inst.A = &A;
  inst.B = &B;
  inst.X = &B;
  inst.Y = &B;
  SitusMorphism i0;  // point to atom 0
  for (int n = 1; n <= 2; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    m.tab[0] = B.level(n).at(Tuple(static_cast<std::size_t>(n), 0));
    i0.level_maps.push_back(std::move(m));
  }
  SitusMorphism idB;
  for (int n = 1; n <= 2; ++n)
    idB.level_maps.push_back(SetMap::identity(static_cast<int>(B.level(n).size())));
  inst.i = i0;
  inst.p = idB;
  // f sends the point to atom 1, g is the identity: p f != g i
  SitusMorphism f;
  for (int n = 1; n <= 2; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    m.tab[0] = B.level(n).at(Tuple(static_cast<std::size_t>(n), 1));
    f.level_maps.push_back(std::move(m));
  }
  CHECK_THROWS_AS(has_lift(inst, f, idB), DomainError);
}

TEST_CASE("right lifting is stable under retracts of i") {
  // i: {x} -> |{x,y}|; its retract i': {x} -> {x} is the identity
  TruncatedSitus one = corepresented_by_preorder(FinPreorder::set(1), 2);
  TruncatedSitus two = corepresented_by_preorder(FinPreorder::set(2), 2);
  FinStructure M = pure_set(2);
  TruthTable eq = rel_table(M, "x=y");
  TruncatedSitus X = stone_space(M, {eq}, StoneVariant::Extendable, 2, 2);
  TruncatedSitus top = terminal_situs(2);

  SitusMorphism i;
  for (int n = 1; n <= 2; ++n) {
    SetMap m(1, static_cast<int>(two.level(n).size()));
    m.tab[0] = two.level(n).at(Tuple(static_cast<std::size_t>(n), 0));
    i.level_maps.push_back(std::move(m));
  }
  LiftingInstance inst;
  inst.A = &one;
  inst.B = &two;
  inst.X = &X;
  inst.Y = &top;
  inst.i = i;
  inst.p = hom_set(X, top).front();
  REQUIRE(lifting_property(inst).holds);

  LiftingInstance retract;
  retract.A = &one;
  retract.B = &one;
  retract.X = &X;
  retract.Y = &top;
  SitusMorphism id1;
  for (int n = 1; n <= 2; ++n) id1.level_maps.push_back(SetMap::identity(1));
  retract.i = id1;
  retract.p = inst.p;
  CHECK(lifting_property(retract).holds);
}

TEST_CASE("lifting against a composite follows from the factors") {
  TruncatedSitus A = corepresented_by_preorder(FinPreorder::chain(2), 2);
  TruncatedSitus B = corepresented_by_preorder(FinPreorder::set(2), 2);
  FinStructure M = pure_set(3);
  TruthTable eq = rel_table(M, "x=y");
  TruncatedSitus X = stone_space(M, {eq}, StoneVariant::Extendable, 3, 2);
  TruncatedSitus Q = quotient(X, orbit_equivalence(M, {}, 2));
  TruncatedSitus top = terminal_situs(2);

  SitusMorphism inc;
  for (int n = 1; n <= 2; ++n) {
    SetMap m(static_cast<int>(A.level(n).size()),
             static_cast<int>(B.level(n).size()));
    for (std::size_t e = 0; e < A.level(n).size(); ++e)
      m.tab[e] = B.level(n).at(A.level(n).elems[e]);
    inc.level_maps.push_back(std::move(m));
  }
  SitusMorphism p = quotient_projection(X, Q, orbit_equivalence(M, {}, 2));
  SitusMorphism q = hom_set(Q, top).front();

  LiftingInstance ip;
  ip.A = &A;
  ip.B = &B;
  ip.X = &X;
  ip.Y = &Q;
  ip.i = inc;
  ip.p = p;
  LiftingInstance iq;
  iq.A = &A;
  iq.B = &B;
  iq.X = &Q;
  iq.Y = &top;
  iq.i = inc;
  iq.p = q;
  LiftingInstance ipq;
  ipq.A = &A;
  ipq.B = &B;
  ipq.X = &X;
  ipq.Y = &top;
  ipq.i = inc;
  ipq.p = compose(q, p);
  if (lifting_property(ip).holds && lifting_property(iq).holds)
    CHECK(lifting_property(ipq).holds);
}

TEST_CASE("negations against families") {
  CHECK(right_negation({}));
  TruncatedSitus A = corepresented_by_preorder(FinPreorder::chain(2), 2);
  TruncatedSitus top = terminal_situs(2);
  LiftingInstance inst;
  SitusMorphism id;
  for (int n = 1; n <= 2; ++n)
    id.level_maps.push_back(SetMap::identity(static_cast<int>(A.level(n).size())));
  inst.A = &A;
  inst.B = &A;
  inst.X = &A;
  inst.Y = &top;
  inst.i = id;
  inst.p = hom_set(A, top).front();
  CHECK(right_negation({inst}) == lifting_property(inst).holds);
  CHECK(right_negation({inst, inst}) == lifting_property(inst).holds);
}

TEST_CASE("surjection existence") {
  TruncatedSitus set3 = corepresented_by_preorder(FinPreorder::set(3), 2);
  TruncatedSitus set4 = corepresented_by_preorder(FinPreorder::set(4), 2);
  TruncatedSitus top = terminal_situs(2);
  CHECK(exists_surjection(set3, top).has_value());
  CHECK_FALSE(exists_surjection(set3, set4).has_value());
}
