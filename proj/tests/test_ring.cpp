#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"

#include "eisen/reducer.hpp"
#include "eisen/ring.hpp"

#include <random>
#include <stdexcept>

using namespace eisen;
using eisen::testing::cf;
using eisen::testing::random_element;
using eisen::testing::term;

TEST_CASE("addition merges and cancels like terms") {
  const RingElement x = term("2/3", 1, -1, 1) + term("1", 0, 0, 0, 1);
  CHECK(ring_add(x, RingElement()) == x);
  CHECK(ring_add(term("2/3", 1, 0, 1), term("1/3", 1, 0, 1)) == term("1", 1, 0, 1));
  const RingElement zero = ring_add(RingElement::g4(), RingElement::g4() * Rational(-1));
  CHECK(zero.is_zero());
  CHECK(zero.size() == 0);
}

TEST_CASE("multiplication adds exponents") {
  const RingElement x = RingElement::pi2() * RingElement::tau2(-1);
  CHECK(ring_mul(x, x) == term("1", 2, -2));
  CHECK(ring_mul(RingElement::g4(), RingElement::g4()) == term("1", 0, 0, 0, 2));
  CHECK(pow(RingElement::g2(), 3) == term("1", 0, 0, 3));
  CHECK(pow(x, 0) == RingElement(Rational(1)));
}

TEST_CASE("coefficient lookup and zero handling") {
  RingElement x = term("5/7", 2, -1, 0, 1);
  CHECK(x.coefficient(Monomial{2, -1, 0, 1, 0}) == Rational(5, 7));
  CHECK(x.coefficient(Monomial{0, 0, 0, 0, 0}) == 0);
  x.add_term(Monomial{1, 1, 1, 1, 1}, 0);
  CHECK(x.size() == 1);
  CHECK_THROWS_AS(x.add_term(Monomial{0, 0, -1, 0, 0}, 1), std::domain_error);
}

TEST_CASE("terms iterate in canonical order") {
  const RingElement x = term("-2/15", 2, -2) + term("2/3", 1, -1, 1) + term("1", 0, 0, 0, 1);
  std::vector<Monomial> order;
  for (const auto& [m, q] : x.terms()) order.push_back(m);
  REQUIRE(order.size() == 3);
  CHECK(order[0] == Monomial{0, 0, 0, 1, 0});
  CHECK(order[1] == Monomial{1, -1, 1, 0, 0});
  CHECK(order[2] == Monomial{2, -2, 0, 0, 0});
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const RingElement x = random_element(rng);
    const RingElement y = random_element(rng);
    const RingElement z = random_element(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x * RingElement(Rational(1)) == x);
    CHECK((x * RingElement()).is_zero());
  }
}

TEST_CASE("weight decomposition") {
  const RingElement same = RingElement::g4() + term("1", 1, -1, 1);
  const auto parts = weight_decomposition(same);
  REQUIRE(parts.size() == 1);
  CHECK(parts.at(4) == same);

  const auto split = weight_decomposition(RingElement::g4() + RingElement::g6());
  REQUIRE(split.size() == 2);
  CHECK(split.at(4) == RingElement::g4());
  CHECK(split.at(6) == RingElement::g6());

  const auto reduced = weight_decomposition(reduce_depth2(1, 1));
  REQUIRE(reduced.size() == 1);
  CHECK(reduced.count(4) == 1);
}

TEST_CASE("weight decomposition sums back to the element") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const RingElement x = random_element(rng, 8);
    RingElement sum;
    for (const auto& [w, part] : weight_decomposition(x)) {
      for (const auto& [m, q] : part.terms()) CHECK(m.weight() == w);
      sum += part;
    }
    CHECK(sum == x);
  }
}

TEST_CASE("higher Eisenstein series in G4 and G6") {
  CHECK(normalize_higher_G(2) == RingElement::g4());
  CHECK(normalize_higher_G(3) == RingElement::g6());
  CHECK(normalize_higher_G(4) == term("3/7", 0, 0, 0, 2));
  CHECK(normalize_higher_G(5) == term("5/11", 0, 0, 0, 1, 1));
  CHECK(normalize_higher_G(6) == term("18/143", 0, 0, 0, 3) + term("25/143", 0, 0, 0, 0, 2));
  CHECK_THROWS_AS(normalize_higher_G(1), std::domain_error);
  CHECK_THROWS_AS(normalize_higher_G(0), std::domain_error);
  CHECK(eisenstein_generator(1) == RingElement::g2());
  CHECK(eisenstein_generator(4) == normalize_higher_G(4));
}

TEST_CASE("higher Eisenstein series are homogeneous in Q[G4, G6]") {
  for (int k = 2; k <= 14; ++k) {
    const RingElement g = normalize_higher_G(k);
    CHECK_FALSE(g.is_zero());
    for (const auto& [m, q] : g.terms()) {
      CHECK(m.weight() == 2 * k);
      CHECK(m.a == 0);
      CHECK(m.b == 0);
      CHECK(m.c == 0);
      CHECK(q > 0);
    }
  }
}

TEST_CASE("normalize_element substitutes G8 and keeps generators") {
  EisensteinCombination with_g8;
  with_g8.add_g(4, term("1/3", 1, -1));
  with_g8.add_g(2, RingElement(Rational(2)));
  with_g8.constant = term("-1/5", 4, -4);
  CHECK(normalize_element(with_g8) ==
        term("1/7", 1, -1, 0, 2) + term("2", 0, 0, 0, 1) + term("-1/5", 4, -4));

  EisensteinCombination plain;
  plain.add_g(1, term("2/3", 1, -1));
  plain.add_g(2, RingElement(Rational(1)));
  plain.constant = term("-2/15", 2, -2);
  CHECK(normalize_element(plain) == reduce_depth2(1, 1));
}

TEST_CASE("normalizing the unnormalized depth-two form of (2,6)") {
  const RingElement expected = term("3/7", 0, 0, 0, 2) + term("1/3", 1, -1, 0, 0, 1) +
                                term("1/15", 2, -2, 0, 1) + term("4/315", 3, -3, 1) +
                                term("-4/675", 4, -4);
  const EisensteinCombination raw = reduce_depth2_unnormalized(1, 3);
  CHECK(raw.g_coeffs.count(4) == 1);
  CHECK(normalize_element(raw) == expected);
}

TEST_CASE("specialization at tau = i") {
  CHECK(specialize_i(RingElement()).is_zero());
  CHECK(specialize_i(RingElement::g2()) == cf("-1", 1, 0));
  CHECK(specialize_i(RingElement::g4()) == cf("1/15", 0, 4));
  CHECK(specialize_i(RingElement::g6()).is_zero());
  CHECK(specialize_i(RingElement::tau2()) == cf("-1", 0, 0));
  CHECK(specialize_i(reduce_depth2(1, 1)) == cf("1/15", 0, 4) + cf("-2/15", 4, 0) + cf("2/3", 3, 0));
  CHECK(specialize_i(reduce_multi(IndexTuple({1, 1, 1}))) ==
        cf("-1/15", 2, 4) + cf("52/315", 6, 0) + cf("-8/15", 5, 0));
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    const RingElement x = random_element(rng);
    const RingElement y = random_element(rng);
    CHECK(specialize_i(x + y) == specialize_i(x) + specialize_i(y));
    CHECK(specialize_i(x * y) == specialize_i(x) * specialize_i(y));
  }
}
