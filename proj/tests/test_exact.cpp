#include <doctest.h>

#include <random>

#include "cmheight/errors.hpp"
#include "cmheight/exact.hpp"

using namespace cmheight;

namespace {

// Discriminant straight from the roots-free definition on a monic quintic:
// (-1)^(n(n-1)/2) Res(p, p') / a_n with a hand-expanded Sylvester matrix.
Rational sylvester_disc(const Polynomial& p) {
  return resultant(p, p.derivative()) / p.leading() * ((p.degree() * (p.degree() - 1) / 2) % 2 ? -1 : 1);
}

}  // namespace

TEST_CASE("valuation") {
  CHECK(valuation(Rational(8), 2) == 3);
  CHECK(valuation(Rational(1), 7) == 0);
  Rational x = -pow(Rational(2), -24) * pow(Rational(3), 10) * pow(Rational(2029), 5);
  CHECK(valuation(x, 2) == -24);
  CHECK(valuation(x, 2029) == 5);
  CHECK_THROWS_AS(valuation(Rational(0), 2), DomainError);
  CHECK_THROWS_AS(valuation(Rational(12), 4), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 5000);
  for (int i = 0; i < 50; ++i) {
    Rational a(d(rng), d(rng)), b(-d(rng), d(rng));
    a.canonicalize();
    b.canonicalize();
    for (long p : {2L, 3L, 5L, 7L})
      CHECK(valuation(a * b, p) == valuation(a, p) + valuation(b, p));
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("trial_factor") {
  auto tf = trial_factor(Integer(2 * 2 * 3 * 1000003L), 1000);
  REQUIRE(tf.factors.size() == 3);
  CHECK(tf.factors[0] == std::pair<Integer, long>(2, 2));
  CHECK(tf.factors[2].first == 1000003);
}

TEST_CASE("disc_n") {
  auto p = Polynomial::from_integers({-1, 0, 0, 0, 0, 1});
  CHECK(disc_n(p, 5) == 3125);
  CHECK(disc_n(Rational(4) * p, 6) == pow(Rational(2), 20) * 3125);
  CHECK(disc_n(Polynomial::from_integers({0, 0, 0, 0, 0, 1}), 5) == 0);
  CHECK(sylvester_disc(p) == 3125);
  // Quadratic sanity: disc of x^2 + bx + c viewed through a sextic is 0.
  CHECK(disc_n(Polynomial::from_integers({1, 0, 1}), 6) == 0);
}

TEST_CASE("disc identities on random quintics") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = Polynomial::from_integers({d(rng), d(rng), d(rng), d(rng), d(rng), 1});
    CHECK(256 * disc_n(p, 5) == disc_n(Rational(4) * p, 6) / 4096);
    Rational c = d(rng);
    CHECK(disc_n(p.shifted(c), 5) == disc_n(p, 5));
    CHECK(disc_n(p, 5) == sylvester_disc(p));
  }
}

TEST_CASE("polynomial gcd and squarefree") {
  auto a = Polynomial::from_integers({-1, 0, 1});
  auto b = Polynomial::from_integers({1, 1});
  CHECK(Polynomial::gcd(a, b) == b);
  CHECK(a.is_squarefree());
  CHECK_FALSE((a * b).is_squarefree());
  auto [q, r] = Polynomial::divmod(a, b);
  CHECK(q == Polynomial::from_integers({-1, 1}));
  CHECK(r.is_zero());
}

TEST_CASE("quadratic elements") {
  const Integer delta = 5;
  auto th = QuadElement::theta(delta);
  auto c = th.coordinates();
  CHECK(c[0] == 0);
  CHECK(c[1] == 1);
  // theta^2 = delta*theta - (delta^2 - delta)/4
  auto sq = th * th;
  auto s = sq.coordinates();
  CHECK(s[0] == Rational(-(25 - 5)) / 4);
  CHECK(s[1] == 5);
  CHECK(th.norm() == Rational(25 - 5) / 4);
  CHECK_THROWS_AS(QuadElement(1, 1, 1, 7), DomainError);
}

TEST_CASE("module_norm") {
  for (long dl : {5L, 8L, 61L, 12L}) {
    Integer delta = dl;
    auto one = QuadElement::rational(1, delta);
    auto th = QuadElement::theta(delta);
    CHECK(module_norm({{one, th}, delta}) == 1);
    auto two = QuadElement::rational(2, delta);
    CHECK(module_norm({{two, two * th}, delta}) == 4);
    auto inv_sqrt = QuadElement(0, 1, delta, delta);  // 1/sqrt(delta)
    CHECK(module_norm({{inv_sqrt, inv_sqrt * th}, delta}) == Rational(1) / delta);
    // Unimodular recombination and redundant generators.
    auto g1 = one + th, g2 = one + two * th;
    CHECK(module_norm({{g1, g2}, delta}) == 1);
    CHECK(module_norm({{two, two * th, one + th}, delta}) == 2);
    CHECK_THROWS_AS(module_norm({{one, two}, delta}), DomainError);
  }
}

TEST_CASE("hermite_normal_form") {
  auto h = hermite_normal_form({{Integer(4), Integer(6)}, {Integer(2), Integer(8)}, {Integer(0), Integer(10)}});
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == 2);
  CHECK(h[1][0] == 0);
  CHECK(h[0][0] * h[1][1] == 20);
}
