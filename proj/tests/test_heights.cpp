#include <doctest.h>

#include <random>

#include "cmheight/cmperiod.hpp"
#include "cmheight/errors.hpp"
#include "cmheight/heights.hpp"

using namespace cmheight;

namespace {

struct Example {
  WeierstrassEquation curve;
  Polynomial tau_poly;
  long delta;
  DirichletCharacter chi;
  const char* colmez;
};

std::vector<Example> examples() {
  return {
      {WeierstrassEquation(Polynomial::from_integers({-1, 0, 0, 0, 0, 1}), Polynomial()),
       Polynomial::from_integers({25, -25, 15, -5, 1}), 5,
       DirichletCharacter::from_table(5, {{1, 0}, {2, 1}, {3, 3}, {4, 2}}), "-1.4525092396456"},
      {WeierstrassEquation(Polynomial::from_integers({-40824, -103680, 67608, 197944, 17574, -41271, -103615}),
                           Polynomial()),
       Polynomial::from_integers({889319, -137677, 6039, -61, 1}), 61,
       DirichletCharacter::from_generators(61, {{2, 1}}), "0.2688651723313"},
      {WeierstrassEquation(Polynomial::from_integers({1, -3, -6, 2, 3, -1}), Polynomial()),
       Polynomial::from_integers({128, 0, 32, 0, 1}), 8,
       DirichletCharacter::from_table(16, {{1, 0}, {3, 1}, {5, 1}, {7, 0}, {9, 2}, {11, 3}, {13, 3}, {15, 2}}),
       "-1.2016102497487"},
  };
}

PeriodMatrix matrix_of(const Example& e, const PrecisionContext& ctx) {
  auto t = select_tau(e.tau_poly, ctx);
  return period_matrix(t.first, t.second, e.delta, ctx);
}

}  // namespace

TEST_CASE("two engines on the three reference curves") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  const double tol[] = {1e-10, 1e-9, 1e-9};
  int k = 0;
  for (const auto& e : examples()) {
    auto local = height_local(e.curve, {matrix_of(e, ctx)}, 1, ctx);
    auto col = height_colmez(e.chi, ctx);
    CHECK(abs(local.total - Real::parse(e.colmez, prec)).to_double() < tol[k]);
    auto cmp = compare(local, col, tol[k]);
    CHECK(cmp.pass);
    CHECK(local.error_bound < Real(1e-60, prec));
    CHECK(local.warnings.size() == 1);
    CHECK(abs(local.total - local.finite_part - local.arch_terms[0].value) < pow2(-250, prec));
    ++k;
  }
}

TEST_CASE("local height invariances") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  std::mt19937_64 rng(17);
  auto ex = examples();
  const auto& e = ex[1];
  PeriodMatrix Z = matrix_of(e, ctx);
  auto base = height_local(e.curve, {Z}, 1, ctx);
  for (int i = 0; i < 3; ++i) {
    auto moved = act(random_symplectic(rng, 6), Z);
    auto h = height_local(e.curve, {moved}, 1, ctx);
    CHECK(abs(h.total - base.total) < pow2(-200, prec));
  }
  // Another model of the same curve: x -> x + 1 and y -> y + x^2.
  const auto& P = e.curve.P();
  Polynomial R = Polynomial::from_integers({0, 0, 1});
  WeierstrassEquation other(P.shifted(1) - R * R, Rational(2) * R);
  auto h2 = height_local(other, {Z}, 1, ctx);
  CHECK(abs(h2.total - base.total) < pow2(-240, prec));
  // Two embeddings with degree 2 average the archimedean terms.
  auto h3 = height_local(e.curve, {Z, Z}, 2, ctx);
  CHECK(abs(h3.total - (base.finite_part / 2L + base.arch_terms[0].value)) < pow2(-240, prec));
  CHECK_THROWS_AS(height_local(e.curve, {}, 1, ctx), DomainError);
}

TEST_CASE("product locus is refused") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix diag(Complex(Real(0L, prec), Real(1L, prec)), Complex(prec), Complex(Real(0L, prec), Real(1.3, prec)));
  auto ex = examples();
  CHECK_THROWS_AS(height_local(ex[0].curve, {diag}, 1, ctx), PrecisionError);
}

TEST_CASE("normalizations") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  Real h = Real::parse("0.37", prec);
  const Real zero(0L, prec);
  CHECK(convert_normalization(h, Normalization::deligne, Normalization::deligne, 2, ctx) == h);
  CHECK(abs(convert_normalization(zero, Normalization::colmez, Normalization::deligne, 2, ctx) - log(ctx.pi() * 2L)) <
        pow2(-250, prec));
  CHECK(abs(convert_normalization(zero, Normalization::faltings, Normalization::deligne, 2, ctx) - log(ctx.pi())) <
        pow2(-250, prec));
  CHECK(abs(convert_normalization(zero, Normalization::fplus, Normalization::deligne, 2, ctx) + log(ctx.pi() * 2L)) <
        pow2(-250, prec));
  for (auto a : {Normalization::deligne, Normalization::colmez, Normalization::faltings, Normalization::fplus})
    for (auto b : {Normalization::deligne, Normalization::colmez, Normalization::faltings, Normalization::fplus}) {
      Real there = convert_normalization(h, a, b, 2, ctx);
      CHECK(abs(convert_normalization(there, b, a, 2, ctx) - h) < pow2(-250, prec));
    }
  CHECK(parse_normalization("fplus") == Normalization::fplus);
  CHECK_THROWS_AS(parse_normalization("bost"), DomainError);
}
