#include <doctest.h>

#include <random>

#include "cmheight/cmperiod.hpp"
#include "cmheight/errors.hpp"
#include "cmheight/siegel.hpp"
#include "cmheight/theta.hpp"

using namespace cmheight;

namespace {

Complex c(double re, double im, mpfr_prec_t prec) { return Complex(Real(re, prec), Real(im, prec)); }

PeriodMatrix diagonal(double y1, double y2, mpfr_prec_t prec, double x1 = 0, double x2 = 0) {
  return PeriodMatrix(c(x1, y1, prec), c(0, 0, prec), c(x2, y2, prec));
}

// Genus-1 theta constant theta[a;b](0, tau) by a plain 1-D sum over |n| <= N.
Complex theta1(int a, int b, const Complex& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  Complex s(prec);
  const Complex ipi(Real(0L, prec), ctx.pi());
  for (long n = -60; n <= 60; ++n) {
    Real m(static_cast<double>(n) + 0.5 * a, prec);
    Complex q = tau * (m * m) + Complex::from_real(m * static_cast<long>(b));
    s += exp(ipi * q);
  }
  return s;
}

PeriodMatrix example1(const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  Real s5 = sqrt(Real(5L, prec));
  Real a = ctx.pi() * 2L / 5L;
  Complex zeta(cos(a), sin(a));
  Complex t1 = zeta * s5, t2 = -(pow(zeta, 3) * s5);
  return period_matrix(t1, t2, 5, ctx);
}

}  // namespace

TEST_CASE("characteristics") {
  const auto& ev = even_characteristics();
  int count = 0;
  for (int m = 0; m < 16; ++m) {
    ThetaCharacteristic ch(m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1);
    if (ch.is_even()) ++count;
  }
  CHECK(count == 10);
  for (const auto& ch : ev) CHECK(ch.is_even());
  CHECK(ThetaCharacteristic::parse("1/2, 0, 0.5, 0") == ThetaCharacteristic(1, 0, 1, 0));
  CHECK_THROWS(ThetaCharacteristic::parse("1,0,0,0"));
  CHECK_THROWS(ThetaCharacteristic(2, 0, 0, 0));
}

TEST_CASE("period matrix validation") {
  const mpfr_prec_t prec = 128;
  CHECK_THROWS_AS(PeriodMatrix(c(0, 1, prec), c(0, 2, prec), c(0, 1, prec)), DomainError);
  CHECK_THROWS_AS(PeriodMatrix(c(0, -1, prec), c(0, 0, prec), c(0, 1, prec)), DomainError);
  PeriodMatrix Z(c(0, 2, prec), c(0, 1, prec), c(0, 2, prec));
  CHECK(std::abs(Z.min_eigenvalue_im().to_double() - 1.0) < 1e-15);
}

TEST_CASE("theta constants at i*Identity") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  auto Z = diagonal(1, 1, prec);
  auto t0 = theta_constant(ThetaCharacteristic(0, 0, 0, 0), Z, ctx);
  CHECK(std::abs(t0.value.re().to_double() - 1.18034059901609) < 1e-12);
  auto todd = theta_constant(ThetaCharacteristic(1, 1, 1, 1), Z, ctx);
  CHECK(abs(todd.value) < pow2(-100, prec));
  auto t1 = theta_constant(ThetaCharacteristic(1, 0, 0, 0), Z, ctx);
  CHECK(std::abs(t1.value.re().to_double() - 0.913579138156117 * 1.08643481121331) < 1e-12);
  CHECK(t0.error < pow2(-120, prec));
}

TEST_CASE("diagonal factorization for all even characteristics") {
  PrecisionContext ctx(160);
  const mpfr_prec_t prec = ctx.working_bits();
  auto Z = diagonal(0.9, 1.7, prec, 0.3, -0.2);
  auto all = even_theta_constants(Z, ctx);
  const auto& chars = even_characteristics();
  for (size_t k = 0; k < 10; ++k) {
    const auto& ch = chars[k];
    Complex expect = theta1(ch.a(0), ch.b(0), Z.z11(), ctx) * theta1(ch.a(1), ch.b(1), Z.z22(), ctx);
    CHECK(abs(all[k].value - expect) < pow2(-150, prec));
    auto single = theta_constant(ch, Z, ctx);
    CHECK(abs(single.value - all[k].value) < pow2(-150, prec));
  }
  auto x = chi10(Z, ctx);
  CHECK(abs(x.value) <= x.error + pow2(-150, prec));
  CHECK_THROWS_AS(bare_archimedean_term(Z, ctx), PrecisionError);
  CHECK(abs(theta_big(Z, ctx).value) < pow2(-150, prec));
}

TEST_CASE("truncation soundness") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix Z(c(0.1, 0.9, prec), c(0.3, 0.2, prec), c(-0.4, 1.1, prec));
  auto [R, tail] = truncation_radius(Z, ctx);
  for (const auto& ch : even_characteristics()) {
    auto a = theta_constant(ch, Z, ctx);
    auto b = theta_constant(ch, Z, ctx, R + 2);
    CHECK(abs(a.value - b.value) <= a.error);
    // A deliberately short box has a larger stated tail that still covers the gap.
    auto small = theta_constant(ch, Z, ctx, 2);
    CHECK(abs(small.value - b.value) <= small.error);
  }
}

TEST_CASE("chi10 and Theta for y^2 = x^5 - 1") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  auto Z = example1(ctx);
  CHECK(abs(Z.det_im() - sqrt(Real(5L, prec)) / 4L) < pow2(-250, prec));
  CHECK(abs(bare_archimedean_term(Z, ctx) - Real::parse("0.246738390651711", prec)) < Real(1e-15, prec));
  auto x = chi10(Z, ctx);
  auto big = theta_big(Z, ctx);
  CHECK(abs(big.value - pow(x.value, 4)) < abs(big.value) * pow2(-240, prec));
  CHECK(abs(archimedean_term(Z, ctx) - (bare_archimedean_term(Z, ctx) - log(ctx.pi() * pow(Real(2L, prec), 4) ) / 5L -
                                           log(ctx.pi()) * 4L / 5L)) < pow2(-240, prec));
}

TEST_CASE("Sp4 invariance of |chi10| det(Im Z)^5") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  std::mt19937_64 rng(99);
  PeriodMatrix Z(c(0.2, 1.1, prec), c(-0.15, 0.4, prec), c(0.35, 1.3, prec));
  Real base = chi10_invariant(Z, ctx);
  for (int t = 0; t < 10; ++t) {
    auto g = random_symplectic(rng, 6);
    auto W = act(g, Z);
    Real v = chi10_invariant(W, ctx);
    CHECK(abs(v - base) < base * Real(1e-30, prec));
  }
}
