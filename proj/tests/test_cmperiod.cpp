#include <doctest.h>

#include "cmheight/cmperiod.hpp"
#include "cmheight/errors.hpp"
#include "cmheight/siegel.hpp"

using namespace cmheight;

namespace {

Real reduced_bare_term(const TauPair& t, long delta, const PrecisionContext& ctx) {
  return bare_archimedean_term(reduce(period_matrix(t.first, t.second, delta, ctx), ctx).Z, ctx);
}

}  // namespace

TEST_CASE("select_tau") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  auto t = select_tau(Polynomial::from_integers({128, 0, 32, 0, 1}), ctx);
  Real s2 = sqrt(Real(2L, prec));
  CHECK(abs(t.first.im() - sqrt(Real(16L, prec) - s2 * 8L)) < pow2(-240, prec));
  CHECK(abs(t.second.im() - sqrt(Real(16L, prec) + s2 * 8L)) < pow2(-240, prec));
  auto sw = select_tau(Polynomial::from_integers({128, 0, 32, 0, 1}), ctx, true);
  CHECK(abs(sw.first.im() - t.second.im()) < pow2(-240, prec));
  CHECK_THROWS_AS(select_tau(Polynomial::from_integers({1, 0, 1}), ctx), DomainError);
  // (x^2 + 1)(x^2 - 2): one root in the upper half-plane.
  CHECK_THROWS_AS(select_tau(Polynomial::from_integers({-2, 0, -1, 0, 1}), ctx), DomainError);
  Complex up(Real(0L, prec), Real(1L, prec)), down(Real(0L, prec), Real(-1L, prec));
  CHECK_THROWS_AS(select_tau(up, down), DomainError);
}

TEST_CASE("explicit tau digits") {
  PrecisionContext ctx(64);
  CHECK_THROWS_AS(parse_tau_value("0.5+1.25*i", ctx), DomainError);
  auto z = parse_tau_value("0.690983005625052575897706582817+2.12662702724411845384883327484*i", ctx);
  CHECK(std::abs(z.re().to_double() - 0.690983005625052575) < 1e-15);
}

TEST_CASE("period matrix construction") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  auto t = select_tau(Polynomial::from_integers({889319, -137677, 6039, -61, 1}), ctx);
  auto Z = period_matrix(t.first, t.second, 61, ctx);
  auto W = period_matrix(t.second, t.first, 61, ctx);
  // Swapping tau1 and tau2 exchanges theta and theta'.
  Real D(61L, prec), s = sqrt(D);
  Real th = (D + s) / 2L, thp = (D - s) / 2L;
  Complex w12 = -(t.second * thp + t.first * th) / D;
  Complex w22 = (t.second * (thp * thp) + t.first * (th * th)) / D;
  CHECK(abs(W.z12() - w12) < pow2(-240, prec) * abs(w12));
  CHECK(abs(W.z22() - w22) < pow2(-240, prec) * abs(w22));
  CHECK(abs(Z.z11() - W.z11()) < pow2(-250, prec));
  CHECK(Z.det_im() > 0L);
}

TEST_CASE("archimedean terms of the three reference curves") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  const Real tol(1e-14, prec);
  Real s5 = sqrt(Real(5L, prec));
  Complex zeta(cos(ctx.pi() * 2L / 5L), sin(ctx.pi() * 2L / 5L));
  TauPair t1{zeta * s5, -(pow(zeta, 3) * s5)};
  CHECK(abs(reduced_bare_term(t1, 5, ctx) - Real::parse("0.246738390651711", prec)) < tol);
  auto q1 = select_tau(Polynomial::from_integers({25, -25, 15, -5, 1}), ctx);
  CHECK(abs(q1.first - t1.first) < pow2(-240, prec));
  CHECK(abs(q1.second - t1.second) < pow2(-240, prec));

  for (bool swapped : {false, true}) {
    auto t2 = select_tau(Polynomial::from_integers({889319, -137677, 6039, -61, 1}), ctx, swapped);
    CHECK(abs(reduced_bare_term(t2, 61, ctx) - Real::parse("0.464065891333779", prec)) < tol);
    auto t3 = select_tau(Polynomial::from_integers({128, 0, 32, 0, 1}), ctx, swapped);
    CHECK(abs(reduced_bare_term(t3, 8, ctx) - Real::parse("0.428322662492607", prec)) < tol);
  }
}

TEST_CASE("cusp distance") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  const Integer D = 5;
  TauPair ii{Complex(Real(0L, prec), Real(1L, prec)), Complex(Real(0L, prec), Real(1L, prec))};
  auto one = QuadElement::rational(1, D), zero = QuadElement::rational(0, D);
  CHECK(abs(cusp_mu(one, zero, ii, ctx) - Real(1L, prec)) < pow2(-120, prec));
  TauPair t{Complex(Real(0.3, prec), Real(1.7, prec)), Complex(Real(-0.2, prec), Real(0.6, prec))};
  CHECK(abs(cusp_mu(one, zero, t, ctx) - Real(1.7, prec) * Real(0.6, prec)) < pow2(-120, prec));
  auto alpha = QuadElement(1, 1, 2, D), beta = QuadElement(3, -1, 1, D);
  Real mu = cusp_mu(alpha, beta, t, ctx);
  auto two = QuadElement::rational(2, D), seven = QuadElement::rational(-7, D);
  CHECK(abs(cusp_mu(two * alpha, two * beta, t, ctx) - mu) < mu * pow2(-110, prec));
  CHECK(abs(cusp_mu(seven * alpha, seven * beta, t, ctx) - mu) < mu * pow2(-110, prec));
  CHECK_THROWS_AS(cusp_mu(zero, zero, t, ctx), DomainError);
  TauPair real_pt{Complex(Real(2L, prec), Real(0L, prec)), Complex(Real(2L, prec), Real(0L, prec))};
  CHECK_THROWS_AS(cusp_mu(QuadElement::rational(2, D), one, real_pt, ctx), DomainError);
}

TEST_CASE("period volume residual") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  Real s5 = sqrt(Real(5L, prec));
  std::pair<Real, Real> ims{s5 * sin(ctx.pi() * 2L / 5L), s5 * sin(ctx.pi() / 5L)};
  Real r = period_volume_residual(Real(1L, prec), ims, 1, 125, ctx);
  CHECK(r < Real(1e-20, prec));
  Real lhs = Real(1L, prec) * ims.first * ims.second * 4L;
  CHECK(abs(period_volume_residual(Real(1L, prec), ims, 0, 125, ctx) - lhs) < pow2(-240, prec));
  CHECK(abs(period_volume_residual(Real(1L, prec), ims, 2, 125, ctx) - sqrt(Real(125L, prec))) < pow2(-240, prec));
}
