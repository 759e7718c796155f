#include <doctest.h>

#include "cmheight/bounds.hpp"
#include "cmheight/cmperiod.hpp"
#include "cmheight/errors.hpp"

using namespace cmheight;

namespace {

Complex c(double re, double im, mpfr_prec_t prec) { return Complex(Real(re, prec), Real(im, prec)); }

}  // namespace

TEST_CASE("theta lower bounds at i*Identity") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix I(c(0, 1, prec), c(0, 0, prec), c(0, 1, prec));
  auto r0 = check_theta_lb(ThetaCharacteristic(0, 0, 0, 0), I, ctx);
  CHECK(r0.rule == "0.44");
  CHECK(std::abs(r0.value.to_double() - 1.18034059901609) < 1e-12);
  CHECK(r0.pass);
  auto r1 = check_theta_lb(ThetaCharacteristic(1, 0, 0, 0), I, ctx);
  CHECK(r1.rule == "0.75");
  CHECK(std::abs(r1.bound.to_double() - 0.75 * std::exp(-M_PI / 4)) < 1e-15);
  CHECK(std::abs(r1.value.to_double() - 0.9925) < 1e-3);
  CHECK(r1.pass);
  auto r2 = check_theta_lb(ThetaCharacteristic(1, 1, 1, 1), I, ctx);
  CHECK(r2.rule == "1.12");
  CHECK(r2.bound.is_zero());
  CHECK(r2.value < Real(1e-30, prec));
  CHECK(r2.pass);
  CHECK_THROWS_AS(check_theta_lb(ThetaCharacteristic(1, 0, 1, 0), I, ctx), DomainError);
  PeriodMatrix outside(c(0.9, 1, prec), c(0, 0, prec), c(0, 1, prec));
  CHECK_THROWS_AS(check_theta_lb(ThetaCharacteristic(0, 0, 0, 0), outside, ctx), DomainError);
}

TEST_CASE("chi10 lower bound") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix I(c(0, 1, prec), c(0, 0, prec), c(0, 1, prec));
  auto r = check_chi10_lb(I, ctx);
  CHECK(r.sharp.is_zero());
  CHECK(r.pass);

  Real s5 = sqrt(Real(5L, prec));
  Complex zeta(cos(ctx.pi() * 2L / 5L), sin(ctx.pi() * 2L / 5L));
  auto Z1 = reduce(period_matrix(zeta * s5, -(pow(zeta, 3) * s5), 5, ctx), ctx).Z;
  auto r1 = check_chi10_lb(Z1, ctx);
  CHECK(r1.pass);
  CHECK(r1.weak <= r1.sharp);
  CHECK(r1.value > r1.sharp);
}

TEST_CASE("exponential inequalities") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  auto z0 = check_exp_ineq(c(0, 0, prec), ctx);
  CHECK(z0.lhs_minus.is_zero());
  CHECK(z0.rhs_minus.is_zero());
  CHECK(z0.pass);
  auto zp = check_exp_ineq(Complex(ctx.pi(), Real(0L, prec)), ctx);
  CHECK(std::abs(zp.lhs_minus.to_double() - 2.0) < 1e-15);
  CHECK(zp.pass);
  CHECK_THROWS_AS(check_exp_ineq(c(3.2, 0, prec), ctx), DomainError);
}

TEST_CASE("sampling") {
  PrecisionContext ctx(96);
  auto a = sample_fundamental_domain(20, 42, ctx);
  auto b = sample_fundamental_domain(20, 42, ctx);
  REQUIRE(a.size() == 20);
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(in_fundamental_domain(a[k], ctx.tolerance() * 2L));
    CHECK(a[k].z12() .re() == b[k].z12().re());
    CHECK(a[k].z22().im() == b[k].z22().im());
  }
  CHECK_THROWS_AS(sample_fundamental_domain(0, 1, ctx), DomainError);
}

TEST_CASE("bounds suite") {
  PrecisionContext ctx(128);
  auto rep = verify_bounds(40, 7, ctx);
  CHECK(rep.theta_checks == 400);
  CHECK(rep.chi10_checks == 40);
  CHECK(rep.exp_checks == 40);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.failures.empty());
}
