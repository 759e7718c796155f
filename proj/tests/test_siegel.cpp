#include <doctest.h>

#include <random>

#include "cmheight/cmperiod.hpp"
#include "cmheight/errors.hpp"
#include "cmheight/siegel.hpp"

using namespace cmheight;

namespace {

Complex c(double re, double im, mpfr_prec_t prec) { return Complex(Real(re, prec), Real(im, prec)); }

Real distance(const PeriodMatrix& a, const PeriodMatrix& b) {
  return max(abs(a.z11() - b.z11()), max(abs(a.z12() - b.z12()), abs(a.z22() - b.z22())));
}

PeriodMatrix random_z(std::mt19937_64& rng, mpfr_prec_t prec) {
  std::uniform_real_distribution<double> re(-0.5, 0.5), y(0.9, 2.0), off(0.0, 0.4);
  double y11 = y(rng), y22 = y11 + off(rng), y12 = off(rng) * y11;
  return PeriodMatrix(c(re(rng), y11, prec), c(re(rng), y12, prec), c(re(rng), y22, prec));
}

}  // namespace

TEST_CASE("symplectic matrices") {
  CHECK(SymplecticMatrix::is_symplectic({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}));
  CHECK_FALSE(SymplecticMatrix::is_symplectic({{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}));
  CHECK_THROWS_AS(SymplecticMatrix::translation({{{0, 1}, {2, 0}}}), DomainError);
  CHECK(gottschling_set().size() == 20);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto g = random_symplectic(rng, 8);
    CHECK(g * g.inverse() == SymplecticMatrix::identity());
  }
}

TEST_CASE("action") {
  const mpfr_prec_t prec = 200;
  PeriodMatrix I(c(0, 1, prec), c(0, 0, prec), c(0, 1, prec));
  CHECK(distance(act(SymplecticMatrix::identity(), I), I) < pow2(-190, prec));
  CHECK(distance(act(SymplecticMatrix::J(), I), I) < pow2(-190, prec));
  auto T = act(SymplecticMatrix::translation({{{5, 0}, {0, 7}}}), I);
  CHECK(distance(T, PeriodMatrix(c(5, 1, prec), c(0, 0, prec), c(7, 1, prec))) < pow2(-190, prec));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    auto Z = random_z(rng, prec);
    auto g1 = random_symplectic(rng, 5), g2 = random_symplectic(rng, 5);
    auto lhs = act(g1 * g2, Z);
    auto rhs = act(g1, act(g2, Z));
    CHECK(distance(lhs, rhs) < pow2(-150, prec) * (Real(1L, prec) + abs(lhs.z22())));
  }
}

TEST_CASE("fundamental domain membership") {
  PrecisionContext ctx(128);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix I(c(0, 1, prec), c(0, 0, prec), c(0, 1, prec));
  CHECK(in_fundamental_domain(I, ctx.tolerance()));
  PeriodMatrix shifted(c(5, 1, prec), c(0, 0, prec), c(0, 1, prec));
  CHECK_FALSE(in_fundamental_domain(shifted, ctx.tolerance()));
  Real s5 = sqrt(Real(5L, prec));
  Complex zeta(cos(ctx.pi() * 2L / 5L), sin(ctx.pi() * 2L / 5L));
  auto Z1 = period_matrix(zeta * s5, -(pow(zeta, 3) * s5), 5, ctx);
  CHECK(abs(Z1.z12().re()) > Real(0.5, prec));
  CHECK_FALSE(in_fundamental_domain(Z1, ctx.tolerance()));
}

TEST_CASE("reduction") {
  PrecisionContext ctx(256);
  const mpfr_prec_t prec = ctx.working_bits();
  PeriodMatrix I(c(0, 1, prec), c(0, 0, prec), c(0, 1, prec));
  auto r0 = reduce(I, ctx);
  CHECK(distance(r0.Z, I) < pow2(-250, prec));

  PeriodMatrix Z(c(0.1, 1.2, prec), c(0.2, 0.3, prec), c(-0.3, 1.5, prec));
  REQUIRE(in_fundamental_domain(Z, ctx.tolerance()));
  auto moved = act(SymplecticMatrix::translation({{{3, -2}, {-2, 1}}}), Z);
  auto back = reduce(moved, ctx);
  CHECK(distance(back.Z, Z) < pow2(-240, prec));

  std::mt19937_64 rng(3);
  const Real slack = ctx.tolerance() * 2L;
  for (int i = 0; i < 25; ++i) {
    auto W = act(random_symplectic(rng, 10), random_z(rng, prec));
    auto r = reduce(W, ctx);
    CHECK(in_fundamental_domain(r.Z, slack));
    CHECK(distance(act(r.gamma, W), r.Z) < pow2(-200, prec) * (Real(1L, prec) + abs(r.Z.z22())));
    for (size_t k = 1; k < r.det_history.size(); ++k) CHECK(r.det_history[k] > r.det_history[k - 1]);
    CHECK(r.Z.z11().im() >= sqrt(Real(3L, prec)) / 2L - ctx.tolerance());
  }
}
