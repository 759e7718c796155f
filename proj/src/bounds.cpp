#include "cmheight/bounds.hpp"

#include <random>

#include "cmheight/errors.hpp"

namespace cmheight {

namespace {

void require_domain(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  if (!in_fundamental_domain(Z, ctx.tolerance() * 2L)) throw DomainError("Z is outside the fundamental domain");
}

}  // namespace

BoundCheck check_theta_lb(const ThetaCharacteristic& ch, const PeriodMatrix& Z, const PrecisionContext& ctx) {
  if (!ch.is_even()) throw DomainError("odd characteristic " + ch.to_string());
  require_domain(Z, ctx);
  const mpfr_prec_t prec = ctx.working_bits();
  const PeriodMatrix Zp = Z.with_precision(prec);
  const Real& y11 = Zp.z11().im();
  const Real& y12 = Zp.z12().im();
  const Real& y22 = Zp.z22().im();
  auto t = theta_constant(ch, Zp, ctx);
  BoundCheck out{"", Real(0L, prec), abs(t.value), t.error, false};
  if (ch.a(0) == 0 && ch.a(1) == 0) {
    out.rule = "0.44";
    out.bound = Real::parse("0.44", prec);
  } else if (ch.a(0) != ch.a(1)) {
    const Real aya = (ch.a(0) ? y11 : y22) / 4L;
    out.rule = "0.75";
    out.bound = Real::parse("0.75", prec) * exp(-(ctx.pi() * aya));
  } else {
    const Real aya = (y11 + y12 * 2L + y22) / 4L;
    const Complex ipi(Real(0L, prec), ctx.pi());
    Complex e = exp(ipi * Zp.z12());
    Complex one = Complex::from_real(Real(1L, prec));
    Complex f = ch.b(0) ? one - e : one + e;
    out.rule = "1.12";
    out.bound = Real::parse("1.12", prec) * abs(f) * exp(-(ctx.pi() * (aya - y12)));
  }
  out.pass = out.value + out.error >= out.bound;
  return out;
}

Chi10BoundCheck check_chi10_lb(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  require_domain(Z, ctx);
  const mpfr_prec_t prec = ctx.working_bits();
  const PeriodMatrix Zp = Z.with_precision(prec);
  auto c = chi10(Zp, ctx);
  const Real c0 = Real::parse("8e-5", prec);
  Real m = min(Real(1L, prec), ctx.pi() * abs(Zp.z12()));
  Real tr = Zp.trace_im();
  Chi10BoundCheck out{abs(c.value), c.error, c0 * m * m * exp(-(ctx.pi() * 2L * (tr - Zp.z12().im()))),
                      c0 * m * m * exp(-(ctx.pi() * 2L * tr)), false};
  out.pass = out.value + out.error >= out.sharp;
  return out;
}

ExpCheck check_exp_ineq(const Complex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  if (abs(z.re()) > ctx.pi()) throw DomainError("check_exp_ineq needs |Re z| <= pi");
  const Complex i(Real(0L, prec), Real(1L, prec));
  const Complex one = Complex::from_real(Real(1L, prec));
  Complex zp(z.re().with_precision(prec), z.im().with_precision(prec));
  ExpCheck out{abs(exp(i * zp) - one),
               (Real(1L, prec) - exp(Real(-1L, prec))) * min(Real(1L, prec), abs(zp)),
               abs(exp(i * zp * Real(0.5, prec)) + one), false};
  const Real slack = ctx.epsilon() * 16L;
  out.pass = out.lhs_minus + slack >= out.rhs_minus && out.lhs_plus + slack >= Real(1L, prec);
  return out;
}

std::vector<PeriodMatrix> sample_fundamental_domain(int n, std::uint64_t seed, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("sample count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double y11_min = std::sqrt(3.0) / 2;
  const mpfr_prec_t prec = ctx.working_bits();
  std::vector<PeriodMatrix> out;
  out.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double y11 = y11_min + (3 - y11_min) * unit(rng);
    const double y22 = y11 + 3 * unit(rng);
    const double y12 = 0.5 * y11 * unit(rng);
    const double x11 = unit(rng) - 0.5, x12 = unit(rng) - 0.5, x22 = unit(rng) - 0.5;
    PeriodMatrix Z(Complex(Real(x11, prec), Real(y11, prec)), Complex(Real(x12, prec), Real(y12, prec)),
                   Complex(Real(x22, prec), Real(y22, prec)));
    out.push_back(reduce(Z, ctx).Z);
  }
  return out;
}

BoundsReport verify_bounds(int n, std::uint64_t seed, const PrecisionContext& ctx) {
  BoundsReport rep;
  const auto samples = sample_fundamental_domain(n, seed, ctx);
  rep.samples = n;
  for (size_t k = 0; k < samples.size(); ++k) {
    const auto& Z = samples[k];
    for (const auto& ch : even_characteristics()) {
      auto r = check_theta_lb(ch, Z, ctx);
      ++rep.theta_checks;
      if (!r.pass)
        rep.failures.push_back("theta " + ch.to_string() + " rule " + r.rule + " at Z = " + Z.to_string(40) +
                               ": |theta| = " + r.value.to_scientific(20) + " < " + r.bound.to_scientific(20));
    }
    auto c = check_chi10_lb(Z, ctx);
    ++rep.chi10_checks;
    if (!c.pass)
      rep.failures.push_back("chi10 at Z = " + Z.to_string(40) + ": |chi10| = " + c.value.to_scientific(20) + " < " +
                             c.sharp.to_scientific(20));
    if (c.weak > c.sharp) rep.failures.push_back("weak chi10 bound exceeds the sharp one at Z = " + Z.to_string(40));
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(-3.0, 3.0);
  const mpfr_prec_t prec = ctx.working_bits();
  for (int k = 0; k < n; ++k) {
    Complex z(ctx.pi() * Real(re(rng), prec), Real(im(rng), prec));
    auto e = check_exp_ineq(z, ctx);
    ++rep.exp_checks;
    if (!e.pass) rep.failures.push_back("exponential inequality at z = " + z.to_string(40));
  }
  return rep;
}

}  // namespace cmheight
