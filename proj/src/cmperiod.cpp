#include "cmheight/cmperiod.hpp"

#include <cctype>

#include "cmheight/errors.hpp"
#include "cmheight/highprec.hpp"

namespace cmheight {

TauPair select_tau(const Polynomial& quartic, const PrecisionContext& ctx, bool swapped) {
  if (quartic.degree() != 4) throw DomainError("tau polynomial must be a quartic, got degree " + std::to_string(quartic.degree()));
  std::vector<Complex> upper;
  for (auto& z : poly_roots(quartic, ctx))
    if (z.im() > 0L) upper.push_back(z);
  if (upper.size() != 2)
    throw DomainError("tau polynomial has " + std::to_string(upper.size()) + " roots in the upper half-plane, expected 2");
  if (swapped) std::swap(upper[0], upper[1]);
  return {upper[0], upper[1]};
}

TauPair select_tau(const Complex& tau1, const Complex& tau2, bool swapped) {
  if (!(tau1.im() > 0L) || !(tau2.im() > 0L)) throw DomainError("tau values must have positive imaginary part");
  return swapped ? TauPair{tau2, tau1} : TauPair{tau1, tau2};
}

namespace {

long significant_digits(std::string_view s) {
  long digits = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

}  // namespace

Complex parse_tau_value(std::string_view text, const PrecisionContext& ctx) {
  Complex z = Complex::parse(text, ctx.working_bits());
  // Split at the sign that separates the two components (not an exponent sign).
  size_t cut = std::string_view::npos;
  for (size_t i = 1; i < text.size(); ++i)
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') cut = i;
  const long need = (ctx.bits() + 2) / 3;
  auto check = [&](std::string_view part, const Real& value) {
    if (!value.is_zero() && significant_digits(part) < need)
      throw DomainError("tau component '" + std::string(part) + "' carries fewer than " + std::to_string(need) +
                        " significant digits");
  };
  if (cut == std::string_view::npos) {
    check(text, text.find('i') == std::string_view::npos ? z.re() : z.im());
  } else {
    check(text.substr(0, cut), z.re());
    check(text.substr(cut), z.im());
  }
  return z;
}

PeriodMatrix period_matrix(const Complex& tau1, const Complex& tau2, const Integer& delta, const PrecisionContext& ctx) {
  if (delta <= 0) throw DomainError("discriminant must be positive");
  if (!(tau1.im() > 0L) || !(tau2.im() > 0L)) throw DomainError("tau values must have positive imaginary part");
  const mpfr_prec_t prec = ctx.working_bits();
  const Real D(delta, prec);
  const Real s = sqrt(D);
  const Real th = (D + s) / 2L, thp = (D - s) / 2L;
  Complex z11 = (tau1 + tau2) / D;
  Complex z12 = -(tau1 * thp + tau2 * th) / D;
  Complex z22 = (tau1 * (thp * thp) + tau2 * (th * th)) / D;
  try {
    return PeriodMatrix(z11, z12, z22);
  } catch (const DomainError&) {
    throw DomainError("Im Z is not positive definite: check the tau pairing");
  }
}

Real cusp_mu(const QuadElement& alpha, const QuadElement& beta, const TauPair& tau, const PrecisionContext& ctx) {
  if (alpha.is_zero() && beta.is_zero()) throw DomainError("cusp [0 : 0] is undefined");
  const Integer& delta = alpha.delta();
  if (beta.delta() != delta) throw DomainError("alpha and beta live in different fields");
  const QuadElement root(0, 1, 1, delta);
  const QuadElement th = QuadElement::theta(delta);
  const QuadElement b = beta * root;
  std::vector<QuadElement> gens;
  for (const QuadElement* g : {&alpha, &b})
    if (!g->is_zero()) {
      gens.push_back(*g);
      gens.push_back(*g * th);
    }
  const Rational n = module_norm({gens, delta});

  const mpfr_prec_t prec = ctx.working_bits();
  const Real s = sqrt(Real(delta, prec));
  auto embed = [&](const QuadElement& x, int sign) {
    auto [r, v] = x.rational_and_surd_parts();
    return Real(r, prec) + Real(v, prec) * s * static_cast<long>(sign);
  };
  Real mu = Real(n * n, prec);
  const Complex* taus[2] = {&tau.first, &tau.second};
  for (int l = 0; l < 2; ++l) {
    const int sign = l == 0 ? 1 : -1;
    Complex d = Complex::from_real(embed(alpha, sign)) - *taus[l] * embed(beta, sign);
    Real d2 = norm(d);
    if (!(d2 > pow2(-static_cast<long>(prec) + 8, prec)))
      throw DomainError("cusp lies on the boundary: tau equals the real ratio alpha/beta");
    mu = mu * taus[l]->im() / d2;
  }
  return mu;
}

Real period_volume_residual(const Real& norm_omega1, const std::pair<Real, Real>& im_taus, const Rational& ideal_norm,
                            const Integer& delta_K, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  Real lhs = norm_omega1.with_precision(prec) * im_taus.first * im_taus.second * 4L;
  Real rhs = Real(ideal_norm, prec) * sqrt(Real(delta_K, prec));
  return abs(lhs - rhs);
}

}  // namespace cmheight
