#include <algorithm>
#include <cmath>

#include "cmheight/errors.hpp"
#include "cmheight/highprec.hpp"

namespace cmheight {

std::pair<Complex, Complex> evaluate_with_derivative(const std::vector<Complex>& coefficients, const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  Complex value(prec), derivative(prec);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    derivative = derivative * z + value;
    value = value * z + *it;
  }
  return {value, derivative};
}

std::vector<Complex> poly_roots(const Polynomial& p, const PrecisionContext& ctx) {
  const int n = p.degree();
  if (n < 1) throw DomainError("poly_roots needs a non-constant polynomial");
  if (!p.is_squarefree()) throw DomainError("poly_roots needs a squarefree polynomial: " + p.to_string());

  const mpfr_prec_t prec = ctx.working_bits();
  std::vector<Complex> coeffs;
  for (int i = 0; i <= n; ++i) coeffs.push_back(Complex::from_real(Real(p[i], prec)));

  // Start on a circle around the root centroid whose radius is the Cauchy
  // bound; the angular offset avoids symmetric stalls on real polynomials.
  Real lead_mag = abs(Real(p.leading(), prec));
  Real radius(0L, prec);
  for (int i = 0; i < n; ++i) radius = max(radius, abs(Real(p[i], prec)) / lead_mag);
  radius = radius + 1L;
  Real center = -Real(p[n - 1], prec) / (Real(p.leading(), prec) * static_cast<long>(n));
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Real angle = ctx.pi() * (2L * k) / static_cast<long>(n) + Real(0.4, prec);
    z.emplace_back(center + radius * cos(angle), radius * sin(angle));
  }

  const Real aberth_tol = pow2(-static_cast<long>(prec) / 2, prec);
  bool settled = false;
  for (int iteration = 0; iteration < 2000 && !settled; ++iteration) {
    settled = true;
    for (int k = 0; k < n; ++k) {
      auto [value, derivative] = evaluate_with_derivative(coeffs, z[static_cast<size_t>(k)]);
      if (norm(value).is_zero()) continue;
      Complex ratio = value / derivative;
      Complex repulsion(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
        repulsion += Complex(Real(1L, prec), Real(0L, prec)) / diff;
      }
      Complex denom = Complex(Real(1L, prec), Real(0L, prec)) - ratio * repulsion;
      Complex step = ratio / denom;
      z[static_cast<size_t>(k)] -= step;
      Real scale = max(Real(1L, prec), abs(z[static_cast<size_t>(k)]));
      if (abs(step) > aberth_tol * scale) settled = false;
    }
  }

  // Newton polishing at full precision, then certification.
  const Real certify = pow2(-ctx.bits(), prec);
  for (auto& root : z) {
    Real correction(0L, prec);
    for (int step = 0; step < 60; ++step) {
      auto [value, derivative] = evaluate_with_derivative(coeffs, root);
      if (norm(derivative).is_zero()) throw PrecisionError("vanishing derivative during Newton polishing");
      Complex delta = value / derivative;
      root -= delta;
      correction = abs(delta);
      if (correction < certify * max(Real(1L, prec), abs(root)) * pow2(-ctx.guard(), prec)) break;
    }
    auto [value, derivative] = evaluate_with_derivative(coeffs, root);
    Real residual = abs(value / derivative);
    if (!(residual < certify * max(Real(1L, prec), abs(root))))
      throw PrecisionError("root of " + p.to_string() + " failed Newton certification");
  }

  const Real tie = pow2(-ctx.bits() / 2, prec);
  std::sort(z.begin(), z.end(), [&tie](const Complex& a, const Complex& b) {
    Real dre = a.re() - b.re();
    if (abs(dre) > tie * max(Real(1L, tie.precision()), abs(a.re()))) return a.re() < b.re();
    return a.im() < b.im();
  });
  return z;
}

}  // namespace cmheight
