#pragma once

// Period matrices of CM abelian surfaces attached to a real quadratic field F.

#include <string_view>
#include <utility>

#include "cmheight/bigfloat.hpp"
#include "cmheight/exact.hpp"
#include "cmheight/theta.hpp"

namespace cmheight {

using TauPair = std::pair<Complex, Complex>;

/// The two roots in the upper half-plane of an integer quartic, ordered by
/// real part then imaginary part; `swapped` returns them the other way round.
/// Throws DomainError unless the degree is 4 with exactly two such roots.
TauPair select_tau(const Polynomial& quartic, const PrecisionContext& ctx, bool swapped = false);

/// Validates an explicit pair (positive imaginary parts).
TauPair select_tau(const Complex& tau1, const Complex& tau2, bool swapped = false);

/// Parses a decimal complex "re+im*i", refusing components with fewer than
/// ceil(bits/3) significant digits.
Complex parse_tau_value(std::string_view text, const PrecisionContext& ctx);

/// Z = (1/D) [[t1 + t2, -t1 th' - t2 th], [., t1 th'^2 + t2 th^2]] with
/// th = (D + sqrt D)/2 and th' = (D - sqrt D)/2.
PeriodMatrix period_matrix(const Complex& tau1, const Complex& tau2, const Integer& delta, const PrecisionContext& ctx);

/// mu(eta, tau) for eta = [alpha : beta]:
///   N(alpha O_F + beta sqrt(D) O_F)^2 prod_l Im tau_l / |phi_l(alpha) - phi_l(beta) tau_l|^2
/// with phi_1(sqrt D) = sqrt D, phi_2(sqrt D) = -sqrt D.
Real cusp_mu(const QuadElement& alpha, const QuadElement& beta, const TauPair& tau, const PrecisionContext& ctx);

/// |4 N(omega1) prod Im tau_l - N(ideal) sqrt(Delta_K)|.
Real period_volume_residual(const Real& norm_omega1, const std::pair<Real, Real>& im_taus, const Rational& ideal_norm,
                            const Integer& delta_K, const PrecisionContext& ctx);

}  // namespace cmheight
