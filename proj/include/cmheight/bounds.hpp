#pragma once

// Numerical verification of lower bounds for theta constants and chi10 on
// Siegel's fundamental domain.

#include <cstdint>
#include <string>
#include <vector>

#include "cmheight/siegel.hpp"

namespace cmheight {

struct BoundCheck {
  std::string rule;
  Real bound;
  Real value;
  Real error;
  bool pass = false;
};

/// Picks the rule from the a-part of the characteristic:
///   a = 0:           |theta| >= 0.44
///   a = (1/2, 0), (0, 1/2): |theta| >= 0.75 exp(-pi a^T Y a)
///   a = (1/2, 1/2), b = (nu/2, nu/2):
///     |theta| >= 1.12 |1 + (-1)^nu exp(pi i z12)| exp(-pi (a^T Y a - y12)).
/// Throws DomainError if Z is outside the fundamental domain or the
/// characteristic is odd.
BoundCheck check_theta_lb(const ThetaCharacteristic& ch, const PeriodMatrix& Z, const PrecisionContext& ctx);

struct Chi10BoundCheck {
  Real value;
  Real error;
  /// c0 min(1, pi |z12|)^2 exp(-2 pi (Tr Y - y12)) with c0 = 8e-5.
  Real sharp;
  /// The same with exp(-2 pi Tr Y).
  Real weak;
  bool pass = false;
};

Chi10BoundCheck check_chi10_lb(const PeriodMatrix& Z, const PrecisionContext& ctx);

struct ExpCheck {
  Real lhs_minus;  // |e^(iz) - 1|
  Real rhs_minus;  // (1 - e^-1) min(1, |z|)
  Real lhs_plus;   // |e^(iz/2) + 1|
  bool pass = false;
};

/// Requires |Re z| <= pi.
ExpCheck check_exp_ineq(const Complex& z, const PrecisionContext& ctx);

/// n reduced matrices: Re entries uniform in [-1/2, 1/2], Im z11 in
/// [sqrt(3)/2, 3], Im z22 in [Im z11, Im z11 + 3], Im z12 in [0, Im z11 / 2],
/// then reduce().
std::vector<PeriodMatrix> sample_fundamental_domain(int n, std::uint64_t seed, const PrecisionContext& ctx);

struct BoundsReport {
  int samples = 0;
  int theta_checks = 0;
  int chi10_checks = 0;
  int exp_checks = 0;
  /// One line per violated bound with the full input for replay.
  std::vector<std::string> failures;
};

/// Every theta rule for the ten even characteristics and the chi10 bound on
/// `n` sampled matrices, plus the exponential inequalities on n points.
BoundsReport verify_bounds(int n, std::uint64_t seed, const PrecisionContext& ctx);

}  // namespace cmheight
