#pragma once

// Genus-2 theta constants with half-integral characteristics, the cusp form
// chi10 and the archimedean height term.

#include <array>
#include <optional>
#include <string>

#include "cmheight/bigfloat.hpp"

namespace cmheight {

/// [a1, a2, b1, b2] with each entry 0 or 1 standing for 0 or 1/2.
struct ThetaCharacteristic {
  std::array<int, 4> half{};

  ThetaCharacteristic() = default;
  ThetaCharacteristic(int a1, int a2, int b1, int b2);

  int a(int i) const { return half[static_cast<size_t>(i)]; }
  int b(int i) const { return half[static_cast<size_t>(2 + i)]; }
  bool is_even() const { return (a(0) * b(0) + a(1) * b(1)) % 2 == 0; }
  /// Entrywise sum modulo 1.
  ThetaCharacteristic operator+(const ThetaCharacteristic& o) const;
  bool operator==(const ThetaCharacteristic&) const = default;
  std::string to_string() const;

  /// Parses "a1,a2,b1,b2" with entries 0, 1/2 (or 0.5).
  static ThetaCharacteristic parse(const std::string& text);
};

/// The ten even characteristics: the four with a = 0 first, then the six
/// others in a fixed order.
const std::array<ThetaCharacteristic, 10>& even_characteristics();

/// Symmetric 2x2 complex matrix with positive definite imaginary part.
class PeriodMatrix {
 public:
  /// Throws DomainError unless Im Z is positive definite.
  PeriodMatrix(Complex z11, Complex z12, Complex z22);

  const Complex& z11() const { return z11_; }
  const Complex& z12() const { return z12_; }
  const Complex& z22() const { return z22_; }
  mpfr_prec_t precision() const { return z11_.precision(); }

  Real det_im() const;
  Real trace_im() const;
  /// Smallest eigenvalue of Im Z.
  Real min_eigenvalue_im() const;
  PeriodMatrix with_precision(mpfr_prec_t prec) const;

  std::string to_string(int digits) const;

 private:
  Complex z11_, z12_, z22_;
};

struct ThetaValue {
  Complex value;
  /// Truncation tail bound plus a rounding estimate.
  Real error;
};

/// Box radius R such that summing n in [-R-1, R]^2 leaves a tail below
/// 2^-(working bits), together with that tail bound.
std::pair<long, Real> truncation_radius(const PeriodMatrix& Z, const PrecisionContext& ctx);

ThetaValue theta_constant(const ThetaCharacteristic& ch, const PeriodMatrix& Z, const PrecisionContext& ctx,
                          std::optional<long> radius = std::nullopt);

/// theta_m(0, Z) for all ten even characteristics in the order of
/// even_characteristics().
std::array<ThetaValue, 10> even_theta_constants(const PeriodMatrix& Z, const PrecisionContext& ctx,
                                                std::optional<long> radius = std::nullopt);

/// Product of the squares of the ten even theta constants.
ThetaValue chi10(const PeriodMatrix& Z, const PrecisionContext& ctx);

/// Product over 3-subsets T of {1..5} of theta_{m(T sym {1,3,5})}^8.
ThetaValue theta_big(const PeriodMatrix& Z, const PrecisionContext& ctx);

/// |chi10(Z)| det(Im Z)^5, invariant under Sp4(Z).
Real chi10_invariant(const PeriodMatrix& Z, const PrecisionContext& ctx);

/// -(1/10) log(|chi10(Z)| det(Im Z)^5). Throws PrecisionError when chi10 cannot
/// be separated from 0.
Real bare_archimedean_term(const PeriodMatrix& Z, const PrecisionContext& ctx);

/// -(1/10) log(2^8 pi^10 |chi10(Z)| det(Im Z)^5).
Real archimedean_term(const PeriodMatrix& Z, const PrecisionContext& ctx);

/// log(2^(4/5) pi), the gap between the two terms above.
Real archimedean_normalization(const PrecisionContext& ctx);

}  // namespace cmheight
