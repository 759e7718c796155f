#pragma once

// Exact integer and rational arithmetic: p-adic valuations, univariate
// polynomials over Q with binary-form discriminants, and Z-modules inside a
// real quadratic field.

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmheight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b" or "a" (optional sign, no spaces inside). Result is reduced.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

bool is_prime(const Integer& p);

/// Exponent of the prime p in x. Throws DomainError for x = 0 or p not prime.
long valuation(const Rational& x, const Integer& p);

Rational pow(const Rational& x, long e);

/// Prime factors of |n| found by trial division up to `bound`, together with
/// the unfactored cofactor (1 if n factors completely below the bound).
struct TrialFactorization {
  std::vector<std::pair<Integer, long>> factors;
  Integer cofactor{1};
};
TrialFactorization trial_factor(Integer n, unsigned long bound);

/// Polynomial with rational coefficients, lowest degree first, carrying a
/// formal degree used when the polynomial is read as a binary form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::vector<Rational> coefficients, int formal_degree);

  static Polynomial from_integers(const std::vector<long>& coefficients);

  /// Actual degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int formal_degree() const { return formal_degree_; }
  Polynomial with_formal_degree(int n) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Rational operator[](int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  /// p(x + c).
  Polynomial shifted(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder of Euclidean division; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  bool is_squarefree() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  int formal_degree_ = -1;
};

/// Res(a, b) as the determinant of the Sylvester matrix of the actual degrees.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Discriminant of p read as a binary form of degree n (n in {5, 6}).
/// Missing leading coefficients correspond to roots at infinity, so
/// disc_n = a_{n-1}^2 disc_{n-1} when deg p = n - 1 and 0 when deg p < n - 1.
Rational disc_n(const Polynomial& p, int n);

/// Element (u + v*sqrt(delta)) / w of the real quadratic field of
/// discriminant delta, kept with gcd(u, v, w) = 1 and w >= 1.
class QuadElement {
 public:
  QuadElement(Integer u, Integer v, Integer w, Integer delta);
  static QuadElement rational(const Rational& q, const Integer& delta);
  /// theta = (delta + sqrt(delta)) / 2, so that O_F = Z + theta Z.
  static QuadElement theta(const Integer& delta);

  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }
  const Integer& w() const { return w_; }
  const Integer& delta() const { return delta_; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }

  /// Coordinates (c0, c1) with x = c0 + c1 * theta.
  std::array<Rational, 2> coordinates() const;
  /// (u/w, v/w): the element is first + second * sqrt(delta).
  std::pair<Rational, Rational> rational_and_surd_parts() const;
  Rational norm() const;

  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend bool operator==(const QuadElement& a, const QuadElement& b) = default;

 private:
  void normalize();
  Integer u_, v_, w_, delta_;
};

/// Z-module generated by a list of field elements.
struct QuadModule {
  std::vector<QuadElement> generators;
  Integer delta;
};

/// Row-style Hermite normal form of an integer matrix with two columns.
/// Returns the nonzero rows (at most two), upper triangular with positive
/// pivots.
std::vector<std::array<Integer, 2>> hermite_normal_form(std::vector<std::array<Integer, 2>> rows);

/// Index-style norm [O_F : M] = |det B| of a full-rank module relative to the
/// basis (1, theta). Throws DomainError when the generators have rank < 2.
Rational module_norm(const QuadModule& m);

bool is_fundamental_discriminant_shape(const Integer& delta);

}  // namespace cmheight
