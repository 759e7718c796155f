#pragma once

// Faltings heights of cyclic quartic CM fields through an odd Dirichlet
// character of order 4 and values of log Gamma.

#include <map>
#include <string>
#include <vector>

#include "cmheight/bigfloat.hpp"
#include "cmheight/exact.hpp"

namespace cmheight {

/// Gaussian integer re + im i.
struct GaussianInteger {
  Integer re, im;
  bool operator==(const GaussianInteger&) const = default;
  std::string to_string() const;
};

class DirichletCharacter {
 public:
  /// Values given as exponents k (chi(m) = i^k) on every unit residue.
  static DirichletCharacter from_table(long f, const std::map<long, int>& exponents);
  /// Values on generators extended multiplicatively.
  static DirichletCharacter from_generators(long f, const std::map<long, int>& exponents);

  long modulus() const { return f_; }
  /// Exponent k with chi(m) = i^k, or -1 when gcd(m, f) > 1.
  int exponent(long m) const;
  DirichletCharacter conjugate() const;
  /// "table: 1=1, 2=i, ..." over the unit residues.
  std::string to_string() const;
  bool operator==(const DirichletCharacter&) const = default;

 private:
  DirichletCharacter(long f, std::vector<int> exps);
  void validate() const;
  long f_ = 1;
  std::vector<int> exps_;
};

/// Parses "1", "i", "-1", "-i" to the exponent 0..3.
int parse_unit(const std::string& text);
std::string unit_to_string(int exponent);

/// sum_{m=1}^{f-1} chi(m) m.
GaussianInteger char_weighted_sum(const DirichletCharacter& chi);
/// sum_{m=1}^{f-1} chi(m).
GaussianInteger char_sum(const DirichletCharacter& chi);

/// (1/2) log f + f Re( sum chi(m) log Gamma(m/f) / sum chi(m) m ).
Real colmez_height(const DirichletCharacter& chi, const PrecisionContext& ctx);

/// f^2 Delta_F.
Integer discriminant_relation(const Integer& f, const Integer& delta_F);

}  // namespace cmheight
