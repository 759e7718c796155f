#pragma once

// Igusa invariants of genus-2 curves y^2 + Q(x) y = P(x) over Q and the
// finite-place part of the stable Faltings height.

#include <vector>

#include "cmheight/bigfloat.hpp"
#include "cmheight/exact.hpp"

namespace cmheight {

/// y^2 + Q y = P with deg P <= 6 and deg Q <= 3.
class WeierstrassEquation {
 public:
  /// Throws DomainError on degree violations and SingularCurveError when the
  /// discriminant vanishes.
  WeierstrassEquation(Polynomial P, Polynomial Q);

  const Polynomial& P() const { return P_; }
  const Polynomial& Q() const { return Q_; }
  /// 4P + Q^2 as a binary sextic.
  Polynomial sextic() const;

 private:
  Polynomial P_, Q_;
};

/// Delta_E = 2^-12 disc_6(4P + Q^2). Throws SingularCurveError when it is 0.
Rational discriminant(const Polynomial& P, const Polynomial& Q);
Rational discriminant(const WeierstrassEquation& eq);

/// Igusa-Clebsch invariants of a binary sextic.
struct IgusaClebsch {
  Rational I2, I4, I6, I10;
};
IgusaClebsch igusa_clebsch(const Polynomial& sextic);

struct IgusaInvariants {
  Rational J2, J4, J6, J8, J10;

  /// J_{2k} for weight 2k in {2, 4, 6, 8, 10}.
  const Rational& weight(int w) const;
};

/// Liu's normalization on f = 4P + Q^2:
///   J2 = I2/8, J4 = (4 J2^2 - I4)/96, J6 = (8 J2^3 - 160 J2 J4 - I6)/576,
///   J8 = (J2 J6 - J4^2)/4, J10 = I10/4096 = Delta_E.
IgusaInvariants igusa_invariants(const WeierstrassEquation& eq);

/// 4 for p = 2, 3 for p = 3, 1 otherwise.
int iota(const Integer& p);

/// J_{2 iota}^5 / J10^iota, the absolute invariant governing the prime p.
Rational local_ratio(const IgusaInvariants& inv, const Integer& p);

/// (1/iota) max(0, -ord_p(J10^-iota J_{2 iota}^5)). The jacobian is assumed to
/// have good reduction at p. Throws ConsistencyError if the result is not an
/// integer.
long minimal_disc_order(const IgusaInvariants& inv, const Integer& p);

struct LocalContribution {
  Integer p;
  int iota = 1;
  long ord_min_disc = 0;
  /// ord_min_disc / 60, the coefficient of log p.
  Rational log_coefficient;
  Real height_term;
};

struct FiniteHeightPart {
  Real value;
  std::vector<LocalContribution> contributions;
};

/// (1/60) sum_p ord_min_disc(p) log p over the primes with a nonzero term.
///
/// Candidates are 2, 3 and the primes p >= 5 dividing the denominator of
/// J2^5/J10, found by trial division up to `trial_bound`. `extra_primes`
/// supplies larger prime factors; an unexplained cofactor raises DomainError.
FiniteHeightPart finite_height_part(const IgusaInvariants& inv, const PrecisionContext& ctx,
                                    const std::vector<Integer>& extra_primes = {},
                                    unsigned long trial_bound = 1000000);

}  // namespace cmheight
