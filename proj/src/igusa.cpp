#include "cmheight/igusa.hpp"

#include <algorithm>
#include <array>

#include "cmheight/errors.hpp"

namespace cmheight {

namespace {

struct Monomial {
  std::array<int, 7> exponents;  // powers of a0..a6
  long coefficient;
};

constexpr Monomial kI2[] = {
    {{0, 0, 0, 2, 0, 0, 0}, 6},
    {{0, 0, 1, 0, 1, 0, 0}, -16},
    {{0, 1, 0, 0, 0, 1, 0}, 40},
    {{1, 0, 0, 0, 0, 0, 1}, -240},
};
constexpr Monomial kI4[] = {
    {{0, 0, 2, 0, 2, 0, 0}, 4},
    {{0, 0, 2, 1, 0, 1, 0}, -12},
    {{0, 0, 3, 0, 0, 0, 1}, 48},
    {{0, 1, 0, 1, 2, 0, 0}, -12},
    {{0, 1, 0, 2, 0, 1, 0}, 36},
    {{0, 1, 1, 0, 1, 1, 0}, 4},
    {{0, 1, 1, 1, 0, 0, 1}, -180},
    {{0, 2, 0, 0, 0, 2, 0}, -80},
    {{0, 2, 0, 0, 1, 0, 1}, 300},
    {{1, 0, 0, 0, 3, 0, 0}, 48},
    {{1, 0, 0, 1, 1, 1, 0}, -180},
    {{1, 0, 0, 2, 0, 0, 1}, 324},
    {{1, 0, 1, 0, 0, 2, 0}, 300},
    {{1, 0, 1, 0, 1, 0, 1}, -504},
    {{1, 1, 0, 0, 0, 1, 1}, -540},
    {{2, 0, 0, 0, 0, 0, 2}, 1620},
};
constexpr Monomial kI6[] = {
    {{0, 0, 2, 2, 2, 0, 0}, 8},
    {{0, 0, 2, 3, 0, 1, 0}, -24},
    {{0, 0, 3, 0, 3, 0, 0}, -24},
    {{0, 0, 3, 1, 1, 1, 0}, 76},
    {{0, 0, 3, 2, 0, 0, 1}, 60},
    {{0, 0, 4, 0, 0, 2, 0}, -36},
    {{0, 0, 4, 0, 1, 0, 1}, -160},
    {{0, 1, 0, 3, 2, 0, 0}, -24},
    {{0, 1, 0, 4, 0, 1, 0}, 72},
    {{0, 1, 1, 1, 3, 0, 0}, 76},
    {{0, 1, 1, 2, 1, 1, 0}, -238},
    {{0, 1, 1, 3, 0, 0, 1}, -198},
    {{0, 1, 2, 0, 2, 1, 0}, 28},
    {{0, 1, 2, 1, 0, 2, 0}, 26},
    {{0, 1, 2, 1, 1, 0, 1}, 492},
    {{0, 1, 3, 0, 0, 1, 1}, 616},
    {{0, 2, 0, 0, 4, 0, 0}, -36},
    {{0, 2, 0, 1, 2, 1, 0}, 26},
    {{0, 2, 0, 2, 0, 2, 0}, 176},
    {{0, 2, 0, 2, 1, 0, 1}, 330},
    {{0, 2, 1, 0, 1, 2, 0}, 64},
    {{0, 2, 1, 0, 2, 0, 1}, -640},
    {{0, 2, 1, 1, 0, 1, 1}, -1860},
    {{0, 2, 2, 0, 0, 0, 2}, -900},
    {{0, 3, 0, 0, 0, 3, 0}, -320},
    {{0, 3, 0, 0, 1, 1, 1}, 1600},
    {{0, 3, 0, 1, 0, 0, 2}, 2250},
    {{1, 0, 0, 2, 3, 0, 0}, 60},
    {{1, 0, 0, 3, 1, 1, 0}, -198},
    {{1, 0, 0, 4, 0, 0, 1}, 162},
    {{1, 0, 1, 0, 4, 0, 0}, -160},
    {{1, 0, 1, 1, 2, 1, 0}, 492},
    {{1, 0, 1, 2, 0, 2, 0}, 330},
    {{1, 0, 1, 2, 1, 0, 1}, -468},
    {{1, 0, 2, 0, 1, 2, 0}, -640},
    {{1, 0, 2, 0, 2, 0, 1}, 424},
    {{1, 0, 2, 1, 0, 1, 1}, -876},
    {{1, 0, 3, 0, 0, 0, 2}, -96},
    {{1, 1, 0, 0, 3, 1, 0}, 616},
    {{1, 1, 0, 1, 1, 2, 0}, -1860},
    {{1, 1, 0, 1, 2, 0, 1}, -876},
    {{1, 1, 0, 2, 0, 1, 1}, 1818},
    {{1, 1, 1, 0, 0, 3, 0}, 1600},
    {{1, 1, 1, 0, 1, 1, 1}, 3472},
    {{1, 1, 1, 1, 0, 0, 2}, 3060},
    {{1, 2, 0, 0, 0, 2, 1}, -2240},
    {{1, 2, 0, 0, 1, 0, 2}, -18600},
    {{2, 0, 0, 0, 2, 2, 0}, -900},
    {{2, 0, 0, 0, 3, 0, 1}, -96},
    {{2, 0, 0, 1, 0, 3, 0}, 2250},
    {{2, 0, 0, 1, 1, 1, 1}, 3060},
    {{2, 0, 0, 2, 0, 0, 2}, -10044},
    {{2, 0, 1, 0, 0, 2, 1}, -18600},
    {{2, 0, 1, 0, 1, 0, 2}, 20664},
    {{2, 1, 0, 0, 0, 1, 2}, 59940},
    {{3, 0, 0, 0, 0, 0, 3}, -119880},
};

template <size_t N>
Rational evaluate(const Monomial (&table)[N], const std::array<Rational, 7>& a) {
  Rational sum = 0;
  for (const auto& m : table) {
    Rational term = m.coefficient;
    for (int i = 0; i < 7; ++i)
      if (m.exponents[static_cast<size_t>(i)] != 0) term *= pow(a[static_cast<size_t>(i)], m.exponents[static_cast<size_t>(i)]);
    sum += term;
  }
  return sum;
}

}  // namespace

WeierstrassEquation::WeierstrassEquation(Polynomial P, Polynomial Q) : P_(std::move(P)), Q_(std::move(Q)) {
  if (P_.degree() > 6) throw DomainError("deg P exceeds 6");
  if (Q_.degree() > 3) throw DomainError("deg Q exceeds 3");
  const int d = sextic().degree();
  if (d != 5 && d != 6) throw SingularCurveError("4P + Q^2 must have degree 5 or 6");
  discriminant(P_, Q_);
}

Polynomial WeierstrassEquation::sextic() const {
  return (Rational(4) * P_ + Q_ * Q_).with_formal_degree(6);
}

Rational discriminant(const Polynomial& P, const Polynomial& Q) {
  Polynomial f = Rational(4) * P + Q * Q;
  if (f.degree() > 6) throw DomainError("4P + Q^2 has degree above 6");
  if (f.degree() < 5) throw SingularCurveError("4P + Q^2 has degree below 5");
  Rational d = disc_n(f, 6) / 4096;
  if (d == 0) throw SingularCurveError("singular curve: Delta_E = 0");
  return d;
}

Rational discriminant(const WeierstrassEquation& eq) { return discriminant(eq.P(), eq.Q()); }

IgusaClebsch igusa_clebsch(const Polynomial& sextic) {
  if (sextic.degree() > 6) throw DomainError("not a binary sextic");
  std::array<Rational, 7> a;
  for (int i = 0; i < 7; ++i) a[static_cast<size_t>(i)] = sextic[i];
  return {evaluate(kI2, a), evaluate(kI4, a), evaluate(kI6, a), disc_n(sextic, 6)};
}

const Rational& IgusaInvariants::weight(int w) const {
  switch (w) {
    case 2: return J2;
    case 4: return J4;
    case 6: return J6;
    case 8: return J8;
    case 10: return J10;
    default: throw DomainError("Igusa weight must be 2, 4, 6, 8 or 10");
  }
}

IgusaInvariants igusa_invariants(const WeierstrassEquation& eq) {
  const IgusaClebsch ic = igusa_clebsch(eq.sextic());
  IgusaInvariants j;
  j.J2 = ic.I2 / 8;
  j.J4 = (4 * j.J2 * j.J2 - ic.I4) / 96;
  j.J6 = (8 * j.J2 * j.J2 * j.J2 - 160 * j.J2 * j.J4 - ic.I6) / 576;
  j.J8 = (j.J2 * j.J6 - j.J4 * j.J4) / 4;
  j.J10 = ic.I10 / 4096;
  for (Rational* r : {&j.J2, &j.J4, &j.J6, &j.J8, &j.J10}) r->canonicalize();
  if (j.J10 == 0) throw SingularCurveError("singular curve: J10 = 0");
  return j;
}

int iota(const Integer& p) {
  if (p == 2) return 4;
  if (p == 3) return 3;
  return 1;
}

Rational local_ratio(const IgusaInvariants& inv, const Integer& p) {
  const int i = iota(p);
  if (inv.J10 == 0) throw SingularCurveError("J10 = 0");
  return pow(inv.weight(2 * i), 5) / pow(inv.J10, i);
}

long minimal_disc_order(const IgusaInvariants& inv, const Integer& p) {
  if (!is_prime(p)) throw DomainError("minimal_disc_order needs a prime");
  const Rational r = local_ratio(inv, p);
  if (r == 0) return 0;
  const long ord = valuation(r, p);
  if (ord >= 0) return 0;
  const int i = iota(p);
  if ((-ord) % i != 0)
    throw ConsistencyError("ord_" + p.get_str() + " of the Igusa ratio is " + std::to_string(ord) +
                           ", not divisible by " + std::to_string(i));
  return -ord / i;
}

FiniteHeightPart finite_height_part(const IgusaInvariants& inv, const PrecisionContext& ctx,
                                    const std::vector<Integer>& extra_primes, unsigned long trial_bound) {
  std::vector<Integer> candidates{2, 3};
  const Rational r1 = pow(inv.J2, 5) / inv.J10;
  if (r1 != 0) {
    Integer den = r1.get_den();
    while (den % 2 == 0) den /= 2;
    while (den % 3 == 0) den /= 3;
    TrialFactorization tf = trial_factor(den, trial_bound);
    for (const auto& [q, e] : tf.factors) candidates.push_back(q);
    Integer rest = tf.cofactor;
    for (const Integer& q : extra_primes) {
      if (!is_prime(q)) throw DomainError("supplied prime list contains " + q.get_str());
      if (rest % q == 0) {
        candidates.push_back(q);
        while (rest % q == 0) rest /= q;
      }
    }
    if (rest != 1)
      throw DomainError("unfactored cofactor " + rest.get_str() +
                        " above the trial-division bound; supply its prime factors");
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const mpfr_prec_t prec = ctx.working_bits();
  FiniteHeightPart out{Real(0L, prec), {}};
  for (const Integer& p : candidates) {
    const long ord = minimal_disc_order(inv, p);
    if (ord == 0) continue;
    LocalContribution c;
    c.p = p;
    c.iota = iota(p);
    c.ord_min_disc = ord;
    c.log_coefficient = Rational(ord, 60);
    c.log_coefficient.canonicalize();
    c.height_term = Real(c.log_coefficient, prec) * log(Real(p, prec));
    out.value += c.height_term;
    out.contributions.push_back(std::move(c));
  }
  return out;
}

}  // namespace cmheight
