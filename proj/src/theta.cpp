#include "cmheight/theta.hpp"

#include <cmath>
#include <sstream>

#include "cmheight/errors.hpp"

namespace cmheight {

ThetaCharacteristic::ThetaCharacteristic(int a1, int a2, int b1, int b2) : half{a1, a2, b1, b2} {
  for (int v : half)
    if (v != 0 && v != 1) throw DomainError("theta characteristic entries must be 0 or 1/2");
}

ThetaCharacteristic ThetaCharacteristic::operator+(const ThetaCharacteristic& o) const {
  ThetaCharacteristic r;
  for (size_t i = 0; i < 4; ++i) r.half[i] = (half[i] + o.half[i]) % 2;
  return r;
}

std::string ThetaCharacteristic::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < 4; ++i) {
    if (i) s += i == 2 ? ";" : ",";
    s += half[i] ? "1/2" : "0";
  }
  return s + "]";
}

ThetaCharacteristic ThetaCharacteristic::parse(const std::string& text) {
  std::array<int, 4> v{};
  std::stringstream in(text);
  std::string item;
  size_t k = 0;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (k >= 4) throw DomainError("characteristic needs four entries: " + text);
    if (item == "0") v[k] = 0;
    else if (item == "1/2" || item == "0.5") v[k] = 1;
    else throw DomainError("characteristic entry must be 0 or 1/2: " + item);
    ++k;
  }
  if (k != 4) throw DomainError("characteristic needs four entries: " + text);
  return ThetaCharacteristic(v[0], v[1], v[2], v[3]);
}

const std::array<ThetaCharacteristic, 10>& even_characteristics() {
  static const std::array<ThetaCharacteristic, 10> list{
      ThetaCharacteristic(0, 0, 0, 0), ThetaCharacteristic(0, 0, 1, 0), ThetaCharacteristic(0, 0, 0, 1),
      ThetaCharacteristic(0, 0, 1, 1), ThetaCharacteristic(1, 0, 0, 0), ThetaCharacteristic(0, 1, 0, 0),
      ThetaCharacteristic(1, 1, 0, 0), ThetaCharacteristic(0, 1, 1, 0), ThetaCharacteristic(1, 0, 0, 1),
      ThetaCharacteristic(1, 1, 1, 1)};
  return list;
}

PeriodMatrix::PeriodMatrix(Complex z11, Complex z12, Complex z22)
    : z11_(std::move(z11)), z12_(std::move(z12)), z22_(std::move(z22)) {
  if (!(z11_.im() > 0L) || !(det_im() > 0L)) throw DomainError("Im Z is not positive definite");
}

Real PeriodMatrix::det_im() const { return z11_.im() * z22_.im() - z12_.im() * z12_.im(); }
Real PeriodMatrix::trace_im() const { return z11_.im() + z22_.im(); }

Real PeriodMatrix::min_eigenvalue_im() const {
  Real d = z11_.im() - z22_.im();
  Real disc = sqrt(d * d + z12_.im() * z12_.im() * 4L);
  Real closed = (trace_im() - disc) / 2L;
  // det/tr is a cruder lower bound that survives cancellation.
  return max(closed, det_im() / trace_im());
}

PeriodMatrix PeriodMatrix::with_precision(mpfr_prec_t prec) const {
  auto c = [prec](const Complex& z) { return Complex(z.re().with_precision(prec), z.im().with_precision(prec)); };
  return PeriodMatrix(c(z11_), c(z12_), c(z22_));
}

std::string PeriodMatrix::to_string(int digits) const {
  return "[[" + z11_.to_string(digits) + ", " + z12_.to_string(digits) + "], [" + z12_.to_string(digits) + ", " +
         z22_.to_string(digits) + "]]";
}

std::pair<long, Real> truncation_radius(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  const double lambda = Z.min_eigenvalue_im().to_double() * (1 - 1e-12);
  if (!(lambda > 0)) throw PrecisionError("Im Z is too close to singular for theta summation");
  const double target = -static_cast<double>(ctx.working_bits()) * std::log(2.0);
  const double log_s_all = std::log(1 + 2 / -std::expm1(-M_PI * lambda));
  for (long r = 1;; ++r) {
    const double rp = static_cast<double>(r) + 0.5;
    const double log_tail1 = std::log(2.0) - M_PI * lambda * rp * rp - std::log(-std::expm1(-2 * M_PI * lambda * rp));
    const double log_tail = std::log(2.0) + log_tail1 + log_s_all;
    if (log_tail < target || r > 100000) {
      Real tail = exp(Real(log_tail, ctx.working_bits()));
      return {r, tail};
    }
  }
}

namespace {

struct SignedSums {
  std::array<Complex, 4> sum;  // index e1 + 2 e2: sign (-1)^(e1 n1 + e2 n2)
  long terms = 0;
  long skipped = 0;
};

// Visits exp(i pi m^T Z m), m = n + a/2, for n in [-R-1, R]^2. Points with
// pi m^T Y m above `cutoff` are skipped (each is below e^-cutoff); along a row
// the terms follow T(n2 + 1) = T(n2) r, r(n2 + 1) = r(n2) exp(2 pi i z22).
template <typename Visit>
void for_each_term(int a1, int a2, const PeriodMatrix& Z, long R, mpfr_prec_t prec, const Real& pi, double cutoff,
                   SignedSums& s, Visit visit) {
  const Complex ipi(Real(0L, prec), pi);
  const double y11 = Z.z11().im().to_double(), y12 = Z.z12().im().to_double(), y22 = Z.z22().im().to_double();
  const Complex w = exp(ipi * Z.z22() * 2L);
  for (long n1 = -R - 1; n1 <= R; ++n1) {
    const double m1d = static_cast<double>(n1) + 0.5 * a1;
    long lo = R + 1, hi = -R - 2;
    for (long n2 = -R - 1; n2 <= R; ++n2) {
      const double m2d = static_cast<double>(n2) + 0.5 * a2;
      const double e = M_PI * (y11 * m1d * m1d + 2 * y12 * m1d * m2d + y22 * m2d * m2d);
      if (e <= cutoff) {
        lo = std::min(lo, n2);
        hi = std::max(hi, n2);
      }
    }
    s.skipped += 2 * R + 2 - (hi >= lo ? hi - lo + 1 : 0);
    if (hi < lo) continue;
    const Real m1(m1d, prec);
    const Real m2(static_cast<double>(lo) + 0.5 * a2, prec);
    Complex t = exp(ipi * (Z.z11() * (m1 * m1) + Z.z12() * (m1 * m2 * 2L) + Z.z22() * (m2 * m2)));
    Complex r = exp(ipi * (Z.z12() * (m1 * 2L) + Z.z22() * (m2 * 2L + 1L)));
    for (long n2 = lo; n2 <= hi; ++n2) {
      visit(n1, n2, t);
      ++s.terms;
      if (n2 < hi) {
        t *= r;
        r *= w;
      }
    }
  }
}

double skip_cutoff(mpfr_prec_t prec) { return (static_cast<double>(prec) + 16) * std::log(2.0); }

SignedSums lattice_sums(int a1, int a2, const PeriodMatrix& Z, long R, mpfr_prec_t prec, const Real& pi, bool all_signs) {
  SignedSums s{{Complex(prec), Complex(prec), Complex(prec), Complex(prec)}, 0, 0};
  for_each_term(a1, a2, Z, R, prec, pi, skip_cutoff(prec), s, [&](long n1, long n2, const Complex& t) {
    s.sum[0] += t;
    if (all_signs) {
      const bool odd1 = (n1 & 1) != 0, odd2 = (n2 & 1) != 0;
      if (odd1) s.sum[1] -= t; else s.sum[1] += t;
      if (odd2) s.sum[2] -= t; else s.sum[2] += t;
      if (odd1 != odd2) s.sum[3] -= t; else s.sum[3] += t;
    }
  });
  return s;
}

SignedSums lattice_sums_single(int a1, int a2, int b1, int b2, const PeriodMatrix& Z, long R, mpfr_prec_t prec,
                               const Real& pi) {
  SignedSums s{{Complex(prec), Complex(prec), Complex(prec), Complex(prec)}, 0, 0};
  for_each_term(a1, a2, Z, R, prec, pi, skip_cutoff(prec), s, [&](long n1, long n2, const Complex& t) {
    if ((b1 && (n1 & 1)) != (b2 && (n2 & 1))) s.sum[0] -= t; else s.sum[0] += t;
  });
  return s;
}

// Recurrence rounding on the visited terms plus the skipped terms, each of
// modulus below 2^-(prec + 16).
Real rounding_estimate(const SignedSums& s, long R, mpfr_prec_t prec) {
  return pow2(-static_cast<long>(prec) + 4, prec) * (s.terms * (2 * R + 4)) + pow2(-static_cast<long>(prec) - 16, prec) * s.skipped;
}

// Product of |v_i|^k versus product of (|v_i| + e_i)^k.
Real product_error(const std::vector<std::pair<Real, Real>>& factors, long k, mpfr_prec_t prec) {
  Real lo(1L, prec), hi(1L, prec);
  for (const auto& [v, e] : factors) {
    lo *= pow(v, k);
    hi *= pow(v + e, k);
  }
  return hi - lo;
}

}  // namespace

ThetaValue theta_constant(const ThetaCharacteristic& ch, const PeriodMatrix& Z, const PrecisionContext& ctx,
                          std::optional<long> radius) {
  const mpfr_prec_t prec = ctx.working_bits();
  auto [r0, tail] = truncation_radius(Z, ctx);
  const long R = radius.value_or(r0);
  if (radius && *radius < r0) {
    // A smaller box than the a-priori radius: recompute its own tail bound.
    const double lambda = Z.min_eigenvalue_im().to_double() * (1 - 1e-12);
    const double rp = static_cast<double>(R) + 0.5;
    const double log_tail = 2 * std::log(2.0) - M_PI * lambda * rp * rp -
                            std::log(-std::expm1(-2 * M_PI * lambda * rp)) +
                            std::log(1 + 2 / -std::expm1(-M_PI * lambda));
    tail = exp(Real(log_tail, prec));
  }
  const PeriodMatrix Zp = Z.with_precision(prec);
  auto s = lattice_sums_single(ch.a(0), ch.a(1), ch.b(0), ch.b(1), Zp, R, prec, ctx.pi());
  Complex v = times_i_power(s.sum[0], ch.a(0) * ch.b(0) + ch.a(1) * ch.b(1));
  return {v, tail + rounding_estimate(s, R, prec)};
}

std::array<ThetaValue, 10> even_theta_constants(const PeriodMatrix& Z, const PrecisionContext& ctx,
                                                std::optional<long> radius) {
  const mpfr_prec_t prec = ctx.working_bits();
  auto [r0, tail] = truncation_radius(Z, ctx);
  const long R = std::max(radius.value_or(r0), r0);
  const PeriodMatrix Zp = Z.with_precision(prec);
  std::array<SignedSums, 4> by_a;
  for (int a = 0; a < 4; ++a) by_a[static_cast<size_t>(a)] = lattice_sums(a & 1, a >> 1, Zp, R, prec, ctx.pi(), true);
  std::array<ThetaValue, 10> out;
  const auto& chars = even_characteristics();
  for (size_t k = 0; k < 10; ++k) {
    const auto& ch = chars[k];
    const auto& s = by_a[static_cast<size_t>(ch.a(0) + 2 * ch.a(1))];
    Complex v = times_i_power(s.sum[static_cast<size_t>(ch.b(0) + 2 * ch.b(1))], ch.a(0) * ch.b(0) + ch.a(1) * ch.b(1));
    out[k] = {v, tail + rounding_estimate(s, R, prec)};
  }
  return out;
}

ThetaValue chi10(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  auto th = even_theta_constants(Z, ctx);
  Complex p(Real(1L, prec), Real(0L, prec));
  std::vector<std::pair<Real, Real>> f;
  for (const auto& t : th) {
    p *= t.value * t.value;
    f.emplace_back(abs(t.value), t.error);
  }
  return {p, product_error(f, 2, prec)};
}

ThetaValue theta_big(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  const std::array<ThetaCharacteristic, 5> m{ThetaCharacteristic(1, 0, 0, 0), ThetaCharacteristic(1, 0, 1, 0),
                                             ThetaCharacteristic(0, 1, 1, 0), ThetaCharacteristic(0, 1, 1, 1),
                                             ThetaCharacteristic(0, 0, 1, 1)};
  auto th = even_theta_constants(Z, ctx);
  const auto& chars = even_characteristics();
  Complex p(Real(1L, prec), Real(0L, prec));
  std::vector<std::pair<Real, Real>> f;
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 3) continue;
    const int sym = mask ^ 0b10101;  // T symmetric difference {1, 3, 5}
    ThetaCharacteristic c;
    for (int i = 0; i < 5; ++i)
      if (sym & (1 << i)) c = c + m[static_cast<size_t>(i)];
    size_t k = 0;
    while (k < 10 && !(chars[k] == c)) ++k;
    if (k == 10) throw ConsistencyError("odd characteristic " + c.to_string() + " in the Theta product");
    p *= pow(th[k].value, 8);
    f.emplace_back(abs(th[k].value), th[k].error);
  }
  return {p, product_error(f, 8, prec)};
}

Real chi10_invariant(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  auto c = chi10(Z, ctx);
  return abs(c.value) * pow(Z.det_im().with_precision(ctx.working_bits()), 5);
}

Real bare_archimedean_term(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  auto c = chi10(Z, ctx);
  Real mag = abs(c.value);
  if (!(mag > c.error * 2L))
    throw PrecisionError("chi10(Z) is indistinguishable from 0: raise precision, or Z lies on the "
                         "product-of-elliptic-curves locus");
  return -log(mag * pow(Z.det_im().with_precision(ctx.working_bits()), 5)) / 10L;
}

Real archimedean_normalization(const PrecisionContext& ctx) {
  return ctx.log2() * 4L / 5L + log(ctx.pi());
}

Real archimedean_term(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  return bare_archimedean_term(Z, ctx) - archimedean_normalization(ctx);
}

}  // namespace cmheight
