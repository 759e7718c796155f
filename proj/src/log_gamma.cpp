#include <cmath>
#include <mutex>

#include "cmheight/errors.hpp"
#include "cmheight/highprec.hpp"

namespace cmheight {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k.
  while (static_cast<int>(bernoulli_cache.size()) <= n) {
    const int m = static_cast<int>(bernoulli_cache.size());
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      sum += binom * bernoulli_cache[static_cast<size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    Rational b = -sum / (m + 1);
    b.canonicalize();
    bernoulli_cache.push_back(b);
  }
  return bernoulli_cache[static_cast<size_t>(n)];
}

Real log_gamma(const Real& x, const PrecisionContext& ctx, std::optional<long> shift) {
  if (!(x > 0L) || x > 1L) throw DomainError("log_gamma expects 0 < x <= 1");
  const mpfr_prec_t prec = ctx.working_bits();
  const Real target = pow2(-static_cast<long>(prec), prec);

  // Terms of the series behave like (2k)!/(2 pi z)^(2k); they keep shrinking
  // until k ~ pi z, so z ~ prec * log(2) / (2 pi) suffices.
  long n = shift.value_or(static_cast<long>(std::ceil(static_cast<double>(prec) * 0.6931471805599453 / (2 * M_PI))) + 2);
  for (;; n += 4) {
    Real z = x + n;
    Real z2 = z * z;
    Real power = z;  // z^(2k-1)
    Real series(0L, prec);
    bool converged = false;
    Real previous_magnitude(0L, prec);
    for (int k = 1; k < 4 * n + 16; ++k) {
      Real term = Real(bernoulli(2 * k), prec) / (power * (2L * k * (2L * k - 1)));
      Real magnitude = abs(term);
      if (k > 1 && magnitude > previous_magnitude) break;
      if (magnitude < target) {
        // The first omitted term bounds the remainder of the alternating tail.
        converged = true;
        break;
      }
      series += term;
      previous_magnitude = magnitude;
      power *= z2;
    }
    if (!converged) continue;

    const Real two_pi = ctx.pi() * 2L;
    Real stirling = (z - Real(0.5, prec)) * log(z) - z + log(two_pi) / 2L + series;
    Real product = x.with_precision(prec);
    for (long j = 1; j < n; ++j) product *= x + j;
    return stirling - log(product);
  }
}

}  // namespace cmheight
