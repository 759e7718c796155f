#pragma once

// Special functions and root finding at arbitrary precision.

#include <optional>
#include <vector>

#include "cmheight/bigfloat.hpp"
#include "cmheight/exact.hpp"

namespace cmheight {

/// log Gamma(x) for 0 < x <= 1, accurate to 2^-(bits) at the context's
/// precision.
///
/// The argument is shifted to z = x + N until the Stirling series
///   (z - 1/2) log z - z + log(2 pi)/2 + sum_k B_2k / (2k (2k-1) z^(2k-1))
/// reaches the working precision before its terms start to grow; the first
/// omitted term bounds the remainder. The shift is then undone by subtracting
/// log prod_{j<N} (x + j). `shift` forces a particular N (it is raised if the
/// series cannot converge for that N).
Real log_gamma(const Real& x, const PrecisionContext& ctx, std::optional<long> shift = std::nullopt);

/// Bernoulli number B_n as an exact rational.
Rational bernoulli(int n);

/// All complex roots of a squarefree polynomial with rational coefficients.
///
/// Aberth–Ehrlich simultaneous iteration from a perturbed circle, then
/// per-root Newton polishing at the working precision. Each root is certified
/// by a Newton correction |p(z)/p'(z)| below 2^-(bits) * max(1, |z|); roots are
/// ordered by real part, then imaginary part.
/// Throws DomainError for non-squarefree or constant input and PrecisionError
/// if the iteration fails to certify every root.
std::vector<Complex> poly_roots(const Polynomial& p, const PrecisionContext& ctx);

/// Horner evaluation of p and p' at z.
std::pair<Complex, Complex> evaluate_with_derivative(const std::vector<Complex>& coefficients, const Complex& z);

}  // namespace cmheight
