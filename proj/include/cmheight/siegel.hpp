#pragma once

// Sp4(Z) acting on the Siegel upper half-space of degree 2, and reduction to
// Siegel's fundamental domain.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmheight/theta.hpp"

namespace cmheight {

using Block = std::array<std::array<std::int64_t, 2>, 2>;

/// 4x4 integer matrix [[A, B], [C, D]].
class SymplecticMatrix {
 public:
  /// Throws DomainError unless gamma^T J gamma = J.
  explicit SymplecticMatrix(const std::array<std::array<std::int64_t, 4>, 4>& m);
  static SymplecticMatrix from_blocks(const Block& A, const Block& B, const Block& C, const Block& D);
  static SymplecticMatrix identity();
  /// [[0, I], [-I, 0]].
  static SymplecticMatrix J();
  /// [[I, S], [0, I]] for symmetric S.
  static SymplecticMatrix translation(const Block& S);
  /// [[U, 0], [0, U^-T]] for U in GL2(Z).
  static SymplecticMatrix embed(const Block& U);

  static bool is_symplectic(const std::array<std::array<std::int64_t, 4>, 4>& m);

  Block A() const;
  Block B() const;
  Block C() const;
  Block D() const;
  std::int64_t operator()(int i, int j) const { return m_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  /// this * other, with overflow checks.
  SymplecticMatrix operator*(const SymplecticMatrix& other) const;
  SymplecticMatrix inverse() const;
  bool operator==(const SymplecticMatrix&) const = default;
  std::string to_string() const;

 private:
  SymplecticMatrix() = default;
  std::array<std::array<std::int64_t, 4>, 4> m_{};
};

/// gamma Z = (A Z + B)(C Z + D)^-1. Throws PrecisionError if C Z + D is
/// numerically singular.
PeriodMatrix act(const SymplecticMatrix& gamma, const PeriodMatrix& Z);

/// |det(C Z + D)|.
Real abs_det_cz_d(const SymplecticMatrix& gamma, const PeriodMatrix& Z);

/// Finite determinant test set standing in for all of Sp4(Z) in condition
/// det Im(gamma Z) <= det Im(Z): twenty matrices, see the README.
const std::vector<SymplecticMatrix>& gottschling_set();

/// |Re z_ij| <= 1/2, 0 <= 2 y12 <= y11 <= y22 and |det(C Z + D)| >= 1 on the
/// test set, each with slack tol.
bool in_fundamental_domain(const PeriodMatrix& Z, const Real& tol);

struct Reduction {
  SymplecticMatrix gamma;
  PeriodMatrix Z;
  int iterations = 0;
  /// det Im Z after each pass.
  std::vector<Real> det_history;
};

/// Returns gamma with gamma Z in the fundamental domain (slack ctx.tolerance()).
/// Throws PrecisionError if the iteration cap is exceeded.
Reduction reduce(const PeriodMatrix& Z, const PrecisionContext& ctx, int max_iterations = 1000);

/// Product of `length` random generators (translations by small symmetric
/// matrices, GL2 embeddings, J).
SymplecticMatrix random_symplectic(std::mt19937_64& rng, int length);

}  // namespace cmheight
