#include "cmheight/siegel.hpp"

#include <limits>

#include "cmheight/errors.hpp"

namespace cmheight {

namespace {

using Mat4 = std::array<std::array<std::int64_t, 4>, 4>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("symplectic matrix entries overflow 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("symplectic matrix entries overflow 64 bits");
  return r;
}

Mat4 multiply(const Mat4& x, const Mat4& y) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(x[i][k], y[k][j]));
      r[i][j] = s;
    }
  return r;
}

Mat4 transpose(const Mat4& x) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
  return r;
}

const Mat4 kJ{{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};

struct C2 {
  Complex a, b, c, d;  // [[a, b], [c, d]]
};

C2 mul(const C2& x, const C2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Complex from_int(std::int64_t v, mpfr_prec_t prec) { return Complex::from_real(Real(static_cast<long>(v), prec)); }

// X Z + Y for integer blocks X, Y.
C2 affine(const Block& X, const Block& Y, const PeriodMatrix& Z) {
  const mpfr_prec_t prec = Z.precision();
  C2 z{Z.z11(), Z.z12(), Z.z12(), Z.z22()};
  C2 x{from_int(X[0][0], prec), from_int(X[0][1], prec), from_int(X[1][0], prec), from_int(X[1][1], prec)};
  C2 r = mul(x, z);
  r.a += from_int(Y[0][0], prec);
  r.b += from_int(Y[0][1], prec);
  r.c += from_int(Y[1][0], prec);
  r.d += from_int(Y[1][1], prec);
  return r;
}

Block block_inverse_transpose(const Block& U) {
  const std::int64_t det = U[0][0] * U[1][1] - U[0][1] * U[1][0];
  if (det != 1 && det != -1) throw DomainError("matrix is not in GL2(Z)");
  // (U^-1)^T = (1/det) [[d, -c], [-b, a]]
  return Block{{{det * U[1][1], -det * U[1][0]}, {-det * U[0][1], det * U[0][0]}}};
}

}  // namespace

bool SymplecticMatrix::is_symplectic(const Mat4& m) {
  try {
    return multiply(multiply(transpose(m), kJ), m) == kJ;
  } catch (const DomainError&) {
    return false;
  }
}

SymplecticMatrix::SymplecticMatrix(const Mat4& m) : m_(m) {
  if (!is_symplectic(m_)) throw DomainError("matrix is not symplectic");
}

SymplecticMatrix SymplecticMatrix::from_blocks(const Block& A, const Block& B, const Block& C, const Block& D) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m[i][j] = A[i][j];
      m[i][j + 2] = B[i][j];
      m[i + 2][j] = C[i][j];
      m[i + 2][j + 2] = D[i][j];
    }
  return SymplecticMatrix(m);
}

SymplecticMatrix SymplecticMatrix::identity() {
  SymplecticMatrix s;
  for (int i = 0; i < 4; ++i) s.m_[i][i] = 1;
  return s;
}

SymplecticMatrix SymplecticMatrix::J() { return SymplecticMatrix(kJ); }

SymplecticMatrix SymplecticMatrix::translation(const Block& S) {
  return from_blocks({{{1, 0}, {0, 1}}}, S, {}, {{{1, 0}, {0, 1}}});
}

SymplecticMatrix SymplecticMatrix::embed(const Block& U) {
  return from_blocks(U, {}, {}, block_inverse_transpose(U));
}

Block SymplecticMatrix::A() const { return {{{m_[0][0], m_[0][1]}, {m_[1][0], m_[1][1]}}}; }
Block SymplecticMatrix::B() const { return {{{m_[0][2], m_[0][3]}, {m_[1][2], m_[1][3]}}}; }
Block SymplecticMatrix::C() const { return {{{m_[2][0], m_[2][1]}, {m_[3][0], m_[3][1]}}}; }
Block SymplecticMatrix::D() const { return {{{m_[2][2], m_[2][3]}, {m_[3][2], m_[3][3]}}}; }

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
  SymplecticMatrix s;
  s.m_ = multiply(m_, other.m_);
  return s;
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // gamma^-1 = -J gamma^T J
  SymplecticMatrix s;
  s.m_ = multiply(multiply(kJ, transpose(m_)), kJ);
  for (auto& row : s.m_)
    for (auto& v : row) v = -v;
  return s;
}

std::string SymplecticMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < 4; ++j) {
      if (j) s += ", ";
      s += std::to_string(m_[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

Real abs_det_cz_d(const SymplecticMatrix& gamma, const PeriodMatrix& Z) {
  C2 m = affine(gamma.C(), gamma.D(), Z);
  return abs(m.a * m.d - m.b * m.c);
}

PeriodMatrix act(const SymplecticMatrix& gamma, const PeriodMatrix& Z) {
  const mpfr_prec_t prec = Z.precision();
  C2 n = affine(gamma.A(), gamma.B(), Z);
  C2 m = affine(gamma.C(), gamma.D(), Z);
  Complex det = m.a * m.d - m.b * m.c;
  if (!(abs(det) > pow2(-static_cast<long>(prec) / 2, prec)))
    throw PrecisionError("C Z + D is numerically singular");
  C2 inv{m.d / det, -m.b / det, -m.c / det, m.a / det};
  C2 r = mul(n, inv);
  Complex off = (r.b + r.c) * Real(0.5, prec);
  return PeriodMatrix(r.a, off, r.d);
}

const std::vector<SymplecticMatrix>& gottschling_set() {
  static const std::vector<SymplecticMatrix> set = [] {
    std::vector<SymplecticMatrix> s;
    const Block swap{{{0, 1}, {1, 0}}};
    const Block skew{{{1, -1}, {0, 1}}};
    const Block skew_inv{{{1, 1}, {0, 1}}};
    for (std::int64_t e : {-1, 0, 1}) {
      auto g = SymplecticMatrix::from_blocks({{{0, 0}, {0, 1}}}, {{{-1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}}},
                                             {{{e, 0}, {0, 1}}});
      s.push_back(g);
      s.push_back(SymplecticMatrix::embed(swap) * g * SymplecticMatrix::embed(swap));
      s.push_back(SymplecticMatrix::embed(skew_inv) * g * SymplecticMatrix::embed(skew));
    }
    const Block I{{{1, 0}, {0, 1}}}, mI{{{-1, 0}, {0, -1}}};
    const std::vector<Block> shifts{{{{0, 0}, {0, 0}}},  {{{1, 0}, {0, 0}}},   {{{-1, 0}, {0, 0}}},
                                    {{{0, 0}, {0, 1}}},  {{{0, 0}, {0, -1}}},  {{{1, 0}, {0, 1}}},
                                    {{{1, 0}, {0, -1}}}, {{{-1, 0}, {0, 1}}},  {{{-1, 0}, {0, -1}}},
                                    {{{0, 1}, {1, 0}}},  {{{0, -1}, {-1, 0}}}};
    for (const auto& S : shifts) s.push_back(SymplecticMatrix::from_blocks({}, mI, I, S));
    return s;
  }();
  return set;
}

bool in_fundamental_domain(const PeriodMatrix& Z, const Real& tol) {
  const Real half = Real(0.5, tol.precision()) + tol;
  for (const Complex* z : {&Z.z11(), &Z.z12(), &Z.z22()})
    if (abs(z->re()) > half) return false;
  const Real& y11 = Z.z11().im();
  const Real& y12 = Z.z12().im();
  const Real& y22 = Z.z22().im();
  if (y12 < -tol) return false;
  if (y12 * 2L > y11 + tol) return false;
  if (y11 > y22 + tol) return false;
  const Real one_minus = Real(1L, tol.precision()) - tol;
  for (const auto& g : gottschling_set())
    if (abs_det_cz_d(g, Z) < one_minus) return false;
  return true;
}

namespace {

// Lagrange-Gauss reduction of the binary form Y = [[y11, y12], [y12, y22]]:
// U with U Y U^T reduced, 0 <= y12 after the sign fix.
Block minkowski_unimodular(const PeriodMatrix& Z) {
  const mpfr_prec_t prec = Z.precision();
  Real a = Z.z11().im(), b = Z.z12().im(), c = Z.z22().im();
  Block U{{{1, 0}, {0, 1}}};
  for (int it = 0; it < 10000; ++it) {
    Integer k = round_to_integer(b / a);
    if (k != 0) {
      if (!k.fits_slong_p()) throw PrecisionError("Minkowski reduction step too large");
      const long kk = k.get_si();
      // second basis vector minus k times the first
      c = c - b * (2L * kk) + a * (kk * kk);
      b = b - a * kk;
      U[1][0] -= kk * U[0][0];
      U[1][1] -= kk * U[0][1];
    }
    if (a > c) {
      std::swap(a, c);
      std::swap(U[0], U[1]);
      continue;
    }
    break;
  }
  if (b < 0L) {
    U[1][0] = -U[1][0];
    U[1][1] = -U[1][1];
  }
  (void)prec;
  return U;
}

}  // namespace

Reduction reduce(const PeriodMatrix& Z0, const PrecisionContext& ctx, int max_iterations) {
  const mpfr_prec_t prec = std::max(Z0.precision(), ctx.working_bits());
  PeriodMatrix Z = Z0.with_precision(prec);
  SymplecticMatrix gamma = SymplecticMatrix::identity();
  const Real tol = ctx.tolerance();
  const Real one_minus = Real(1L, prec) - tol;
  Reduction out{gamma, Z, 0, {}};
  for (int it = 0; it < max_iterations; ++it) {
    auto apply = [&](const SymplecticMatrix& g) {
      Z = act(g, Z);
      gamma = g * gamma;
    };
    Block U = minkowski_unimodular(Z);
    if (U != Block{{{1, 0}, {0, 1}}}) apply(SymplecticMatrix::embed(U));

    Block T{};
    const Complex* entries[2][2] = {{&Z.z11(), &Z.z12()}, {&Z.z12(), &Z.z22()}};
    bool shift = false;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Integer r = round_to_integer(entries[i][j]->re());
        if (!r.fits_slong_p()) throw PrecisionError("real part too large to translate");
        T[i][j] = -r.get_si();
        shift = shift || r != 0;
      }
    if (shift) apply(SymplecticMatrix::translation(T));

    out.det_history.push_back(Z.det_im());
    const SymplecticMatrix* best = nullptr;
    Real best_value = one_minus;
    for (const auto& g : gottschling_set()) {
      Real v = abs_det_cz_d(g, Z);
      if (v < best_value) {
        best_value = v;
        best = &g;
      }
    }
    if (best == nullptr) {
      out.gamma = gamma;
      out.Z = Z;
      out.iterations = it + 1;
      return out;
    }
    apply(*best);
  }
  throw PrecisionError("Siegel reduction did not terminate within " + std::to_string(max_iterations) +
                       " iterations; raise the precision");
}

SymplecticMatrix random_symplectic(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<std::int64_t> small(-2, 2);
  SymplecticMatrix g = SymplecticMatrix::identity();
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0: {
        std::int64_t s = small(rng);
        g = SymplecticMatrix::translation({{{small(rng), s}, {s, small(rng)}}}) * g;
        break;
      }
      case 1:
        g = SymplecticMatrix::embed({{{1, small(rng)}, {0, 1}}}) * g;
        break;
      case 2:
        g = SymplecticMatrix::embed({{{0, 1}, {1, 0}}}) * g;
        break;
      default:
        g = SymplecticMatrix::J() * g;
    }
  }
  return g;
}

}  // namespace cmheight
