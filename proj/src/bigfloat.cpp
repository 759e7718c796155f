#include "cmheight/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "cmheight/errors.hpp"

namespace cmheight {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t precision) : Real(precision) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(double value, mpfr_prec_t precision) : Real(precision) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, mpfr_prec_t precision) : Real(precision) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t precision) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty decimal literal");
  Real r(precision);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw DomainError("not a decimal number: '" + s + "'");
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(mpfr_prec_t precision) const {
  Real r(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_fixed(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64 + static_cast<size_t>(std::max(0L, exponent() / 3)));
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, value_);
  return buf.data();
}

std::string Real::to_scientific(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(0, digits - 1), value_);
  return buf.data();
}

long Real::exponent() const {
  if (mpfr_zero_p(value_)) return mpfr_get_emin();
  return mpfr_get_exp(value_);
}

Real& Real::operator+=(const Real& b) {
  if (b.precision() > precision()) mpfr_prec_round(value_, b.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& b) {
  if (b.precision() > precision()) mpfr_prec_round(value_, b.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& b) {
  if (b.precision() > precision()) mpfr_prec_round(value_, b.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& b) {
  if (b.precision() > precision()) mpfr_prec_round(value_, b.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real mul_exact(const Real& a, double b) {
  Real r(a.precision());
  mpfr_mul_d(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define CMHEIGHT_UNARY(name, fn)                  \
  Real name(const Real& x) {                      \
    Real r(x.precision());                        \
    fn(r.get(), x.get(), MPFR_RNDN);              \
    return r;                                     \
  }

CMHEIGHT_UNARY(abs, mpfr_abs)
CMHEIGHT_UNARY(sqrt, mpfr_sqrt)
CMHEIGHT_UNARY(exp, mpfr_exp)
CMHEIGHT_UNARY(log, mpfr_log)
CMHEIGHT_UNARY(sin, mpfr_sin)
CMHEIGHT_UNARY(cos, mpfr_cos)

#undef CMHEIGHT_UNARY

Real pow(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Integer round_to_integer(const Real& x) {
  if (!x.is_finite()) throw PrecisionError("cannot round a non-finite value");
  Integer z;
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  mpfr_get_z(z.get_mpz_t(), r.get(), MPFR_RNDN);
  return z;
}

Real pow2(long e, mpfr_prec_t precision) {
  Real r(1L, precision);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------

PrecisionContext::PrecisionContext(long bits, long guard) : bits_(bits), guard_(guard) {
  if (bits_ < kMinimumBits) throw DomainError("precision must be at least 64 bits");
  if (guard_ < 0) throw DomainError("guard bits must be non-negative");
  auto c = std::make_shared<Constants>(Constants{Real(working_bits()), Real(working_bits())});
  mpfr_const_pi(c->pi.get(), MPFR_RNDN);
  mpfr_const_log2(c->log2.get(), MPFR_RNDN);
  constants_ = std::move(c);
}

// ---------------------------------------------------------------------------

Complex Complex::parse(std::string_view text, mpfr_prec_t precision) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty complex literal");
  auto imag_suffix = [](const std::string& t) {
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "*i") == 0) return t.substr(0, t.size() - 2);
    return std::string();
  };
  if (s.back() != 'i') return from_real(Real::parse(s, precision));
  // Split at the last sign that is not part of an exponent.
  size_t split = std::string::npos;
  for (size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_part = imag_suffix(split == std::string::npos ? s : s.substr(split));
  if (im_part.empty()) throw DomainError("complex literal must be written as re+im*i: '" + s + "'");
  if (im_part == "+" || im_part == "-") im_part += "1";
  return Complex(Real::parse(re_part, precision), Real::parse(im_part, precision));
}

Complex& Complex::operator+=(const Complex& b) {
  re_ += b.re_;
  im_ += b.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& b) {
  re_ -= b.re_;
  im_ -= b.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& b) {
  *this = *this * b;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re_ + b.re_, a.im_ + b.im_); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re_ - b.re_, a.im_ - b.im_); }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  if (d.is_zero()) throw PrecisionError("complex division by zero");
  return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re_ * b, a.im_ * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re_ / b, a.im_ / b); }
Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_scientific(digits);
  if (im.front() != '-') im = "+" + im;
  return re_.to_scientific(digits) + im + "*i";
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Complex exp(const Complex& z) {
  Real s(z.precision()), c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  Real m = exp(z.re());
  return Complex(m * c, m * s);
}

Complex sqrt(const Complex& z) {
  // Principal branch: Re(result) >= 0.
  Real r = abs(z);
  Real a = sqrt((r + z.re()) / 2);
  Real b = sqrt((r - z.re()) / 2);
  if (z.im().sign() < 0) b = -b;
  return Complex(a, b);
}

Complex pow(const Complex& z, long e) {
  if (e < 0) return Complex(Real(1L, z.precision()), Real(0L, z.precision())) / pow(z, -e);
  Complex result(Real(1L, z.precision()), Real(0L, z.precision()));
  Complex base = z;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Complex times_i_power(const Complex& z, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return z;
    case 1:
      return Complex(-z.im(), z.re());
    case 2:
      return -z;
    default:
      return Complex(z.im(), -z.re());
  }
}

}  // namespace cmheight
