#include "cmheight/exact.hpp"

#include <algorithm>
#include <sstream>

#include "cmheight/errors.hpp"

namespace cmheight {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("not a rational number: '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  Rational q;
  q.get_num() = Integer(num);
  q.get_den() = Integer(den);
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_prime(const Integer& p) { return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

long valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("valuation at non-prime " + p.get_str());
  auto count = [&p](Integer n) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    return e;
  };
  return count(x.get_num()) - count(x.get_den());
}

Rational pow(const Rational& x, long e) {
  Rational result;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(result.get_num().get_mpz_t(), x.get_num().get_mpz_t(), k);
  mpz_pow_ui(result.get_den().get_mpz_t(), x.get_den().get_mpz_t(), k);
  if (e < 0) {
    if (x == 0) throw DomainError("negative power of zero");
    result = 1 / result;
  }
  result.canonicalize();
  return result;
}

TrialFactorization trial_factor(Integer n, unsigned long bound) {
  TrialFactorization out;
  if (n < 0) n = -n;
  if (n == 0) throw DomainError("cannot factor zero");
  bool exhausted = false;
  for (unsigned long d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) {
      exhausted = true;
      break;
    }
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.factors.emplace_back(Integer(d), e);
  }
  if (n > 1) {
    if (exhausted || is_prime(n)) {
      out.factors.emplace_back(n, 1);
    } else {
      out.cofactor = n;
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
  formal_degree_ = degree();
}

Polynomial::Polynomial(std::vector<Rational> coefficients, int formal_degree)
    : coeffs_(std::move(coefficients)), formal_degree_(formal_degree) {
  trim();
  if (formal_degree_ < degree()) throw DomainError("formal degree below actual degree");
}

Polynomial Polynomial::from_integers(const std::vector<long>& coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::with_formal_degree(int n) const { return Polynomial(coeffs_, n); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (auto& c : coeffs_) c.canonicalize();
}

Rational Polynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[static_cast<size_t>(i)] * i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& c) const {
  // Horner in the ring Q[x]: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  Polynomial linear(std::vector<Rational>{c, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * linear + Polynomial(std::vector<Rational>{*it});
  acc.formal_degree_ = std::max(formal_degree_, acc.degree());
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  Polynomial r(std::move(c));
  r.formal_degree_ = std::max({a.formal_degree_, b.formal_degree_, r.degree()});
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  Polynomial r(std::move(c));
  r.formal_degree_ = std::max(r.degree(), a.formal_degree_ + b.formal_degree_);
  return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  Polynomial r(std::move(c));
  r.formal_degree_ = std::max(r.degree(), p.formal_degree_);
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  std::vector<Rational> quo(static_cast<size_t>(std::max(0, a.degree() - db + 1)));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<size_t>(i)] / b.leading();
    quo[static_cast<size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return Rational(Rational(1) / a.leading()) * a;
}

bool Polynomial::is_squarefree() const {
  if (is_zero()) return false;
  return gcd(*this, derivative()).degree() == 0;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << (mag != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Resultants and discriminants

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) return pow(a.leading(), n);
  if (n == 0) return pow(b.leading(), m);
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = a[m - i];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = b[n - i];
  return determinant(std::move(s));
}

namespace {

// Discriminant of a polynomial of exact degree d >= 1.
Rational disc_exact(const Polynomial& p) {
  const int d = p.degree();
  if (d == 1) return 1;
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace

Rational disc_n(const Polynomial& p, int n) {
  if (n != 5 && n != 6) throw DomainError("disc_n supports n in {5, 6}");
  if (p.degree() > n) throw DomainError("polynomial degree exceeds the binary form degree");
  if (p.is_zero()) throw DomainError("discriminant of the zero form");
  if (p.degree() == n) return disc_exact(p);
  if (p.degree() == n - 1) return p.leading() * p.leading() * disc_exact(p);
  return 0;
}

// ---------------------------------------------------------------------------
// Real quadratic fields

bool is_fundamental_discriminant_shape(const Integer& delta) {
  if (delta <= 0) return false;
  Integer r = delta % 4;
  return r == 0 || r == 1;
}

QuadElement::QuadElement(Integer u, Integer v, Integer w, Integer delta)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), delta_(std::move(delta)) {
  if (w_ == 0) throw DomainError("QuadElement with zero denominator");
  if (!is_fundamental_discriminant_shape(delta_))
    throw DomainError("discriminant must be positive and 0 or 1 mod 4");
  normalize();
}

void QuadElement::normalize() {
  if (w_ < 0) {
    u_ = -u_;
    v_ = -v_;
    w_ = -w_;
  }
  Integer g = ::gcd(::gcd(u_, v_), w_);
  if (g > 1) {
    u_ /= g;
    v_ /= g;
    w_ /= g;
  }
  if (u_ == 0 && v_ == 0) w_ = 1;
}

QuadElement QuadElement::rational(const Rational& q, const Integer& delta) {
  return QuadElement(q.get_num(), 0, q.get_den(), delta);
}

QuadElement QuadElement::theta(const Integer& delta) { return QuadElement(delta, 1, 2, delta); }

std::array<Rational, 2> QuadElement::coordinates() const {
  // sqrt(delta) = 2 theta - delta.
  Rational c0(Integer(u_ - v_ * delta_), w_);
  Rational c1(Integer(2 * v_), w_);
  c0.canonicalize();
  c1.canonicalize();
  return {c0, c1};
}

std::pair<Rational, Rational> QuadElement::rational_and_surd_parts() const {
  Rational a(u_, w_), b(v_, w_);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

Rational QuadElement::norm() const {
  Rational n(Integer(u_ * u_ - v_ * v_ * delta_), Integer(w_ * w_));
  n.canonicalize();
  return n;
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  if (a.delta_ != b.delta_) throw DomainError("QuadElement fields differ");
  return QuadElement(a.u_ * b.u_ + a.v_ * b.v_ * a.delta_, a.u_ * b.v_ + a.v_ * b.u_, a.w_ * b.w_, a.delta_);
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  if (a.delta_ != b.delta_) throw DomainError("QuadElement fields differ");
  return QuadElement(a.u_ * b.w_ + b.u_ * a.w_, a.v_ * b.w_ + b.v_ * a.w_, a.w_ * b.w_, a.delta_);
}

std::vector<std::array<Integer, 2>> hermite_normal_form(std::vector<std::array<Integer, 2>> rows) {
  std::vector<std::array<Integer, 2>> out;
  // Column 0: fold every row into the first by extended gcd steps.
  auto eliminate = [&rows](size_t col, size_t start) -> bool {
    size_t pivot = rows.size();
    for (size_t r = start; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) return false;
    std::swap(rows[start], rows[pivot]);
    for (size_t r = start + 1; r < rows.size(); ++r) {
      while (rows[r][col] != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[start][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (size_t c = 0; c < 2; ++c) rows[start][c] -= q * rows[r][c];
        std::swap(rows[start], rows[r]);
      }
    }
    if (rows[start][col] < 0)
      for (auto& x : rows[start]) x = -x;
    return true;
  };
  size_t next = 0;
  for (size_t col = 0; col < 2 && next < rows.size(); ++col) {
    if (eliminate(col, next)) ++next;
  }
  rows.resize(next);
  // Reduce the entry above the second pivot into [0, pivot).
  if (rows.size() == 2 && rows[1][0] == 0 && rows[1][1] != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), rows[0][1].get_mpz_t(), rows[1][1].get_mpz_t());
    rows[0][1] -= q * rows[1][1];
  }
  return rows;
}

Rational module_norm(const QuadModule& m) {
  if (m.generators.size() < 2) throw DomainError("module needs at least two generators");
  Integer common = 1;
  std::vector<std::array<Rational, 2>> coords;
  for (const auto& g : m.generators) {
    if (g.delta() != m.delta) throw DomainError("generator lies in a different field");
    coords.push_back(g.coordinates());
    for (const auto& c : coords.back()) common = lcm(common, c.get_den());
  }
  std::vector<std::array<Integer, 2>> rows;
  for (const auto& c : coords) {
    Rational a = c[0] * common, b = c[1] * common;
    rows.push_back({a.get_num(), b.get_num()});
  }
  auto hnf = hermite_normal_form(std::move(rows));
  if (hnf.size() < 2) throw DomainError("generators span a module of rank < 2");
  Integer det = hnf[0][0] * hnf[1][1] - hnf[0][1] * hnf[1][0];
  Rational result(Integer(abs(det)), Integer(common * common));
  result.canonicalize();
  return result;
}

}  // namespace cmheight
