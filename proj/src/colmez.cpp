#include "cmheight/colmez.hpp"

#include <numeric>

#include "cmheight/errors.hpp"
#include "cmheight/highprec.hpp"

namespace cmheight {

std::string GaussianInteger::to_string() const {
  std::string s = re.get_str();
  if (im >= 0) s += "+";
  return s + im.get_str() + "*i";
}

int parse_unit(const std::string& text) {
  if (text == "1") return 0;
  if (text == "i") return 1;
  if (text == "-1") return 2;
  if (text == "-i") return 3;
  throw DomainError("character value must be one of 1, i, -1, -i: " + text);
}

std::string unit_to_string(int exponent) {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[exponent & 3];
}

DirichletCharacter::DirichletCharacter(long f, std::vector<int> exps) : f_(f), exps_(std::move(exps)) {}

DirichletCharacter DirichletCharacter::from_table(long f, const std::map<long, int>& exponents) {
  if (f < 3) throw DomainError("character modulus must be at least 3");
  std::vector<int> e(static_cast<size_t>(f), -1);
  for (auto [m, k] : exponents) {
    const long r = ((m % f) + f) % f;
    if (std::gcd(r, f) != 1) throw DomainError("character value given on non-unit residue " + std::to_string(m));
    if (e[static_cast<size_t>(r)] >= 0 && e[static_cast<size_t>(r)] != (k & 3))
      throw DomainError("conflicting values for residue " + std::to_string(r));
    e[static_cast<size_t>(r)] = k & 3;
  }
  for (long m = 1; m < f; ++m)
    if (std::gcd(m, f) == 1 && e[static_cast<size_t>(m)] < 0)
      throw DomainError("character table misses residue " + std::to_string(m));
  DirichletCharacter chi(f, std::move(e));
  chi.validate();
  return chi;
}

DirichletCharacter DirichletCharacter::from_generators(long f, const std::map<long, int>& exponents) {
  if (f < 3) throw DomainError("character modulus must be at least 3");
  std::vector<int> e(static_cast<size_t>(f), -1);
  e[1] = 0;
  // Breadth-first closure of the generated subgroup; a residue reached twice
  // with different values exposes an inconsistent specification.
  std::vector<long> frontier{1};
  while (!frontier.empty()) {
    std::vector<long> next;
    for (long x : frontier)
      for (auto [g, k] : exponents) {
        const long gr = ((g % f) + f) % f;
        if (std::gcd(gr, f) != 1) throw DomainError("generator " + std::to_string(g) + " is not a unit");
        const long y = static_cast<long>((static_cast<__int128>(x) * gr) % f);
        const int v = (e[static_cast<size_t>(x)] + k) & 3;
        if (e[static_cast<size_t>(y)] < 0) {
          e[static_cast<size_t>(y)] = v;
          next.push_back(y);
        } else if (e[static_cast<size_t>(y)] != v) {
          throw DomainError("generator values are inconsistent with the group relations");
        }
      }
    frontier = std::move(next);
  }
  for (long m = 1; m < f; ++m)
    if (std::gcd(m, f) == 1 && e[static_cast<size_t>(m)] < 0)
      throw DomainError("generators do not generate (Z/" + std::to_string(f) + "Z)^x");
  DirichletCharacter chi(f, std::move(e));
  chi.validate();
  return chi;
}

void DirichletCharacter::validate() const {
  bool order4 = false;
  for (long a = 1; a < f_; ++a) {
    if (exps_[static_cast<size_t>(a)] < 0) continue;
    if (exps_[static_cast<size_t>(a)] % 2 == 1) order4 = true;
    for (long b = a; b < f_; ++b) {
      if (exps_[static_cast<size_t>(b)] < 0) continue;
      const long c = (a * b) % f_;
      if (exps_[static_cast<size_t>(c)] != ((exps_[static_cast<size_t>(a)] + exps_[static_cast<size_t>(b)]) & 3))
        throw DomainError("character is not multiplicative at " + std::to_string(a) + " * " + std::to_string(b));
    }
  }
  if (!order4) throw DomainError("character does not have order 4");
  if (exps_[static_cast<size_t>(f_ - 1)] != 2) throw DomainError("character is even: chi(-1) != -1");
}

int DirichletCharacter::exponent(long m) const { return exps_[static_cast<size_t>(((m % f_) + f_) % f_)]; }

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> e = exps_;
  for (int& k : e)
    if (k >= 0) k = (4 - k) & 3;
  return DirichletCharacter(f_, std::move(e));
}

std::string DirichletCharacter::to_string() const {
  std::string s = "table:";
  bool first = true;
  for (long m = 1; m < f_; ++m) {
    if (exps_[static_cast<size_t>(m)] < 0) continue;
    s += first ? " " : ", ";
    first = false;
    s += std::to_string(m) + "=" + unit_to_string(exps_[static_cast<size_t>(m)]);
  }
  return s;
}

namespace {

void add_unit(GaussianInteger& acc, int k, const Integer& w) {
  switch (k) {
    case 0: acc.re += w; break;
    case 1: acc.im += w; break;
    case 2: acc.re -= w; break;
    case 3: acc.im -= w; break;
    default: break;
  }
}

}  // namespace

GaussianInteger char_weighted_sum(const DirichletCharacter& chi) {
  GaussianInteger s{0, 0};
  for (long m = 1; m < chi.modulus(); ++m) add_unit(s, chi.exponent(m), Integer(m));
  return s;
}

GaussianInteger char_sum(const DirichletCharacter& chi) {
  GaussianInteger s{0, 0};
  for (long m = 1; m < chi.modulus(); ++m) add_unit(s, chi.exponent(m), Integer(1));
  return s;
}

Real colmez_height(const DirichletCharacter& chi, const PrecisionContext& ctx) {
  const GaussianInteger S = char_weighted_sum(chi);
  if (S.re == 0 && S.im == 0) throw DomainError("sum chi(m) m vanishes");
  const mpfr_prec_t prec = ctx.working_bits();
  const long f = chi.modulus();
  Complex L(prec);
  for (long m = 1; m < f; ++m) {
    const int k = chi.exponent(m);
    if (k < 0) continue;
    Rational x(m, f);
    x.canonicalize();
    Real lg = log_gamma(Real(x, prec), ctx);
    L += times_i_power(Complex::from_real(lg), k);
  }
  Complex den(Real(S.re, prec), Real(S.im, prec));
  Complex q = L / den;
  return log(Real(f, prec)) / 2L + q.re() * f;
}

Integer discriminant_relation(const Integer& f, const Integer& delta_F) { return f * f * delta_F; }

}  // namespace cmheight
