#include "cmheight/jobfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cmheight/errors.hpp"

namespace cmheight {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  if (!out.empty() && out.back().empty()) throw DomainError("trailing comma in list");
  return out;
}

std::string where(const std::string& source, int line) { return source + ":" + std::to_string(line); }

const KeyValue* find(const std::vector<KeyValue>& kv, const std::string& key) {
  for (const auto& e : kv)
    if (e.key == key) return &e;
  return nullptr;
}

template <typename F>
auto at(const KeyValue& e, const std::string& source, F f) -> decltype(f(e.value)) {
  try {
    return f(e.value);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(where(source, e.line), e.key + ": " + ex.what());
  }
}

}  // namespace

std::vector<KeyValue> parse_key_values(const std::string& text, const std::string& source) {
  std::vector<KeyValue> out;
  std::stringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(where(source, n), "expected 'key = value'");
    KeyValue kv{trim(t.substr(0, eq)), trim(t.substr(eq + 1)), n};
    if (kv.key.empty()) throw ParseError(where(source, n), "empty key");
    if (find(out, kv.key)) throw ParseError(where(source, n), "repeated key '" + kv.key + "'");
    out.push_back(std::move(kv));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, "cannot open file");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Polynomial parse_polynomial(const std::string& text) {
  if (trim(text).empty()) return Polynomial();
  std::vector<Rational> c;
  for (const auto& item : split_list(text)) c.push_back(parse_rational(item));
  return Polynomial(std::move(c));
}

DirichletCharacter parse_character(long f, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("character spec needs 'table:' or 'gen:'");
  const std::string kind = trim(text.substr(0, colon));
  std::map<long, int> values;
  for (const auto& item : split_list(text.substr(colon + 1))) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("character entry must read m=v: " + item);
    const std::string m = trim(item.substr(0, eq));
    std::size_t used = 0;
    long residue = 0;
    try {
      residue = std::stol(m, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != m.size()) throw DomainError("character residue is not an integer: " + m);
    if (values.count(residue)) throw DomainError("residue " + m + " listed twice");
    values[residue] = parse_unit(trim(item.substr(eq + 1)));
  }
  if (kind == "table") return DirichletCharacter::from_table(f, values);
  if (kind == "gen") return DirichletCharacter::from_generators(f, values);
  throw DomainError("character spec kind must be 'table' or 'gen', got '" + kind + "'");
}

WeierstrassEquation curve_from(const std::vector<KeyValue>& kv, const std::string& source) {
  const KeyValue* p = find(kv, "P");
  if (!p) throw ParseError(source, "missing key 'P'");
  Polynomial P = at(*p, source, parse_polynomial);
  Polynomial Q;
  if (const KeyValue* q = find(kv, "Q")) Q = at(*q, source, parse_polynomial);
  try {
    return WeierstrassEquation(P, Q);
  } catch (const Error& e) {
    throw ParseError(where(source, p->line), e.what());
  }
}

PeriodMatrix matrix_from(const std::vector<KeyValue>& kv, const std::string& source, const PrecisionContext& ctx) {
  std::vector<Complex> z;
  for (const char* key : {"z11", "z12", "z22"}) {
    const KeyValue* e = find(kv, key);
    if (!e) throw ParseError(source, std::string("missing key '") + key + "'");
    z.push_back(at(*e, source, [&](const std::string& v) { return Complex::parse(v, ctx.working_bits()); }));
  }
  try {
    return PeriodMatrix(z[0], z[1], z[2]);
  } catch (const Error& e) {
    throw ParseError(source, e.what());
  }
}

Job parse_job(const std::string& text, const std::string& source) {
  const auto kv = parse_key_values(text, source);
  static const char* known[] = {"name",      "delta_F", "f_K", "tau_poly", "tau_values", "character", "P",
                                "Q",         "precision", "tolerance", "degree", "primes"};
  for (const auto& e : kv) {
    bool ok = false;
    for (const char* k : known) ok = ok || e.key == k;
    if (!ok) throw ParseError(where(source, e.line), "unknown key '" + e.key + "'");
  }
  Job job;
  job.source = source;
  if (const KeyValue* e = find(kv, "name")) job.name = e->value;
  const KeyValue* d = find(kv, "delta_F");
  if (!d) throw ParseError(source, "missing key 'delta_F'");
  job.delta_F = at(*d, source, [](const std::string& v) {
    Rational r = parse_rational(v);
    if (r.get_den() != 1 || !is_fundamental_discriminant_shape(r.get_num()))
      throw DomainError("delta_F must be a positive discriminant (0 or 1 mod 4)");
    return Integer(r.get_num());
  });
  if (const KeyValue* e = find(kv, "f_K")) {
    job.f_K = at(*e, source, [](const std::string& v) {
      Rational r = parse_rational(v);
      if (r.get_den() != 1 || r < 3 || !r.get_num().fits_slong_p()) throw DomainError("f_K must be an integer >= 3");
      return r.get_num().get_si();
    });
  }
  const KeyValue* tp = find(kv, "tau_poly");
  const KeyValue* tv = find(kv, "tau_values");
  if (tp && tv) throw ParseError(where(source, tv->line), "give tau_poly or tau_values, not both");
  if (tp) job.tau_poly = at(*tp, source, parse_polynomial);
  if (tv) {
    job.tau_values = at(*tv, source, [](const std::string& v) {
      auto items = split_list(v);
      if (items.size() != 2) throw DomainError("tau_values needs exactly two complex numbers");
      return std::make_pair(items[0], items[1]);
    });
  }
  if (const KeyValue* e = find(kv, "character")) {
    if (job.f_K == 0) throw ParseError(where(source, e->line), "character needs f_K");
    at(*e, source, [&](const std::string& v) { return parse_character(job.f_K, v); });
    job.character = e->value;
  }
  if (find(kv, "P")) {
    auto eq = curve_from(kv, source);
    job.curve = std::make_pair(eq.P(), eq.Q());
  } else if (const KeyValue* q = find(kv, "Q")) {
    throw ParseError(where(source, q->line), "Q given without P");
  }
  if (const KeyValue* e = find(kv, "precision")) {
    job.precision_bits = at(*e, source, [](const std::string& v) {
      Rational r = parse_rational(v);
      if (r.get_den() != 1 || r < PrecisionContext::kMinimumBits || r > 1 << 20)
        throw DomainError("precision must be an integer number of bits >= 64");
      return r.get_num().get_si();
    });
  }
  if (const KeyValue* e = find(kv, "tolerance")) {
    job.tolerance = at(*e, source, [](const std::string& v) {
      std::size_t used = 0;
      double t = std::stod(v, &used);
      if (used != v.size() || !(t > 0)) throw DomainError("tolerance must be a positive number");
      return t;
    });
  }
  if (const KeyValue* e = find(kv, "degree")) {
    job.degree = at(*e, source, [](const std::string& v) {
      Rational r = parse_rational(v);
      if (r.get_den() != 1 || r < 1 || r > 1000) throw DomainError("degree must be a positive integer");
      return static_cast<int>(r.get_num().get_si());
    });
  }
  if (const KeyValue* e = find(kv, "primes")) {
    job.primes = at(*e, source, [](const std::string& v) {
      std::vector<Integer> ps;
      for (const auto& item : split_list(v)) {
        Rational r = parse_rational(item);
        if (r.get_den() != 1 || !is_prime(r.get_num())) throw DomainError(item + " is not a prime");
        ps.push_back(r.get_num());
      }
      return ps;
    });
  }
  return job;
}

Job load_job(const std::string& path) { return parse_job(read_file(path), path); }

WeierstrassEquation Job::weierstrass() const {
  if (!curve) throw ParseError(source, "job has no curve (key 'P')");
  return WeierstrassEquation(curve->first, curve->second);
}

DirichletCharacter Job::dirichlet_character() const {
  if (!character) throw ParseError(source, "job has no character");
  return parse_character(f_K, *character);
}

TauPair Job::taus(const PrecisionContext& ctx, bool swapped) const {
  if (tau_poly) return select_tau(*tau_poly, ctx, swapped);
  if (tau_values)
    return select_tau(parse_tau_value(tau_values->first, ctx), parse_tau_value(tau_values->second, ctx), swapped);
  throw ParseError(source, "job has neither tau_poly nor tau_values");
}

}  // namespace cmheight
