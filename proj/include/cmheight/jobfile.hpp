#pragma once

// Flat `key = value` files describing curves, period matrices and CM jobs.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmheight/cmperiod.hpp"
#include "cmheight/colmez.hpp"
#include "cmheight/igusa.hpp"

namespace cmheight {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

/// One `key = value` per line; blank lines and lines starting with '#' are
/// skipped. Throws ParseError("source:line", ...) on malformed lines and
/// repeated keys.
std::vector<KeyValue> parse_key_values(const std::string& text, const std::string& source);

std::string read_file(const std::string& path);

/// Comma-separated rationals, lowest degree first. An empty value is the zero
/// polynomial.
Polynomial parse_polynomial(const std::string& text);

/// "table: m=v, ..." or "gen: g=v, ..." with v in {1, i, -1, -i}.
DirichletCharacter parse_character(long f, const std::string& text);

/// Keys P and optional Q.
WeierstrassEquation curve_from(const std::vector<KeyValue>& kv, const std::string& source);

/// Keys z11, z12, z22 as "re+im*i".
PeriodMatrix matrix_from(const std::vector<KeyValue>& kv, const std::string& source, const PrecisionContext& ctx);

struct Job {
  std::string name;
  Integer delta_F;
  long f_K = 0;
  std::optional<Polynomial> tau_poly;
  std::optional<std::pair<std::string, std::string>> tau_values;
  std::optional<std::string> character;
  std::optional<std::pair<Polynomial, Polynomial>> curve;
  std::optional<long> precision_bits;
  std::optional<double> tolerance;
  int degree = 1;
  std::vector<Integer> primes;
  std::string source;

  Integer delta_K() const { return discriminant_relation(f_K, delta_F); }
  WeierstrassEquation weierstrass() const;
  DirichletCharacter dirichlet_character() const;
  TauPair taus(const PrecisionContext& ctx, bool swapped) const;
};

/// Keys: name, delta_F, f_K, tau_poly or tau_values, character, P, Q,
/// precision, tolerance, degree, primes.
Job parse_job(const std::string& text, const std::string& source);
Job load_job(const std::string& path);

}  // namespace cmheight
