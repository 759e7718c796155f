#include "cmheight/report.hpp"

#include <cmath>

namespace cmheight {

using nlohmann::ordered_json;

int output_digits(const PrecisionContext& ctx) {
  return std::max(15, static_cast<int>(static_cast<double>(ctx.bits()) * 0.30102999566398120) - 2);
}

namespace {

void append_integer_factors(Integer n, long sign_of_exponent, std::vector<std::pair<Integer, long>>& out) {
  auto tf = trial_factor(n, 1000000);
  for (auto [p, e] : tf.factors) out.emplace_back(p, sign_of_exponent * e);
  Integer rest = tf.cofactor;
  if (rest == 1) return;
  for (unsigned long k = 64; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), k) != 0) {
      out.emplace_back(root, sign_of_exponent * static_cast<long>(k));
      return;
    }
  }
  out.emplace_back(rest, sign_of_exponent);
}

std::string real_string(const Real& x, const PrecisionContext& ctx) { return x.to_fixed(output_digits(ctx)); }

ordered_json matrix_json(const PeriodMatrix& Z, const PrecisionContext& ctx) {
  const int d = output_digits(ctx);
  return ordered_json{{"z11", Z.z11().to_string(d)}, {"z12", Z.z12().to_string(d)}, {"z22", Z.z22().to_string(d)}};
}

void flatten(const ordered_json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_array() ? "-" : it.key() + ":";
    const auto& v = it.value();
    if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
      out += indent + key + "\n";
      flatten(v, indent + "  ", out);
    } else if (v.is_array()) {
      out += indent + key + "\n";
      for (const auto& e : v) out += indent + "  - " + (e.is_string() ? e.get<std::string>() : e.dump()) + "\n";
    } else {
      out += indent + key + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
}

}  // namespace

std::string factor_string(const Rational& x) {
  if (x == 0) return "0";
  std::vector<std::pair<Integer, long>> f;
  append_integer_factors(abs(x.get_num()), 1, f);
  append_integer_factors(x.get_den(), -1, f);
  std::sort(f.begin(), f.end());
  std::string s = x < 0 ? "-" : "";
  if (f.empty()) return s + "1";
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) s += " * ";
    const bool prime = is_prime(f[k].first);
    s += prime ? f[k].first.get_str() : "[" + f[k].first.get_str() + "]";
    if (f[k].second != 1) s += "^" + std::to_string(f[k].second);
  }
  return s;
}

ordered_json to_json(const HeightBreakdown& h, const PrecisionContext& ctx) {
  ordered_json j;
  j["engine"] = h.engine;
  j["finite_part"] = real_string(h.finite_part, ctx);
  if (h.engine == "local") {
    ordered_json local = ordered_json::array();
    for (const auto& c : h.local_contributions)
      local.push_back({{"p", c.p.get_str()},
                       {"iota", c.iota},
                       {"ord_min_disc", c.ord_min_disc},
                       {"log_coefficient", to_string(c.log_coefficient)},
                       {"height_term", real_string(c.height_term, ctx)}});
    j["local_contributions"] = local;
  }
  ordered_json arch = ordered_json::array();
  for (const auto& t : h.arch_terms)
    arch.push_back({{"label", t.label},
                    {"value", real_string(t.value, ctx)},
                    {"error", t.error.to_scientific(3)},
                    {"gamma", t.gamma.to_string()},
                    {"reduced", matrix_json(t.reduced, ctx)}});
  j["arch_terms"] = arch;
  j["normalization_offset"] = real_string(h.normalization_offset, ctx);
  j["degree"] = h.degree;
  j["total"] = real_string(h.total, ctx);
  j["error_bound"] = h.error_bound.to_scientific(3);
  j["discrepancy"] = nullptr;
  j["precision_bits"] = ctx.bits();
  j["warnings"] = h.warnings;
  return j;
}

ordered_json to_json(const Comparison& c, const PrecisionContext& ctx) {
  ordered_json j;
  j["engine"] = "compare";
  j["local"] = to_json(c.local, ctx);
  j["colmez"] = to_json(c.colmez, ctx);
  j["local"].erase("discrepancy");
  j["colmez"].erase("discrepancy");
  j["local"].erase("precision_bits");
  j["colmez"].erase("precision_bits");
  j["finite_part"] = real_string(c.local.finite_part, ctx);
  j["arch_terms"] = j["local"]["arch_terms"];
  j["total"] = real_string(c.local.total, ctx);
  j["discrepancy"] = c.discrepancy.to_scientific(6);
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  j["precision_bits"] = ctx.bits();
  std::vector<std::string> w = c.local.warnings;
  w.insert(w.end(), c.colmez.warnings.begin(), c.colmez.warnings.end());
  j["warnings"] = w;
  j["local"].erase("warnings");
  j["colmez"].erase("warnings");
  return j;
}

ordered_json to_json(const BoundsReport& r) {
  return ordered_json{{"engine", "verify-bounds"},
                      {"samples", r.samples},
                      {"theta_checks", r.theta_checks},
                      {"chi10_checks", r.chi10_checks},
                      {"exp_checks", r.exp_checks},
                      {"failures", r.failures},
                      {"pass", r.failures.empty()}};
}

ordered_json to_json(const IgusaInvariants& inv, const FiniteHeightPart& fin, const PrecisionContext& ctx) {
  ordered_json j;
  j["engine"] = "igusa";
  for (int w = 2; w <= 10; w += 2) j["J" + std::to_string(w)] = to_string(inv.weight(w));
  j["delta_E"] = to_string(inv.J10);
  ordered_json ratios;
  for (int i : {1, 3, 4}) {
    const Rational& num = inv.weight(2 * i);
    const std::string key = "J" + std::to_string(2 * i) + "^5/J10" + (i > 1 ? "^" + std::to_string(i) : "");
    ratios[key] = factor_string(pow(num, 5) / pow(inv.J10, i));
  }
  j["ratios"] = ratios;
  ordered_json local = ordered_json::array();
  for (const auto& c : fin.contributions)
    local.push_back({{"p", c.p.get_str()},
                     {"iota", c.iota},
                     {"ord_min_disc", c.ord_min_disc},
                     {"log_coefficient", to_string(c.log_coefficient)},
                     {"height_term", real_string(c.height_term, ctx)}});
  j["local_contributions"] = local;
  j["finite_part"] = real_string(fin.value, ctx);
  j["precision_bits"] = ctx.bits();
  j["warnings"] = std::vector<std::string>{kGoodReductionWarning};
  return j;
}

std::string to_text(const ordered_json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

}  // namespace cmheight
