// cmheight: stable Faltings heights of CM genus-2 jacobians.

#include <CLI11.hpp>

#include <iostream>

#include "cmheight/errors.hpp"
#include "cmheight/jobfile.hpp"
#include "cmheight/report.hpp"

using namespace cmheight;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kVerificationFailed = 2;

struct Options {
  long precision_bits = 0;  // 0: job file value or 256
  bool json = false;
  bool both_orderings = false;
  std::string primes;
  std::string path;
  std::string matrix;
  std::string characteristic;
  int samples = 200;
  std::uint64_t seed = 1;
  double tolerance = 0;
};

PrecisionContext context_for(const Options& o, const std::optional<long>& from_job = std::nullopt) {
  long bits = o.precision_bits ? o.precision_bits : from_job.value_or(PrecisionContext::kDefaultBits);
  if (bits < PrecisionContext::kMinimumBits) throw DomainError("precision must be at least 64 bits");
  return PrecisionContext(bits);
}

std::vector<Integer> primes_from(const Options& o, const std::vector<Integer>& from_job) {
  std::vector<Integer> ps = from_job;
  if (o.primes.empty()) return ps;
  std::string item;
  std::stringstream in(o.primes);
  while (std::getline(in, item, ',')) {
    Rational r = parse_rational(item);
    if (r.get_den() != 1 || !is_prime(r.get_num())) throw DomainError("--primes: " + item + " is not a prime");
    ps.push_back(r.get_num());
  }
  return ps;
}

void emit(const ordered_json& report, const Options& o) {
  if (o.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << to_text(report);
}

int run_igusa(const Options& o) {
  auto ctx = context_for(o);
  auto kv = parse_key_values(read_file(o.path), o.path);
  auto eq = curve_from(kv, o.path);
  auto inv = igusa_invariants(eq);
  auto fin = finite_height_part(inv, ctx, primes_from(o, {}));
  emit(to_json(inv, fin, ctx), o);
  return kOk;
}

int run_theta(const Options& o) {
  auto ctx = context_for(o);
  auto Z = matrix_from(parse_key_values(read_file(o.matrix), o.matrix), o.matrix, ctx);
  const int d = output_digits(ctx);
  ordered_json j;
  j["engine"] = "theta";
  j["det_im"] = Z.det_im().to_fixed(d);
  if (!o.characteristic.empty()) {
    auto ch = ThetaCharacteristic::parse(o.characteristic);
    if (!ch.is_even()) throw DomainError("odd characteristic " + ch.to_string());
    auto t = theta_constant(ch, Z, ctx);
    j["theta"] = {{"characteristic", ch.to_string()}, {"value", t.value.to_string(d)}, {"error", t.error.to_scientific(3)}};
  } else {
    ordered_json all = ordered_json::array();
    auto th = even_theta_constants(Z, ctx);
    for (size_t k = 0; k < 10; ++k)
      all.push_back({{"characteristic", even_characteristics()[k].to_string()},
                     {"value", th[k].value.to_string(d)},
                     {"error", th[k].error.to_scientific(3)}});
    j["theta"] = all;
  }
  auto c = chi10(Z, ctx);
  j["chi10"] = c.value.to_string(d);
  j["chi10_error"] = c.error.to_scientific(3);
  j["theta_big"] = theta_big(Z, ctx).value.to_string(d);
  try {
    Real bare = bare_archimedean_term(Z, ctx);
    j["bare_term"] = bare.to_fixed(d);
    j["archimedean_term"] = (bare - archimedean_normalization(ctx)).to_fixed(d);
  } catch (const PrecisionError& e) {
    j["bare_term"] = nullptr;
    j["warnings"] = std::vector<std::string>{e.what()};
  }
  j["precision_bits"] = ctx.bits();
  emit(j, o);
  return kOk;
}

int run_reduce(const Options& o) {
  auto ctx = context_for(o);
  auto Z = matrix_from(parse_key_values(read_file(o.matrix), o.matrix), o.matrix, ctx);
  auto r = reduce(Z, ctx);
  const int d = output_digits(ctx);
  ordered_json j;
  j["engine"] = "reduce";
  j["gamma"] = r.gamma.to_string();
  j["identity"] = r.gamma == SymplecticMatrix::identity();
  j["iterations"] = r.iterations;
  j["reduced"] = {{"z11", r.Z.z11().to_string(d)}, {"z12", r.Z.z12().to_string(d)}, {"z22", r.Z.z22().to_string(d)}};
  j["det_im_before"] = Z.det_im().to_fixed(d);
  j["det_im_after"] = r.Z.det_im().to_fixed(d);
  j["in_fundamental_domain"] = in_fundamental_domain(r.Z, ctx.tolerance() * 2L);
  j["precision_bits"] = ctx.bits();
  emit(j, o);
  return kOk;
}

HeightBreakdown local_for(const Job& job, const PrecisionContext& ctx, const Options& o, bool swapped) {
  auto t = job.taus(ctx, swapped);
  auto Z = period_matrix(t.first, t.second, job.delta_F, ctx);
  return height_local(job.weierstrass(), {Z}, job.degree, ctx, primes_from(o, job.primes));
}

// Adds the swapped-ordering archimedean term and flags any disagreement.
void add_other_ordering(ordered_json& j, const HeightBreakdown& h, const Job& job, const PrecisionContext& ctx,
                        const Options& o) {
  auto other = local_for(job, ctx, o, true);
  j["arch_terms_swapped"] = to_json(other, ctx)["arch_terms"];
  j["total_swapped"] = other.total.to_fixed(output_digits(ctx));
  Real gap = abs(other.total - h.total);
  j["ordering_discrepancy"] = gap.to_scientific(6);
  if (gap > pow2(-ctx.bits() / 2, ctx.working_bits()))
    j["warnings"].push_back("the two tau orderings give different archimedean terms");
}

int run_height_local(const Options& o) {
  auto job = load_job(o.path);
  auto ctx = context_for(o, job.precision_bits);
  auto h = local_for(job, ctx, o, false);
  auto j = to_json(h, ctx);
  if (o.both_orderings) add_other_ordering(j, h, job, ctx, o);
  emit(j, o);
  return kOk;
}

int run_height_colmez(const Options& o) {
  auto job = load_job(o.path);
  auto ctx = context_for(o, job.precision_bits);
  auto chi = job.dirichlet_character();
  auto h = height_colmez(chi, ctx);
  auto j = to_json(h, ctx);
  j["character"] = chi.to_string();
  j["weighted_sum"] = char_weighted_sum(chi).to_string();
  j["delta_K"] = job.delta_K().get_str();
  emit(j, o);
  return kOk;
}

int run_compare(const Options& o) {
  auto job = load_job(o.path);
  auto ctx = context_for(o, job.precision_bits);
  auto local = local_for(job, ctx, o, false);
  auto col = height_colmez(job.dirichlet_character(), ctx);
  const double tol = o.tolerance > 0 ? o.tolerance : job.tolerance.value_or(1e-9);
  auto c = compare(local, col, tol);
  auto j = to_json(c, ctx);
  if (o.both_orderings) add_other_ordering(j, local, job, ctx, o);
  emit(j, o);
  return c.pass ? kOk : kVerificationFailed;
}

int run_verify_bounds(const Options& o) {
  auto ctx = context_for(o);
  auto rep = verify_bounds(o.samples, o.seed, ctx);
  auto j = to_json(rep);
  j["seed"] = o.seed;
  j["precision_bits"] = ctx.bits();
  emit(j, o);
  return rep.failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Faltings heights of CM genus-2 jacobians"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision-bits", o.precision_bits, "Working precision in bits (default 256)")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto* igusa = app.add_subcommand("igusa", "Igusa invariants and finite part of a curve file");
  igusa->add_option("curve", o.path, "Curve file with keys P and Q")->required();
  igusa->add_option("--primes", o.primes, "Comma-separated primes beyond the trial-division bound");

  auto* theta = app.add_subcommand("theta", "Theta constants, chi10 and the archimedean term of a matrix");
  theta->add_option("--matrix", o.matrix, "Matrix file with keys z11, z12, z22")->required();
  theta->add_option("--characteristic", o.characteristic, "Single characteristic a1,a2,b1,b2");

  auto* red = app.add_subcommand("reduce", "Reduce a matrix to the fundamental domain");
  red->add_option("--matrix", o.matrix, "Matrix file with keys z11, z12, z22")->required();

  auto* hc = app.add_subcommand("height-colmez", "Height from the character of a job file");
  hc->add_option("job", o.path, "Job file")->required();

  auto* hl = app.add_subcommand("height-local", "Height from Igusa invariants and chi10");
  hl->add_option("job", o.path, "Job file")->required();
  hl->add_flag("--both-orderings", o.both_orderings, "Also evaluate with tau1 and tau2 exchanged");
  hl->add_option("--primes", o.primes, "Comma-separated primes beyond the trial-division bound");

  auto* cmp = app.add_subcommand("compare", "Both engines and their discrepancy");
  cmp->add_option("job", o.path, "Job file")->required();
  cmp->add_flag("--both-orderings", o.both_orderings, "Also evaluate with tau1 and tau2 exchanged");
  cmp->add_option("--primes", o.primes, "Comma-separated primes beyond the trial-division bound");
  cmp->add_option("--tolerance", o.tolerance, "Pass threshold (default: job value or 1e-9)");

  auto* vb = app.add_subcommand("verify-bounds", "Check the theta and chi10 lower bounds on samples");
  vb->add_option("--samples", o.samples, "Number of sampled matrices")->check(CLI::Range(1, 1000000));
  vb->add_option("--seed", o.seed, "Seed of the sampler");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*igusa) return run_igusa(o);
    if (*theta) return run_theta(o);
    if (*red) return run_reduce(o);
    if (*hc) return run_height_colmez(o);
    if (*hl) return run_height_local(o);
    if (*cmp) return run_compare(o);
    if (*vb) return run_verify_bounds(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
