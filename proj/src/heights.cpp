#include "cmheight/heights.hpp"

#include "cmheight/errors.hpp"

namespace cmheight {

const char* const kGoodReductionWarning =
    "hypothesis: the jacobian has good reduction at every finite place after base change; not checked";
const char* const kMaximalOrderWarning =
    "conditional: the endomorphism ring is assumed to be the full ring of integers of the CM field";

HeightBreakdown height_local(const WeierstrassEquation& curve, const std::vector<PeriodMatrix>& periods, int degree,
                             const PrecisionContext& ctx, const std::vector<Integer>& extra_primes) {
  if (degree < 1) throw DomainError("degree must be positive");
  if (periods.empty()) throw DomainError("at least one period matrix is required");
  const mpfr_prec_t prec = ctx.working_bits();
  const auto inv = igusa_invariants(curve);
  auto fin = finite_height_part(inv, ctx, extra_primes);

  HeightBreakdown out{"local", fin.value, std::move(fin.contributions), {}, Real(0L, prec), Real(0L, prec),
                      Real(0L, prec), degree, {kGoodReductionWarning}};
  Real sum = out.finite_part;
  const Real offset = archimedean_normalization(ctx);
  for (size_t k = 0; k < periods.size(); ++k) {
    auto red = reduce(periods[k], ctx);
    auto c = chi10(red.Z, ctx);
    Real mag = abs(c.value);
    if (!(mag > c.error * 2L))
      throw PrecisionError("chi10 is indistinguishable from 0 for embedding " + std::to_string(k + 1) +
                           ": raise precision, or Z lies on the product-of-elliptic-curves locus");
    Real bare = -log(mag * pow(red.Z.det_im(), 5)) / 10L;
    Real err = c.error / (mag * 10L);
    ArchimedeanTerm term{"sigma" + std::to_string(k + 1), bare - offset, err, red.gamma, red.Z};
    sum += term.value;
    out.error_bound += err;
    out.arch_terms.push_back(std::move(term));
  }
  out.total = sum / static_cast<long>(degree);
  out.error_bound = out.error_bound / static_cast<long>(degree) + ctx.epsilon();
  return out;
}

HeightBreakdown height_colmez(const DirichletCharacter& chi, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  HeightBreakdown out{"colmez", Real(0L, prec), {}, {}, Real(0L, prec), colmez_height(chi, ctx), ctx.epsilon(), 1,
                      {kMaximalOrderWarning}};
  return out;
}

Comparison compare(const HeightBreakdown& local, const HeightBreakdown& colmez, double tolerance) {
  Real d = abs(local.total - colmez.total);
  const bool pass = d.to_double() < tolerance;
  return Comparison{local, colmez, d, tolerance, pass};
}

Normalization parse_normalization(const std::string& tag) {
  if (tag == "deligne") return Normalization::deligne;
  if (tag == "colmez") return Normalization::colmez;
  if (tag == "faltings") return Normalization::faltings;
  if (tag == "fplus") return Normalization::fplus;
  throw DomainError("unknown height normalization: " + tag);
}

namespace {

// h_Deligne = h_tag + offset(tag).
Real offset(Normalization n, int g, const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.working_bits();
  const Real log_pi = log(ctx.pi());
  switch (n) {
    case Normalization::deligne: return Real(0L, prec);
    case Normalization::colmez: return (log_pi + ctx.log2()) * static_cast<long>(g) / 2L;
    case Normalization::faltings: return log_pi * static_cast<long>(g) / 2L;
    case Normalization::fplus: return -((log_pi + ctx.log2()) * static_cast<long>(g) / 2L);
  }
  throw DomainError("unknown height normalization");
}

}  // namespace

Real convert_normalization(const Real& h, Normalization from, Normalization to, int g, const PrecisionContext& ctx) {
  if (from == to) return h;
  return h + offset(from, g, ctx) - offset(to, g, ctx);
}

}  // namespace cmheight
