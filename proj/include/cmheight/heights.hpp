#pragma once

// Stable Faltings height by local decomposition, comparison with the Colmez
// value, and conversion between normalizations.

#include <string>
#include <vector>

#include "cmheight/colmez.hpp"
#include "cmheight/igusa.hpp"
#include "cmheight/siegel.hpp"

namespace cmheight {

extern const char* const kGoodReductionWarning;
extern const char* const kMaximalOrderWarning;

struct ArchimedeanTerm {
  std::string label;
  /// -(1/10) log(2^8 pi^10 |chi10| det(Im Z)^5) at the reduced matrix.
  Real value;
  Real error;
  SymplecticMatrix gamma;
  PeriodMatrix reduced;
};

struct HeightBreakdown {
  std::string engine;
  Real finite_part;
  std::vector<LocalContribution> local_contributions;
  std::vector<ArchimedeanTerm> arch_terms;
  /// Already folded into each archimedean term, so always 0 here.
  Real normalization_offset;
  Real total;
  Real error_bound;
  int degree = 1;
  std::vector<std::string> warnings;
};

/// (1/degree) [finite part + sum over the matrices of the archimedean term],
/// each matrix reduced to the fundamental domain first.
HeightBreakdown height_local(const WeierstrassEquation& curve, const std::vector<PeriodMatrix>& periods, int degree,
                             const PrecisionContext& ctx, const std::vector<Integer>& extra_primes = {});

HeightBreakdown height_colmez(const DirichletCharacter& chi, const PrecisionContext& ctx);

struct Comparison {
  HeightBreakdown local;
  HeightBreakdown colmez;
  Real discrepancy;
  double tolerance = 1e-9;
  bool pass = false;
};

Comparison compare(const HeightBreakdown& local, const HeightBreakdown& colmez, double tolerance);

enum class Normalization { deligne, colmez, faltings, fplus };

/// Throws DomainError for anything other than deligne, colmez, faltings, fplus.
Normalization parse_normalization(const std::string& tag);

/// h(A) = h_Deligne = (g/2) log 2pi + h_Colmez = (g/2) log pi + h_Faltings
///      = -(g/2) log 2pi + h_F+.
Real convert_normalization(const Real& h, Normalization from, Normalization to, int g, const PrecisionContext& ctx);

}  // namespace cmheight
