#pragma once

#include <vector>

#include "tame/series.hpp"

namespace tame {

/// Value of a tame symbol: a nonzero element of the residue field.
struct SymbolValue {
  FieldElem value;
  FieldSpecPtr residue_spec;
};

/// One-dimensional tame symbol
///   {f,g} = (-1)^(v(f)v(g)) f^v(g) / g^v(f)  mod t,
/// bimultiplicative and antisymmetric.
SymbolValue tame1d(const LaurentSeries1& f, const LaurentSeries1& g);

/// The integer pairing on a two-dimensional local field:
///   nu_K(f,g) = nu_2 of the residue of f^(nu_1(g)) / g^(nu_1(f)).
std::int64_t nu_K(const LaurentSeries2& f, const LaurentSeries2& g,
                  std::int64_t t_hint = kDefaultPrec);

/// Two-dimensional tame symbol: sign by the quadratic/cubic exponent sum,
/// unit part by exact series arithmetic followed by the double reduction
/// (mod s, then mod t).  The reductions are asserted to be units; a failure
/// raises NotAUnitAfterReduction.
SymbolValue tame2d(const LaurentSeries2& f, const LaurentSeries2& g,
                   const LaurentSeries2& h, std::int64_t t_hint = kDefaultPrec);

/// Product of per-branch two-dimensional symbols.
SymbolValue tame2d_branch_sum(const std::vector<LaurentSeries2>& f,
                              const std::vector<LaurentSeries2>& g,
                              const std::vector<LaurentSeries2>& h,
                              std::int64_t t_hint = kDefaultPrec);

}  // namespace tame
