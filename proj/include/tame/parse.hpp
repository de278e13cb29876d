#pragma once

#include <string>

#include "tame/bivar.hpp"
#include "tame/reciprocity.hpp"
#include "tame/series.hpp"

namespace tame {

/// Field spec grammar: `Fp` (prime), `Fp^d:modulus` (modulus monic
/// irreducible in T over F_p), `Q`.
FieldSpecPtr parse_field_spec(const std::string& text);

/// Constant expression; for extension fields the generator is spelled T.
FieldElem parse_field_elem(const FieldSpecPtr& spec, const std::string& text);

/// Rational function of T.
RatFunc parse_rat_func(const FieldSpecPtr& spec, const std::string& text);

/// Rational function of u, v.
BivariateRational parse_bivariate(const FieldSpecPtr& spec,
                                  const std::string& text);

/// Laurent expression in t.
LaurentSeries1 parse_series1(const FieldSpecPtr& spec, const std::string& text,
                             std::int64_t prec = kDefaultPrec);

/// Laurent expression in t and s.
LaurentSeries2 parse_series2(const FieldSpecPtr& spec, const std::string& text,
                             std::int64_t s_prec = kDefaultPrec,
                             std::int64_t t_prec = kDefaultPrec);

/// "u0,v0" with constant-expression coordinates.
SurfacePoint parse_surface_point(const FieldSpecPtr& spec,
                                 const std::string& text);

/// "a+b*T,c+d*T": a rational parametrization of a line.
LineCurve parse_line_curve(const FieldSpecPtr& spec, const std::string& text);

}  // namespace tame
