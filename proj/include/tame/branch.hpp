#pragma once

#include <optional>

#include "tame/bivar.hpp"
#include "tame/series.hpp"

namespace tame {

/// A formal branch of a plane curve through a center point.  Graph branches
/// store the centered series: for GraphV the branch is
///   u = u0 + t,  v = v0 + phi(t)        (phi = series, val >= 1 or zero)
/// and the transverse coordinate of the expansion is s = v - v0 - phi(u-u0).
/// GraphU swaps the roles of u and v.  ExplicitParam branches carry a
/// parametrization u = u0 + x(t), v = v0 + y(t) together with a polynomial
/// local equation whose divisor realizes the transverse coordinate.
struct BranchDescriptor {
  enum class Kind { GraphV, GraphU, ExplicitParam };

  Kind kind = Kind::GraphV;
  FieldElem center_u, center_v;
  LaurentSeries1 series;  // phi (GraphV) or psi (GraphU), centered
  LaurentSeries1 param_x, param_y;          // ExplicitParam only, centered
  std::optional<BivarPoly> defining_poly;   // exact curve equation when known
  std::optional<BivarPoly> local_equation;  // ExplicitParam: transverse eq.

  const FieldSpecPtr& spec() const { return center_u.spec(); }
  /// Stable identity string used for deduplication and report ordering.
  std::string id() const;
};

/// Formal branch of P through `center`, smooth there: Newton iteration on
/// the graph series to absolute precision t_prec.  Throws NotOnCurve when
/// P(center) != 0 and SingularAtPoint when both partials vanish.
BranchDescriptor hensel_branch(const BivarPoly& P, const FieldElem& u0,
                               const FieldElem& v0, std::int64_t t_prec);

/// Expansion of a rational function in the two-dimensional local field of a
/// branch: t runs along the branch, s is the transverse equation.  Orders
/// along the branch are computed symbolically (exact polynomial division by
/// the defining equation) whenever the branch carries one.
LaurentSeries2 expand_at_branch(const BivariateRational& f,
                                const BranchDescriptor& branch,
                                std::int64_t s_prec, std::int64_t t_prec);

}  // namespace tame
