#pragma once

#include "tame/series.hpp"

namespace tame {

/// Object of the Picard groupoid of graded lines, in coordinates: an integer
/// grading and a nonzero scalar relative to the fixed canonical basis.
struct GradedLine {
  std::int64_t grading = 0;
  FieldElem coord;
};

/// The lattice t^shift * k'[[t]] inside k'((t)); ext_degree = [k':k].
struct LatticeSpec {
  std::int64_t shift = 0;
  std::int64_t ext_degree = 1;
};

struct CommReport {
  FieldElem value;
  std::int64_t depth_used = 0;
  LatticeSpec lattice_used;
};

/// (l1, n1) tensor (l2, n2) = (l1 l2, n1 + n2).
GradedLine gl_tensor(const GradedLine& a, const GradedLine& b);

/// Koszul braiding sign (-1)^(n1 n2).
FieldElem gl_braid_sign(const FieldSpecPtr& k, const GradedLine& a,
                        const GradedLine& b);

/// Determinant over the ground field of multiplication by f from
/// t^m O / t^depth O to the shifted window, in the canonical monomial bases.
/// Computed as an honest matrix determinant over k' followed by the norm.
FieldElem det_action(const LaurentSeries1& f, const LatticeSpec& L,
                     std::int64_t depth);

/// Relative determinant line of a lattice pair: canonical coordinate 1,
/// grading ext_degree * (m1 - m2).
GradedLine rel_det(const FieldSpecPtr& ground, const LatticeSpec& L1,
                   const LatticeSpec& L2);

/// Commutator of the graded determinant central extension for two commuting
/// multiplication operators: one braiding sign and four det_action scalars.
/// Contract: comm1d(f,g) * Nm(tame1d(f,g)) = 1.
CommReport comm1d(const LaurentSeries1& f, const LaurentSeries1& g,
                  const LatticeSpec& L, std::int64_t depth);

/// C3 pairing of the two-dimensional determinantal extension, computed by
/// the case reduction: factor off powers of s, expand by trimultiplicativity
/// with inversion per transposition, and evaluate the atomic cases.
/// Contract: c3_reduce(f,g,h) = norm of tame2d(f,g,h) down to the ground
/// field.
FieldElem c3_reduce(const LaurentSeries2& f, const LaurentSeries2& g,
                    const LaurentSeries2& h);

}  // namespace tame
