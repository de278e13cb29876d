#include "tame/graded.hpp"

#include "tame/symbols.hpp"

namespace tame {

namespace {

FieldElem sign_power(const FieldSpecPtr& k, std::int64_t e) {
  return (e % 2 == 0) ? FieldElem::one(k) : -FieldElem::one(k);
}

/// Ground field of the graded-line coordinates: the base of the coefficient
/// field when the lattice records a nontrivial extension degree.
FieldSpecPtr ground_field(const FieldSpecPtr& coeff, std::int64_t ext_degree) {
  if (ext_degree == 1) return coeff;
  if (!coeff->is_extension() || coeff->degree() != ext_degree)
    throw SpecMismatch("lattice extension degree does not match the series field");
  return coeff->base();
}

FieldElem norm_down(const FieldElem& x, std::int64_t ext_degree) {
  return ext_degree == 1 ? x : norm_to_base(x);
}

FieldElem gauss_det(std::vector<std::vector<FieldElem>> m,
                    const FieldSpecPtr& spec) {
  std::size_t n = m.size();
  FieldElem det = FieldElem::one(spec);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return FieldElem::zero(spec);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    FieldElem inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElem factor = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        m[r][k] = m[r][k] - factor * m[c][k];
    }
  }
  return det;
}

}  // namespace

GradedLine gl_tensor(const GradedLine& a, const GradedLine& b) {
  if (!same_spec(a.coord.spec(), b.coord.spec()))
    throw SpecMismatch("graded lines over different fields");
  return {a.grading + b.grading, a.coord * b.coord};
}

FieldElem gl_braid_sign(const FieldSpecPtr& k, const GradedLine& a,
                        const GradedLine& b) {
  return sign_power(k, a.grading * b.grading);
}

FieldElem det_action(const LaurentSeries1& f, const LatticeSpec& L,
                     std::int64_t depth) {
  std::int64_t a = f.valuation();
  std::int64_t n = depth - L.shift;
  if (n < 0) throw PrecisionExhausted("empty lattice window");
  FieldSpecPtr ground = ground_field(f.base(), L.ext_degree);
  if (n == 0) return FieldElem::one(ground);
  // multiplication by f maps t^(shift+j) to sum_i f_(a+i-j) t^(shift+a+i);
  // entries above the stored precision are not available
  if (f.abs_prec() < a + n)
    throw PrecisionExhausted("series precision too small for the window");
  std::vector<std::vector<FieldElem>> m(
      static_cast<std::size_t>(n),
      std::vector<FieldElem>(static_cast<std::size_t>(n),
                             FieldElem::zero(f.base())));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          f.coeff_at(a + i - j);
  FieldElem det = gauss_det(std::move(m), f.base());
  if (det.is_zero())
    throw NotAUnitAfterReduction("multiplication matrix is singular");
  return norm_down(det, L.ext_degree);
}

GradedLine rel_det(const FieldSpecPtr& ground, const LatticeSpec& L1,
                   const LatticeSpec& L2) {
  if (L1.ext_degree != L2.ext_degree)
    throw SpecMismatch("lattices in different ambient fields");
  return {L1.ext_degree * (L1.shift - L2.shift), FieldElem::one(ground)};
}

CommReport comm1d(const LaurentSeries1& f, const LaurentSeries1& g,
                  const LatticeSpec& L, std::int64_t depth) {
  std::int64_t a = f.valuation();
  std::int64_t b = g.valuation();
  std::int64_t margin = L.shift + std::abs(a) + std::abs(b) + 4;
  if (depth < margin)
    throw DepthTooShallow("depth " + std::to_string(depth) +
                          " below the safe margin " + std::to_string(margin));
  FieldSpecPtr ground = ground_field(f.base(), L.ext_degree);

  LatticeSpec fL{L.shift + a, L.ext_degree};
  LatticeSpec gL{L.shift + b, L.ext_degree};

  // braiding of the two relative determinant lines
  FieldElem braid =
      gl_braid_sign(ground, rel_det(ground, L, fL), rel_det(ground, L, gL));

  // transport scalars: f on the g-shifted window and on the base window,
  // and the reversed pair for g
  FieldElem f_on_g = det_action(f, gL, depth);
  FieldElem f_on_base = det_action(f, L, depth);
  FieldElem g_on_f = det_action(g, fL, depth);
  FieldElem g_on_base = det_action(g, L, depth);

  FieldElem value = braid * (f_on_g * g_on_base) / (f_on_base * g_on_f);
  return {value, depth, L};
}

FieldElem c3_reduce(const LaurentSeries2& f, const LaurentSeries2& g,
                    const LaurentSeries2& h) {
  auto [af, uf] = f.reduce();
  auto [ag, ug] = g.reduce();
  auto [ah, uh] = h.reduce();
  const FieldSpecPtr& coeff = f.base();
  std::int64_t ext = coeff->is_extension() ? coeff->degree() : 1;
  FieldSpecPtr ground = ground_field(coeff, ext);

  const std::int64_t svals[3] = {af, ag, ah};
  const LaurentSeries1 units[3] = {uf, ug, uh};

  FieldElem total = FieldElem::one(ground);
  // expand C3(u_f s^af, u_g s^ag, u_h s^ah) by trimultiplicativity: one
  // atomic term per choice of unit-or-s in each slot
  for (int mask = 0; mask < 8; ++mask) {
    std::int64_t exponent = 1;
    for (int slot = 0; slot < 3; ++slot)
      if (mask & (1 << slot)) exponent *= svals[slot];
    if (exponent == 0) continue;

    // sort the atom to (units..., s...): each transposition inverts the value
    std::int64_t inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if ((mask & (1 << i)) && !(mask & (1 << j))) ++inversions;

    std::vector<int> unit_slots;
    for (int slot = 0; slot < 3; ++slot)
      if (!(mask & (1 << slot))) unit_slots.push_back(slot);

    FieldElem value = FieldElem::one(ground);
    switch (unit_slots.size()) {
      case 3:  // all units: trivial
        break;
      case 2: {  // (u, u', s): the one-dimensional symbol of the residues
        SymbolValue s =
            tame1d(units[unit_slots[0]], units[unit_slots[1]]);
        value = norm_down(s.value, ext);
        break;
      }
      case 1: {  // (u, s, s): Nm (-1)^(nu_2 of the residue)
        std::int64_t v2 = units[unit_slots[0]].valuation();
        value = norm_down(sign_power(coeff, v2), ext);
        break;
      }
      case 0:  // (s, s, s): trivial
        break;
    }
    if (inversions % 2 != 0) value = value.inverse();
    total = total * value.pow(exponent);
  }
  return total;
}

}  // namespace tame
