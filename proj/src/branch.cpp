#include "tame/branch.hpp"

#include <sstream>

namespace tame {

namespace {

/// Binomial coefficients as field elements via Pascal's triangle (valid in
/// any characteristic).
std::vector<std::vector<FieldElem>> binomials(const FieldSpecPtr& spec,
                                              std::int64_t n) {
  std::vector<std::vector<FieldElem>> b(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    auto& row = b[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i) + 1, FieldElem::one(spec));
    for (std::int64_t j = 1; j < i; ++j)
      row[static_cast<std::size_t>(j)] =
          b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return b;
}

/// Q(t, w + s) for a centered polynomial Q (first variable is the branch
/// parameter): returns the list of inner series indexed by the s-power.
std::vector<LaurentSeries1> graph_substitution(const BivarPoly& Q,
                                               const LaurentSeries1& w,
                                               std::int64_t t_prec) {
  const auto& spec = Q.spec();
  std::int64_t dv = Q.degree_v();
  auto binom = binomials(spec, std::max<std::int64_t>(dv, 0));
  // powers of w
  std::vector<LaurentSeries1> wpow{LaurentSeries1::constant(FieldElem::one(spec))};
  for (std::int64_t k = 1; k <= dv; ++k) wpow.push_back(wpow.back() * w);

  std::vector<LaurentSeries1> inner;
  for (std::int64_t j = 0; j <= dv; ++j) {
    LaurentSeries1 acc = LaurentSeries1::exact_zero(spec);
    for (std::int64_t d = j; d <= dv; ++d) {
      const Poly& qd = Q.vcoeff(d);
      if (qd.is_zero()) continue;
      LaurentSeries1 term =
          LaurentSeries1::from_poly(qd) * wpow[static_cast<std::size_t>(d - j)];
      acc = acc + term * binom[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
    }
    inner.push_back(acc.truncated(t_prec));
  }
  return inner;
}

LaurentSeries1 eval_bivar_at_series(const BivarPoly& P, const LaurentSeries1& x,
                                    const LaurentSeries1& y) {
  LaurentSeries1 acc = LaurentSeries1::exact_zero(P.spec());
  for (auto it = P.vcoeffs().rbegin(); it != P.vcoeffs().rend(); ++it)
    acc = acc * y + eval_poly_at_series(*it, x);
  return acc;
}

/// Newton iteration for phi with Q(t, phi(t)) = 0 mod t^prec, phi(0) = 0.
/// Requires Q(0,0) = 0 and dQ/dv(0,0) != 0.
Poly newton_graph_series(const BivarPoly& Q, std::int64_t prec,
                         const std::string& tvar) {
  const auto& spec = Q.spec();
  BivarPoly Qv = Q.derivative_v();
  Poly phi = Poly::zero(spec, tvar);
  for (std::int64_t it = 0; it < 2 * prec + 4; ++it) {
    // residual and derivative along the current approximation
    Poly n = Poly::zero(spec, tvar), d = Poly::zero(spec, tvar);
    for (auto rit = Q.vcoeffs().rbegin(); rit != Q.vcoeffs().rend(); ++rit)
      n = poly_truncate(n * phi + *rit, prec);
    for (auto rit = Qv.vcoeffs().rbegin(); rit != Qv.vcoeffs().rend(); ++rit)
      d = poly_truncate(d * phi + *rit, prec);
    if (n.is_zero()) return phi;
    phi = poly_truncate(phi - n * poly_series_inverse(d, prec), prec);
  }
  throw Error("Internal", "newton iteration failed to converge");
}

std::string normalized_poly_id(const BivarPoly& p) {
  return bivar_normalize(p).to_string();
}

}  // namespace

std::string BranchDescriptor::id() const {
  std::ostringstream os;
  os << "(" << center_u.to_string() << "," << center_v.to_string() << ")";
  if (defining_poly) return "C[" + normalized_poly_id(*defining_poly) + "]@" + os.str();
  if (local_equation) return "C[" + normalized_poly_id(*local_equation) + "]@" + os.str();
  os << (kind == Kind::GraphV ? ":v=" : ":u=") << series.to_string();
  return "S" + os.str();
}

BranchDescriptor hensel_branch(const BivarPoly& P, const FieldElem& u0,
                               const FieldElem& v0, std::int64_t t_prec) {
  if (!P.eval(u0, v0).is_zero())
    throw NotOnCurve("point is not on the curve " + P.to_string());
  BivarPoly Q = P.translate(u0, v0);
  const auto& spec = P.spec();
  FieldElem zero = FieldElem::zero(spec);
  FieldElem dv = Q.derivative_v().eval(zero, zero);
  FieldElem du = Q.derivative_u().eval(zero, zero);

  BranchDescriptor b;
  b.center_u = u0;
  b.center_v = v0;
  b.defining_poly = P;
  if (!dv.is_zero()) {
    b.kind = BranchDescriptor::Kind::GraphV;
    Poly phi = newton_graph_series(Q, t_prec, "t");
    // exact when the untruncated residual vanishes identically
    Poly res = Poly::zero(spec, "u");
    Poly phi_u(spec, phi.coeffs(), "u");
    for (auto it = Q.vcoeffs().rbegin(); it != Q.vcoeffs().rend(); ++it)
      res = res * phi_u + *it;
    b.series = LaurentSeries1::make(spec, 0, phi.coeffs(),
                                    res.is_zero() ? kInfPrec : t_prec, "t");
  } else if (!du.is_zero()) {
    b.kind = BranchDescriptor::Kind::GraphU;
    BivarPoly Qs = Q.swap_uv();
    Poly psi = newton_graph_series(Qs, t_prec, "t");
    Poly res = Poly::zero(spec, "u");
    Poly psi_u(spec, psi.coeffs(), "u");
    for (auto it = Qs.vcoeffs().rbegin(); it != Qs.vcoeffs().rend(); ++it)
      res = res * psi_u + *it;
    b.series = LaurentSeries1::make(spec, 0, psi.coeffs(),
                                    res.is_zero() ? kInfPrec : t_prec, "t");
  } else {
    throw SingularAtPoint("both partial derivatives vanish at the center of " +
                          P.to_string());
  }
  return b;
}

namespace {

/// Orientation of the expansion data: for GraphU branches everything is
/// swapped so that the first variable is always the branch parameter.
struct Oriented {
  BivarPoly num, den;
  std::optional<BivarPoly> B;
};

Oriented orient(const BivariateRational& f, const BranchDescriptor& br) {
  BivarPoly n = f.num().translate(br.center_u, br.center_v);
  BivarPoly d = f.den().translate(br.center_u, br.center_v);
  std::optional<BivarPoly> B;
  if (br.defining_poly)
    B = br.defining_poly->translate(br.center_u, br.center_v);
  if (br.kind == BranchDescriptor::Kind::GraphU) {
    n = n.swap_uv();
    d = d.swap_uv();
    if (B) B = B->swap_uv();
  }
  return {std::move(n), std::move(d), std::move(B)};
}

LaurentSeries2 expand_component(const BivarPoly& Q, const LaurentSeries1& w,
                                std::int64_t t_prec) {
  auto inner = graph_substitution(Q, w, t_prec);
  LaurentSeries2 r = LaurentSeries2::make(Q.spec(), 0, std::move(inner), kInfPrec);
  if (!r.known_nonzero()) {
    if (r.inner().empty())
      throw DegenerateSubstitution(
          "function vanishes identically on the branch at this precision");
    throw PrecisionExhausted(
        "uncertified leading coefficient in a branch expansion");
  }
  return r;
}

}  // namespace

LaurentSeries2 expand_at_branch(const BivariateRational& f,
                                const BranchDescriptor& branch,
                                std::int64_t s_prec, std::int64_t t_prec) {
  if (f.is_zero()) throw DegenerateSubstitution("expansion of the zero function");
  if (!same_spec(f.spec(), branch.spec()))
    throw SpecMismatch("function and branch live over different fields");
  const auto& spec = f.spec();

  if (branch.kind == BranchDescriptor::Kind::ExplicitParam) {
    if (!branch.local_equation)
      throw SingularBranchUnhandled(
          "explicit branch without a local equation");
    BivarPoly L = branch.local_equation->translate(branch.center_u, branch.center_v);
    BivarPoly n = f.num().translate(branch.center_u, branch.center_v);
    BivarPoly d = f.den().translate(branch.center_u, branch.center_v);
    std::int64_t en = n.multiplicity(L), ed = d.multiplicity(L);
    for (std::int64_t i = 0; i < en; ++i) n = n.exact_div(L);
    for (std::int64_t i = 0; i < ed; ++i) d = d.exact_div(L);
    LaurentSeries1 Lr = eval_bivar_at_series(L, branch.param_x, branch.param_y);
    if (Lr.known_nonzero())
      throw DegenerateSubstitution(
          "parametrization does not lie on the local equation");
    LaurentSeries1 nr = eval_bivar_at_series(n, branch.param_x, branch.param_y);
    LaurentSeries1 dr = eval_bivar_at_series(d, branch.param_x, branch.param_y);
    if (!nr.known_nonzero() || !dr.known_nonzero())
      throw PrecisionExhausted("branch restriction uncertified at this precision");
    std::int64_t e = en - ed;
    return LaurentSeries2::make(spec, e, {nr.div(dr, t_prec).truncated(t_prec)},
                                e + 1);
  }

  const LaurentSeries1& w = branch.series;
  Oriented o = orient(f, branch);

  if (o.B) {
    std::int64_t en = o.num.multiplicity(*o.B), ed = o.den.multiplicity(*o.B);
    BivarPoly n = o.num, d = o.den;
    for (std::int64_t i = 0; i < en; ++i) n = n.exact_div(*o.B);
    for (std::int64_t i = 0; i < ed; ++i) d = d.exact_div(*o.B);

    // the defining polynomial itself: drop the (symbolically zero) restriction
    auto binner = graph_substitution(*o.B, w, t_prec);
    if (binner.empty() || binner[0].known_nonzero())
      throw DegenerateSubstitution(
          "branch series does not satisfy the defining polynomial");
    std::vector<LaurentSeries1> tail(binner.begin() + 1, binner.end());
    LaurentSeries2 Bexp = LaurentSeries2::make(spec, 1, std::move(tail), kInfPrec);
    if (!Bexp.known_nonzero())
      throw PrecisionExhausted("transverse derivative uncertified");

    LaurentSeries2 np = expand_component(n, w, t_prec);
    LaurentSeries2 dp = expand_component(d, w, t_prec);
    LaurentSeries2 unit = np.div(dp, s_prec, t_prec);
    return Bexp.pow(en - ed, s_prec, t_prec) * unit;
  }

  LaurentSeries2 nq = expand_component(o.num, w, t_prec);
  LaurentSeries2 dq = expand_component(o.den, w, t_prec);
  return nq.div(dq, s_prec, t_prec);
}

}  // namespace tame
