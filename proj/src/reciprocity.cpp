#include "tame/reciprocity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tame/factor.hpp"
#include "tame/bivar.hpp"

namespace tame {

namespace {

/// Reduction of a polynomial modulo the place polynomial, as an element of
/// the residue field.
FieldElem reduce_mod_place(const Poly& p, const Place& place) {
  if (place.degree() == 1) {
    FieldElem root = -place.pi.coeff(0);
    return p.eval(root);
  }
  Poly r = p.mod(place.pi);
  std::vector<FieldElem> coords = r.coeffs();
  return FieldElem::from_coords(place.residue_spec, std::move(coords));
}

FieldElem norm_entry(const FieldElem& sym, const Place& place) {
  return place.degree() == 1 ? sym : norm_to_base(sym);
}

}  // namespace

std::string Place::id() const {
  if (at_infinity) return "inf";
  return "(" + pi.to_string() + ")";
}

std::string SurfacePoint::id() const {
  std::string prefix = chart == 0 ? "" : (chart == 1 ? "U:" : "V:");
  return prefix + "(" + u0.to_string() + "," + v0.to_string() + ")";
}

std::vector<Place> places_of_support(const std::vector<RatFunc>& args,
                                     const FactorizeOptions& opts) {
  if (args.empty()) return {};
  const FieldSpecPtr& base = args.front().spec();
  std::map<std::string, Place> finite;
  bool infinity = false;
  for (const auto& f : args) {
    if (f.is_zero()) throw ZeroPolynomial("place support of the zero function");
    if (f.order_at_infinity() != 0) infinity = true;
    for (const Poly* part : {&f.num(), &f.den()}) {
      if (part->degree() < 1) continue;
      Factorization fac = factorize(*part, opts);
      for (const auto& pf : fac.factors) {
        std::string key = pf.factor.to_string();
        if (finite.count(key)) continue;
        Place p;
        p.at_infinity = false;
        p.pi = pf.factor;
        if (pf.factor.degree() == 1) {
          p.residue_spec = base;
        } else {
          if (base->is_rationals())
            throw UnsupportedBase(
                "place with a non-rational residue field over Q: " +
                pf.factor.to_string());
          p.residue_spec =
              FieldSpec::extension(base, pf.factor.coeffs(), "y");
        }
        finite.emplace(std::move(key), std::move(p));
      }
    }
  }
  std::vector<Place> out;
  for (auto& [_, p] : finite) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), [](const Place& x, const Place& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.id() < y.id();
  });
  if (infinity) {
    Place p;
    p.at_infinity = true;
    p.residue_spec = base;
    out.push_back(std::move(p));
  }
  return out;
}

SymbolValue local_symbol_at_place(const RatFunc& f, const RatFunc& g,
                                  const Place& p) {
  if (f.is_zero() || g.is_zero())
    throw DivisionByZero("tame symbol of the zero function");
  std::int64_t a, b;
  if (p.at_infinity) {
    a = f.order_at_infinity();
    b = g.order_at_infinity();
  } else {
    a = f.order_at(p.pi);
    b = g.order_at(p.pi);
  }
  RatFunc r = f.pow(b) / g.pow(a);
  FieldElem value = FieldElem::one(p.residue_spec);
  if (p.at_infinity) {
    // r has balanced degrees; its value at infinity is the ratio of leading
    // coefficients
    value = r.num().lc() / r.den().lc();
  } else {
    FieldElem n = reduce_mod_place(r.num(), p);
    FieldElem d = reduce_mod_place(r.den(), p);
    value = n / d;
  }
  if ((a * b) % 2 != 0) value = -value;
  return {value, p.residue_spec};
}

VerificationReport weil_verify(const RatFunc& f, const RatFunc& g,
                               const VerifyOptions& opts) {
  FactorizeOptions fo;
  fo.seed = opts.seed;
  std::vector<Place> places = places_of_support({f, g}, fo);
  VerificationReport rep;
  rep.law = "weil";
  rep.field = f.spec();
  rep.precision_used = opts.precision;
  FieldElem product = FieldElem::one(f.spec());
  for (const auto& p : places) {
    SymbolValue s = local_symbol_at_place(f, g, p);
    FieldElem nm = norm_entry(s.value, p);
    product = product * nm;
    rep.entries.push_back({p.id(), s.value, nm});
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  rep.product = product;
  rep.passed = product.is_one();
  return rep;
}

// ---------------------------------------------------------------------------
// Parshin point law

namespace {

/// P^2 chart change for polynomials: u^i v^j -> u'^(D-i-j) v'^j (chart 1,
/// around [1:0:0]) or u^i v^j -> u'^i v'^(D-i-j) (chart 2, around [0:1:0]).
BivarPoly chart_poly(const BivarPoly& p, int chart) {
  if (chart == 0) return p;
  std::int64_t D = p.total_degree();
  BivarPoly out = BivarPoly::zero(p.spec(), p.uvar(), p.vvar());
  for (std::int64_t j = 0; j <= p.degree_v(); ++j)
    for (std::int64_t i = 0; i <= p.vcoeff(j).degree(); ++i) {
      FieldElem c = p.coeff(i, j);
      if (c.is_zero()) continue;
      if (chart == 1)
        out = out + BivarPoly::monomial(c, D - i - j, j, p.uvar(), p.vvar());
      else
        out = out + BivarPoly::monomial(c, i, D - i - j, p.uvar(), p.vvar());
    }
  return out;
}

/// Chart change for rational functions; the degree mismatch becomes a power
/// of the coordinate hyperplane.
BivariateRational chart_rational(const BivariateRational& f, int chart) {
  if (chart == 0) return f;
  BivarPoly n = chart_poly(f.num(), chart);
  BivarPoly d = chart_poly(f.den(), chart);
  std::int64_t k = f.den().total_degree() - f.num().total_degree();
  BivarPoly hyper = chart == 1
                        ? BivarPoly::monomial(FieldElem::one(f.spec()), 1, 0,
                                              f.num().uvar(), f.num().vvar())
                        : BivarPoly::monomial(FieldElem::one(f.spec()), 0, 1,
                                              f.num().uvar(), f.num().vvar());
  if (k >= 0)
    n = n * hyper.pow(k);
  else
    d = d * hyper.pow(-k);
  return BivariateRational(std::move(n), std::move(d));
}

bool branch_matches_poly(const BranchDescriptor& b, const BivarPoly& f) {
  std::string key = bivar_normalize(f).to_string();
  if (b.defining_poly && bivar_normalize(*b.defining_poly).to_string() == key)
    return true;
  if (b.local_equation && bivar_normalize(*b.local_equation).to_string() == key)
    return true;
  return false;
}

}  // namespace

VerificationReport parshin_point_verify(
    const BivariateRational& f_in, const BivariateRational& g_in,
    const BivariateRational& h_in, const SurfacePoint& x,
    const std::vector<BranchDescriptor>& extra_branches,
    const VerifyOptions& opts) {
  if (f_in.is_zero() || g_in.is_zero() || h_in.is_zero())
    throw ZeroPolynomial("parshin point law needs nonzero functions");

  BivariateRational f = chart_rational(f_in, x.chart);
  BivariateRational g = chart_rational(g_in, x.chart);
  BivariateRational h = chart_rational(h_in, x.chart);

  FactorizeOptions fo;
  fo.seed = opts.seed;

  // distinct irreducible factors through x across all numerators/denominators
  std::map<std::string, BivarPoly> through_x;
  for (const auto* fn : {&f, &g, &h})
    for (const auto* part : {&fn->num(), &fn->den()}) {
      if (part->total_degree() < 1) continue;
      BivarFactorization bf = bivar_factorize(*part, fo);
      for (const auto& fac : bf.factors) {
        if (!fac.factor.eval(x.u0, x.v0).is_zero()) continue;
        through_x.emplace(fac.factor.to_string(), fac.factor);
      }
    }

  for (std::int64_t prec = opts.precision;; prec *= 2) {
    try {
      std::map<std::string, BranchDescriptor> branches;
      for (const auto& [key, fac] : through_x) {
        try {
          BranchDescriptor b = hensel_branch(fac, x.u0, x.v0, prec);
          branches.emplace(b.id(), std::move(b));
        } catch (const SingularAtPoint&) {
          bool covered = false;
          for (const auto& eb : extra_branches)
            if (branch_matches_poly(eb, fac)) covered = true;
          if (!covered)
            throw SingularBranchUnhandled(
                "factor singular at the point and not covered by a supplied "
                "branch: " +
                fac.to_string());
        }
      }
      for (const auto& eb : extra_branches) branches.emplace(eb.id(), eb);

      VerificationReport rep;
      rep.law = "parshin-point";
      rep.field = f.spec();
      rep.precision_used = prec;
      FieldElem product = FieldElem::one(f.spec());
      for (const auto& [id, br] : branches) {
        LaurentSeries2 ef = expand_at_branch(f, br, prec, prec);
        LaurentSeries2 eg = expand_at_branch(g, br, prec, prec);
        LaurentSeries2 eh = expand_at_branch(h, br, prec, prec);
        SymbolValue s = tame2d(ef, eg, eh, prec);
        product = product * s.value;
        rep.entries.push_back({id, s.value, s.value});
      }
      rep.product = product;
      rep.passed = product.is_one();
      return rep;
    } catch (const PrecisionExhausted&) {
      if (prec * 2 > opts.retry_cap) throw;
    }
  }
}

// ---------------------------------------------------------------------------
// Parshin curve law

BivarPoly LineCurve::equation() const {
  const FieldSpecPtr& spec = a.spec();
  // d*(u - a) - b*(v - c)
  BivarPoly eq = BivarPoly::monomial(d, 1, 0) +
                 BivarPoly::monomial(-b, 0, 1) +
                 BivarPoly::constant(b * c - a * d);
  return eq;
}

namespace {

/// Branch of a line through a point of it, as a graph with the line itself
/// as defining polynomial.  Coordinates may live in an extension field.
BranchDescriptor line_branch(const BivarPoly& line, const FieldElem& u0,
                             const FieldElem& v0) {
  const FieldSpecPtr& spec = u0.spec();
  // line = alpha*u + beta*v + gamma
  FieldElem alpha = line.coeff(1, 0);
  FieldElem beta = line.coeff(0, 1);
  BranchDescriptor b;
  b.center_u = u0;
  b.center_v = v0;
  b.defining_poly = line;
  if (!beta.is_zero()) {
    b.kind = BranchDescriptor::Kind::GraphV;
    // v = v0 - (alpha/beta) t
    FieldElem slope = -(alpha / beta);
    b.series = slope.is_zero()
                   ? LaurentSeries1::exact_zero(spec)
                   : LaurentSeries1::monomial(slope, 1);
  } else {
    b.kind = BranchDescriptor::Kind::GraphU;
    b.series = LaurentSeries1::exact_zero(spec);
  }
  return b;
}

RatFunc restrict_to_line(const BivariateRational& f, const LineCurve& C) {
  const FieldSpecPtr& spec = f.spec();
  Poly xT(spec, {C.a, C.b}, "T");
  Poly yT(spec, {C.c, C.d}, "T");
  auto restrict_poly = [&](const BivarPoly& p) {
    Poly acc = Poly::zero(spec, "T");
    for (auto it = p.vcoeffs().rbegin(); it != p.vcoeffs().rend(); ++it) {
      Poly coeff_in_T = it->compose(xT);
      acc = acc * yT + coeff_in_T;
    }
    return acc;
  };
  Poly n = restrict_poly(f.num());
  Poly d = restrict_poly(f.den());
  if (n.is_zero() || d.is_zero())
    throw RestrictionDegenerate(
        "function vanishes identically on the curve beyond its leading power");
  return RatFunc(std::move(n), std::move(d));
}

}  // namespace

VerificationReport parshin_curve_verify(const BivariateRational& f,
                                        const BivariateRational& g,
                                        const BivariateRational& h,
                                        const LineCurve& C,
                                        const VerifyOptions& opts) {
  if (f.is_zero() || g.is_zero() || h.is_zero())
    throw ZeroPolynomial("parshin curve law needs nonzero functions");
  const FieldSpecPtr& base = f.spec();
  if ((C.b.is_zero() && C.d.is_zero()))
    throw RestrictionDegenerate("degenerate line parametrization");

  BivarPoly line = bivar_normalize(C.equation());

  // unit parts with the C-power removed
  const BivariateRational* args[3] = {&f, &g, &h};
  std::vector<BivariateRational> units;
  for (const auto* arg : args) {
    std::int64_t e = arg->order_along(line);
    units.push_back(*arg / BivariateRational::from_poly(line).pow(e));
  }

  // candidate points: zeros/poles on C of the restricted unit parts
  FactorizeOptions fo;
  fo.seed = opts.seed;
  std::vector<RatFunc> restricted;
  for (const auto& u : units) restricted.push_back(restrict_to_line(u, C));
  std::vector<Place> places = places_of_support(restricted, fo);

  bool has_infinity = false;
  for (auto& p : places) has_infinity = has_infinity || p.at_infinity;
  if (!has_infinity) {
    Place p;
    p.at_infinity = true;
    p.residue_spec = base;
    places.push_back(p);
  }

  for (std::int64_t prec = opts.precision;; prec *= 2) {
    try {
      VerificationReport rep;
      rep.law = "parshin-curve";
      rep.field = base;
      rep.precision_used = prec;
      FieldElem product = FieldElem::one(base);

      for (const auto& p : places) {
        FieldElem sym = FieldElem::one(base), nm = FieldElem::one(base);
        if (p.at_infinity) {
          // move to the chart containing the infinite point of C
          int chart = C.b.is_zero() ? 2 : 1;
          BivariateRational fc = chart_rational(f, chart);
          BivariateRational gc = chart_rational(g, chart);
          BivariateRational hc = chart_rational(h, chart);
          BivarPoly line_c = bivar_normalize(chart_poly(line, chart));
          FieldElem u0 = FieldElem::zero(base);
          FieldElem v0 = chart == 1 ? C.d / C.b : FieldElem::zero(base);
          BranchDescriptor br = line_branch(line_c, u0, v0);
          LaurentSeries2 ef = expand_at_branch(fc, br, prec, prec);
          LaurentSeries2 eg = expand_at_branch(gc, br, prec, prec);
          LaurentSeries2 eh = expand_at_branch(hc, br, prec, prec);
          SymbolValue s = tame2d(ef, eg, eh, prec);
          sym = s.value;
          nm = sym;
        } else {
          // residue field of the point and the coordinates of the center
          FieldSpecPtr kx = p.residue_spec;
          FieldElem theta = p.degree() == 1
                                ? -p.pi.coeff(0)
                                : FieldElem::from_coords(
                                      kx, {FieldElem::zero(base),
                                           FieldElem::one(base)});
          FieldElem u0 = embed(C.a, kx) + embed(C.b, kx) * theta;
          FieldElem v0 = embed(C.c, kx) + embed(C.d, kx) * theta;
          BivarPoly line_x = line.embedded(kx);
          BranchDescriptor br = line_branch(line_x, u0, v0);
          BivariateRational fx = f.embedded(kx);
          BivariateRational gx = g.embedded(kx);
          BivariateRational hx = h.embedded(kx);
          LaurentSeries2 ef = expand_at_branch(fx, br, prec, prec);
          LaurentSeries2 eg = expand_at_branch(gx, br, prec, prec);
          LaurentSeries2 eh = expand_at_branch(hx, br, prec, prec);
          SymbolValue s = tame2d(ef, eg, eh, prec);
          sym = s.value;
          nm = norm_entry(sym, p);
        }
        product = product * nm;
        rep.entries.push_back({p.at_infinity ? "inf" : p.id(), sym, nm});
      }
      std::sort(rep.entries.begin(), rep.entries.end(),
                [](const ReportEntry& a, const ReportEntry& b) {
                  return a.id < b.id;
                });
      rep.product = product;
      rep.passed = product.is_one();
      return rep;
    } catch (const PrecisionExhausted&) {
      if (prec * 2 > opts.retry_cap) throw;
    }
  }
}

}  // namespace tame
