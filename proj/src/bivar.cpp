#include "tame/bivar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace tame {

BivarPoly::BivarPoly(FieldSpecPtr spec, std::vector<Poly> vcoeffs,
                     std::string uvar, std::string vvar)
    : spec_(std::move(spec)),
      c_(std::move(vcoeffs)),
      uvar_(std::move(uvar)),
      vvar_(std::move(vvar)) {
  for (const auto& p : c_)
    if (!same_spec(p.spec(), spec_))
      throw SpecMismatch("bivariate coefficient in the wrong field");
  trim();
}

void BivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivarPoly BivarPoly::zero(const FieldSpecPtr& spec, std::string uvar,
                          std::string vvar) {
  return BivarPoly(spec, {}, std::move(uvar), std::move(vvar));
}

BivarPoly BivarPoly::constant(const FieldElem& c, std::string uvar,
                              std::string vvar) {
  return BivarPoly(c.spec(), {Poly::constant(c, uvar)}, uvar, std::move(vvar));
}

BivarPoly BivarPoly::from_poly_u(const Poly& p, std::string vvar) {
  return BivarPoly(p.spec(), {p}, p.var(), std::move(vvar));
}

BivarPoly BivarPoly::monomial(const FieldElem& c, std::int64_t i,
                              std::int64_t j, std::string uvar,
                              std::string vvar) {
  std::vector<Poly> v(static_cast<std::size_t>(j) + 1,
                      Poly::zero(c.spec(), uvar));
  v.back() = Poly::monomial(c, i, uvar);
  return BivarPoly(c.spec(), std::move(v), uvar, std::move(vvar));
}

Poly BivarPoly::vcoeff(std::int64_t j) const {
  if (j < 0 || j >= static_cast<std::int64_t>(c_.size()))
    return Poly::zero(spec_, uvar_);
  return c_[static_cast<std::size_t>(j)];
}

FieldElem BivarPoly::coeff(std::int64_t i, std::int64_t j) const {
  return vcoeff(j).coeff(i);
}

std::int64_t BivarPoly::degree_u() const {
  std::int64_t d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

std::int64_t BivarPoly::total_degree() const {
  std::int64_t d = -1;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(c_.size()); ++j) {
    const Poly& p = c_[static_cast<std::size_t>(j)];
    if (!p.is_zero()) d = std::max(d, p.degree() + j);
  }
  return d;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("bivar + field mismatch");
  std::vector<Poly> r(std::max(c_.size(), o.c_.size()),
                      Poly::zero(spec_, uvar_));
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (j < c_.size()) r[j] = r[j] + c_[j];
    if (j < o.c_.size()) r[j] = r[j] + o.c_[j];
  }
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::operator-() const {
  std::vector<Poly> r = c_;
  for (auto& p : r) p = -p;
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  return *this + (-o);
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("bivar * field mismatch");
  if (is_zero() || o.is_zero()) return zero(spec_, uvar_, vvar_);
  std::vector<Poly> r(c_.size() + o.c_.size() - 1, Poly::zero(spec_, uvar_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::operator*(const FieldElem& s) const {
  std::vector<Poly> r = c_;
  for (auto& p : r) p = p * s;
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::pow(std::int64_t n) const {
  if (n < 0) throw Error("Internal", "negative bivariate power");
  BivarPoly acc = constant(FieldElem::one(spec_), uvar_, vvar_);
  BivarPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

FieldElem BivarPoly::eval(const FieldElem& u0, const FieldElem& v0) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v0 + it->eval(u0);
  return acc;
}

Poly BivarPoly::eval_u(const FieldElem& u0) const {
  std::vector<FieldElem> r;
  r.reserve(c_.size());
  for (const auto& p : c_) r.push_back(p.eval(u0));
  return Poly(spec_, std::move(r), vvar_);
}

Poly BivarPoly::eval_v(const FieldElem& v0) const {
  Poly acc = Poly::zero(spec_, uvar_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * Poly::constant(v0, uvar_) + *it;
  return acc;
}

BivarPoly BivarPoly::derivative_u() const {
  std::vector<Poly> r = c_;
  for (auto& p : r) p = p.derivative();
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::derivative_v() const {
  if (c_.size() <= 1) return zero(spec_, uvar_, vvar_);
  std::vector<Poly> r(c_.size() - 1, Poly::zero(spec_, uvar_));
  for (std::size_t j = 1; j < c_.size(); ++j)
    r[j - 1] = c_[j] * FieldElem::from_integer(spec_, static_cast<std::int64_t>(j));
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::swap_uv() const {
  std::int64_t du = degree_u();
  std::vector<Poly> r(static_cast<std::size_t>(du) + 1, Poly::zero(spec_, uvar_));
  for (std::int64_t i = 0; i <= du; ++i) {
    std::vector<FieldElem> row;
    for (std::int64_t j = 0; j <= degree_v(); ++j) row.push_back(coeff(i, j));
    r[static_cast<std::size_t>(i)] = Poly(spec_, std::move(row), uvar_);
  }
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

BivarPoly BivarPoly::translate(const FieldElem& u0, const FieldElem& v0) const {
  Poly shift_u(spec_, {u0, FieldElem::one(spec_)}, uvar_);
  BivarPoly acc = zero(spec_, uvar_, vvar_);
  BivarPoly v_plus =
      monomial(FieldElem::one(spec_), 0, 1, uvar_, vvar_) + constant(v0, uvar_, vvar_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * v_plus + from_poly_u(it->compose(shift_u), vvar_);
  return acc;
}

BivarPoly BivarPoly::compose_v(const BivarPoly& g) const {
  BivarPoly acc = zero(spec_, uvar_, vvar_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * g + from_poly_u(*it, vvar_);
  return acc;
}

BivarPoly BivarPoly::truncate_u(std::int64_t n) const {
  std::vector<Poly> r = c_;
  for (auto& p : r) {
    std::vector<FieldElem> cs = p.coeffs();
    if (static_cast<std::int64_t>(cs.size()) > n) cs.resize(static_cast<std::size_t>(n));
    p = Poly(spec_, std::move(cs), uvar_);
  }
  return BivarPoly(spec_, std::move(r), uvar_, vvar_);
}

std::optional<BivarPoly> BivarPoly::try_exact_div(const BivarPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("bivariate division by zero");
  if (is_zero()) return zero(spec_, uvar_, vvar_);
  if (d.degree_v() == 0) {
    // divide every v-coefficient by the univariate divisor
    std::vector<Poly> q;
    q.reserve(c_.size());
    for (const auto& p : c_) {
      auto e = p.try_exact_div(d.c_[0]);
      if (!e) return std::nullopt;
      q.push_back(std::move(*e));
    }
    return BivarPoly(spec_, std::move(q), uvar_, vvar_);
  }
  std::int64_t dd = d.degree_v();
  if (degree_v() < dd) return std::nullopt;
  std::vector<Poly> rem = c_;
  std::vector<Poly> quo(static_cast<std::size_t>(degree_v() - dd) + 1,
                        Poly::zero(spec_, uvar_));
  const Poly& dlc = d.c_.back();
  for (std::int64_t k = degree_v(); k >= dd; --k) {
    Poly& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    auto q = top.try_exact_div(dlc);
    if (!q) return std::nullopt;
    quo[static_cast<std::size_t>(k - dd)] = *q;
    for (std::int64_t j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] =
          rem[static_cast<std::size_t>(k - dd + j)] - *q * d.c_[static_cast<std::size_t>(j)];
  }
  for (std::int64_t j = 0; j < dd; ++j)
    if (!rem[static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
  return BivarPoly(spec_, std::move(quo), uvar_, vvar_);
}

BivarPoly BivarPoly::exact_div(const BivarPoly& d) const {
  auto q = try_exact_div(d);
  if (!q) throw Error("Internal", "bivariate exact_div has remainder");
  return *q;
}

std::int64_t BivarPoly::multiplicity(const BivarPoly& d) const {
  if (is_zero()) throw ZeroPolynomial("multiplicity in the zero polynomial");
  std::int64_t e = 0;
  BivarPoly cur = *this;
  for (;;) {
    auto q = cur.try_exact_div(d);
    if (!q) return e;
    ++e;
    cur = std::move(*q);
  }
}

BivarPoly BivarPoly::embedded(const FieldSpecPtr& target) const {
  std::vector<Poly> r;
  r.reserve(c_.size());
  for (const auto& p : c_) r.push_back(embed_poly(p, target));
  return BivarPoly(target, std::move(r), uvar_, vvar_);
}

bool BivarPoly::operator==(const BivarPoly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("bivar == field mismatch");
  return c_ == o.c_;
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t j = degree_v(); j >= 0; --j) {
    const Poly& p = vcoeff(j);
    if (p.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string ps = p.to_string();
    bool composite = ps.find('+') != std::string::npos && j > 0;
    if (j == 0) {
      os << ps;
    } else {
      if (!(p.degree() == 0 && p.coeff(0).is_one()))
        os << (composite ? "(" + ps + ")" : ps) << "*";
      os << vvar_;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

Poly bivar_content(const BivarPoly& p) {
  Poly g = Poly::zero(p.spec(), p.uvar());
  for (const auto& c : p.vcoeffs()) g = poly_gcd(g, c);
  return g;
}

namespace {

BivarPoly primitive_part(const BivarPoly& p) {
  Poly cont = bivar_content(p);
  if (cont.degree() < 1) return p;
  return p.exact_div(BivarPoly::from_poly_u(cont, p.vvar()));
}

/// Pseudo-remainder of a by b with respect to v: lc_v(b)^k * a mod b.
BivarPoly pseudo_rem(BivarPoly a, const BivarPoly& b) {
  std::int64_t db = b.degree_v();
  const Poly& blc = b.vcoeffs().back();
  while (!a.is_zero() && a.degree_v() >= db) {
    std::int64_t da = a.degree_v();
    const Poly alc = a.vcoeffs().back();
    // a := blc * a - alc * v^(da-db) * b
    BivarPoly shift = BivarPoly::monomial(FieldElem::one(a.spec()), 0, da - db,
                                          a.uvar(), a.vvar());
    a = a * BivarPoly::from_poly_u(blc, a.vvar()) -
        shift * BivarPoly::from_poly_u(alc, b.vvar()) * b;
  }
  return a;
}

/// p-th root of a bivariate polynomial that is a p-th power.
BivarPoly bivar_pth_root(const BivarPoly& f) {
  std::int64_t p = f.spec()->characteristic();
  std::int64_t q = f.spec()->order();
  std::int64_t du = f.degree_u(), dv = f.degree_v();
  std::vector<Poly> out;
  for (std::int64_t j = 0; j * p <= dv; ++j) {
    std::vector<FieldElem> row;
    for (std::int64_t i = 0; i * p <= du; ++i)
      row.push_back(f.coeff(i * p, j * p).pow(q / p));
    out.emplace_back(f.spec(), std::move(row), f.uvar());
  }
  return BivarPoly(f.spec(), std::move(out), f.uvar(), f.vvar());
}

}  // namespace

BivarPoly bivar_gcd(BivarPoly a, BivarPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly ca = bivar_content(a), cb = bivar_content(b);
  Poly cg = poly_gcd(ca, cb);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree_v() < b.degree_v()) std::swap(a, b);
  while (!b.is_zero()) {
    BivarPoly r = pseudo_rem(a, b);
    if (!r.is_zero() && r.degree_v() > 0) r = primitive_part(r);
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero() && b.degree_v() == 0) {
      // nontrivial univariate tail means the v-primitive parts are coprime
      b = BivarPoly::zero(a.spec(), a.uvar(), a.vvar());
      a = BivarPoly::constant(FieldElem::one(a.spec()), a.uvar(), a.vvar());
    }
  }
  BivarPoly g = primitive_part(a) * BivarPoly::from_poly_u(cg, a.vvar());
  return bivar_normalize(g);
}

BivarPoly bivar_normalize(const BivarPoly& p) {
  if (p.is_zero()) return p;
  // leading coefficient under grlex (total degree, then v-degree)
  FieldElem lead = FieldElem::zero(p.spec());
  std::int64_t best_t = -1, best_j = -1;
  for (std::int64_t j = 0; j <= p.degree_v(); ++j) {
    const Poly& c = p.vcoeff(j);
    if (c.is_zero()) continue;
    std::int64_t t = c.degree() + j;
    if (t > best_t || (t == best_t && j > best_j)) {
      best_t = t;
      best_j = j;
      lead = c.lc();
    }
  }
  return p * lead.inverse();
}

namespace {

/// One linear Hensel step set: lifts a monic factorization of f (monic in v
/// over k[[u]]) from precision 1 to precision prec, factor by factor.
struct HenselPair {
  BivarPoly g, h;  // monic in v, coefficients Poly in u (power series)
};

/// f monic in v with power-series coefficients; g0, h0 coprime monic fiber
/// factors at u=0 with f(0) = g0*h0.  Returns the lift mod u^prec.
HenselPair hensel_lift_pair(const BivarPoly& f, const Poly& g0, const Poly& h0,
                            std::int64_t prec) {
  const auto& spec = f.spec();
  auto eg = poly_egcd(g0, h0);
  if (eg.g.degree() != 0)
    throw Error("Internal", "hensel factors not coprime");
  // scale Bezout so a*g0 + b*h0 = 1
  FieldElem s = eg.g.coeff(0).inverse();
  Poly a = eg.u * s, b = eg.v * s;

  // represent univariate-in-v fiber polynomials as BivarPoly in (u, v)
  auto lift1 = [&](const Poly& pv) {
    std::vector<Poly> vc;
    vc.reserve(pv.coeffs().size());
    for (const auto& cc : pv.coeffs()) vc.push_back(Poly::constant(cc, f.uvar()));
    return BivarPoly(spec, std::move(vc), f.uvar(), f.vvar());
  };
  BivarPoly G = lift1(g0), H = lift1(h0);
  BivarPoly A = lift1(a), B = lift1(b);
  for (std::int64_t k = 1; k < prec; ++k) {
    BivarPoly e = (f - G * H).truncate_u(k + 1);
    if (e.is_zero()) continue;
    // corrections dG = B*e mod G, dH = A*e mod H (v-division, monic)
    auto mod_v = [&](const BivarPoly& x, const BivarPoly& m) {
      BivarPoly r = x;
      std::int64_t dm = m.degree_v();
      while (!r.is_zero() && r.degree_v() >= dm) {
        std::int64_t dr = r.degree_v();
        BivarPoly shift = BivarPoly::monomial(FieldElem::one(spec), 0, dr - dm,
                                              r.uvar(), r.vvar());
        r = r - shift * BivarPoly::from_poly_u(r.vcoeffs().back(), r.vvar()) * m;
        r = r.truncate_u(prec + 1);
      }
      return r;
    };
    BivarPoly dG = mod_v((B * e).truncate_u(k + 1), G);
    BivarPoly dH = mod_v((A * e).truncate_u(k + 1), H);
    G = G + dG;
    H = H + dH;
  }
  return {G, H};
}

/// Fiber-to-curve lifting of all irreducible fiber factors, one split at a
/// time: returns the monic lifts mod u^prec.
std::vector<BivarPoly> hensel_lift_all(const BivarPoly& f,
                                       std::vector<Poly> fiber,
                                       std::int64_t prec) {
  std::vector<BivarPoly> out;
  BivarPoly rest = f;
  while (fiber.size() > 1) {
    Poly g0 = fiber.back();
    fiber.pop_back();
    Poly h0 = Poly::constant(FieldElem::one(f.spec()), g0.var());
    for (const auto& p : fiber) h0 = h0 * p;
    auto pair = hensel_lift_pair(rest, g0, h0, prec);
    out.push_back(pair.g);
    rest = pair.h;
  }
  out.push_back(rest);
  return out;
}

BivarPoly squarefree_part(BivarPoly p) {
  for (;;) {
    BivarPoly pu = p.derivative_u(), pv = p.derivative_v();
    if (pu.is_zero() && pv.is_zero()) {
      p = bivar_pth_root(p);
      continue;
    }
    BivarPoly g = bivar_gcd(bivar_gcd(p, pu), pv);
    if (g.total_degree() < 1) return bivar_normalize(p);
    p = p.exact_div(g);
  }
}

/// Factor a primitive squarefree bivariate polynomial with deg_v >= 1.
void factor_primitive_squarefree(const BivarPoly& sp,
                                 const FactorizeOptions& opts,
                                 std::vector<BivarPoly>& out) {
  const auto& spec = sp.spec();
  if (sp.degree_v() == 0 || sp.total_degree() <= 1) {
    out.push_back(bivar_normalize(sp));
    return;
  }

  // find a specialization point u0 with nonvanishing lc and squarefree fiber,
  // possibly after shearing v -> v + c*u
  std::vector<FieldElem> elems = all_field_elements(spec);
  for (const auto& c : elems) {
    BivarPoly cand = sp;
    if (!c.is_zero()) {
      BivarPoly vshift =
          BivarPoly::monomial(FieldElem::one(spec), 0, 1, sp.uvar(), sp.vvar()) +
          BivarPoly::monomial(c, 1, 0, sp.uvar(), sp.vvar());
      cand = sp.compose_v(vshift);
    }
    const Poly lcv = cand.vcoeffs().back();
    for (const auto& u0 : elems) {
      if (lcv.eval(u0).is_zero()) continue;
      Poly fiber = cand.eval_u(u0);
      if (poly_gcd(fiber, fiber.derivative()).degree() > 0) continue;

      // good point: factor the fiber and lift
      BivarPoly work = cand.translate(u0, FieldElem::zero(spec));
      Poly lc_series = work.vcoeffs().back();
      FieldElem lc0 = lc_series.coeff(0);
      // make monic over k[[u]]: divide by the lc power series, truncated
      std::int64_t prec = 2 * (sp.degree_u() + 1) + lc_series.degree() + 2;
      // inverse of lc_series as a truncated power series
      std::vector<FieldElem> inv{lc0.inverse()};
      for (std::int64_t k = 1; k < prec; ++k) {
        FieldElem acc = FieldElem::zero(spec);
        for (std::int64_t i = 1; i <= std::min<std::int64_t>(k, lc_series.degree()); ++i)
          acc = acc + lc_series.coeff(i) * inv[static_cast<std::size_t>(k - i)];
        inv.push_back(-(lc0.inverse()) * acc);
      }
      Poly lc_inv(spec, std::move(inv), sp.uvar());
      std::vector<Poly> monic_coeffs;
      for (const auto& pc : work.vcoeffs()) {
        Poly scaled = pc * lc_inv;
        std::vector<FieldElem> cs = scaled.coeffs();
        if (static_cast<std::int64_t>(cs.size()) > prec)
          cs.resize(static_cast<std::size_t>(prec));
        monic_coeffs.emplace_back(spec, std::move(cs), sp.uvar());
      }
      monic_coeffs.back() = Poly::constant(FieldElem::one(spec), sp.uvar());
      BivarPoly monic(spec, std::move(monic_coeffs), sp.uvar(), sp.vvar());

      Factorization ff = factorize(monic.eval_u(FieldElem::zero(spec)), opts);
      if (ff.factors.size() == 1) {
        out.push_back(bivar_normalize(sp));
        return;
      }
      std::vector<Poly> fiber_factors;
      for (const auto& pf : ff.factors) fiber_factors.push_back(pf.factor);
      std::vector<BivarPoly> lifts = hensel_lift_all(monic, fiber_factors, prec);

      // subset recombination against the untranslated polynomial
      BivarPoly rest = cand;
      std::vector<bool> used(lifts.size(), false);
      Poly lc_rest = lcv;
      for (std::size_t size = 1; size <= lifts.size(); ++size) {
        bool progress = true;
        while (progress) {
          progress = false;
          std::vector<std::size_t> avail;
          for (std::size_t i = 0; i < lifts.size(); ++i)
            if (!used[i]) avail.push_back(i);
          if (avail.size() < size) break;
          std::vector<std::size_t> idx(size);
          Poly shift_to_u0(spec, {u0, FieldElem::one(spec)}, sp.uvar());
          std::function<bool(std::size_t, std::size_t)> choose =
              [&](std::size_t pos, std::size_t from) -> bool {
            if (pos == size) {
              BivarPoly prod =
                  BivarPoly::from_poly_u(lc_rest.compose(shift_to_u0), sp.vvar());
              for (std::size_t i : idx) prod = (prod * lifts[avail[i]]).truncate_u(prec);
              // translate back and take the primitive part
              BivarPoly candidate =
                  prod.translate(-u0, FieldElem::zero(spec));
              candidate = primitive_part(candidate);
              auto quo = rest.try_exact_div(candidate);
              if (quo) {
                for (std::size_t i : idx) used[avail[i]] = true;
                rest = std::move(*quo);
                lc_rest = rest.is_zero() ? lc_rest : rest.vcoeffs().back();
                out.push_back(bivar_normalize(candidate));
                return true;
              }
              return false;
            }
            for (std::size_t f2 = from; f2 < avail.size(); ++f2) {
              idx[pos] = f2;
              if (choose(pos + 1, f2 + 1)) return true;
            }
            return false;
          };
          if (choose(0, 0)) progress = true;
          if (rest.total_degree() <= 0) break;
        }
        if (rest.total_degree() <= 0) break;
      }
      if (rest.total_degree() > 0) out.push_back(bivar_normalize(rest));

      // undo the shear on all reported factors
      if (!c.is_zero()) {
        BivarPoly unshift =
            BivarPoly::monomial(FieldElem::one(spec), 0, 1, sp.uvar(), sp.vvar()) +
            BivarPoly::monomial(-c, 1, 0, sp.uvar(), sp.vvar());
        for (auto& f2 : out) f2 = bivar_normalize(f2.compose_v(unshift));
      }
      return;
    }
  }
  throw UnsupportedBase("no good specialization point for bivariate factorization");
}

}  // namespace

BivarFactorization bivar_factorize(const BivarPoly& p,
                                   const FactorizeOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("bivar_factorize of zero");
  BivarFactorization out{FieldElem::one(p.spec()), {}};
  std::map<std::string, BivarFactor> found;

  auto record_bivar = [&](const BivarPoly& f) {
    BivarPoly n = bivar_normalize(f);
    auto key = n.to_string();
    if (found.count(key)) return;
    found.emplace(key, BivarFactor{n, p.multiplicity(n)});
  };

  // content in k[u], factored with the univariate machinery
  Poly cont = bivar_content(p);
  BivarPoly prim = primitive_part(p);
  if (cont.degree() >= 1) {
    Factorization cf = factorize(cont, opts);
    for (const auto& pf : cf.factors)
      record_bivar(BivarPoly::from_poly_u(pf.factor, p.vvar()));
  }

  if (prim.degree_v() >= 1) {
    BivarPoly sf = squarefree_part(prim);
    // strip a pure-v monomial factor before the general machinery
    if (sf.vcoeff(0).is_zero()) {
      record_bivar(BivarPoly::monomial(FieldElem::one(p.spec()), 0, 1,
                                       p.uvar(), p.vvar()));
      std::vector<Poly> cs(sf.vcoeffs().begin() + 1, sf.vcoeffs().end());
      sf = BivarPoly(p.spec(), std::move(cs), p.uvar(), p.vvar());
    }
    if (sf.total_degree() >= 1) {
      std::vector<BivarPoly> irr;
      factor_primitive_squarefree(sf, opts, irr);
      for (const auto& f : irr) record_bivar(f);
    }
  }

  for (auto& [_, bf] : found) out.factors.push_back(std::move(bf));
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const BivarFactor& a, const BivarFactor& b) {
                     if (a.factor.total_degree() != b.factor.total_degree())
                       return a.factor.total_degree() < b.factor.total_degree();
                     return a.factor.to_string() < b.factor.to_string();
                   });
  // unit: p / prod factors^mult — a constant for a complete factorization
  BivarPoly rest = p;
  for (const auto& bf : out.factors)
    for (std::int64_t i = 0; i < bf.multiplicity; ++i)
      rest = rest.exact_div(bf.factor);
  if (rest.total_degree() != 0)
    throw Error("Internal", "incomplete bivariate factorization of " + p.to_string());
  out.unit = rest.coeff(0, 0);
  return out;
}

BivariateRational::BivariateRational(BivarPoly num, BivarPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw DivisionByZero("bivariate rational with zero denominator");
  if (num_.is_zero()) {
    den_ = BivarPoly::constant(FieldElem::one(den_.spec()), den_.uvar(), den_.vvar());
    return;
  }
  BivarPoly g = bivar_gcd(num_, den_);
  if (g.total_degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  // canonical scaling: leading grlex coefficient of the denominator is 1
  BivarPoly dn = bivar_normalize(den_);
  // find the scalar applied
  FieldElem scale = FieldElem::one(den_.spec());
  for (std::int64_t j = 0; j <= den_.degree_v() && !den_.is_zero(); ++j) {
    const Poly& a = den_.vcoeff(j);
    const Poly& b = dn.vcoeff(j);
    if (!a.is_zero()) {
      scale = b.lc() / a.lc();
      break;
    }
  }
  num_ = num_ * scale;
  den_ = dn;
}

BivariateRational BivariateRational::from_poly(const BivarPoly& p) {
  return BivariateRational(
      p, BivarPoly::constant(FieldElem::one(p.spec()), p.uvar(), p.vvar()));
}

BivariateRational BivariateRational::operator+(const BivariateRational& o) const {
  return BivariateRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BivariateRational BivariateRational::operator-(const BivariateRational& o) const {
  return BivariateRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BivariateRational BivariateRational::operator*(const BivariateRational& o) const {
  return BivariateRational(num_ * o.num_, den_ * o.den_);
}

BivariateRational BivariateRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  return BivariateRational(den_, num_);
}

BivariateRational BivariateRational::operator/(const BivariateRational& o) const {
  return *this * o.inverse();
}

BivariateRational BivariateRational::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  return BivariateRational(num_.pow(n), den_.pow(n));
}

std::int64_t BivariateRational::order_along(const BivarPoly& f) const {
  if (is_zero()) throw ZeroPolynomial("order of the zero function");
  return num_.multiplicity(f) - den_.multiplicity(f);
}

BivariateRational BivariateRational::embedded(const FieldSpecPtr& target) const {
  return BivariateRational(num_.embedded(target), den_.embedded(target));
}

std::string BivariateRational::to_string() const {
  if (den_.total_degree() == 0 && den_.coeff(0, 0).is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tame
