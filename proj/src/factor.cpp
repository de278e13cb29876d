#include "tame/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace tame {

using boost::multiprecision::cpp_int;

namespace {

Poly var_poly(const FieldSpecPtr& spec, const std::string& var) {
  return Poly::monomial(FieldElem::one(spec), 1, var);
}

/// p-th root of a finite-field element via the inverse Frobenius a -> a^(q/p).
FieldElem pth_root(const FieldElem& a) {
  std::int64_t q = a.spec()->order();
  std::int64_t p = a.spec()->characteristic();
  return a.pow(q / p);
}

/// For f with f' = 0 (so f is a polynomial in x^p with p-th power
/// coefficients), returns g with g^p = f.
Poly pth_root_poly(const Poly& f) {
  std::int64_t p = f.spec()->characteristic();
  std::vector<FieldElem> r;
  for (std::int64_t k = 0; k * p <= f.degree(); ++k)
    r.push_back(pth_root(f.coeff(k * p)));
  return Poly(f.spec(), std::move(r), f.var());
}

/// f = prod g_i^i with g_i squarefree and pairwise coprime (g_i monic).
std::vector<std::pair<Poly, std::int64_t>> squarefree_decomposition(Poly f) {
  std::vector<std::pair<Poly, std::int64_t>> out;
  f = f.monic();
  if (f.degree() == 0) return out;
  Poly d = f.derivative();
  if (d.is_zero()) {
    // f is a p-th power
    auto sub = squarefree_decomposition(pth_root_poly(f));
    for (auto& [g, m] : sub) out.emplace_back(g, m * f.spec()->characteristic());
    return out;
  }
  Poly c = poly_gcd(f, d);
  Poly w = f.exact_div(c);
  std::int64_t i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, c);
    Poly z = w.exact_div(y);
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (c.degree() > 0) {
    auto sub = squarefree_decomposition(pth_root_poly(c));
    for (auto& [g, m] : sub) out.emplace_back(g, m * f.spec()->characteristic());
  }
  return out;
}

/// Enumerates all monic polynomials of the given degree, recursively.
void enumerate_monic(const FieldSpecPtr& spec, const std::string& var,
                     std::int64_t degree,
                     const std::function<bool(const Poly&)>& visit) {
  std::vector<FieldElem> elems = all_field_elements(spec);
  std::vector<FieldElem> coeffs(static_cast<std::size_t>(degree) + 1,
                                FieldElem::zero(spec));
  coeffs.back() = FieldElem::one(spec);
  std::function<bool(std::int64_t)> rec = [&](std::int64_t pos) -> bool {
    if (pos == degree) return visit(Poly(spec, coeffs, var));
    for (const auto& e : elems) {
      coeffs[static_cast<std::size_t>(pos)] = e;
      if (rec(pos + 1)) return true;
    }
    return false;
  };
  rec(0);
}

Poly random_poly_below(const FieldSpecPtr& spec, const std::string& var,
                       std::int64_t degree_bound, std::mt19937_64& rng) {
  std::vector<FieldElem> elems = all_field_elements(spec);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<FieldElem> coeffs;
  for (std::int64_t i = 0; i < degree_bound; ++i) coeffs.push_back(elems[pick(rng)]);
  return Poly(spec, std::move(coeffs), var);
}

/// Splits a monic product of distinct irreducibles, all of degree d.
void equal_degree_split(const Poly& f, std::int64_t d,
                        const FactorizeOptions& opts, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const auto& spec = f.spec();
  std::int64_t q = spec->order();

  cpp_int qd = 1;
  for (std::int64_t i = 0; i < d; ++i) qd *= q;

  // Deterministic fallback: trial division by every monic polynomial of
  // degree d while the search space is small.
  if (qd <= opts.exhaustive_bound) {
    Poly rest = f;
    enumerate_monic(spec, f.var(), d, [&](const Poly& cand) -> bool {
      if (rest.degree() < d) return true;
      auto [quo, rem] = rest.divrem(cand);
      if (rem.is_zero()) {
        out.push_back(cand);
        rest = quo;
      }
      return rest.degree() == 0;
    });
    return;
  }

  for (;;) {
    Poly r = random_poly_below(spec, f.var(), 2 * d, rng);
    if (r.degree() < 1) continue;
    Poly g;
    if (spec->characteristic() == 2) {
      // trace map splitting in characteristic 2
      std::int64_t md = spec->absolute_degree() * d;
      Poly s = r.mod(f);
      Poly acc = s;
      for (std::int64_t i = 1; i < md; ++i) {
        s = (s * s).mod(f);
        acc = acc + s;
      }
      g = poly_gcd(acc, f);
    } else {
      Poly s = pow_mod(r, (qd - 1) / 2, f);
      g = poly_gcd(s - Poly::constant(FieldElem::one(spec), f.var()), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, opts, rng, out);
      equal_degree_split(f.exact_div(g), d, opts, rng, out);
      return;
    }
  }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<Poly> factor_squarefree(Poly f, const FactorizeOptions& opts,
                                    std::mt19937_64& rng) {
  std::vector<Poly> out;
  const auto& spec = f.spec();
  std::int64_t q = spec->order();
  Poly x = var_poly(spec, f.var());
  Poly h = x;
  for (std::int64_t d = 1; f.degree() > 0 && d <= f.degree() / 2; ++d) {
    h = pow_mod(h, q, f);
    Poly g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, opts, rng, out);
      f = f.exact_div(g);
      h = h.mod(f);
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

bool rational_is_square(const Rational& q, Rational& root) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (q < 0) return false;
  cpp_int n = numerator(q), d = denominator(q);
  cpp_int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

std::vector<cpp_int> positive_divisors(cpp_int n) {
  if (n < 0) n = -n;
  std::vector<cpp_int> out;
  if (n == 0) return out;
  for (cpp_int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

/// Desk-scale factorization over Q: linear factors by the rational root
/// theorem, one trailing quadratic by the discriminant test; anything deeper
/// is rejected.
Factorization factorize_rationals(const Poly& p) {
  const auto& spec = p.spec();
  Factorization out{p.lc(), {}};
  Poly f = p.monic();
  std::map<std::string, PolyFactor> found;

  auto record = [&](const Poly& fac) {
    std::int64_t m = p.multiplicity(fac);
    found.emplace(fac.to_string(), PolyFactor{fac, m});
    while (f.degree() > 0 && f.mod(fac).is_zero()) f = f.exact_div(fac);
  };

  // clear denominators to get integer coefficients for root candidates
  cpp_int den_lcm = 1;
  for (const auto& c : f.coeffs())
    den_lcm = lcm(den_lcm, denominator(c.rational()));
  std::vector<cpp_int> zc;
  for (const auto& c : f.coeffs())
    zc.push_back(numerator(c.rational() * Rational(den_lcm)));

  std::int64_t low = 0;
  while (low < static_cast<std::int64_t>(zc.size()) && zc[static_cast<std::size_t>(low)] == 0) ++low;
  if (low > 0)
    record(Poly::monomial(FieldElem::one(spec), 1, p.var()));

  if (f.degree() > 0) {
    cpp_int a0 = zc[static_cast<std::size_t>(low)];
    cpp_int ad = zc.back();
    for (const cpp_int& num : positive_divisors(a0)) {
      for (const cpp_int& den : positive_divisors(ad)) {
        for (int sign = 0; sign < 2; ++sign) {
          Rational r(sign ? -num : num, den);
          FieldElem root = FieldElem::from_rational(spec, r);
          if (f.degree() > 0 && f.eval(root).is_zero()) {
            Poly lin(spec, {-root, FieldElem::one(spec)}, p.var());
            record(lin);
          }
        }
      }
    }
  }

  if (f.degree() == 2) {
    FieldElem b = f.coeff(1), c = f.coeff(0);
    Rational disc = (b * b - FieldElem::from_integer(spec, 4) * c).rational();
    Rational root;
    if (rational_is_square(disc, root)) {
      FieldElem sq = FieldElem::from_rational(spec, root);
      FieldElem half = FieldElem::from_rational(spec, Rational(1, 2));
      FieldElem r1 = (-b + sq) * half, r2 = (-b - sq) * half;
      record(Poly(spec, {-r1, FieldElem::one(spec)}, p.var()));
      if (f.degree() > 0) record(Poly(spec, {-r2, FieldElem::one(spec)}, p.var()));
    } else {
      record(f);
    }
  } else if (f.degree() == 1) {
    record(f);
  }
  if (f.degree() > 0)
    throw UnsupportedBase(
        "factorization over Q supports only irreducible factors of degree <= 2");
  for (auto& [_, pf] : found) out.factors.push_back(std::move(pf));
  return out;
}

}  // namespace

Factorization factorize(const Poly& p, const FactorizeOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("factorize of the zero polynomial");
  const auto& spec = p.spec();
  if (spec->is_rationals()) return factorize_rationals(p);

  Factorization out{p.lc(), {}};
  if (p.degree() == 0) return out;
  std::mt19937_64 rng(opts.seed);
  std::map<std::string, PolyFactor> found;
  for (auto& [g, mult] : squarefree_decomposition(p)) {
    for (auto& irr : factor_squarefree(g, opts, rng)) {
      auto key = irr.to_string();
      auto it = found.find(key);
      if (it == found.end())
        found.emplace(key, PolyFactor{irr, mult});
      else
        it->second.multiplicity += mult;
    }
  }
  for (auto& [_, pf] : found) out.factors.push_back(std::move(pf));
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const PolyFactor& a, const PolyFactor& b) {
                     if (a.factor.degree() != b.factor.degree())
                       return a.factor.degree() < b.factor.degree();
                     return a.factor.to_string() < b.factor.to_string();
                   });
  return out;
}

bool is_irreducible(const Poly& p) {
  const auto& spec = p.spec();
  if (spec->is_rationals())
    throw UnsupportedBase("irreducibility over Q is not supported");
  std::int64_t d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  std::int64_t q = spec->order();
  Poly f = p.monic();
  Poly x = var_poly(spec, p.var());

  cpp_int qd = 1;
  for (std::int64_t i = 0; i < d; ++i) qd *= q;
  if (pow_mod(x, qd, f) != x.mod(f)) return false;
  // gcd(x^(q^(d/e)) - x, f) = 1 for every prime e dividing d
  for (std::int64_t e = 2; e <= d; ++e) {
    if (d % e != 0) continue;
    bool e_prime = true;
    for (std::int64_t t = 2; t * t <= e; ++t)
      if (e % t == 0) e_prime = false;
    if (!e_prime) continue;
    cpp_int qe = 1;
    for (std::int64_t i = 0; i < d / e; ++i) qe *= q;
    Poly h = pow_mod(x, qe, f);
    if (poly_gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

std::vector<FieldElem> all_field_elements(const FieldSpecPtr& spec) {
  if (spec->is_rationals())
    throw UnsupportedBase("cannot enumerate Q");
  if (spec->is_prime()) {
    std::vector<FieldElem> out;
    for (std::int64_t i = 0; i < spec->p(); ++i)
      out.push_back(FieldElem::from_integer(spec, i));
    return out;
  }
  std::vector<FieldElem> base = all_field_elements(spec->base());
  std::vector<std::vector<FieldElem>> coords{{}};
  for (std::int64_t i = 0; i < spec->degree(); ++i) {
    std::vector<std::vector<FieldElem>> next;
    for (const auto& prefix : coords)
      for (const auto& b : base) {
        auto ext = prefix;
        ext.push_back(b);
        next.push_back(std::move(ext));
      }
    coords = std::move(next);
  }
  std::vector<FieldElem> out;
  out.reserve(coords.size());
  for (auto& c : coords) out.push_back(FieldElem::from_coords(spec, std::move(c)));
  return out;
}

namespace detail {
bool modulus_is_irreducible(const FieldSpecPtr& base,
                            const std::vector<FieldElem>& modulus) {
  return is_irreducible(Poly(base, modulus));
}
}  // namespace detail

}  // namespace tame
