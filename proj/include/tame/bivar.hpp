#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/factor.hpp"
#include "tame/poly.hpp"

namespace tame {

/// Bivariate polynomial over a FieldSpec, stored densely in the second
/// variable: coefficient of v^j is a univariate Poly in u.
class BivarPoly {
 public:
  BivarPoly() = default;
  BivarPoly(FieldSpecPtr spec, std::vector<Poly> vcoeffs, std::string uvar = "u",
            std::string vvar = "v");

  static BivarPoly zero(const FieldSpecPtr& spec, std::string uvar = "u",
                        std::string vvar = "v");
  static BivarPoly constant(const FieldElem& c, std::string uvar = "u",
                            std::string vvar = "v");
  static BivarPoly from_poly_u(const Poly& p, std::string vvar = "v");
  /// c * u^i * v^j
  static BivarPoly monomial(const FieldElem& c, std::int64_t i, std::int64_t j,
                            std::string uvar = "u", std::string vvar = "v");

  const FieldSpecPtr& spec() const { return spec_; }
  const std::string& uvar() const { return uvar_; }
  const std::string& vvar() const { return vvar_; }
  const std::vector<Poly>& vcoeffs() const { return c_; }
  Poly vcoeff(std::int64_t j) const;
  FieldElem coeff(std::int64_t i, std::int64_t j) const;

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree_v() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::int64_t degree_u() const;
  std::int64_t total_degree() const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator*(const FieldElem& s) const;
  BivarPoly pow(std::int64_t n) const;

  FieldElem eval(const FieldElem& u0, const FieldElem& v0) const;
  /// Specialization u = u0, leaving a univariate polynomial in v.
  Poly eval_u(const FieldElem& u0) const;
  /// Specialization v = v0, leaving a univariate polynomial in u.
  Poly eval_v(const FieldElem& v0) const;

  BivarPoly derivative_u() const;
  BivarPoly derivative_v() const;
  BivarPoly swap_uv() const;
  /// P(u + u0, v + v0)
  BivarPoly translate(const FieldElem& u0, const FieldElem& v0) const;
  /// P(u, g(u, v)) by Horner in v.
  BivarPoly compose_v(const BivarPoly& g) const;
  /// Coefficients of u^k dropped for k >= n (power-series truncation in u).
  BivarPoly truncate_u(std::int64_t n) const;

  std::optional<BivarPoly> try_exact_div(const BivarPoly& d) const;
  BivarPoly exact_div(const BivarPoly& d) const;
  std::int64_t multiplicity(const BivarPoly& d) const;

  /// Map coefficients into an extension of the current field.
  BivarPoly embedded(const FieldSpecPtr& target) const;

  bool operator==(const BivarPoly& o) const;
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  FieldSpecPtr spec_;
  std::vector<Poly> c_;  // c_[j] = coefficient of v^j, a Poly in uvar_
  std::string uvar_ = "u", vvar_ = "v";

  void trim();
};

/// Content of P with respect to v: monic gcd in k[u] of the v-coefficients.
Poly bivar_content(const BivarPoly& p);
/// Gcd via content extraction and a primitive Euclidean sequence in v.
BivarPoly bivar_gcd(BivarPoly a, BivarPoly b);
/// Monic-like normalization: leading grlex coefficient scaled to 1.
BivarPoly bivar_normalize(const BivarPoly& p);

struct BivarFactor {
  BivarPoly factor;  // normalized irreducible
  std::int64_t multiplicity;
};
struct BivarFactorization {
  FieldElem unit;
  std::vector<BivarFactor> factors;
};

/// Factorization into irreducibles over a finite field: specialization,
/// univariate factorization of a good fiber, Hensel lifting, and subset
/// recombination.  Desk-scale degrees only.
BivarFactorization bivar_factorize(const BivarPoly& p,
                                   const FactorizeOptions& opts = {});

/// Reduced bivariate rational function; denominator nonzero, gcd removed,
/// leading grlex coefficient of the denominator scaled to one.
class BivariateRational {
 public:
  BivariateRational() = default;
  BivariateRational(BivarPoly num, BivarPoly den);
  static BivariateRational from_poly(const BivarPoly& p);

  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  const FieldSpecPtr& spec() const { return num_.spec(); }
  bool is_zero() const { return num_.is_zero(); }

  BivariateRational operator+(const BivariateRational& o) const;
  BivariateRational operator-(const BivariateRational& o) const;
  BivariateRational operator*(const BivariateRational& o) const;
  BivariateRational operator/(const BivariateRational& o) const;
  BivariateRational inverse() const;
  BivariateRational pow(std::int64_t n) const;

  /// Order along the divisor of an irreducible polynomial.
  std::int64_t order_along(const BivarPoly& f) const;

  BivariateRational embedded(const FieldSpecPtr& target) const;

  std::string to_string() const;

 private:
  BivarPoly num_, den_;
};

}  // namespace tame
