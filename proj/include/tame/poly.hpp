#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tame/fields.hpp"

namespace tame {

/// Dense univariate polynomial over a FieldSpec, ascending coefficients,
/// trailing zeros trimmed.  The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(FieldSpecPtr spec, std::vector<FieldElem> coeffs, std::string var = "T");

  static Poly zero(const FieldSpecPtr& spec, std::string var = "T");
  static Poly constant(const FieldElem& c, std::string var = "T");
  /// c * X^k
  static Poly monomial(const FieldElem& c, std::int64_t k,
                       std::string var = "T");

  const FieldSpecPtr& spec() const { return spec_; }
  const std::string& var() const { return var_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// Coefficient of X^k (zero beyond the stored range).
  FieldElem coeff(std::int64_t k) const;

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const FieldElem& lc() const;
  bool is_monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& s) const;
  Poly pow(std::int64_t n) const;

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly mod(const Poly& d) const { return divrem(d).second; }
  /// Exact quotient; throws if the division leaves a remainder.
  Poly exact_div(const Poly& d) const;
  /// Exact quotient, or nothing if the division leaves a remainder.
  std::optional<Poly> try_exact_div(const Poly& d) const;
  /// Largest e with d^e dividing this (this nonzero, deg d >= 1).
  std::int64_t multiplicity(const Poly& d) const;

  Poly derivative() const;
  Poly monic() const;
  /// Coefficients reversed: X^deg * P(1/X).
  Poly reversed() const;
  /// Inverse modulo m (requires gcd(this, m) = 1).
  Poly inverse_mod(const Poly& m) const;

  FieldElem eval(const FieldElem& x) const;
  /// P(Q(X)) by Horner over Poly arithmetic.
  Poly compose(const Poly& q) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldSpecPtr spec_;
  std::vector<FieldElem> c_;
  std::string var_ = "T";

  void trim();
};

/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(Poly a, Poly b);
/// Bezout data: g = a*u + b*v with g monic (or zero).
struct PolyEgcd {
  Poly g, u, v;
};
PolyEgcd poly_egcd(const Poly& a, const Poly& b);
/// Res(a, b) by the Euclidean remainder sequence.
FieldElem resultant(const Poly& a, const Poly& b);
/// a^e mod m with a big exponent.
Poly pow_mod(const Poly& a, const boost::multiprecision::cpp_int& e,
             const Poly& m);
/// Coefficient-wise embedding into an extension of the coefficient field.
Poly embed_poly(const Poly& p, const FieldSpecPtr& target);
/// Reciprocal of p as a power series, truncated mod X^prec (p(0) != 0).
Poly poly_series_inverse(const Poly& p, std::int64_t prec);
/// p mod X^prec.
Poly poly_truncate(const Poly& p, std::int64_t prec);

/// Reduced univariate rational function: den monic, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(const Poly& p);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldSpecPtr& spec() const { return num_.spec(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc pow(std::int64_t n) const;
  RatFunc inverse() const;

  /// Order of vanishing at the place (pi), pi monic irreducible.
  std::int64_t order_at(const Poly& pi) const;
  /// Order at the infinite place: deg den - deg num.
  std::int64_t order_at_infinity() const;

  std::string to_string() const;

 private:
  Poly num_, den_;
};

}  // namespace tame
