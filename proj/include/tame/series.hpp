#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tame/poly.hpp"

namespace tame {

/// Sentinel absolute precision for exactly-known series (polynomial data).
inline constexpr std::int64_t kInfPrec =
    std::numeric_limits<std::int64_t>::max() / 4;

/// Default relative precision used when dividing exact series.
inline constexpr std::int64_t kDefaultPrec = 16;

/// Truncated Laurent series over a coefficient field: coefficients of
/// t^(val+i) for i < coeffs.size(), all exponents < abs_prec correct.
/// An empty coefficient window means "indistinguishable from zero at this
/// precision" (exactly zero when abs_prec is infinite); such values are
/// never silently treated as the exact zero.
class LaurentSeries1 {
 public:
  LaurentSeries1() = default;

  static LaurentSeries1 make(FieldSpecPtr base, std::int64_t val,
                             std::vector<FieldElem> coeffs,
                             std::int64_t abs_prec, std::string var = "t");
  static LaurentSeries1 exact_zero(const FieldSpecPtr& base,
                                   std::string var = "t");
  static LaurentSeries1 zero_window(const FieldSpecPtr& base,
                                    std::int64_t abs_prec,
                                    std::string var = "t");
  static LaurentSeries1 constant(const FieldElem& c, std::string var = "t");
  /// c * t^k, exact.
  static LaurentSeries1 monomial(const FieldElem& c, std::int64_t k,
                                 std::string var = "t");
  /// Polynomial in t as an exact series.
  static LaurentSeries1 from_poly(const Poly& p);

  const FieldSpecPtr& base() const { return base_; }
  const std::string& var() const { return var_; }
  std::int64_t val() const { return val_; }
  std::int64_t abs_prec() const { return abs_prec_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool known_nonzero() const { return !coeffs_.empty(); }
  bool is_exact() const { return abs_prec_ >= kInfPrec; }
  bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }

  /// Coefficient of t^k; throws PrecisionExhausted outside the window.
  FieldElem coeff_at(std::int64_t k) const;

  /// Exact valuation; throws IndistinguishableFromZero on a zero window.
  std::int64_t valuation() const;
  /// Constant coefficient of t^(-val) * this, a unit of the residue field.
  FieldElem residue_unit() const;

  LaurentSeries1 truncated(std::int64_t prec) const;
  /// Multiplication by t^k (exact).
  LaurentSeries1 shifted(std::int64_t k) const;

  LaurentSeries1 operator+(const LaurentSeries1& o) const;
  LaurentSeries1 operator-(const LaurentSeries1& o) const;
  LaurentSeries1 operator-() const;
  LaurentSeries1 operator*(const LaurentSeries1& o) const;
  LaurentSeries1 operator*(const FieldElem& s) const;

  /// Reciprocal; prec_hint sets the relative precision when this is exact.
  LaurentSeries1 inverse(std::int64_t prec_hint = kDefaultPrec) const;
  LaurentSeries1 div(const LaurentSeries1& o,
                     std::int64_t prec_hint = kDefaultPrec) const;
  LaurentSeries1 pow(std::int64_t n,
                     std::int64_t prec_hint = kDefaultPrec) const;

  /// Exact equality of the overlapping correct windows (used by the
  /// precision-soundness tests).
  bool agrees_with(const LaurentSeries1& o) const;

  std::string to_string() const;

 private:
  FieldSpecPtr base_;
  std::int64_t val_ = 0;
  std::vector<FieldElem> coeffs_;
  std::int64_t abs_prec_ = kInfPrec;
  std::string var_ = "t";
};

enum class SeriesOp { Add, Sub, Mul, Div };
LaurentSeries1 ls1_arith(const LaurentSeries1& a, const LaurentSeries1& b,
                         SeriesOp op, std::int64_t prec_hint = kDefaultPrec);
std::int64_t ls1_valuation(const LaurentSeries1& a);
FieldElem ls1_residue_unit(const LaurentSeries1& a);

/// Horner evaluation of a univariate polynomial at a series argument.
LaurentSeries1 eval_poly_at_series(const Poly& p, const LaurentSeries1& x);

/// Truncated element of k'((t))((s)): inner[j] is the k'((t)) coefficient of
/// s^(s_val+j); every stored inner series shares the same absolute
/// t-precision inner_prec.
class LaurentSeries2 {
 public:
  LaurentSeries2() = default;

  static LaurentSeries2 make(FieldSpecPtr base, std::int64_t s_val,
                             std::vector<LaurentSeries1> inner,
                             std::int64_t s_abs_prec);
  static LaurentSeries2 exact_zero(const FieldSpecPtr& base);
  /// inner * s^k
  static LaurentSeries2 from_inner(const LaurentSeries1& inner,
                                   std::int64_t k = 0);
  static LaurentSeries2 constant(const FieldElem& c);
  /// c * t^i * s^j, exact.
  static LaurentSeries2 monomial(const FieldElem& c, std::int64_t i,
                                 std::int64_t j);

  const FieldSpecPtr& base() const { return base_; }
  std::int64_t s_val() const { return s_val_; }
  std::int64_t s_abs_prec() const { return s_abs_prec_; }
  std::int64_t inner_prec() const { return inner_prec_; }
  const std::vector<LaurentSeries1>& inner() const { return inner_; }
  LaurentSeries1 inner_at(std::int64_t k) const;

  /// True when the leading stored inner series is a certified nonzero.
  bool known_nonzero() const;

  /// nu_1: the outer s-valuation.  Throws IndistinguishableFromZero when
  /// nothing is stored, PrecisionExhausted when the leading inner series is
  /// an uncertified zero window.
  std::int64_t s_valuation() const;
  /// (nu_1, residue class of this * s^(-nu_1) in k'((t))).
  std::pair<std::int64_t, LaurentSeries1> reduce() const;

  LaurentSeries2 operator+(const LaurentSeries2& o) const;
  LaurentSeries2 operator-(const LaurentSeries2& o) const;
  LaurentSeries2 operator-() const;
  LaurentSeries2 operator*(const LaurentSeries2& o) const;

  LaurentSeries2 inverse(std::int64_t s_hint = kDefaultPrec,
                         std::int64_t t_hint = kDefaultPrec) const;
  LaurentSeries2 div(const LaurentSeries2& o,
                     std::int64_t s_hint = kDefaultPrec,
                     std::int64_t t_hint = kDefaultPrec) const;
  LaurentSeries2 pow(std::int64_t n, std::int64_t s_hint = kDefaultPrec,
                     std::int64_t t_hint = kDefaultPrec) const;

  bool agrees_with(const LaurentSeries2& o) const;

  std::string to_string() const;

 private:
  FieldSpecPtr base_;
  std::int64_t s_val_ = 0;
  std::vector<LaurentSeries1> inner_;
  std::int64_t s_abs_prec_ = kInfPrec;
  std::int64_t inner_prec_ = kInfPrec;
};

LaurentSeries2 ls2_arith(const LaurentSeries2& a, const LaurentSeries2& b,
                         SeriesOp op, std::int64_t s_hint = kDefaultPrec,
                         std::int64_t t_hint = kDefaultPrec);
std::int64_t ls2_valuation_s(const LaurentSeries2& a);
std::pair<std::int64_t, LaurentSeries1> ls2_reduce(const LaurentSeries2& a);

}  // namespace tame
