#include "tame/series.hpp"

#include <algorithm>
#include <sstream>

namespace tame {

namespace {

std::int64_t clamp_prec(std::int64_t p) { return std::min(p, kInfPrec); }

std::int64_t add_prec(std::int64_t a, std::int64_t b) {
  if (a >= kInfPrec || b >= kInfPrec) {
    if (a >= kInfPrec && b >= kInfPrec) return kInfPrec;
    // finite + infinite offset: saturate
    return kInfPrec;
  }
  return clamp_prec(a + b);
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentSeries1

LaurentSeries1 LaurentSeries1::make(FieldSpecPtr base, std::int64_t val,
                                    std::vector<FieldElem> coeffs,
                                    std::int64_t abs_prec, std::string var) {
  abs_prec = clamp_prec(abs_prec);
  // drop coefficients at or beyond the precision bound
  if (abs_prec < kInfPrec &&
      val + static_cast<std::int64_t>(coeffs.size()) > abs_prec) {
    std::int64_t keep = std::max<std::int64_t>(0, abs_prec - val);
    coeffs.resize(static_cast<std::size_t>(keep));
  }
  // advance past leading zeros
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    val += static_cast<std::int64_t>(lead);
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();

  LaurentSeries1 s;
  s.base_ = std::move(base);
  s.abs_prec_ = abs_prec;
  s.var_ = std::move(var);
  if (coeffs.empty()) {
    s.val_ = abs_prec;
    return s;
  }
  s.val_ = val;
  s.coeffs_ = std::move(coeffs);
  return s;
}

LaurentSeries1 LaurentSeries1::exact_zero(const FieldSpecPtr& base,
                                          std::string var) {
  return make(base, 0, {}, kInfPrec, std::move(var));
}

LaurentSeries1 LaurentSeries1::zero_window(const FieldSpecPtr& base,
                                           std::int64_t abs_prec,
                                           std::string var) {
  return make(base, 0, {}, abs_prec, std::move(var));
}

LaurentSeries1 LaurentSeries1::constant(const FieldElem& c, std::string var) {
  return make(c.spec(), 0, {c}, kInfPrec, std::move(var));
}

LaurentSeries1 LaurentSeries1::monomial(const FieldElem& c, std::int64_t k,
                                        std::string var) {
  return make(c.spec(), k, {c}, kInfPrec, std::move(var));
}

LaurentSeries1 LaurentSeries1::from_poly(const Poly& p) {
  return make(p.spec(), 0, p.coeffs(), kInfPrec, "t");
}

FieldElem LaurentSeries1::coeff_at(std::int64_t k) const {
  if (k >= abs_prec_)
    throw PrecisionExhausted("coefficient of " + var_ + "^" + std::to_string(k) +
                             " beyond precision");
  if (coeffs_.empty() || k < val_ ||
      k >= val_ + static_cast<std::int64_t>(coeffs_.size()))
    return FieldElem::zero(base_);
  return coeffs_[static_cast<std::size_t>(k - val_)];
}

std::int64_t LaurentSeries1::valuation() const {
  if (!known_nonzero())
    throw IndistinguishableFromZero(
        "series is indistinguishable from zero at precision " +
        std::to_string(abs_prec_));
  return val_;
}

FieldElem LaurentSeries1::residue_unit() const {
  valuation();
  return coeffs_.front();
}

LaurentSeries1 LaurentSeries1::truncated(std::int64_t prec) const {
  if (prec >= abs_prec_) return *this;
  return make(base_, val_, coeffs_, prec, var_);
}

LaurentSeries1 LaurentSeries1::shifted(std::int64_t k) const {
  return make(base_, val_ + k, coeffs_, add_prec(abs_prec_, k), var_);
}

LaurentSeries1 LaurentSeries1::operator+(const LaurentSeries1& o) const {
  if (!same_spec(base_, o.base_)) throw SpecMismatch("series + field mismatch");
  std::int64_t prec = std::min(abs_prec_, o.abs_prec_);
  std::int64_t lo = std::min(coeffs_.empty() ? prec : val_,
                             o.coeffs_.empty() ? prec : o.val_);
  if (lo >= prec) return make(base_, 0, {}, prec, var_);
  std::vector<FieldElem> out;
  std::int64_t hi = lo;
  std::int64_t my_hi = coeffs_.empty() ? lo : val_ + static_cast<std::int64_t>(coeffs_.size());
  std::int64_t o_hi = o.coeffs_.empty() ? lo : o.val_ + static_cast<std::int64_t>(o.coeffs_.size());
  hi = std::min(prec, std::max(my_hi, o_hi));
  for (std::int64_t k = lo; k < hi; ++k) {
    FieldElem a = (!coeffs_.empty() && k >= val_ && k < my_hi)
                      ? coeffs_[static_cast<std::size_t>(k - val_)]
                      : FieldElem::zero(base_);
    FieldElem b = (!o.coeffs_.empty() && k >= o.val_ && k < o_hi)
                      ? o.coeffs_[static_cast<std::size_t>(k - o.val_)]
                      : FieldElem::zero(base_);
    out.push_back(a + b);
  }
  return make(base_, lo, std::move(out), prec, var_);
}

LaurentSeries1 LaurentSeries1::operator-() const {
  std::vector<FieldElem> out = coeffs_;
  for (auto& c : out) c = -c;
  return make(base_, val_, std::move(out), abs_prec_, var_);
}

LaurentSeries1 LaurentSeries1::operator-(const LaurentSeries1& o) const {
  return *this + (-o);
}

LaurentSeries1 LaurentSeries1::operator*(const LaurentSeries1& o) const {
  if (!same_spec(base_, o.base_)) throw SpecMismatch("series * field mismatch");
  if (is_exact_zero() || o.is_exact_zero()) return exact_zero(base_, var_);
  if (coeffs_.empty() || o.coeffs_.empty()) {
    // zero window times anything: valuation bound is the window edge
    std::int64_t pa = coeffs_.empty() ? abs_prec_ : val_;
    std::int64_t pb = o.coeffs_.empty() ? o.abs_prec_ : o.val_;
    return make(base_, 0, {}, add_prec(pa, pb), var_);
  }
  std::int64_t prec =
      std::min(add_prec(val_, o.abs_prec_), add_prec(o.val_, abs_prec_));
  std::int64_t lo = val_ + o.val_;
  std::int64_t n = (prec >= kInfPrec)
                       ? static_cast<std::int64_t>(coeffs_.size() + o.coeffs_.size()) - 1
                       : prec - lo;
  std::vector<FieldElem> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)),
                             FieldElem::zero(base_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (i + j >= out.size()) break;
      out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return make(base_, lo, std::move(out), prec, var_);
}

LaurentSeries1 LaurentSeries1::operator*(const FieldElem& s) const {
  if (s.is_zero()) return exact_zero(base_, var_);
  std::vector<FieldElem> out = coeffs_;
  for (auto& c : out) c = c * s;
  return make(base_, val_, std::move(out), abs_prec_, var_);
}

LaurentSeries1 LaurentSeries1::inverse(std::int64_t prec_hint) const {
  if (!known_nonzero())
    throw ZeroDivisor("division by a series indistinguishable from zero");
  // exact monomial: exact inverse
  if (is_exact() && coeffs_.size() == 1)
    return monomial(coeffs_[0].inverse(), -val_, var_);
  std::int64_t rel = is_exact() ? prec_hint : abs_prec_ - val_;
  const FieldElem inv0 = coeffs_[0].inverse();
  std::vector<FieldElem> out{inv0};
  for (std::int64_t k = 1; k < rel; ++k) {
    FieldElem acc = FieldElem::zero(base_);
    std::int64_t top = std::min<std::int64_t>(
        k, static_cast<std::int64_t>(coeffs_.size()) - 1);
    for (std::int64_t i = 1; i <= top; ++i)
      acc = acc + coeffs_[static_cast<std::size_t>(i)] *
                      out[static_cast<std::size_t>(k - i)];
    out.push_back(-(inv0 * acc));
  }
  return make(base_, -val_, std::move(out), clamp_prec(-val_ + rel), var_);
}

LaurentSeries1 LaurentSeries1::div(const LaurentSeries1& o,
                                   std::int64_t prec_hint) const {
  return *this * o.inverse(prec_hint);
}

LaurentSeries1 LaurentSeries1::pow(std::int64_t n, std::int64_t prec_hint) const {
  if (n < 0) return inverse(prec_hint).pow(-n, prec_hint);
  LaurentSeries1 acc = constant(FieldElem::one(base_), var_);
  LaurentSeries1 base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool LaurentSeries1::agrees_with(const LaurentSeries1& o) const {
  std::int64_t prec = std::min(abs_prec_, o.abs_prec_);
  std::int64_t lo = std::min(coeffs_.empty() ? prec : val_,
                             o.coeffs_.empty() ? prec : o.val_);
  if (prec >= kInfPrec) {
    // both exact: plain equality
    return val_ == o.val_ && coeffs_ == o.coeffs_;
  }
  for (std::int64_t k = lo; k < prec; ++k) {
    FieldElem a = (k < val_ || k >= val_ + static_cast<std::int64_t>(coeffs_.size()) ||
                   coeffs_.empty())
                      ? FieldElem::zero(base_)
                      : coeffs_[static_cast<std::size_t>(k - val_)];
    FieldElem b = (k < o.val_ ||
                   k >= o.val_ + static_cast<std::int64_t>(o.coeffs_.size()) ||
                   o.coeffs_.empty())
                      ? FieldElem::zero(base_)
                      : o.coeffs_[static_cast<std::size_t>(k - o.val_)];
    if (!(a == b)) return false;
  }
  return true;
}

std::string LaurentSeries1::to_string() const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    if (is_exact()) return "0";
    os << "O(" << var_ << "^" << abs_prec_ << ")";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::int64_t k = val_ + static_cast<std::int64_t>(i);
    if (!first) os << "+";
    first = false;
    std::string cs = coeffs_[i].to_string();
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('*') != std::string::npos ||
                     cs.find('/') != std::string::npos;
    if (k == 0) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (!coeffs_[i].is_one()) os << (composite ? "(" + cs + ")" : cs) << "*";
      os << var_;
      if (k != 1) os << "^" << k;
    }
  }
  if (!is_exact()) os << "+O(" << var_ << "^" << abs_prec_ << ")";
  return os.str();
}

LaurentSeries1 ls1_arith(const LaurentSeries1& a, const LaurentSeries1& b,
                         SeriesOp op, std::int64_t prec_hint) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
    case SeriesOp::Div:
      return a.div(b, prec_hint);
  }
  throw Error("Internal", "bad series op");
}

std::int64_t ls1_valuation(const LaurentSeries1& a) { return a.valuation(); }

FieldElem ls1_residue_unit(const LaurentSeries1& a) { return a.residue_unit(); }

LaurentSeries1 eval_poly_at_series(const Poly& p, const LaurentSeries1& x) {
  LaurentSeries1 acc = LaurentSeries1::exact_zero(x.base(), x.var());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + LaurentSeries1::constant(*it, x.var());
  return acc;
}

// ---------------------------------------------------------------------------
// LaurentSeries2

LaurentSeries2 LaurentSeries2::make(FieldSpecPtr base, std::int64_t s_val,
                                    std::vector<LaurentSeries1> inner,
                                    std::int64_t s_abs_prec) {
  s_abs_prec = clamp_prec(s_abs_prec);
  if (s_abs_prec < kInfPrec &&
      s_val + static_cast<std::int64_t>(inner.size()) > s_abs_prec) {
    std::int64_t keep = std::max<std::int64_t>(0, s_abs_prec - s_val);
    inner.resize(static_cast<std::size_t>(keep),
                 LaurentSeries1::exact_zero(base));
  }
  // advance past exactly-zero leading inners (a zero window must stay: the
  // outer valuation cannot be certified through it)
  std::size_t lead = 0;
  while (lead < inner.size() && inner[lead].is_exact_zero()) ++lead;
  if (lead > 0) {
    inner.erase(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(lead));
    s_val += static_cast<std::int64_t>(lead);
  }
  while (!inner.empty() && inner.back().is_exact_zero()) inner.pop_back();

  LaurentSeries2 s;
  s.base_ = std::move(base);
  s.s_abs_prec_ = s_abs_prec;
  if (inner.empty()) {
    s.s_val_ = s_abs_prec;
    s.inner_prec_ = kInfPrec;
    return s;
  }
  std::int64_t ip = kInfPrec;
  for (const auto& c : inner) ip = std::min(ip, c.abs_prec());
  for (auto& c : inner) c = c.truncated(ip);
  s.s_val_ = s_val;
  s.inner_ = std::move(inner);
  s.inner_prec_ = ip;
  return s;
}

LaurentSeries2 LaurentSeries2::exact_zero(const FieldSpecPtr& base) {
  return make(base, 0, {}, kInfPrec);
}

LaurentSeries2 LaurentSeries2::from_inner(const LaurentSeries1& inner,
                                          std::int64_t k) {
  return make(inner.base(), k, {inner}, kInfPrec);
}

LaurentSeries2 LaurentSeries2::constant(const FieldElem& c) {
  return from_inner(LaurentSeries1::constant(c));
}

LaurentSeries2 LaurentSeries2::monomial(const FieldElem& c, std::int64_t i,
                                        std::int64_t j) {
  return from_inner(LaurentSeries1::monomial(c, i), j);
}

LaurentSeries1 LaurentSeries2::inner_at(std::int64_t k) const {
  if (k >= s_abs_prec_)
    throw PrecisionExhausted("s-coefficient beyond precision");
  if (inner_.empty())
    return s_abs_prec_ >= kInfPrec ? LaurentSeries1::exact_zero(base_)
                                   : LaurentSeries1::make(base_, 0, {}, 0);
  if (k < s_val_ || k >= s_val_ + static_cast<std::int64_t>(inner_.size()))
    return LaurentSeries1::make(base_, 0, {}, inner_prec_);
  return inner_[static_cast<std::size_t>(k - s_val_)];
}

bool LaurentSeries2::known_nonzero() const {
  return !inner_.empty() && inner_.front().known_nonzero();
}

std::int64_t LaurentSeries2::s_valuation() const {
  if (inner_.empty())
    throw IndistinguishableFromZero(
        "two-dimensional series indistinguishable from zero");
  if (!inner_.front().known_nonzero())
    throw PrecisionExhausted(
        "leading inner series is an uncertified zero window");
  return s_val_;
}

std::pair<std::int64_t, LaurentSeries1> LaurentSeries2::reduce() const {
  std::int64_t v = s_valuation();
  return {v, inner_.front()};
}

LaurentSeries2 LaurentSeries2::operator+(const LaurentSeries2& o) const {
  if (!same_spec(base_, o.base_)) throw SpecMismatch("series + field mismatch");
  std::int64_t prec = std::min(s_abs_prec_, o.s_abs_prec_);
  std::int64_t lo = std::min(inner_.empty() ? prec : s_val_,
                             o.inner_.empty() ? prec : o.s_val_);
  if (lo >= prec) return make(base_, 0, {}, prec);
  std::int64_t my_hi = inner_.empty() ? lo : s_val_ + static_cast<std::int64_t>(inner_.size());
  std::int64_t o_hi = o.inner_.empty() ? lo : o.s_val_ + static_cast<std::int64_t>(o.inner_.size());
  std::int64_t hi = std::min(prec, std::max(my_hi, o_hi));
  std::int64_t ip = std::min(inner_prec_, o.inner_prec_);
  std::vector<LaurentSeries1> out;
  for (std::int64_t k = lo; k < hi; ++k) {
    LaurentSeries1 a = (!inner_.empty() && k >= s_val_ && k < my_hi)
                           ? inner_[static_cast<std::size_t>(k - s_val_)]
                           : LaurentSeries1::exact_zero(base_);
    LaurentSeries1 b = (!o.inner_.empty() && k >= o.s_val_ && k < o_hi)
                           ? o.inner_[static_cast<std::size_t>(k - o.s_val_)]
                           : LaurentSeries1::exact_zero(base_);
    out.push_back((a + b).truncated(ip));
  }
  return make(base_, lo, std::move(out), prec);
}

LaurentSeries2 LaurentSeries2::operator-() const {
  std::vector<LaurentSeries1> out = inner_;
  for (auto& c : out) c = -c;
  return make(base_, s_val_, std::move(out), s_abs_prec_);
}

LaurentSeries2 LaurentSeries2::operator-(const LaurentSeries2& o) const {
  return *this + (-o);
}

namespace {

/// Lower bound for the t-valuation of every stored inner coefficient.
std::int64_t inner_val_floor(const LaurentSeries2& x) {
  std::int64_t m = kInfPrec;
  for (const auto& c : x.inner())
    m = std::min(m, c.known_nonzero() ? c.val() : c.abs_prec());
  return m;
}

}  // namespace

LaurentSeries2 LaurentSeries2::operator*(const LaurentSeries2& o) const {
  if (!same_spec(base_, o.base_)) throw SpecMismatch("series * field mismatch");
  bool a_zero = inner_.empty(), b_zero = o.inner_.empty();
  if ((a_zero && s_abs_prec_ >= kInfPrec) || (b_zero && o.s_abs_prec_ >= kInfPrec))
    return exact_zero(base_);
  if (a_zero || b_zero) {
    std::int64_t pa = a_zero ? s_abs_prec_ : s_val_;
    std::int64_t pb = b_zero ? o.s_abs_prec_ : o.s_val_;
    return make(base_, 0, {}, add_prec(pa, pb));
  }
  std::int64_t prec =
      std::min(add_prec(s_val_, o.s_abs_prec_), add_prec(o.s_val_, s_abs_prec_));
  std::int64_t lo = s_val_ + o.s_val_;
  std::int64_t n = (prec >= kInfPrec)
                       ? static_cast<std::int64_t>(inner_.size() + o.inner_.size()) - 1
                       : prec - lo;
  if (n <= 0) return make(base_, 0, {}, prec);
  // sound uniform bound for the inner precision of the convolution
  std::int64_t ip = std::min(add_prec(inner_val_floor(*this), o.inner_prec_),
                             add_prec(inner_val_floor(o), inner_prec_));
  std::vector<LaurentSeries1> out(
      static_cast<std::size_t>(n), LaurentSeries1::exact_zero(base_));
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    if (inner_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < o.inner_.size(); ++j) {
      if (i + j >= out.size()) break;
      out[i + j] = out[i + j] + inner_[i] * o.inner_[j];
    }
  }
  for (auto& c : out) c = c.truncated(ip);
  return make(base_, lo, std::move(out), prec);
}

LaurentSeries2 LaurentSeries2::inverse(std::int64_t s_hint,
                                       std::int64_t t_hint) const {
  if (inner_.empty())
    throw ZeroDivisor("division by a two-dimensional zero window");
  if (!inner_.front().known_nonzero())
    throw PrecisionExhausted("cannot invert: leading inner series uncertified");
  // exact monomial-in-s with invertible-monomial inner: exact inverse
  if (s_abs_prec_ >= kInfPrec && inner_.size() == 1 &&
      inner_[0].is_exact() && inner_[0].coeffs().size() == 1)
    return from_inner(inner_[0].inverse(), -s_val_);

  std::int64_t rel = (s_abs_prec_ >= kInfPrec) ? s_hint : s_abs_prec_ - s_val_;
  const LaurentSeries1 inv0 = inner_[0].inverse(t_hint);
  std::vector<LaurentSeries1> out{inv0};
  for (std::int64_t k = 1; k < rel; ++k) {
    LaurentSeries1 acc = LaurentSeries1::exact_zero(base_);
    std::int64_t top = std::min<std::int64_t>(
        k, static_cast<std::int64_t>(inner_.size()) - 1);
    for (std::int64_t i = 1; i <= top; ++i)
      acc = acc + inner_[static_cast<std::size_t>(i)] *
                      out[static_cast<std::size_t>(k - i)];
    out.push_back(-(inv0 * acc));
  }
  return make(base_, -s_val_, std::move(out), clamp_prec(-s_val_ + rel));
}

LaurentSeries2 LaurentSeries2::div(const LaurentSeries2& o, std::int64_t s_hint,
                                   std::int64_t t_hint) const {
  return *this * o.inverse(s_hint, t_hint);
}

LaurentSeries2 LaurentSeries2::pow(std::int64_t n, std::int64_t s_hint,
                                   std::int64_t t_hint) const {
  if (n < 0) return inverse(s_hint, t_hint).pow(-n, s_hint, t_hint);
  LaurentSeries2 acc = constant(FieldElem::one(base_));
  LaurentSeries2 base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool LaurentSeries2::agrees_with(const LaurentSeries2& o) const {
  std::int64_t prec = std::min(s_abs_prec_, o.s_abs_prec_);
  std::int64_t lo = std::min(inner_.empty() ? prec : s_val_,
                             o.inner_.empty() ? prec : o.s_val_);
  if (prec >= kInfPrec) {
    if (s_val_ != o.s_val_ || inner_.size() != o.inner_.size()) return false;
    for (std::size_t i = 0; i < inner_.size(); ++i)
      if (!inner_[i].agrees_with(o.inner_[i])) return false;
    return true;
  }
  for (std::int64_t k = lo; k < prec; ++k)
    if (!inner_at(k).agrees_with(o.inner_at(k))) return false;
  return true;
}

std::string LaurentSeries2::to_string() const {
  std::ostringstream os;
  if (inner_.empty()) {
    if (s_abs_prec_ >= kInfPrec) return "0";
    os << "O(s^" << s_abs_prec_ << ")";
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    std::int64_t k = s_val_ + static_cast<std::int64_t>(i);
    if (inner_[i].is_exact_zero()) continue;
    if (!first) os << "+";
    first = false;
    os << "(" << inner_[i].to_string() << ")";
    if (k != 0) {
      os << "*s";
      if (k != 1) os << "^" << k;
    }
  }
  if (s_abs_prec_ < kInfPrec) os << "+O(s^" << s_abs_prec_ << ")";
  return os.str();
}

LaurentSeries2 ls2_arith(const LaurentSeries2& a, const LaurentSeries2& b,
                         SeriesOp op, std::int64_t s_hint, std::int64_t t_hint) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
    case SeriesOp::Div:
      return a.div(b, s_hint, t_hint);
  }
  throw Error("Internal", "bad series op");
}

std::int64_t ls2_valuation_s(const LaurentSeries2& a) { return a.s_valuation(); }

std::pair<std::int64_t, LaurentSeries1> ls2_reduce(const LaurentSeries2& a) {
  return a.reduce();
}

}  // namespace tame
