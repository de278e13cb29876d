#include "tame/poly.hpp"

#include <sstream>

namespace tame {

Poly::Poly(FieldSpecPtr spec, std::vector<FieldElem> coeffs, std::string var)
    : spec_(std::move(spec)), c_(std::move(coeffs)), var_(std::move(var)) {
  for (const auto& c : c_)
    if (!same_spec(c.spec(), spec_))
      throw SpecMismatch("polynomial coefficient in the wrong field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const FieldSpecPtr& spec, std::string var) {
  return Poly(spec, {}, std::move(var));
}

Poly Poly::constant(const FieldElem& c, std::string var) {
  return Poly(c.spec(), {c}, std::move(var));
}

Poly Poly::monomial(const FieldElem& c, std::int64_t k, std::string var) {
  std::vector<FieldElem> v(static_cast<std::size_t>(k) + 1,
                           FieldElem::zero(c.spec()));
  v.back() = c;
  return Poly(c.spec(), std::move(v), std::move(var));
}

FieldElem Poly::coeff(std::int64_t k) const {
  if (k < 0 || k >= static_cast<std::int64_t>(c_.size()))
    return FieldElem::zero(spec_);
  return c_[static_cast<std::size_t>(k)];
}

const FieldElem& Poly::lc() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero");
  return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Poly Poly::operator+(const Poly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("poly + field mismatch");
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()),
                           FieldElem::zero(spec_));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] = r[i] + c_[i];
    if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
  }
  return Poly(spec_, std::move(r), var_);
}

Poly Poly::operator-() const {
  std::vector<FieldElem> r = c_;
  for (auto& c : r) c = -c;
  return Poly(spec_, std::move(r), var_);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("poly * field mismatch");
  if (is_zero() || o.is_zero()) return zero(spec_, var_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1,
                           FieldElem::zero(spec_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return Poly(spec_, std::move(r), var_);
}

Poly Poly::operator*(const FieldElem& s) const {
  std::vector<FieldElem> r = c_;
  for (auto& c : r) c = c * s;
  return Poly(spec_, std::move(r), var_);
}

Poly Poly::pow(std::int64_t n) const {
  if (n < 0) throw Error("Internal", "negative polynomial power");
  Poly acc = constant(FieldElem::one(spec_), var_);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!same_spec(spec_, d.spec_)) throw SpecMismatch("divrem field mismatch");
  std::vector<FieldElem> rem = c_;
  std::int64_t dd = d.degree();
  if (degree() < dd) return {zero(spec_, var_), *this};
  std::vector<FieldElem> quo(static_cast<std::size_t>(degree() - dd) + 1,
                             FieldElem::zero(spec_));
  FieldElem inv_lc = d.lc().inverse();
  for (std::int64_t k = degree(); k >= dd; --k) {
    FieldElem& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    FieldElem q = top * inv_lc;
    quo[static_cast<std::size_t>(k - dd)] = q;
    for (std::int64_t i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] =
          rem[static_cast<std::size_t>(k - dd + i)] - q * d.c_[static_cast<std::size_t>(i)];
  }
  return {Poly(spec_, std::move(quo), var_), Poly(spec_, std::move(rem), var_)};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) throw Error("Internal", "exact_div has remainder");
  return q;
}

std::optional<Poly> Poly::try_exact_div(const Poly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::int64_t Poly::multiplicity(const Poly& d) const {
  if (is_zero()) throw ZeroPolynomial("multiplicity in zero polynomial");
  if (d.degree() < 1) throw Error("Internal", "multiplicity of a constant");
  std::int64_t e = 0;
  Poly cur = *this;
  for (;;) {
    auto [q, r] = cur.divrem(d);
    if (!r.is_zero()) return e;
    ++e;
    cur = q;
  }
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(spec_, var_);
  std::vector<FieldElem> r(c_.size() - 1, FieldElem::zero(spec_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * FieldElem::from_integer(spec_, static_cast<std::int64_t>(i));
  return Poly(spec_, std::move(r), var_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

Poly Poly::reversed() const {
  std::vector<FieldElem> r(c_.rbegin(), c_.rend());
  return Poly(spec_, std::move(r), var_);
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc = zero(spec_, q.var());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * q + constant(*it, q.var());
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  if (!same_spec(spec_, o.spec_)) throw SpecMismatch("poly == field mismatch");
  return c_ == o.c_;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t k = degree(); k >= 0; --k) {
    const FieldElem& c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c.to_string();
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-') != std::string::npos ||
                     cs.find('*') != std::string::npos;
    if (k == 0) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (!c.is_one()) os << (composite ? "(" + cs + ")" : cs) << "*";
      os << var_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PolyEgcd poly_egcd(const Poly& a, const Poly& b) {
  const auto& spec = a.spec();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(FieldElem::one(spec), a.var()),
       u1 = Poly::zero(spec, a.var());
  Poly v0 = Poly::zero(spec, a.var()),
       v1 = Poly::constant(FieldElem::one(spec), a.var());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    Poly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  FieldElem s = r0.lc().inverse();
  return {r0 * s, u0 * s, v0 * s};
}

Poly Poly::inverse_mod(const Poly& m) const {
  auto e = poly_egcd(mod(m), m);
  if (e.g.degree() != 0)
    throw DivisionByZero("element not invertible modulo " + m.to_string());
  return e.u.mod(m);
}

FieldElem resultant(const Poly& a_in, const Poly& b_in) {
  const auto& spec = a_in.spec();
  if (a_in.is_zero() || b_in.is_zero()) return FieldElem::zero(spec);
  Poly a = a_in, b = b_in;
  FieldElem res = FieldElem::one(spec);
  while (b.degree() > 0) {
    Poly r = a.mod(b);
    std::int64_t da = a.degree(), db = b.degree(),
                 dr = r.is_zero() ? -1 : r.degree();
    if ((da * db) % 2 == 1) res = -res;
    if (r.is_zero()) return FieldElem::zero(spec);
    res = res * b.lc().pow(da - dr);
    a = std::move(b);
    b = std::move(r);
  }
  return res * b.coeff(0).pow(a.degree());
}

Poly pow_mod(const Poly& a, const boost::multiprecision::cpp_int& e_in,
             const Poly& m) {
  using boost::multiprecision::cpp_int;
  cpp_int e = e_in;
  Poly acc = Poly::constant(FieldElem::one(a.spec()), a.var());
  Poly base = a.mod(m);
  while (e > 0) {
    if ((e & 1) != 0) acc = (acc * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1;
  }
  return acc;
}

Poly poly_truncate(const Poly& p, std::int64_t prec) {
  if (p.degree() < prec) return p;
  std::vector<FieldElem> c = p.coeffs();
  c.resize(static_cast<std::size_t>(std::max<std::int64_t>(prec, 0)));
  return Poly(p.spec(), std::move(c), p.var());
}

Poly poly_series_inverse(const Poly& p, std::int64_t prec) {
  FieldElem c0 = p.coeff(0);
  if (c0.is_zero())
    throw DivisionByZero("series inverse of a polynomial vanishing at 0");
  FieldElem inv0 = c0.inverse();
  std::vector<FieldElem> out{inv0};
  for (std::int64_t k = 1; k < prec; ++k) {
    FieldElem acc = FieldElem::zero(p.spec());
    for (std::int64_t i = 1; i <= std::min(k, p.degree()); ++i)
      acc = acc + p.coeff(i) * out[static_cast<std::size_t>(k - i)];
    out.push_back(-(inv0 * acc));
  }
  return Poly(p.spec(), std::move(out), p.var());
}

Poly embed_poly(const Poly& p, const FieldSpecPtr& target) {
  std::vector<FieldElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(embed(x, target));
  return Poly(target, std::move(c), p.var());
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(FieldElem::one(den_.spec()), den_.var());
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  FieldElem s = den_.lc().inverse();
  num_ = num_ * s;
  den_ = den_ * s;
}

RatFunc RatFunc::from_poly(const Poly& p) {
  return RatFunc(p, Poly::constant(FieldElem::one(p.spec()), p.var()));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  return RatFunc(num_.pow(n), den_.pow(n));
}

std::int64_t RatFunc::order_at(const Poly& pi) const {
  if (is_zero()) throw ZeroPolynomial("order of the zero function");
  return num_.multiplicity(pi) - den_.multiplicity(pi);
}

std::int64_t RatFunc::order_at_infinity() const {
  if (is_zero()) throw ZeroPolynomial("order of the zero function");
  return den_.degree() - num_.degree();
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tame
