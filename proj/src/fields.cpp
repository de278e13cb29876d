#include "tame/fields.hpp"

#include <algorithm>
#include <sstream>

#include "tame/poly.hpp"

namespace tame {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero("no inverse mod " + std::to_string(p));
  return mod_pos(t, p);
}

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Poly modulus_poly(const FieldSpecPtr& spec) {
  return Poly(spec->base(), spec->modulus(), spec->var());
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpecPtr FieldSpec::prime(std::int64_t p) {
  if (!is_prime_int(p))
    throw UnsupportedBase("characteristic must be prime, got " +
                          std::to_string(p));
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = Kind::Prime;
  spec->p_ = p;
  return spec;
}

FieldSpecPtr FieldSpec::extension(FieldSpecPtr base,
                                  std::vector<FieldElem> modulus,
                                  std::string var) {
  if (!base) throw UnsupportedBase("extension requires a base field");
  if (base->is_rationals())
    throw UnsupportedBase("extensions of Q are not supported");
  while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
  if (modulus.size() < 2)
    throw UnsupportedBase("modulus must have degree >= 1");
  for (const auto& c : modulus)
    if (!same_spec(c.spec(), base))
      throw SpecMismatch("modulus coefficients must live in the base field");
  if (!modulus.back().is_one())
    throw UnsupportedBase("modulus must be monic");
  if (!detail::modulus_is_irreducible(base, modulus))
    throw UnsupportedBase("modulus is reducible over the base field");
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = Kind::Extension;
  spec->p_ = base->characteristic();
  spec->base_ = std::move(base);
  spec->modulus_ = std::move(modulus);
  spec->var_ = std::move(var);
  return spec;
}

FieldSpecPtr FieldSpec::rationals() {
  static FieldSpecPtr q = [] {
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->kind_ = Kind::Rationals;
    return FieldSpecPtr(spec);
  }();
  return q;
}

std::int64_t FieldSpec::characteristic() const {
  return kind_ == Kind::Rationals ? 0 : p_;
}

std::int64_t FieldSpec::order() const {
  if (kind_ == Kind::Rationals)
    throw UnsupportedBase("Q is not a finite field");
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < absolute_degree(); ++i) {
    if (q > (std::int64_t(1) << 62) / p_)
      throw UnsupportedBase("field order out of desk-scale range");
    q *= p_;
  }
  return q;
}

std::int64_t FieldSpec::degree() const {
  return kind_ == Kind::Extension
             ? static_cast<std::int64_t>(modulus_.size()) - 1
             : 1;
}

std::int64_t FieldSpec::absolute_degree() const {
  return kind_ == Kind::Extension ? degree() * base_->absolute_degree() : 1;
}

const FieldSpecPtr& FieldSpec::base() const {
  if (kind_ != Kind::Extension)
    throw NotAnExtensionElement("field has no base");
  return base_;
}

const std::vector<FieldElem>& FieldSpec::modulus() const {
  if (kind_ != Kind::Extension)
    throw NotAnExtensionElement("field has no modulus");
  return modulus_;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Prime:
      return "F" + std::to_string(p_);
    case Kind::Rationals:
      return "Q";
    case Kind::Extension: {
      std::string base = base_->to_string();
      Poly m(base_, modulus_, var_);
      if (base_->is_prime())
        return "F" + std::to_string(p_) + "^" + std::to_string(degree()) +
               ":" + m.to_string();
      return base + "[" + var_ + "]/(" + m.to_string() + ")";
    }
  }
  return "?";
}

bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case FieldSpec::Kind::Rationals:
      return true;
    case FieldSpec::Kind::Prime:
      return a->p() == b->p();
    case FieldSpec::Kind::Extension: {
      if (!same_spec(a->base(), b->base())) return false;
      const auto& ma = a->modulus();
      const auto& mb = b->modulus();
      if (ma.size() != mb.size()) return false;
      for (std::size_t i = 0; i < ma.size(); ++i)
        if (ma[i] != mb[i]) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem FieldElem::zero(const FieldSpecPtr& spec) {
  return from_integer(spec, 0);
}

FieldElem FieldElem::one(const FieldSpecPtr& spec) {
  return from_integer(spec, 1);
}

FieldElem FieldElem::from_integer(const FieldSpecPtr& spec, std::int64_t n) {
  FieldElem e;
  e.spec_ = spec;
  switch (spec->kind()) {
    case FieldSpec::Kind::Prime:
      e.n_ = mod_pos(n, spec->p());
      break;
    case FieldSpec::Kind::Rationals:
      e.q_ = Rational(n);
      break;
    case FieldSpec::Kind::Extension:
      e.c_.assign(static_cast<std::size_t>(spec->degree()),
                  FieldElem::zero(spec->base()));
      e.c_[0] = FieldElem::from_integer(spec->base(), n);
      break;
  }
  return e;
}

FieldElem FieldElem::from_rational(const FieldSpecPtr& spec,
                                   const Rational& q) {
  if (!spec->is_rationals())
    throw SpecMismatch("rational literal in a non-rational field");
  FieldElem e;
  e.spec_ = spec;
  e.q_ = q;
  return e;
}

FieldElem FieldElem::from_coords(const FieldSpecPtr& spec,
                                 std::vector<FieldElem> coords) {
  if (!spec->is_extension())
    throw NotAnExtensionElement("from_coords requires an extension field");
  const auto d = static_cast<std::size_t>(spec->degree());
  for (const auto& c : coords)
    if (!same_spec(c.spec(), spec->base()))
      throw SpecMismatch("coordinate not in the base field");
  if (coords.size() > d) {
    Poly rep(spec->base(), std::move(coords), spec->var());
    rep = rep.mod(modulus_poly(spec));
    coords = rep.coeffs();
  }
  coords.resize(d, FieldElem::zero(spec->base()));
  FieldElem e;
  e.spec_ = spec;
  e.c_ = std::move(coords);
  return e;
}

bool FieldElem::is_zero() const {
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      return n_ == 0;
    case FieldSpec::Kind::Rationals:
      return q_ == 0;
    case FieldSpec::Kind::Extension:
      return std::all_of(c_.begin(), c_.end(),
                         [](const FieldElem& c) { return c.is_zero(); });
  }
  return false;
}

bool FieldElem::is_one() const { return *this == one(spec_); }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (!same_spec(spec_, o.spec_))
    throw SpecMismatch("field mismatch in +");
  FieldElem e;
  e.spec_ = spec_;
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      e.n_ = mod_pos(n_ + o.n_, spec_->p());
      break;
    case FieldSpec::Kind::Rationals:
      e.q_ = q_ + o.q_;
      break;
    case FieldSpec::Kind::Extension:
      e.c_ = c_;
      for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = c_[i] + o.c_[i];
      break;
  }
  return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return *this + (-o);
}

FieldElem FieldElem::operator-() const {
  FieldElem e;
  e.spec_ = spec_;
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      e.n_ = n_ == 0 ? 0 : spec_->p() - n_;
      break;
    case FieldSpec::Kind::Rationals:
      e.q_ = -q_;
      break;
    case FieldSpec::Kind::Extension:
      e.c_ = c_;
      for (auto& c : e.c_) c = -c;
      break;
  }
  return e;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (!same_spec(spec_, o.spec_))
    throw SpecMismatch("field mismatch in *");
  FieldElem e;
  e.spec_ = spec_;
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      e.n_ = mul_mod(n_, o.n_, spec_->p());
      break;
    case FieldSpec::Kind::Rationals:
      e.q_ = q_ * o.q_;
      break;
    case FieldSpec::Kind::Extension: {
      Poly a(spec_->base(), c_, spec_->var());
      Poly b(spec_->base(), o.c_, spec_->var());
      Poly r = (a * b).mod(modulus_poly(spec_));
      e.c_ = r.coeffs();
      e.c_.resize(static_cast<std::size_t>(spec_->degree()),
                  FieldElem::zero(spec_->base()));
      break;
    }
  }
  return e;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  FieldElem e;
  e.spec_ = spec_;
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      e.n_ = inv_mod(n_, spec_->p());
      break;
    case FieldSpec::Kind::Rationals:
      e.q_ = Rational(1) / q_;
      break;
    case FieldSpec::Kind::Extension: {
      Poly a(spec_->base(), c_, spec_->var());
      Poly inv = a.inverse_mod(modulus_poly(spec_));
      e.c_ = inv.coeffs();
      e.c_.resize(static_cast<std::size_t>(spec_->degree()),
                  FieldElem::zero(spec_->base()));
      break;
    }
  }
  return e;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (!same_spec(spec_, o.spec_))
    throw SpecMismatch("field mismatch in /");
  return *this * o.inverse();
}

FieldElem FieldElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElem acc = one(spec_);
  FieldElem base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!same_spec(spec_, o.spec_))
    throw SpecMismatch("field mismatch in ==");
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      return n_ == o.n_;
    case FieldSpec::Kind::Rationals:
      return q_ == o.q_;
    case FieldSpec::Kind::Extension:
      return c_ == o.c_;
  }
  return false;
}

std::int64_t FieldElem::residue() const {
  if (!spec_->is_prime())
    throw SpecMismatch("residue() requires a prime field element");
  return n_;
}

const Rational& FieldElem::rational() const {
  if (!spec_->is_rationals())
    throw SpecMismatch("rational() requires a rational element");
  return q_;
}

const std::vector<FieldElem>& FieldElem::coords() const {
  if (!spec_->is_extension())
    throw NotAnExtensionElement("coords() requires an extension element");
  return c_;
}

std::string FieldElem::to_string() const {
  switch (spec_->kind()) {
    case FieldSpec::Kind::Prime:
      return std::to_string(n_);
    case FieldSpec::Kind::Rationals: {
      std::ostringstream os;
      os << q_;
      return os.str();
    }
    case FieldSpec::Kind::Extension: {
      Poly rep(spec_->base(), c_, spec_->var());
      return rep.to_string();
    }
  }
  return "?";
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add:
      return a + b;
    case FieldOp::Sub:
      return a - b;
    case FieldOp::Mul:
      return a * b;
    case FieldOp::Div:
      if (b.is_zero()) throw DivisionByZero("division by zero");
      return a / b;
  }
  throw Error("Internal", "bad op");
}

FieldElem embed(const FieldElem& a, const FieldSpecPtr& target) {
  if (same_spec(a.spec(), target)) return a;
  if (!target->is_extension())
    throw SpecMismatch("cannot embed " + a.spec()->to_string() + " into " +
                       target->to_string());
  return FieldElem::from_coords(target, {embed(a, target->base())});
}

FieldElem norm_to_base(const FieldElem& a) {
  if (!a.spec()->is_extension())
    throw NotAnExtensionElement("norm_to_base requires an extension element");
  const auto& spec = a.spec();
  Poly rep(spec->base(), a.coords(), spec->var());
  Poly mod(spec->base(), spec->modulus(), spec->var());
  return resultant(mod, rep);
}

}  // namespace tame
