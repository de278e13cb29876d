#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tame/errors.hpp"

namespace tame {

using Rational = boost::multiprecision::cpp_rational;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldElem;

/// Description of a coefficient field: a prime field F_p, a finite extension
/// base[T]/(modulus) of another finite field, or the rationals.  Extensions
/// may be stacked (e.g. F_9 = F_3[T]/(T^2+1), then F_81 = F_9[Y]/(...)), which
/// is how residue fields of places over a non-prime ground field are housed.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  enum class Kind { Prime, Extension, Rationals };

  static FieldSpecPtr prime(std::int64_t p);
  /// Modulus coefficients are ascending, over `base`; must be monic and
  /// irreducible (checked at construction).
  static FieldSpecPtr extension(FieldSpecPtr base,
                                std::vector<FieldElem> modulus,
                                std::string var = "T");
  static FieldSpecPtr rationals();

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  bool is_extension() const { return kind_ == Kind::Extension; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  /// Characteristic (0 for the rationals).
  std::int64_t characteristic() const;
  /// Number of elements; throws UnsupportedBase for infinite fields.
  std::int64_t order() const;
  /// Extension degree over the immediate base (1 for prime fields / Q).
  std::int64_t degree() const;
  /// Total degree over the prime field.
  std::int64_t absolute_degree() const;

  const FieldSpecPtr& base() const;
  const std::vector<FieldElem>& modulus() const;
  const std::string& var() const { return var_; }
  std::int64_t p() const { return p_; }

  std::string to_string() const;

 private:
  FieldSpec() = default;

  Kind kind_ = Kind::Prime;
  std::int64_t p_ = 0;               // prime fields: the characteristic
  FieldSpecPtr base_;                // extensions only
  std::vector<FieldElem> modulus_;   // extensions only; monic, ascending
  std::string var_ = "T";
};

/// True when the two specs describe the same field (structural comparison).
bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b);

/// Immutable element of a field in canonical form: residue in [0, p) for
/// prime fields, reduced fraction for Q, coordinate vector of length
/// deg(modulus) over the base for extensions.  Equality is exact.
class FieldElem {
 public:
  FieldElem() = default;

  static FieldElem zero(const FieldSpecPtr& spec);
  static FieldElem one(const FieldSpecPtr& spec);
  static FieldElem from_integer(const FieldSpecPtr& spec, std::int64_t n);
  static FieldElem from_rational(const FieldSpecPtr& spec, const Rational& q);
  /// Extension element from ascending coordinates over the base (length at
  /// most the extension degree; reduced mod the modulus if longer).
  static FieldElem from_coords(const FieldSpecPtr& spec,
                               std::vector<FieldElem> coords);

  const FieldSpecPtr& spec() const { return spec_; }
  bool valid() const { return spec_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(std::int64_t n) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Prime-field residue / rational value accessors.
  std::int64_t residue() const;
  const Rational& rational() const;
  /// Extension coordinates (ascending, length = extension degree).
  const std::vector<FieldElem>& coords() const;

  /// Canonical text form, parseable by the CLI grammar.
  std::string to_string() const;

 private:
  FieldSpecPtr spec_;
  std::int64_t n_ = 0;          // prime residue
  Rational q_;                  // rationals
  std::vector<FieldElem> c_;    // extension coordinates
};

/// Spec-checked arithmetic entry point mirroring the CLI surface.
enum class FieldOp { Add, Sub, Mul, Div };
FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

/// Embeds `a` into `target`, which must contain a.spec() in its base chain
/// (e.g. F_3 element into F_9, or F_9 into F_9[Y]/(pi)).
FieldElem embed(const FieldElem& a, const FieldSpecPtr& target);

/// Field norm from an extension to its immediate base, computed as the
/// resultant Res(modulus, rep) of the canonical representative.
FieldElem norm_to_base(const FieldElem& a);

namespace detail {
/// Defined in factor.cpp; used by FieldSpec::extension to validate moduli.
bool modulus_is_irreducible(const FieldSpecPtr& base,
                            const std::vector<FieldElem>& modulus);
}  // namespace detail

}  // namespace tame
