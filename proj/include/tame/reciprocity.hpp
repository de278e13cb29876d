#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/branch.hpp"
#include "tame/symbols.hpp"

namespace tame {

/// Closed point of P^1 over the ground field: a monic irreducible polynomial
/// or the place at infinity.
struct Place {
  bool at_infinity = false;
  Poly pi;  // finite places only; monic irreducible
  FieldSpecPtr residue_spec;
  std::string id() const;
  std::int64_t degree() const { return at_infinity ? 1 : pi.degree(); }
};

/// Closed point of P^2 in one of the three standard charts.  Chart 0 is the
/// affine (u, v) chart; chart 1 is the chart around [1:0:0] with coordinates
/// (1/u, v/u); chart 2 around [0:1:0] with (u/v, 1/v).
struct SurfacePoint {
  int chart = 0;
  FieldElem u0, v0;
  std::string id() const;
};

struct ReportEntry {
  std::string id;        // place or branch identifier
  FieldElem symbol;      // local symbol in the residue field
  FieldElem norm;        // normed to the ground field (or the symbol itself)
};

struct VerificationReport {
  std::string law;
  FieldSpecPtr field;
  std::vector<ReportEntry> entries;  // sorted by identifier
  FieldElem product;                 // exact product of the norm column
  bool passed = false;               // product == 1
  std::int64_t precision_used = 0;
};

struct VerifyOptions {
  std::int64_t precision = 16;
  std::int64_t retry_cap = 1024;
  std::uint64_t seed = 0x7a3e5eedULL;
};

/// Places where f, g (and optionally h) have nonzero order: the union of the
/// irreducible factors of all numerators and denominators, plus infinity
/// when some total degree is unbalanced.
std::vector<Place> places_of_support(const std::vector<RatFunc>& args,
                                     const FactorizeOptions& opts = {});

/// One-dimensional tame symbol at a place, computed from factor
/// multiplicities and an exact reduction of the unit part.
SymbolValue local_symbol_at_place(const RatFunc& f, const RatFunc& g,
                                  const Place& p);

/// Weil reciprocity: product over places of Nm of the local tame symbols.
VerificationReport weil_verify(const RatFunc& f, const RatFunc& g,
                               const VerifyOptions& opts = {});

/// Parshin point law: product of two-dimensional symbols over the branches
/// at x of the divisors of f, g, h (plus caller-supplied branches).
VerificationReport parshin_point_verify(
    const BivariateRational& f, const BivariateRational& g,
    const BivariateRational& h, const SurfacePoint& x,
    const std::vector<BranchDescriptor>& extra_branches = {},
    const VerifyOptions& opts = {});

/// A rational line in P^2: T -> (a + b T, c + d T).
struct LineCurve {
  FieldElem a, b, c, d;
  /// Defining polynomial d*(u-a) - b*(v-c), normalized.
  BivarPoly equation() const;
};

/// Parshin curve law along a line: product over points of C of the normed
/// two-dimensional symbols in K_(x,C).
VerificationReport parshin_curve_verify(const BivariateRational& f,
                                        const BivariateRational& g,
                                        const BivariateRational& h,
                                        const LineCurve& C,
                                        const VerifyOptions& opts = {});

}  // namespace tame
