#pragma once

#include <cstdint>
#include <vector>

#include "tame/poly.hpp"

namespace tame {

struct PolyFactor {
  Poly factor;                // monic irreducible
  std::int64_t multiplicity;  // >= 1
};

struct Factorization {
  FieldElem unit;                  // leading unit constant
  std::vector<PolyFactor> factors; // sorted canonically, pairwise distinct
};

struct FactorizeOptions {
  std::uint64_t seed = 0x7a3e5eedULL;
  /// Equal-degree splitting falls back to exhaustive trial division over all
  /// monic polynomials of the target degree while q^degree stays below this.
  std::int64_t exhaustive_bound = 4096;
};

/// Factors a nonzero univariate polynomial into monic irreducibles times a
/// unit.  Finite fields: distinct-degree then equal-degree splitting.  Over Q
/// only irreducible factors of degree <= 2 are supported (desk scale).
Factorization factorize(const Poly& p, const FactorizeOptions& opts = {});

/// Irreducibility test over a finite coefficient field.
bool is_irreducible(const Poly& p);

/// All elements of a finite field, in a deterministic order.
std::vector<FieldElem> all_field_elements(const FieldSpecPtr& spec);

}  // namespace tame
