#pragma once

#include <string>

#include "tame/reciprocity.hpp"

namespace tame {

/// Human-readable table: one row per place/branch, the running product, and
/// a PASS/FAIL verdict.
std::string render_text(const VerificationReport& rep);

/// Machine-readable report:
/// { schema: 1, law, field, precision, entries: [{place, symbol, norm}],
///   product, passed }.
std::string render_json(const VerificationReport& rep);

}  // namespace tame
