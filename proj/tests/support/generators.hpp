#pragma once

#include <random>

#include "tame/bivar.hpp"
#include "tame/factor.hpp"
#include "tame/series.hpp"

namespace tame::testgen {

inline FieldElem random_elem(const FieldSpecPtr& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, spec->order() - 1);
  if (spec->is_prime()) return FieldElem::from_integer(spec, d(rng));
  std::vector<FieldElem> coords;
  for (std::int64_t i = 0; i < spec->degree(); ++i)
    coords.push_back(random_elem(spec->base(), rng));
  return FieldElem::from_coords(spec, std::move(coords));
}

inline FieldElem random_nonzero(const FieldSpecPtr& spec, std::mt19937_64& rng) {
  for (;;) {
    FieldElem e = random_elem(spec, rng);
    if (!e.is_zero()) return e;
  }
}

/// Exact Laurent polynomial with unit leading coefficient: t^val * (c0 + ...),
/// c0 != 0.
inline LaurentSeries1 random_series1(const FieldSpecPtr& spec,
                                     std::mt19937_64& rng,
                                     std::int64_t max_abs_val,
                                     std::int64_t terms = 5) {
  std::uniform_int_distribution<std::int64_t> vd(-max_abs_val, max_abs_val);
  std::int64_t val = vd(rng);
  std::vector<FieldElem> coeffs{random_nonzero(spec, rng)};
  for (std::int64_t i = 1; i < terms; ++i) coeffs.push_back(random_elem(spec, rng));
  return LaurentSeries1::make(spec, val, std::move(coeffs), kInfPrec);
}

/// Exact two-variable Laurent polynomial with known-nonzero leading inner.
inline LaurentSeries2 random_series2(const FieldSpecPtr& spec,
                                     std::mt19937_64& rng,
                                     std::int64_t max_s_val,
                                     std::int64_t max_t_val,
                                     std::int64_t s_terms = 3) {
  std::uniform_int_distribution<std::int64_t> vd(-max_s_val, max_s_val);
  std::int64_t sval = vd(rng);
  std::vector<LaurentSeries1> inner{random_series1(spec, rng, max_t_val)};
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::int64_t i = 1; i < s_terms; ++i) {
    if (coin(rng) == 0)
      inner.push_back(LaurentSeries1::exact_zero(spec));
    else
      inner.push_back(random_series1(spec, rng, max_t_val));
  }
  return LaurentSeries2::make(spec, sval, std::move(inner), kInfPrec);
}

inline Poly random_poly(const FieldSpecPtr& spec, std::mt19937_64& rng,
                        std::int64_t max_deg, const std::string& var = "T") {
  std::uniform_int_distribution<std::int64_t> dd(0, max_deg);
  std::int64_t deg = dd(rng);
  std::vector<FieldElem> c;
  for (std::int64_t i = 0; i < deg; ++i) c.push_back(random_elem(spec, rng));
  c.push_back(random_nonzero(spec, rng));
  return Poly(spec, std::move(c), var);
}

inline RatFunc random_ratfunc(const FieldSpecPtr& spec, std::mt19937_64& rng,
                              std::int64_t max_deg) {
  return RatFunc(random_poly(spec, rng, max_deg),
                 random_poly(spec, rng, max_deg));
}

}  // namespace tame::testgen
