#include "tame/symbols.hpp"

namespace tame {

SymbolValue tame1d(const LaurentSeries1& f, const LaurentSeries1& g) {
  std::int64_t a = f.valuation();
  std::int64_t b = g.valuation();
  FieldElem uf = f.residue_unit();
  FieldElem ug = g.residue_unit();
  // (-1)^(ab) uf^b / ug^a: the mod-t reduction of f^b/g^a only sees the
  // leading coefficients.
  FieldElem v = uf.pow(b) / ug.pow(a);
  if ((a * b) % 2 != 0) v = -v;
  if (v.is_zero()) throw NotAUnitAfterReduction("tame symbol vanished");
  return {v, f.base()};
}

std::int64_t nu_K(const LaurentSeries2& f, const LaurentSeries2& g,
                  std::int64_t t_hint) {
  std::int64_t a = f.s_valuation();
  std::int64_t b = g.s_valuation();
  LaurentSeries2 r = f.pow(b, kDefaultPrec, t_hint).div(
      g.pow(a, kDefaultPrec, t_hint), kDefaultPrec, t_hint);
  auto [v1, res] = r.reduce();
  if (v1 != 0)
    throw NotAUnitAfterReduction("nu_K ratio has nonzero outer valuation");
  return res.valuation();
}

SymbolValue tame2d(const LaurentSeries2& f, const LaurentSeries2& g,
                   const LaurentSeries2& h, std::int64_t t_hint) {
  std::int64_t n_gh = nu_K(g, h, t_hint);
  std::int64_t n_hf = nu_K(h, f, t_hint);
  std::int64_t n_fg = nu_K(f, g, t_hint);
  std::int64_t n_fh = -n_hf, n_gf = -n_fg, n_hg = -n_gh;

  std::int64_t A = n_fg * n_fh + n_gh * n_gf + n_hf * n_hg + n_fg * n_gh * n_hf;

  LaurentSeries2 w = f.pow(n_gh, kDefaultPrec, t_hint) *
                     g.pow(n_hf, kDefaultPrec, t_hint) *
                     h.pow(n_fg, kDefaultPrec, t_hint);
  auto [v1, res] = w.reduce();
  if (v1 != 0)
    throw NotAUnitAfterReduction("unit part has nonzero s-valuation");
  if (res.valuation() != 0)
    throw NotAUnitAfterReduction("unit part has nonzero t-valuation");
  FieldElem value = res.residue_unit();
  if (A % 2 != 0) value = -value;
  return {value, f.base()};
}

SymbolValue tame2d_branch_sum(const std::vector<LaurentSeries2>& f,
                              const std::vector<LaurentSeries2>& g,
                              const std::vector<LaurentSeries2>& h,
                              std::int64_t t_hint) {
  if (f.size() != g.size() || g.size() != h.size() || f.empty())
    throw LengthMismatch("branch lists must have equal nonzero length");
  SymbolValue acc = tame2d(f[0], g[0], h[0], t_hint);
  for (std::size_t i = 1; i < f.size(); ++i) {
    SymbolValue s = tame2d(f[i], g[i], h[i], t_hint);
    if (!same_spec(s.residue_spec, acc.residue_spec))
      throw SpecMismatch("branch residue fields disagree");
    acc.value = acc.value * s.value;
  }
  return acc;
}

}  // namespace tame
