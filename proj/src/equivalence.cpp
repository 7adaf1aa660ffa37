#include "equivalence.hpp"

#include <numeric>

namespace gs {

std::optional<Element> brute_force_equivalent(const GroupFunction& f1, const GroupFunction& f2, Side side,
                                              double tol) {
  validate(f1);
  validate(f2);
  if (f1.group.get() != f2.group.get()) fail(Errc::InvalidArg, "comparing functions on different groups");
  const FiniteGroup& G = *f1.group;
  int n = G.order();
  for (Element t = 0; t < n; ++t) {
    Element ti = G.inverse(t);
    double worst = 0;
    for (Element x = 0; x < n && worst <= tol; ++x) {
      Element src = side == Side::Left ? G.compose(ti, x) : G.compose(x, ti);
      worst = std::max(worst, std::abs(f1.values[src] - f2.values[x]));
    }
    if (worst <= tol) return t;
  }
  return std::nullopt;
}

InvertibilityReport fourier_invertibility(const FourierCoefficients& F, double rel_tol) {
  InvertibilityReport rep;
  const IrrepSet& R = *F.irreps;
  for (int r = 0; r < R.count(); ++r) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F.blocks[r]);
    InvertibilityRow row;
    row.label = R.irreps[r].label;
    const auto& sv = svd.singularValues();
    row.smax = sv.size() ? sv[0] : 0.0;
    row.smin = sv.size() ? sv[sv.size() - 1] : 0.0;
    row.invertible = row.smax > 0 && row.smin > rel_tol * row.smax;
    rep.all_invertible = rep.all_invertible && row.invertible;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CompareReport skew_equivalent(const GroupFunction& f1, const GroupFunction& f2, const IrrepSetPtr& R,
                              Side side, double tol, OpCounter& ops) {
  validate(f1);
  validate(f2);
  if (f1.group.get() != f2.group.get()) fail(Errc::InvalidArg, "comparing functions on different groups");
  if (R->group.get() != f1.group.get()) fail(Errc::InvalidArg, "irrep set uses a different group");

  GroupFunction a = side == Side::Left ? f1 : mirror(f1);
  GroupFunction b = side == Side::Left ? f2 : mirror(f2);

  std::vector<Element> all(f1.group->order());
  std::iota(all.begin(), all.end(), 0);
  SkewSpectrum sa = skew_spectrum(a, R, all, ops);
  SkewSpectrum sb = skew_spectrum(b, R, all, ops);

  CompareReport rep;
  rep.tol = tol;
  rep.spectra_equal = true;
  for (std::size_t zi = 0; zi < all.size(); ++zi) {
    for (int r = 0; r < R->count(); ++r) {
      const Eigen::MatrixXcd& qa = sa.entries[zi][r];
      const Eigen::MatrixXcd& qb = sb.entries[zi][r];
      double rel = (qa - qb).norm() / (1.0 + qa.norm() + qb.norm());
      rep.max_residual = std::max(rep.max_residual, rel);
      if (rel > tol) rep.spectra_equal = false;
    }
  }

  OpCounter scratch;
  rep.invertible_1 = fourier_invertibility(fourier_transform(a, R, scratch)).all_invertible;
  rep.invertible_2 = fourier_invertibility(fourier_transform(b, R, scratch)).all_invertible;

  if (!rep.spectra_equal)
    rep.verdict = Verdict::Distinct;
  else if (rep.invertible_1 && rep.invertible_2)
    rep.verdict = Verdict::Equivalent;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

}  // namespace gs
