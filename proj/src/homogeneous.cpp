#include "homogeneous.hpp"

#include <cmath>

namespace gs {

void validate(const CosetFunction& f) {
  if (!f.space.subgroup.parent) fail(Errc::InvalidArg, "coset function has no group");
  if (f.values.size() != f.space.count())
    fail(Errc::InvalidArg, "coset function length does not match the number of cosets");
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (!std::isfinite(f.values[i].real()) || !std::isfinite(f.values[i].imag()))
      fail(Errc::Numeric, "coset function contains a non-finite value");
}

GroupFunction lift(const CosetFunction& f) {
  validate(f);
  if (f.space.kind == CosetKind::Double) fail(Errc::InvalidArg, "lift requires a one-sided coset space");
  const GroupPtr& g = f.space.subgroup.parent;
  double scale = 1.0 / f.space.subgroup.order();
  GroupFunction out;
  out.group = g;
  out.values.resize(g->order());
  for (Element x = 0; x < g->order(); ++x) out.values[x] = f.values[f.space.coset_of[x]] * scale;
  return out;
}

CosetFunction restrict_function(const GroupFunction& g, const CosetTransversal& space) {
  validate(g);
  if (space.kind == CosetKind::Double) fail(Errc::InvalidArg, "restriction requires a one-sided coset space");
  if (space.subgroup.parent.get() != g.group.get())
    fail(Errc::InvalidArg, "coset space belongs to a different group");
  const FiniteGroup& G = *g.group;
  CosetFunction out;
  out.space = space;
  out.values = Eigen::VectorXcd::Zero(space.count());
  for (int i = 0; i < space.count(); ++i) {
    Element y = space.reps[i];
    for (Element h : space.subgroup.members)
      out.values[i] += space.kind == CosetKind::Left ? g.values[G.compose(y, h)] : g.values[G.compose(h, y)];
  }
  return out;
}

SparsityProfile sparsity_profile(const IrrepSet& set, const SubgroupModel& hm) {
  SparsityProfile p;
  for (int r = 0; r < set.count(); ++r) {
    RestrictionReport rep = restriction_blocks(set, r, hm);
    p.n_rho.push_back(rep.trivial_multiplicity);
    p.columns.push_back(rep.trivial_columns);
  }
  return p;
}

FourierCoefficients coset_fourier(const CosetFunction& f, const IrrepSetPtr& R, OpCounter& ops) {
  validate(f);
  if (f.space.kind != CosetKind::Left) fail(Errc::InvalidArg, "coset Fourier transform expects left cosets");
  const Subgroup& h = f.space.subgroup;
  if (R->group.get() != h.parent.get()) fail(Errc::InvalidArg, "irrep set uses a different group");
  // Fails when the basis is not adapted to h.
  SubgroupModel model = subgroup_model(R->group, h);
  for (int r = 0; r < R->count(); ++r) restriction_blocks(*R, r, model);

  FourierCoefficients F;
  F.irreps = R;
  int t = f.space.count();
  for (const Irrep& rho : R->irreps) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rho.dim, rho.dim);
    for (int i = 0; i < t; ++i) a += f.values[i] * rho.at(f.space.reps[i]);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(rho.dim, rho.dim);
    for (Element m : h.members) b += rho.at(m);
    F.blocks.push_back(a * b);
    std::uint64_t dd = static_cast<std::uint64_t>(rho.dim) * rho.dim;
    ops.ft.mults += dd * t;
    ops.ft.adds += dd * (t - 1) + dd * (h.order() - 1);
    count_matmul(ops.ft, rho.dim, rho.dim, rho.dim);
  }
  return F;
}

SkewSpectrum restricted_skew_spectrum(const CosetFunction& f, const IrrepSetPtr& R, OpCounter& ops) {
  validate(f);
  if (f.space.kind != CosetKind::Left)
    fail(Errc::InvalidArg, "restricted skew spectrum expects a left coset function");
  CosetTransversal dbl = transversal(f.space.subgroup.parent, f.space.subgroup, CosetKind::Double);
  return skew_spectrum(lift(f), R, dbl.reps, ops);
}

std::vector<Eigen::MatrixXcd> skew_via_partial_transforms(const CosetFunction& f, Element z,
                                                          const IrrepSetPtr& R, OpCounter& ops) {
  validate(f);
  if (f.space.kind != CosetKind::Left)
    fail(Errc::InvalidArg, "partial-transform skew computation expects a left coset function");
  const GroupPtr& g = f.space.subgroup.parent;
  const FiniteGroup& G = *g;
  const Subgroup& h = f.space.subgroup;
  int hsize = h.order();
  int n = G.order();

  SubgroupModel model = subgroup_model(g, h);
  const IrrepSet& eta_set = *model.model_irreps;
  std::vector<RestrictionReport> rep(R->count());
  std::vector<std::vector<int>> eta_index(R->count());
  for (int r = 0; r < R->count(); ++r) {
    rep[r] = restriction_blocks(*R, r, model);
    for (const RestrictionBlock& blk : rep[r].blocks) {
      int e = eta_set.index_of(blk.eta_label);
      if (e < 0) fail(Errc::Internal, "restriction block label missing from the subgroup model");
      eta_index[r].push_back(e);
    }
  }

  GroupFunction L = lift(f);
  FourierCoefficients Lhat = fourier_transform(L, R, ops);

  // ghat(rho) for g(x) = L(xz), via the right-translation covariance.
  std::vector<Eigen::MatrixXcd> ghat(R->count());
  Element zi = G.inverse(z);
  for (int r = 0; r < R->count(); ++r) {
    int d = R->irreps[r].dim;
    ghat[r] = Lhat.blocks[r] * R->irreps[r].at(zi);
    count_matmul(ops.products, d, d, d);
  }

  std::vector<Eigen::MatrixXcd> result(R->count());
  for (int r = 0; r < R->count(); ++r)
    result[r] = Eigen::MatrixXcd::Zero(R->irreps[r].dim, R->irreps[r].dim);

  for (int i = 0; i < f.space.count(); ++i) {
    Element y = f.space.reps[i];
    // Backward half: subgroup-level coefficients g_y(eta) read off the
    // diagonal blocks of rho(y)^dagger ghat(rho), weighted by Schur
    // orthogonality over H.
    std::vector<Eigen::MatrixXcd> gy;
    for (const Irrep& eta : eta_set.irreps) gy.push_back(Eigen::MatrixXcd::Zero(eta.dim, eta.dim));
    for (int r = 0; r < R->count(); ++r) {
      const Irrep& rho = R->irreps[r];
      const Eigen::MatrixXcd& ry = rho.at(y);
      for (std::size_t b = 0; b < rep[r].blocks.size(); ++b) {
        const RestrictionBlock& blk = rep[r].blocks[b];
        gy[eta_index[r][b]] += static_cast<double>(rho.dim) *
                               (ry.middleCols(blk.col_begin, blk.dim).adjoint() *
                                ghat[r].middleCols(blk.col_begin, blk.dim));
        count_matmul(ops.products, blk.dim, rho.dim, blk.dim);
        ops.products.mults += static_cast<std::uint64_t>(blk.dim) * blk.dim;
        ops.products.adds += static_cast<std::uint64_t>(blk.dim) * blk.dim;
      }
    }
    // Pointwise stage: multiply by the lift value at y and fold in the
    // constant weights.
    for (std::size_t e = 0; e < gy.size(); ++e) {
      double w = static_cast<double>(hsize) / (static_cast<double>(n) * eta_set.irreps[e].dim);
      gy[e] *= w * L.values[y];
      ops.products.mults += static_cast<std::uint64_t>(gy[e].rows()) * gy[e].cols() + 1;
    }
    // Forward half: rhat_z(rho) += rho(y) * blockdiag(g_y(eta_b)).
    for (int r = 0; r < R->count(); ++r) {
      const Irrep& rho = R->irreps[r];
      for (std::size_t b = 0; b < rep[r].blocks.size(); ++b) {
        const RestrictionBlock& blk = rep[r].blocks[b];
        result[r].middleCols(blk.col_begin, blk.dim) +=
            rho.at(y).middleCols(blk.col_begin, blk.dim) * gy[eta_index[r][b]];
        count_matmul(ops.products, rho.dim, blk.dim, blk.dim);
        ops.products.adds += static_cast<std::uint64_t>(rho.dim) * blk.dim;
      }
    }
  }
  return result;
}

RankReport rank_condition(const CosetFunction& f, const IrrepSetPtr& R, double rank_tol) {
  validate(f);
  if (f.space.kind != CosetKind::Right)
    fail(Errc::InvalidArg, "rank condition is defined for right coset functions");
  const GroupPtr& g = f.space.subgroup.parent;
  SubgroupModel model = subgroup_model(g, f.space.subgroup);

  OpCounter scratch;
  FourierCoefficients F = fourier_transform(lift(f), R, scratch);

  // Singular values are compared against the largest one across the whole
  // transform, not per block: a block that is zero up to roundoff must
  // count as rank zero, and its own noise floor cannot be the yardstick.
  std::vector<Eigen::VectorXd> sv;
  double global_smax = 0;
  for (int r = 0; r < R->count(); ++r) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(F.blocks[r]);
    sv.push_back(svd.singularValues());
    if (sv.back().size()) global_smax = std::max(global_smax, sv.back()[0]);
  }

  RankReport report;
  report.tolerance = rank_tol;
  for (int r = 0; r < R->count(); ++r) {
    RankRow row;
    row.label = R->irreps[r].label;
    row.expected = restriction_blocks(*R, r, model).trivial_multiplicity;
    row.smax = sv[r].size() ? sv[r][0] : 0.0;
    if (global_smax > 0)
      for (Eigen::Index i = 0; i < sv[r].size(); ++i)
        if (sv[r][i] > rank_tol * global_smax) ++row.rank;
    row.ok = (row.rank == row.expected);
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gs
