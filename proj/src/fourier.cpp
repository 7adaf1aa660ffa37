#include "fourier.hpp"

#include <cmath>

namespace gs {

void validate(const GroupFunction& f) {
  if (!f.group) fail(Errc::InvalidArg, "group function has no group");
  if (f.values.size() != f.group->order())
    fail(Errc::InvalidArg, "group function length does not match group order");
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (!std::isfinite(f.values[i].real()) || !std::isfinite(f.values[i].imag()))
      fail(Errc::Numeric, "group function contains a non-finite value");
}

static void check_same_group(const GroupFunction& f, const IrrepSet& R) {
  if (f.group.get() != R.group.get()) fail(Errc::InvalidArg, "function and irrep set use different groups");
}

FourierCoefficients fourier_transform(const GroupFunction& f, const IrrepSetPtr& R, OpCounter& ops) {
  validate(f);
  check_same_group(f, *R);
  int n = f.group->order();
  FourierCoefficients F;
  F.irreps = R;
  F.blocks.reserve(R->count());
  for (const Irrep& rho : R->irreps) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(rho.dim, rho.dim);
    for (Element x = 0; x < n; ++x) b += f.values[x] * rho.at(x);
    F.blocks.push_back(std::move(b));
    std::uint64_t dd = static_cast<std::uint64_t>(rho.dim) * rho.dim;
    ops.ft.mults += dd * n;
    ops.ft.adds += dd * (n - 1);
  }
  return F;
}

GroupFunction inverse_fourier(const FourierCoefficients& F, OpCounter& ops) {
  const IrrepSet& R = *F.irreps;
  if (F.blocks.size() != static_cast<std::size_t>(R.count()))
    fail(Errc::InvalidArg, "coefficient block count does not match irrep set");
  int n = R.group->order();
  GroupFunction f;
  f.group = R.group;
  f.values = Eigen::VectorXcd::Zero(n);
  for (int r = 0; r < R.count(); ++r) {
    const Irrep& rho = R.irreps[r];
    const Eigen::MatrixXcd& b = F.blocks[r];
    if (b.rows() != rho.dim || b.cols() != rho.dim)
      fail(Errc::InvalidArg, "coefficient block dimension does not match irrep " + rho.label);
    for (Element x = 0; x < n; ++x) {
      // tr(rho(x^-1) b) without forming the product
      f.values[x] += static_cast<double>(rho.dim) * rho.at(R.group->inverse(x)).cwiseProduct(b.transpose()).sum();
    }
    std::uint64_t dd = static_cast<std::uint64_t>(rho.dim) * rho.dim;
    ops.ft.mults += (dd + 1) * n;
    ops.ft.adds += dd * n;
  }
  f.values /= static_cast<double>(n);
  ops.ft.mults += n;
  return f;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g, OpCounter& ops) {
  validate(f);
  validate(g);
  if (f.group.get() != g.group.get()) fail(Errc::InvalidArg, "convolving functions on different groups");
  const FiniteGroup& G = *f.group;
  int n = G.order();
  GroupFunction out;
  out.group = f.group;
  out.values = Eigen::VectorXcd::Zero(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) out.values[x] += f.values[G.compose(x, G.inverse(y))] * g.values[y];
  ops.products.mults += static_cast<std::uint64_t>(n) * n;
  ops.products.adds += static_cast<std::uint64_t>(n) * (n - 1);
  return out;
}

GroupFunction left_translate(const GroupFunction& f, Element t) {
  validate(f);
  const FiniteGroup& G = *f.group;
  GroupFunction out;
  out.group = f.group;
  out.values.resize(G.order());
  Element ti = G.inverse(t);
  for (Element x = 0; x < G.order(); ++x) out.values[x] = f.values[G.compose(ti, x)];
  return out;
}

GroupFunction right_translate(const GroupFunction& f, Element t) {
  validate(f);
  const FiniteGroup& G = *f.group;
  GroupFunction out;
  out.group = f.group;
  out.values.resize(G.order());
  Element ti = G.inverse(t);
  for (Element x = 0; x < G.order(); ++x) out.values[x] = f.values[G.compose(x, ti)];
  return out;
}

GroupFunction mirror(const GroupFunction& f) {
  validate(f);
  const FiniteGroup& G = *f.group;
  GroupFunction out;
  out.group = f.group;
  out.values.resize(G.order());
  for (Element x = 0; x < G.order(); ++x) out.values[x] = f.values[G.inverse(x)];
  return out;
}

double function_norm_sq(const GroupFunction& f) {
  return f.values.squaredNorm() / static_cast<double>(f.group->order());
}

double coefficient_norm_sq(const FourierCoefficients& F) {
  const IrrepSet& R = *F.irreps;
  double s = 0;
  for (int r = 0; r < R.count(); ++r) s += R.irreps[r].dim * F.blocks[r].squaredNorm();
  double n = static_cast<double>(R.group->order());
  return s / (n * n);
}

}  // namespace gs
