#include "spectra.hpp"

namespace gs {

PowerSpectrum power_spectrum(const FourierCoefficients& F, OpCounter& ops) {
  PowerSpectrum p;
  p.irreps = F.irreps;
  for (const Eigen::MatrixXcd& b : F.blocks) {
    p.blocks.push_back(b.adjoint() * b);
    count_matmul(ops.products, b.rows(), b.rows(), b.cols());
  }
  return p;
}

GroupFunction autocorrelation(const GroupFunction& f, OpCounter& ops) {
  validate(f);
  const FiniteGroup& G = *f.group;
  int n = G.order();
  GroupFunction a;
  a.group = f.group;
  a.values = Eigen::VectorXcd::Zero(n);
  for (Element x = 0; x < n; ++x) {
    Element xi = G.inverse(x);
    for (Element y = 0; y < n; ++y) a.values[x] += std::conj(f.values[G.compose(y, xi)]) * f.values[y];
  }
  ops.products.mults += static_cast<std::uint64_t>(n) * n;
  ops.products.adds += static_cast<std::uint64_t>(n) * (n - 1);
  return a;
}

GroupFunction right_autocorrelation(const GroupFunction& f, OpCounter& ops) {
  validate(f);
  const FiniteGroup& G = *f.group;
  int n = G.order();
  GroupFunction a;
  a.group = f.group;
  a.values = Eigen::VectorXcd::Zero(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) a.values[x] += f.values[y] * f.values[G.compose(x, y)];
  ops.products.mults += static_cast<std::uint64_t>(n) * n;
  ops.products.adds += static_cast<std::uint64_t>(n) * (n - 1);
  return a;
}

TripleCorrelation triple_correlation(const GroupFunction& f, OpCounter& ops) {
  validate(f);
  const FiniteGroup& G = *f.group;
  int n = G.order();
  TripleCorrelation t;
  t.group = f.group;
  t.values = Eigen::MatrixXcd::Zero(n, n);
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) inv[x] = G.inverse(x);
  for (Element x1 = 0; x1 < n; ++x1)
    for (Element x2 = 0; x2 < n; ++x2) {
      std::complex<double> acc = 0;
      for (Element y = 0; y < n; ++y)
        acc += std::conj(f.values[G.compose(y, inv[x1])]) * std::conj(f.values[G.compose(y, inv[x2])]) *
               f.values[y];
      t.values(x1, x2) = acc;
    }
  ops.products.mults += 2 * static_cast<std::uint64_t>(n) * n * n;
  ops.products.adds += static_cast<std::uint64_t>(n) * n * (n - 1);
  return t;
}

namespace {

Bispectrum bispectrum_impl(const FourierCoefficients& F, CGCache& cache, BispectrumConvention conv,
                           OpCounter& ops, bool right_handed) {
  const IrrepSet& R = *F.irreps;
  if (&cache.irreps() != &R) fail(Errc::InvalidArg, "coefficients and coupling cache use different irrep sets");
  int k = R.count();
  Bispectrum b;
  b.irreps = F.irreps;
  b.convention = conv;
  b.entries.resize(k);
  for (int i1 = 0; i1 < k; ++i1) {
    for (int i2 = 0; i2 < k; ++i2) {
      const CGDecomposition& cg = cache.get(i1, i2, ops);
      int D = R.irreps[i1].dim * R.irreps[i2].dim;
      Eigen::MatrixXcd kron = kronecker(F.blocks[i1], F.blocks[i2], ops.products);
      Eigen::MatrixXcd left;
      if (right_handed)
        left = kron * cg.coupling;
      else
        left = kron.adjoint() * cg.coupling;
      count_matmul(ops.products, D, D, D);
      Eigen::MatrixXcd out(D, D);
      for (const CGLayoutEntry& e : cg.layout) {
        const Eigen::MatrixXcd& blk = F.blocks[e.irrep_index];
        if (right_handed)
          out.middleCols(e.offset, e.dim) = left.middleCols(e.offset, e.dim) * blk.adjoint();
        else
          out.middleCols(e.offset, e.dim) = left.middleCols(e.offset, e.dim) * blk;
        count_matmul(ops.products, D, e.dim, e.dim);
      }
      if (conv == BispectrumConvention::Coupled) {
        out = out * cg.coupling.adjoint();
        count_matmul(ops.products, D, D, D);
      }
      b.entries[i1].push_back(std::move(out));
    }
  }
  return b;
}

SkewSpectrum skew_impl(const GroupFunction& f, const IrrepSetPtr& R, const std::vector<Element>& zs,
                       OpCounter& ops, bool right_handed) {
  validate(f);
  const FiniteGroup& G = *f.group;
  int n = G.order();
  FourierCoefficients F = fourier_transform(f, R, ops);
  SkewSpectrum s;
  s.irreps = R;
  s.zs = zs;
  for (Element z : zs) {
    if (z < 0 || z >= n) fail(Errc::InvalidArg, "skew spectrum index z out of range");
    GroupFunction r;
    r.group = f.group;
    r.values.resize(n);
    for (Element x = 0; x < n; ++x)
      r.values[x] = right_handed ? f.values[x] * f.values[G.compose(z, x)]
                                 : f.values[x] * f.values[G.compose(x, z)];
    ops.products.mults += n;
    FourierCoefficients Rz = fourier_transform(r, R, ops);
    std::vector<Eigen::MatrixXcd> row;
    for (int i = 0; i < R->count(); ++i) {
      int d = R->irreps[i].dim;
      row.push_back(right_handed ? Eigen::MatrixXcd(Rz.blocks[i] * F.blocks[i].adjoint())
                                 : Eigen::MatrixXcd(Rz.blocks[i].adjoint() * F.blocks[i]));
      count_matmul(ops.products, d, d, d);
    }
    s.entries.push_back(std::move(row));
    s.r.push_back(std::move(r));
  }
  return s;
}

}  // namespace

Bispectrum bispectrum(const FourierCoefficients& F, CGCache& cache, BispectrumConvention conv,
                      OpCounter& ops) {
  return bispectrum_impl(F, cache, conv, ops, false);
}

Bispectrum right_bispectrum(const FourierCoefficients& F, CGCache& cache, BispectrumConvention conv,
                            OpCounter& ops) {
  return bispectrum_impl(F, cache, conv, ops, true);
}

SkewSpectrum skew_spectrum(const GroupFunction& f, const IrrepSetPtr& R, const std::vector<Element>& zs,
                           OpCounter& ops) {
  return skew_impl(f, R, zs, ops, false);
}

SkewSpectrum right_skew_spectrum(const GroupFunction& f, const IrrepSetPtr& R,
                                 const std::vector<Element>& zs, OpCounter& ops) {
  return skew_impl(f, R, zs, ops, true);
}

std::pair<GroupFunction, GroupFunction> diagonal_slices(const GroupPtr& g, const Eigen::MatrixXcd& values,
                                                        Element z) {
  int n = g->order();
  if (values.rows() != n || values.cols() != n)
    fail(Errc::InvalidArg, "two-argument function has wrong dimensions");
  GroupFunction left, right;
  left.group = right.group = g;
  left.values.resize(n);
  right.values.resize(n);
  for (Element x = 0; x < n; ++x) {
    left.values[x] = values(x, g->compose(z, x));
    right.values[x] = values(x, g->compose(x, z));
  }
  return {std::move(left), std::move(right)};
}

PowerSpectrum right_power_spectrum(const FourierCoefficients& F, OpCounter& ops) {
  PowerSpectrum p;
  p.irreps = F.irreps;
  for (const Eigen::MatrixXcd& b : F.blocks) {
    p.blocks.push_back(b * b.adjoint());
    count_matmul(ops.products, b.rows(), b.cols(), b.rows());
  }
  return p;
}

}  // namespace gs
