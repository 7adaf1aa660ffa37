#include "clebsch_gordan.hpp"

#include <cmath>

namespace gs {

using Complex = std::complex<double>;

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, PhaseCount& c) {
  Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  c.mults += static_cast<std::uint64_t>(k.rows()) * k.cols();
  return k;
}

std::vector<int> tensor_multiplicities(const IrrepSet& set, int i1, int i2, PhaseCount& c) {
  int n = set.group->order();
  Eigen::VectorXcd prod = character(set.irreps[i1]).cwiseProduct(character(set.irreps[i2]));
  c.mults += n;
  std::vector<int> mults;
  mults.reserve(set.count());
  for (int r = 0; r < set.count(); ++r) {
    Complex inner = character(set.irreps[r]).dot(prod) / static_cast<double>(n);
    c.mults += n + 1;
    c.adds += n - 1;
    double rounded = std::round(inner.real());
    if (std::abs(inner - rounded) > 1e-6)
      fail(Errc::Numeric, "non-integral tensor multiplicity for (" + set.irreps[i1].label + ", " +
                              set.irreps[i2].label + ") -> " + set.irreps[r].label);
    mults.push_back(static_cast<int>(rounded));
  }
  return mults;
}

CGDecomposition cg_matrix(const IrrepSet& set, int i1, int i2, OpCounter& ops) {
  const FiniteGroup& G = *set.group;
  int n = G.order();
  const Irrep& r1 = set.irreps[i1];
  const Irrep& r2 = set.irreps[i2];
  int D = r1.dim * r2.dim;

  CGDecomposition cg;
  cg.i1 = i1;
  cg.i2 = i2;
  cg.mult_by_index = tensor_multiplicities(set, i1, i2, ops.cg);
  int total = 0;
  for (int r = 0; r < set.count(); ++r) {
    if (cg.mult_by_index[r] > 0) cg.mults[set.irreps[r].label] = cg.mult_by_index[r];
    total += cg.mult_by_index[r] * set.irreps[r].dim;
  }
  if (total != D) fail(Errc::Internal, "tensor multiplicities do not account for the product dimension");

  std::vector<Eigen::MatrixXcd> delta(n);
  for (Element x = 0; x < n; ++x) delta[x] = kronecker(r1.at(x), r2.at(x), ops.cg);

  cg.coupling.resize(D, D);
  int offset = 0;
  for (int r = 0; r < set.count(); ++r) {
    int m = cg.mult_by_index[r];
    if (m == 0) continue;
    const Irrep& rho = set.irreps[r];
    int d = rho.dim;

    // Averaging against the (0,0) matrix entry projects onto the span of the
    // first basis vector of every copy of rho inside the product.
    Eigen::MatrixXcd t00 = Eigen::MatrixXcd::Zero(D, D);
    for (Element x = 0; x < n; ++x) t00 += std::conj(rho.at(x)(0, 0)) * delta[x];
    t00 *= static_cast<double>(d) / n;
    ops.cg.mults += static_cast<std::uint64_t>(n + 1) * D * D;
    ops.cg.adds += static_cast<std::uint64_t>(n - 1) * D * D;

    // Orthonormal seeds, one per copy, taken from the projector's columns in
    // index order so the result is deterministic.
    std::vector<Eigen::VectorXcd> seeds;
    for (int s = 0; s < D && static_cast<int>(seeds.size()) < m; ++s) {
      Eigen::VectorXcd w = t00.col(s);
      for (const Eigen::VectorXcd& prev : seeds) w -= prev.dot(w) * prev;
      double nrm = w.norm();
      if (nrm > 1e-6) seeds.push_back(w / nrm);
    }
    if (static_cast<int>(seeds.size()) != m)
      fail(Errc::Numeric, "could not extract an orthonormal intertwiner basis for irrep " + rho.label);

    for (int copy = 0; copy < m; ++copy) {
      const Eigen::VectorXcd& w = seeds[copy];
      // u_x = Delta(x) w, then column j is (d/|G|) sum_x conj(rho(x)_{j0}) u_x.
      Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(D, d);
      for (Element x = 0; x < n; ++x) {
        Eigen::VectorXcd u = delta[x] * w;
        for (int j = 0; j < d; ++j) cols.col(j) += std::conj(rho.at(x)(j, 0)) * u;
      }
      cols *= static_cast<double>(d) / n;
      ops.cg.mults += static_cast<std::uint64_t>(n) * D * (D + d) + static_cast<std::uint64_t>(D) * d;
      ops.cg.adds += static_cast<std::uint64_t>(n) * D * (D - 1 + d);
      cg.coupling.block(0, offset + copy * d, D, d) = cols;
    }

    for (int copy = 0; copy < m; ++copy)
      cg.layout.push_back(CGLayoutEntry{rho.label, r, copy, offset + copy * d, d});
    offset += m * d;
  }

  double unit_res = (cg.coupling.adjoint() * cg.coupling - Eigen::MatrixXcd::Identity(D, D)).cwiseAbs().maxCoeff();
  count_matmul(ops.cg, D, D, D);
  if (unit_res > 1e-10)
    fail(Errc::Numeric, "coupling matrix is not unitary (residual " + std::to_string(unit_res) + ")");

  for (Element x = 0; x < n; ++x) {
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(D, D);
    for (const CGLayoutEntry& e : cg.layout)
      rhs.block(e.offset, e.offset, e.dim, e.dim) = set.irreps[e.irrep_index].at(x);
    Eigen::MatrixXcd err = delta[x] * cg.coupling - cg.coupling * rhs;
    count_matmul(ops.cg, D, D, D);
    for (const CGLayoutEntry& e : cg.layout) count_matmul(ops.cg, D, e.dim, e.dim);
    if (err.cwiseAbs().maxCoeff() > 1e-8)
      fail(Errc::Numeric, "coupling matrix fails the defining equation at element " + G.label(x));
  }
  return cg;
}

const CGDecomposition& CGCache::get(int i1, int i2, OpCounter& ops) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(i1, i2);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    auto value = std::make_unique<const CGDecomposition>(cg_matrix(*set_, i1, i2, ops));
    it = memo_.emplace(key, std::move(value)).first;
  }
  return *it->second;
}

}  // namespace gs
