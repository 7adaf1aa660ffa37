#pragma once

// Reference implementations the tests compare against. Everything here is
// coded straight from a definition with plain loops and scalar accumulators;
// nothing calls the routines under test.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fourier.hpp"
#include "group.hpp"
#include "irreps.hpp"

namespace oracle {

using Cplx = std::complex<double>;

// Composition convention: (a*b)(i) = a(b(i)), right factor applied first.
inline std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

// Fixpoint closure of a generating set inside a Cayley table: keep taking
// pairwise products until nothing new appears.
inline std::set<gs::Element> closure(const gs::FiniteGroup& g, const std::vector<gs::Element>& gens) {
  std::set<gs::Element> have{0};
  for (gs::Element x : gens) have.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<gs::Element> snapshot(have.begin(), have.end());
    for (gs::Element a : snapshot)
      for (gs::Element b : snapshot)
        if (have.insert(g.compose(a, b)).second) grew = true;
  }
  return have;
}

// Dimension of the symmetric-group irrep for a partition, by the hook
// length formula: n! / prod(hooks).
inline std::int64_t hook_length_dim(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::int64_t nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::vector<int> conj;  // column lengths
  for (int j = 0; j < parts[0]; ++j) {
    int len = 0;
    for (int p : parts)
      if (p > j) ++len;
    conj.push_back(len);
  }
  std::int64_t hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) hooks *= (parts[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
  return nfact / hooks;
}

// Classical transform with the exp(+2*pi*i*k*x/n) kernel, matching the
// convention of the cyclic characters.
inline Eigen::VectorXcd dft(const Eigen::VectorXcd& f) {
  const int n = static_cast<int>(f.size());
  Eigen::VectorXcd out(n);
  for (int k = 0; k < n; ++k) {
    Cplx acc = 0;
    for (int x = 0; x < n; ++x)
      acc += std::polar(1.0, 2.0 * std::numbers::pi * k * x / n) * f[x];
    out[k] = acc;
  }
  return out;
}

inline Eigen::VectorXcd circular_convolution(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
  const int n = static_cast<int>(f.size());
  Eigen::VectorXcd out(n);
  for (int x = 0; x < n; ++x) {
    Cplx acc = 0;
    for (int y = 0; y < n; ++y) acc += f[((x - y) % n + n) % n] * g[y];
    out[x] = acc;
  }
  return out;
}

// Entrywise Fourier block: hat f(rho)_{ij} = sum_x rho(x)_{ij} f(x).
inline Eigen::MatrixXcd naive_ft_block(const gs::GroupFunction& f, const gs::Irrep& rho) {
  Eigen::MatrixXcd out(rho.dim, rho.dim);
  for (int i = 0; i < rho.dim; ++i)
    for (int j = 0; j < rho.dim; ++j) {
      Cplx acc = 0;
      for (int x = 0; x < f.group->order(); ++x) acc += rho.at(x)(i, j) * f.values[x];
      out(i, j) = acc;
    }
  return out;
}

// Multiplicity of a subgroup irrep in a restriction, by the character inner
// product (1/|H|) sum_h chi_rho(h) conj(chi_eta(h)).
inline int branching_multiplicity(const gs::Irrep& rho, const gs::Subgroup& h,
                                  const std::vector<gs::Element>& to_model, const gs::Irrep& eta) {
  Cplx acc = 0;
  for (std::size_t i = 0; i < h.members.size(); ++i) {
    Cplx chi_rho = rho.at(h.members[i]).trace();
    Cplx chi_eta = eta.at(to_model[i]).trace();
    acc += chi_rho * std::conj(chi_eta);
  }
  acc /= static_cast<double>(h.members.size());
  return static_cast<int>(std::lround(acc.real()));
}

// Orbits of two-sided H multiplication, one representative each (smallest
// element index), discovered in ascending order.
inline std::vector<gs::Element> double_coset_reps(const gs::FiniteGroup& g, const gs::Subgroup& h) {
  std::vector<bool> seen(g.order(), false);
  std::vector<gs::Element> reps;
  for (gs::Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (gs::Element a : h.members)
      for (gs::Element b : h.members) seen[g.compose(g.compose(a, x), b)] = true;
  }
  return reps;
}

inline gs::GroupFunction random_function(const gs::GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(g->order());
  for (int i = 0; i < g->order(); ++i) v[i] = Cplx{u(rng), u(rng)};
  return {g, v};
}

inline gs::GroupFunction random_real_function(const gs::GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(g->order());
  for (int i = 0; i < g->order(); ++i) v[i] = Cplx{u(rng), 0.0};
  return {g, v};
}

inline gs::GroupFunction delta(const gs::GroupPtr& g, gs::Element t) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(g->order());
  v[t] = 1.0;
  return {g, v};
}

inline gs::Element sym_element(const gs::GroupPtr& g, const std::string& cycles) {
  return g->element_of(gs::Permutation::from_cycles(cycles, g->parameter()));
}

inline double max_abs_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_block_diff(const std::vector<Eigen::MatrixXcd>& a,
                             const std::vector<Eigen::MatrixXcd>& b) {
  double worst = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    worst = std::max(worst, (a[r] - b[r]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace oracle
