#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spectra.hpp"

namespace gs {

struct CosetFunction {
  CosetTransversal space;
  Eigen::VectorXcd values;  // one value per transversal representative
};

void validate(const CosetFunction& f);

// f(x) = |H|^-1 f(xH) for left cosets, |H|^-1 f(Hx) for right cosets.
GroupFunction lift(const CosetFunction& f);
// g(xH) = sum_h g(xh) for left cosets, g(Hx) = sum_h g(hx) for right ones.
CosetFunction restrict_function(const GroupFunction& g, const CosetTransversal& space);

// hat f(rho) = [sum_{y in G/H} f(yH) rho(y)] * [sum_h rho(h)], the transform
// of the unnormalized coset data; equals |H| * fourier_transform(lift(f)).
FourierCoefficients coset_fourier(const CosetFunction& f, const IrrepSetPtr& R, OpCounter& ops);

// Where Fourier coefficients of L(G/H) functions may be nonzero: the columns
// holding trivial restriction blocks (rows for L(H\G)).
struct SparsityProfile {
  std::vector<int> n_rho;                 // trivial multiplicity per irrep
  std::vector<std::vector<int>> columns;  // allowed columns per irrep
};

SparsityProfile sparsity_profile(const IrrepSet& set, const SubgroupModel& hm);

// Skew spectrum of the lift, indexed by double-coset representatives only.
SkewSpectrum restricted_skew_spectrum(const CosetFunction& f, const IrrepSetPtr& R, OpCounter& ops);

// hat r_z(rho) for the lift of f, computed through subgroup-level partial
// transforms over the chain G > H instead of a direct group transform.
// Exists to cross-validate the direct path; the sums land in the same
// counters so the two routes can be compared.
std::vector<Eigen::MatrixXcd> skew_via_partial_transforms(const CosetFunction& f, Element z,
                                                          const IrrepSetPtr& R, OpCounter& ops);

struct RankRow {
  std::string label;
  int rank = 0;
  int expected = 0;  // trivial multiplicity of the irrep restricted to H
  double smax = 0;
  bool ok = false;
};

struct RankReport {
  std::vector<RankRow> rows;
  bool all_ok = true;
  double tolerance = 0;
};

// Completeness precondition over L(H\G): rank of each Fourier block equals
// the trivial multiplicity in the restriction. Singular values below
// rank_tol * smax count as zero.
RankReport rank_condition(const CosetFunction& f, const IrrepSetPtr& R, double rank_tol = 1e-8);

}  // namespace gs
