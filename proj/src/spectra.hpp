#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "clebsch_gordan.hpp"
#include "fourier.hpp"

namespace gs {

struct PowerSpectrum {
  IrrepSetPtr irreps;
  std::vector<Eigen::MatrixXcd> blocks;  // Hermitian PSD, one per irrep
};

struct TripleCorrelation {
  GroupPtr group;
  Eigen::MatrixXcd values;  // values(x1, x2); symmetric in its arguments
};

// Whether entries carry the trailing adjoint of the coupling matrix. Both
// are translation invariant; Plain skips one dense product per pair.
enum class BispectrumConvention { Plain, Coupled };

struct Bispectrum {
  IrrepSetPtr irreps;
  BispectrumConvention convention = BispectrumConvention::Plain;
  std::vector<std::vector<Eigen::MatrixXcd>> entries;  // [i1][i2], (d1*d2) square
};

struct SkewSpectrum {
  IrrepSetPtr irreps;
  std::vector<Element> zs;
  std::vector<std::vector<Eigen::MatrixXcd>> entries;  // [z position][irrep]
  std::vector<GroupFunction> r;                        // the pointwise products, per z
};

// hat a(rho) = hat f(rho)^dagger hat f(rho)
PowerSpectrum power_spectrum(const FourierCoefficients& F, OpCounter& ops);
// a(x) = sum_y conj(f(y x^-1)) f(y); its transform is the power spectrum
GroupFunction autocorrelation(const GroupFunction& f, OpCounter& ops);

// b(x1, x2) = sum_y conj(f(y x1^-1)) conj(f(y x2^-1)) f(y)
TripleCorrelation triple_correlation(const GroupFunction& f, OpCounter& ops);

// hat b(rho1, rho2) = (hat f(rho1) x hat f(rho2))^dagger C [sum of hat f copies] (C^dagger)
Bispectrum bispectrum(const FourierCoefficients& F, CGCache& cache, BispectrumConvention conv,
                      OpCounter& ops);

// r_z(x) = f(x) f(xz); hat q_z(rho) = hat r_z(rho)^dagger hat f(rho)
SkewSpectrum skew_spectrum(const GroupFunction& f, const IrrepSetPtr& R, const std::vector<Element>& zs,
                           OpCounter& ops);

// Slices of a two-argument function: left g(x, zx) and right g(x, xz).
std::pair<GroupFunction, GroupFunction> diagonal_slices(const GroupPtr& g, const Eigen::MatrixXcd& values,
                                                        Element z);

// Right-handed twins, invariant under right translation.
// hat q(rho) = hat f(rho) hat f(rho)^dagger
PowerSpectrum right_power_spectrum(const FourierCoefficients& F, OpCounter& ops);
// q(x) = sum_y f(y) f(xy); matches the inverse transform of the right power
// spectrum for real-valued f (no conjugation in either definition)
GroupFunction right_autocorrelation(const GroupFunction& f, OpCounter& ops);
// (hat f x hat f) C [sum of hat f^dagger copies] C^dagger
Bispectrum right_bispectrum(const FourierCoefficients& F, CGCache& cache, BispectrumConvention conv,
                            OpCounter& ops);
// r_z(x) = f(x) f(zx); hat q_z(rho) = hat r_z(rho) hat f(rho)^dagger
SkewSpectrum right_skew_spectrum(const GroupFunction& f, const IrrepSetPtr& R,
                                 const std::vector<Element>& zs, OpCounter& ops);

}  // namespace gs
