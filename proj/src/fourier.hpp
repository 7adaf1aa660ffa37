#pragma once

#include <Eigen/Dense>

#include "irreps.hpp"
#include "opcount.hpp"

namespace gs {

struct GroupFunction {
  GroupPtr group;
  Eigen::VectorXcd values;  // length |G|
};

// Throws on length mismatch or non-finite entries.
void validate(const GroupFunction& f);

struct FourierCoefficients {
  IrrepSetPtr irreps;
  std::vector<Eigen::MatrixXcd> blocks;  // one per irrep, d x d
};

// hat f(rho) = sum_x rho(x) f(x)
FourierCoefficients fourier_transform(const GroupFunction& f, const IrrepSetPtr& R, OpCounter& ops);
// f(x) = (1/|G|) sum_rho d_rho tr(rho(x^-1) hat f(rho)); exact inverse of the above
GroupFunction inverse_fourier(const FourierCoefficients& F, OpCounter& ops);

// (f*g)(x) = sum_y f(x y^-1) g(y)
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g, OpCounter& ops);

// f^t(x) = f(t^-1 x); transforms as rho(t) * hat f(rho)
GroupFunction left_translate(const GroupFunction& f, Element t);
// f^(t)(x) = f(x t^-1); transforms as hat f(rho) * rho(t)
GroupFunction right_translate(const GroupFunction& f, Element t);
// mirror f(x) = f(x^-1)
GroupFunction mirror(const GroupFunction& f);

// (1/|G|) sum_x |f(x)|^2
double function_norm_sq(const GroupFunction& f);
// (1/|G|^2) sum_rho d_rho |hat f(rho)|_F^2; equals the above (Parseval)
double coefficient_norm_sq(const FourierCoefficients& F);

}  // namespace gs
