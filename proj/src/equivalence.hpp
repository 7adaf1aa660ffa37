#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra.hpp"

namespace gs {

enum class Side { Left, Right };

// Exhaustive witness search: smallest t with f2 = translate(f1, t) within
// tol in the max norm, or nothing.
std::optional<Element> brute_force_equivalent(const GroupFunction& f1, const GroupFunction& f2, Side side,
                                              double tol = 1e-10);

struct InvertibilityRow {
  std::string label;
  double smin = 0;
  double smax = 0;
  bool invertible = false;
};

struct InvertibilityReport {
  std::vector<InvertibilityRow> rows;
  bool all_invertible = true;
};

// Per-irrep verdict: smallest singular value > rel_tol * largest.
InvertibilityReport fourier_invertibility(const FourierCoefficients& F, double rel_tol = 1e-8);

enum class Verdict { Equivalent = 0, Distinct = 1, Inconclusive = 2 };

struct CompareReport {
  Verdict verdict = Verdict::Inconclusive;
  bool spectra_equal = false;
  bool invertible_1 = false;
  bool invertible_2 = false;
  double max_residual = 0;  // largest relative block difference seen
  double tol = 0;
};

// Full skew-spectrum comparison (every z). Unequal spectra certify
// distinctness unconditionally; equal spectra certify equivalence only when
// both transforms are invertible, otherwise the verdict is inconclusive.
// Per-block test: |q - q'|_F <= tol * (1 + |q|_F + |q'|_F).
// The right-handed question is reduced to the left-handed one by mirroring
// both inputs.
CompareReport skew_equivalent(const GroupFunction& f1, const GroupFunction& f2, const IrrepSetPtr& R,
                              Side side, double tol, OpCounter& ops);

}  // namespace gs
