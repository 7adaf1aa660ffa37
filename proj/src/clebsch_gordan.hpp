#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "irreps.hpp"
#include "opcount.hpp"

namespace gs {

// kron(A, B) with scalar multiplies tallied into `c`.
Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, PhaseCount& c);

struct CGLayoutEntry {
  std::string label;
  int irrep_index = 0;
  int copy = 0;    // 0-based copy number within the irrep
  int offset = 0;  // first row/column of this block inside the direct sum
  int dim = 0;
};

struct CGDecomposition {
  int i1 = 0, i2 = 0;
  std::vector<int> mult_by_index;        // per irrep in canonical order
  std::map<std::string, int> mults;      // label -> multiplicity
  Eigen::MatrixXcd coupling;             // unitary, (d1*d2) x (d1*d2)
  std::vector<CGLayoutEntry> layout;
};

// m_rho = (1/|G|) sum_x chi1(x) chi2(x) conj(chi_rho(x)), rounded; a rounding
// error above 1e-6 is reported as a broken irrep set.
std::vector<int> tensor_multiplicities(const IrrepSet& set, int i1, int i2, PhaseCount& c);

// Builds the unitary change of basis with Delta(x) * C = C * (direct sum of
// rho(x) copies in layout order) for every x, by intertwiner averaging.
// Verifies the defining equation exhaustively (residual < 1e-8) and fails
// rather than returning an approximate matrix.
CGDecomposition cg_matrix(const IrrepSet& set, int i1, int i2, OpCounter& ops);

// Memoizing wrapper; lookup-or-compute is serialized so results are
// deterministic under concurrent use.
class CGCache {
 public:
  explicit CGCache(IrrepSetPtr set) : set_(std::move(set)) {}
  const CGDecomposition& get(int i1, int i2, OpCounter& ops);
  const IrrepSet& irreps() const { return *set_; }

 private:
  IrrepSetPtr set_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<const CGDecomposition>> memo_;
};

}  // namespace gs
