#pragma once

#include <cstdint>

namespace gs {

// Scalar-operation tally for one computation phase. A complex multiply
// counts as one scalar multiply, a complex add as one scalar add; an
// (m x k)(k x n) matrix product contributes m*k*n multiplies and
// m*(k-1)*n adds.
struct PhaseCount {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;

  PhaseCount& operator+=(const PhaseCount& o) {
    mults += o.mults;
    adds += o.adds;
    return *this;
  }
};

// Per-phase counters threaded through the numeric kernels. Phases:
//   ft        forward/inverse/coset Fourier transforms
//   cg        tensor decomposition setup (multiplicities, coupling bases)
//   products  everything after the transforms: spectrum assembly,
//             pointwise builds, correlation loops
struct OpCounter {
  PhaseCount ft;
  PhaseCount cg;
  PhaseCount products;

  PhaseCount total() const {
    PhaseCount t;
    t += ft;
    t += cg;
    t += products;
    return t;
  }

  OpCounter& operator+=(const OpCounter& o) {
    ft += o.ft;
    cg += o.cg;
    products += o.products;
    return *this;
  }
};

inline void count_matmul(PhaseCount& c, std::uint64_t m, std::uint64_t k, std::uint64_t n) {
  c.mults += m * k * n;
  if (k > 0) c.adds += m * (k - 1) * n;
}

}  // namespace gs
