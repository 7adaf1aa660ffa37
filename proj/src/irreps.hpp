#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "group.hpp"

namespace gs {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int sum() const;
  std::string label() const;  // "4,2,2"
  // All partitions of n in descending lexicographic order.
  static std::vector<Partition> all(int n);
};

// Standard tableau as the (row, col) position of each letter 1..n
// (0-based coordinates, letter m at entry m-1).
struct Tableau {
  std::vector<int> row;
  std::vector<int> col;
};

struct Irrep {
  std::string label;
  int dim = 0;
  bool real = false;
  std::vector<Eigen::MatrixXcd> matrices;  // one per group element

  const Eigen::MatrixXcd& at(Element x) const { return matrices[x]; }
};

struct IrrepSet {
  GroupPtr group;
  std::vector<Irrep> irreps;
  std::vector<Subgroup> adapted_chain;  // largest proper subgroup first

  int count() const { return static_cast<int>(irreps.size()); }
  int index_of(const std::string& label) const;  // -1 if absent
  int sum_dim_sq() const;
};

using IrrepSetPtr = std::shared_ptr<const IrrepSet>;

// One-dimensional exponential characters rho_k(x) = exp(2*pi*i*k*x/n).
IrrepSetPtr cyclic_irreps(const GroupPtr& g);
// Young orthogonal representations, one per partition, basis indexed by
// standard tableaux in last-letter order; adapted to sym:n-1 > ... > sym:1.
IrrepSetPtr yor_irreps(const GroupPtr& g);
IrrepSetPtr irreps_for(const GroupPtr& g);

Eigen::VectorXcd character(const Irrep& rho);

// Standard tableaux of a shape, last-letter order: grouped by the cell of
// the largest letter (corners by increasing row), recursively within.
std::vector<Tableau> standard_tableaux(const Partition& shape);

// Abstract model of a recognized subgroup: an isomorphic standalone group,
// its irreps, and the member -> model-element map.
struct SubgroupModel {
  Subgroup sub;
  GroupPtr model;
  IrrepSetPtr model_irreps;
  std::vector<Element> to_model;  // indexed by position in sub.members
};

// Recognized: whole group, trivial subgroup, canonical sym:k inside sym:n,
// cyclic subgroups of cyclic groups. Anything else is an error.
SubgroupModel subgroup_model(const GroupPtr& g, const Subgroup& h);

struct RestrictionBlock {
  std::string eta_label;
  int dim = 0;
  int col_begin = 0;
};

struct RestrictionReport {
  std::vector<RestrictionBlock> blocks;        // ascending by col_begin
  std::map<std::string, int> multiplicity;     // model irrep label -> count
  int trivial_multiplicity = 0;                // n_rho
  std::vector<int> trivial_columns;
};

// Reads the block structure of rho restricted to h (basis must be adapted:
// off-block mass above 1e-10 is an error) and names each block by matching
// block characters against the subgroup model's irrep characters.
RestrictionReport restriction_blocks(const IrrepSet& set, int irrep_index, const SubgroupModel& hm);

}  // namespace gs
