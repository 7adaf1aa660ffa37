#include "irreps.hpp"

#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <numeric>

namespace gs {
namespace {

using Complex = std::complex<double>;

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::label() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  int n = shape.sum();
  std::vector<Tableau> out;
  if (n == 0) {
    out.push_back(Tableau{});
    return out;
  }
  const std::vector<int>& p = shape.parts;
  for (int r = 0; r < static_cast<int>(p.size()); ++r) {
    bool corner = (r + 1 == static_cast<int>(p.size())) || (p[r + 1] < p[r]);
    if (!corner) continue;
    Partition sub{p};
    if (--sub.parts[r] == 0) sub.parts.pop_back();
    for (Tableau t : standard_tableaux(sub)) {
      t.row.push_back(r);
      t.col.push_back(p[r] - 1);
      out.push_back(std::move(t));
    }
  }
  return out;
}

int IrrepSet::index_of(const std::string& label) const {
  for (int i = 0; i < count(); ++i)
    if (irreps[i].label == label) return i;
  return -1;
}

int IrrepSet::sum_dim_sq() const {
  int s = 0;
  for (const Irrep& r : irreps) s += r.dim * r.dim;
  return s;
}

IrrepSetPtr cyclic_irreps(const GroupPtr& g) {
  if (g->family() != GroupFamily::Cyclic) fail(Errc::InvalidArg, "cyclic_irreps requires a cyclic group");
  int n = g->order();
  auto set = std::make_shared<IrrepSet>();
  set->group = g;
  for (int k = 0; k < n; ++k) {
    Irrep rho;
    rho.label = std::to_string(k);
    rho.dim = 1;
    rho.real = (k == 0 || 2 * k == n);
    rho.matrices.reserve(n);
    for (int x = 0; x < n; ++x) {
      Eigen::MatrixXcd m(1, 1);
      m(0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * k * x / n);
      rho.matrices.push_back(std::move(m));
    }
    set->irreps.push_back(std::move(rho));
  }
  return set;
}

IrrepSetPtr yor_irreps(const GroupPtr& g) {
  if (g->family() != GroupFamily::Symmetric) fail(Errc::InvalidArg, "yor_irreps requires a symmetric group");
  int n = g->parameter();
  if (n > 6) fail(Errc::Unsupported, "full irrep materialization is supported for sym:n with n <= 6");
  int order = g->order();

  std::vector<Element> gens;
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[k], img[k + 1]);
    gens.push_back(g->element_of(Permutation(std::move(img))));
  }

  auto set = std::make_shared<IrrepSet>();
  set->group = g;
  for (const Partition& shape : Partition::all(n)) {
    std::vector<Tableau> tabs = standard_tableaux(shape);
    int d = static_cast<int>(tabs.size());
    std::map<std::vector<int>, int> tab_index;  // row array determines the tableau
    for (int i = 0; i < d; ++i) tab_index[tabs[i].row] = i;

    // Young orthogonal rule on adjacent transpositions (k+1, k+2 as letters).
    std::vector<Eigen::MatrixXcd> gen_mats;
    for (int k = 0; k + 1 < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
      for (int ti = 0; ti < d; ++ti) {
        const Tableau& t = tabs[ti];
        if (t.row[k] == t.row[k + 1]) {
          m(ti, ti) = 1.0;
        } else if (t.col[k] == t.col[k + 1]) {
          m(ti, ti) = -1.0;
        } else {
          double dist = (t.col[k + 1] - t.row[k + 1]) - (t.col[k] - t.row[k]);
          m(ti, ti) = 1.0 / dist;
          std::vector<int> rows = t.row;
          std::swap(rows[k], rows[k + 1]);
          m(ti, tab_index.at(rows)) = std::sqrt(1.0 - 1.0 / (dist * dist));
        }
      }
      gen_mats.push_back(std::move(m));
    }

    Irrep rho;
    rho.label = shape.label();
    rho.dim = d;
    rho.real = true;
    rho.matrices.assign(order, Eigen::MatrixXcd());
    rho.matrices[0] = Eigen::MatrixXcd::Identity(d, d);
    std::deque<Element> queue{0};
    std::vector<char> built(order, 0);
    built[0] = 1;
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element y = g->compose(gens[k], x);
        if (!built[y]) {
          built[y] = 1;
          rho.matrices[y] = gen_mats[k] * rho.matrices[x];
          queue.push_back(y);
        }
      }
    }
    set->irreps.push_back(std::move(rho));
  }

  for (int k = n - 1; k >= 1; --k) set->adapted_chain.push_back(canonical_symmetric_subgroup(g, k));
  return set;
}

IrrepSetPtr irreps_for(const GroupPtr& g) {
  return g->family() == GroupFamily::Cyclic ? cyclic_irreps(g) : yor_irreps(g);
}

Eigen::VectorXcd character(const Irrep& rho) {
  Eigen::VectorXcd chi(rho.matrices.size());
  for (std::size_t x = 0; x < rho.matrices.size(); ++x) chi[x] = rho.matrices[x].trace();
  return chi;
}

SubgroupModel subgroup_model(const GroupPtr& g, const Subgroup& h) {
  SubgroupModel sm;
  sm.sub = h;
  if (g->family() == GroupFamily::Symmetric) {
    int n = g->parameter();
    int k = 1;
    std::uint64_t f = 1;
    while (f < static_cast<std::uint64_t>(h.order()) && k < n) f *= ++k;
    if (f != static_cast<std::uint64_t>(h.order()))
      fail(Errc::Unsupported, "subgroup is not a canonical sym:k embedding");
    for (Element m : h.members) {
      Permutation p = g->permutation(m);
      for (int i = k; i < n; ++i)
        if (p(i) != i) fail(Errc::Unsupported, "subgroup is not a canonical sym:k embedding");
    }
    sm.model = FiniteGroup::symmetric(k);
    sm.model_irreps = yor_irreps(sm.model);
    for (Element m : h.members) {
      Permutation p = g->permutation(m);
      std::vector<int> head(p.image().begin(), p.image().begin() + k);
      sm.to_model.push_back(sm.model->element_of(Permutation(std::move(head))));
    }
  } else {
    int n = g->order();
    int m = h.order();
    if (n % m != 0) fail(Errc::Internal, "subgroup order does not divide group order");
    int d = n / m;
    for (int i = 0; i < m; ++i) {
      if (h.members[i] != i * d) fail(Errc::Unsupported, "subgroup is not a cyclic residue subgroup");
      sm.to_model.push_back(i);
    }
    sm.model = FiniteGroup::cyclic(m);
    sm.model_irreps = cyclic_irreps(sm.model);
  }
  return sm;
}

RestrictionReport restriction_blocks(const IrrepSet& set, int irrep_index, const SubgroupModel& hm) {
  const Irrep& rho = set.irreps[irrep_index];
  const std::vector<Element>& members = hm.sub.members;
  int d = rho.dim;
  int hs = static_cast<int>(members.size());

  // Schur orthogonality puts sum_h |rho(h)_ij|^2 at |H|/d_eta >= 1 inside an
  // irreducible block and at rounding level outside; anything between the
  // two thresholds means the basis is not adapted to H.
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(d, d);
  for (Element m : members) mass += rho.at(m).cwiseAbs2();
  std::vector<int> comp(d);
  std::iota(comp.begin(), comp.end(), 0);
  auto root = [&](int i) {
    while (comp[i] != i) i = comp[i] = comp[comp[i]];
    return i;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (mass(i, j) > 0.5)
        comp[root(i)] = root(j);
      else if (mass(i, j) > 1e-16)
        fail(Errc::Numeric, "representation is not block-diagonal on the subgroup (basis not adapted)");
    }

  // Components must be contiguous column ranges.
  std::vector<int> begin_of(d, -1);
  RestrictionReport report;
  for (int i = 0; i < d; ++i) {
    int r = root(i);
    if (begin_of[r] < 0) {
      begin_of[r] = i;
      report.blocks.push_back(RestrictionBlock{"", 0, i});
    }
    RestrictionBlock& blk = report.blocks.back();
    if (root(blk.col_begin) != r || blk.col_begin + blk.dim != i)
      fail(Errc::Numeric, "restriction block is not a contiguous column range");
    ++blk.dim;
  }

  // Name each block by its character.
  const IrrepSet& model = *hm.model_irreps;
  std::vector<Eigen::VectorXcd> model_chars;
  for (const Irrep& eta : model.irreps) model_chars.push_back(character(eta));
  for (RestrictionBlock& blk : report.blocks) {
    Eigen::VectorXcd chi = Eigen::VectorXcd::Zero(hs);
    for (int i = 0; i < hs; ++i) {
      Complex tr = 0;
      const Eigen::MatrixXcd& m = rho.at(members[i]);
      for (int c = blk.col_begin; c < blk.col_begin + blk.dim; ++c) tr += m(c, c);
      chi[hm.to_model[i]] = tr;
    }
    int match = -1;
    for (int e = 0; e < model.count(); ++e) {
      Complex inner = model_chars[e].dot(chi) / static_cast<double>(hs);  // dot conjugates lhs
      if (std::abs(inner - 1.0) < 1e-6) {
        if (match >= 0) fail(Errc::Numeric, "restriction block matches two subgroup irreps");
        match = e;
      } else if (std::abs(inner) > 1e-6) {
        fail(Errc::Numeric, "restriction block has a fractional subgroup-irrep multiplicity");
      }
    }
    if (match < 0 || model.irreps[match].dim != blk.dim)
      fail(Errc::Numeric, "restriction block does not match any subgroup irrep");
    blk.eta_label = model.irreps[match].label;
    report.multiplicity[blk.eta_label] += 1;
    if (match == 0) {  // trivial irrep is first in both families
      report.trivial_multiplicity += 1;
      for (int c = blk.col_begin; c < blk.col_begin + blk.dim; ++c) report.trivial_columns.push_back(c);
    }
  }
  return report;
}

}  // namespace gs
