#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "homogeneous.hpp"
#include "oracles.hpp"

using namespace gs;
using Cplx = std::complex<double>;

namespace {

CosetFunction random_coset_function(const CosetTransversal& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(space.count());
  for (int i = 0; i < space.count(); ++i) v[i] = Cplx{u(rng), u(rng)};
  return {space, v};
}

}  // namespace

TEST_CASE("lifting through the trivial subgroup is the identity") {
  auto g = FiniteGroup::symmetric(3);
  CosetTransversal space = transversal(g, trivial_subgroup(g), CosetKind::Left);
  std::mt19937_64 rng(3);
  CosetFunction f = random_coset_function(space, rng);
  GroupFunction up = lift(f);
  CHECK(oracle::max_abs_diff(up.values, f.values) == 0);
}

TEST_CASE("lifting the constant one spreads mass by the subgroup order") {
  auto g = FiniteGroup::symmetric(3);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  CosetFunction f{space, Eigen::VectorXcd::Ones(3)};
  GroupFunction up = lift(f);
  for (int x = 0; x < 6; ++x) CHECK(up.values[x] == Cplx{0.5, 0});
}

TEST_CASE("restriction undoes the lift") {
  auto g = FiniteGroup::symmetric(4);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 3), CosetKind::Left);
  std::mt19937_64 rng(5);
  CosetFunction f = random_coset_function(space, rng);
  CosetFunction back = restrict_function(lift(f), space);
  CHECK(oracle::max_abs_diff(back.values, f.values) < 1e-14);
}

TEST_CASE("restricting a coset-constant function scales by the subgroup order") {
  auto g = FiniteGroup::symmetric(3);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  std::mt19937_64 rng(7);
  Eigen::VectorXcd per_coset(3);
  per_coset << Cplx{1, 2}, Cplx{-0.5, 0}, Cplx{0, 3};
  GroupFunction flat{g, Eigen::VectorXcd(6)};
  for (int x = 0; x < 6; ++x) flat.values[x] = per_coset[space.coset_of[x]];
  CosetFunction down = restrict_function(flat, space);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(down.values[i] - 2.0 * per_coset[i]) < 1e-14);
}

TEST_CASE("restricting the identity delta marks the identity coset") {
  auto g = FiniteGroup::symmetric(3);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  CosetFunction down = restrict_function(oracle::delta(g, 0), space);
  CHECK(down.values[0] == Cplx{1, 0});
  CHECK(down.values[1] == Cplx{0, 0});
  CHECK(down.values[2] == Cplx{0, 0});
}

TEST_CASE("restriction is linear") {
  auto g = FiniteGroup::symmetric(4);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  std::mt19937_64 rng(11);
  GroupFunction a = oracle::random_function(g, rng);
  GroupFunction b = oracle::random_function(g, rng);
  Cplx alpha{1.5, -0.25};
  GroupFunction mix{g, a.values + alpha * b.values};
  Eigen::VectorXcd want =
      restrict_function(a, space).values + alpha * restrict_function(b, space).values;
  CHECK(oracle::max_abs_diff(restrict_function(mix, space).values, want) < 1e-12);
}

TEST_CASE("coset transform of the constant function is purely trivial") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  CosetFunction f{space, Eigen::VectorXcd::Ones(3)};
  OpCounter ops;
  FourierCoefficients F = coset_fourier(f, R, ops);
  CHECK(std::abs(F.blocks[0](0, 0) - Cplx{6, 0}) < 1e-12);
  CHECK(F.blocks[1].cwiseAbs().maxCoeff() < 1e-12);
  CHECK(F.blocks[2].cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the sign block of a two-point coset space vanishes") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    CosetFunction f = random_coset_function(space, rng);
    OpCounter ops;
    FourierCoefficients F = coset_fourier(f, R, ops);
    CHECK(F.blocks[2].cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("coset transform equals the scaled transform of the lift") {
  auto g = FiniteGroup::symmetric(4);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 3);
  CosetTransversal space = transversal(g, h, CosetKind::Left);
  std::mt19937_64 rng(17);
  CosetFunction f = random_coset_function(space, rng);
  OpCounter ops;
  FourierCoefficients direct = coset_fourier(f, R, ops);
  FourierCoefficients via_lift = fourier_transform(lift(f), R, ops);
  for (int r = 0; r < R->count(); ++r)
    CHECK((direct.blocks[r] - 6.0 * via_lift.blocks[r]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fourier mass stays inside the predicted columns") {
  auto g = FiniteGroup::symmetric(4);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 3);
  SubgroupModel hm = subgroup_model(g, h);
  SparsityProfile profile = sparsity_profile(*R, hm);
  CHECK(profile.n_rho == std::vector<int>{1, 1, 0, 0, 0});

  CosetTransversal space = transversal(g, h, CosetKind::Left);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    CosetFunction f = random_coset_function(space, rng);
    OpCounter ops;
    FourierCoefficients F = coset_fourier(f, R, ops);
    for (int r = 0; r < R->count(); ++r) {
      std::vector<bool> allowed(R->irreps[r].dim, false);
      for (int c : profile.columns[r]) allowed[c] = true;
      for (int i = 0; i < R->irreps[r].dim; ++i)
        for (int j = 0; j < R->irreps[r].dim; ++j)
          if (!allowed[j]) CHECK(std::abs(F.blocks[r](i, j)) < 1e-12);
    }
  }
}

TEST_CASE("restricted skew over the trivial subgroup is the full skew spectrum") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  CosetTransversal space = transversal(g, trivial_subgroup(g), CosetKind::Left);
  std::mt19937_64 rng(23);
  CosetFunction f = random_coset_function(space, rng);
  OpCounter ops;
  SkewSpectrum restricted = restricted_skew_spectrum(f, R, ops);
  std::vector<Element> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  SkewSpectrum full = skew_spectrum(lift(f), R, all, ops);
  REQUIRE(restricted.zs == all);
  for (std::size_t zi = 0; zi < all.size(); ++zi)
    CHECK(oracle::max_block_diff(restricted.entries[zi], full.entries[zi]) == 0);
}

TEST_CASE("a two-point coset space has two skew indices") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  CosetTransversal space = transversal(g, canonical_symmetric_subgroup(g, 2), CosetKind::Left);
  std::mt19937_64 rng(29);
  CosetFunction f = random_coset_function(space, rng);
  OpCounter ops;
  SkewSpectrum s = restricted_skew_spectrum(f, R, ops);
  CHECK(s.zs.size() == 2);
  CHECK(s.zs == oracle::double_coset_reps(*g, space.subgroup));
}

TEST_CASE("skew components repeat along double cosets") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 2);
  CosetTransversal space = transversal(g, h, CosetKind::Left);
  std::mt19937_64 rng(31);
  CosetFunction f = random_coset_function(space, rng);
  GroupFunction up = lift(f);

  std::vector<Element> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  OpCounter ops;
  SkewSpectrum s = skew_spectrum(up, R, all, ops);

  for (Element z = 0; z < g->order(); ++z) {
    for (Element hh : h.members) {
      Element zh = g->compose(z, hh);
      CHECK(oracle::max_block_diff(s.entries[z], s.entries[zh]) < 1e-12);
    }
    for (Element hp : h.members) {
      Element hz = g->compose(hp, z);
      for (int r = 0; r < R->count(); ++r) {
        Eigen::MatrixXcd want = R->irreps[r].at(hp) * s.entries[z][r];
        CHECK((s.entries[hz][r] - want).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("partial transforms reproduce the direct pointwise product transform") {
  auto g = FiniteGroup::symmetric(4);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 3);
  CosetTransversal space = transversal(g, h, CosetKind::Left);
  std::mt19937_64 rng(37);
  CosetFunction f = random_coset_function(space, rng);
  GroupFunction up = lift(f);

  for (Element z = 0; z < g->order(); ++z) {
    OpCounter ops;
    std::vector<Eigen::MatrixXcd> via_partial = skew_via_partial_transforms(f, z, R, ops);

    GroupFunction rz{g, Eigen::VectorXcd(g->order())};
    for (int x = 0; x < g->order(); ++x)
      rz.values[x] = up.values[x] * up.values[g->compose(x, z)];
    OpCounter direct_ops;
    FourierCoefficients direct = fourier_transform(rz, R, direct_ops);

    CHECK(oracle::max_block_diff(via_partial, direct.blocks) < 1e-9);
  }
}

TEST_CASE("partial transform cost is reported next to the direct cost") {
  auto g = FiniteGroup::symmetric(5);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 4);
  CosetTransversal space = transversal(g, h, CosetKind::Left);
  std::mt19937_64 rng(41);
  CosetFunction f = random_coset_function(space, rng);
  GroupFunction up = lift(f);

  CosetTransversal dbl = transversal(g, h, CosetKind::Double);
  for (Element z : dbl.reps) {
    OpCounter partial_ops;
    std::vector<Eigen::MatrixXcd> via_partial = skew_via_partial_transforms(f, z, R, partial_ops);

    GroupFunction rz{g, Eigen::VectorXcd(g->order())};
    for (int x = 0; x < g->order(); ++x)
      rz.values[x] = up.values[x] * up.values[g->compose(x, z)];
    OpCounter direct_ops;
    FourierCoefficients direct = fourier_transform(rz, R, direct_ops);

    CHECK(oracle::max_block_diff(via_partial, direct.blocks) < 1e-9);
    auto pt = partial_ops.total();
    auto dt = direct_ops.total();
    CHECK(pt.mults > 0);
    CHECK(dt.mults > 0);
    MESSAGE("z=", g->label(z), " partial mults=", pt.mults, " direct mults=", dt.mults);
  }
}

TEST_CASE("rank condition holds for generic right-coset data") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 2);
  CosetTransversal space = transversal(g, h, CosetKind::Right);
  std::mt19937_64 rng(43);
  CosetFunction f = random_coset_function(space, rng);
  RankReport rep = rank_condition(f, R);
  CHECK(rep.all_ok);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].rank == 1);
  CHECK(rep.rows[0].expected == 1);
  CHECK(rep.rows[1].rank == 1);
  CHECK(rep.rows[1].expected == 1);
  CHECK(rep.rows[2].rank == 0);
  CHECK(rep.rows[2].expected == 0);
}

TEST_CASE("zeroing a fourier block breaks the rank condition") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 2);
  CosetTransversal space = transversal(g, h, CosetKind::Right);
  std::mt19937_64 rng(47);
  CosetFunction f = random_coset_function(space, rng);

  OpCounter ops;
  FourierCoefficients F = fourier_transform(lift(f), R, ops);
  F.blocks[1].setZero();
  GroupFunction damaged = inverse_fourier(F, ops);
  CosetFunction f2 = restrict_function(damaged, space);

  RankReport rep = rank_condition(f2, R);
  CHECK_FALSE(rep.all_ok);
  CHECK(rep.rows[1].rank == 0);
  CHECK(rep.rows[1].expected == 1);
  CHECK_FALSE(rep.rows[1].ok);
  CHECK(rep.rows[0].ok);
}

TEST_CASE("over the trivial subgroup the rank condition is plain invertibility") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  CosetTransversal space = transversal(g, trivial_subgroup(g), CosetKind::Right);
  std::mt19937_64 rng(53);
  CosetFunction f = random_coset_function(space, rng);
  RankReport rep = rank_condition(f, R);
  CHECK(rep.all_ok);
  for (std::size_t r = 0; r < rep.rows.size(); ++r)
    CHECK(rep.rows[r].expected == R->irreps[r].dim);
}

TEST_CASE("kind mismatches are rejected") {
  auto g = FiniteGroup::symmetric(3);
  auto R = irreps_for(g);
  Subgroup h = canonical_symmetric_subgroup(g, 2);
  CosetTransversal left = transversal(g, h, CosetKind::Left);
  CosetTransversal right = transversal(g, h, CosetKind::Right);
  std::mt19937_64 rng(59);
  CosetFunction on_left = random_coset_function(left, rng);
  CosetFunction on_right = random_coset_function(right, rng);
  OpCounter ops;
  CHECK_THROWS_AS(rank_condition(on_left, R), Error);
  CHECK_THROWS_AS(coset_fourier(on_right, R, ops), Error);
  CHECK_THROWS_AS(restricted_skew_spectrum(on_right, R, ops), Error);

  CosetFunction bad{left, Eigen::VectorXcd::Zero(5)};
  CHECK_THROWS_AS(validate(bad), Error);
}
