#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "tatehh/algebra.hpp"
#include "tatehh/cli_reports.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/hochschild.hpp"

using namespace tatehh;

namespace {

const FieldSpec Q = FieldSpec::rational();
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::from_fraction(Q, n, d); }

BarWindowRequest request(const QciAlgebra& a, Bimodule b, int n_max, Direction dir) {
  BarWindowRequest r{a, std::move(b), n_max, dir, kDefaultBarBudget, true, {}, std::nullopt};
  return r;
}

DiagonalTwist id(const QciAlgebra& a) { return DiagonalTwist::identity(a.field(), a.generators()); }

TEST(Bar, TruncatedPolynomialInCharacteristicTwo) {
  const QciAlgebra a(QciSpec::commutative(FieldSpec::prime(2), {2}));
  const std::vector<std::size_t> expected = {2, 2, 2, 2};
  EXPECT_EQ(hh_homology_dims(request(a, regular_bimodule(a), 3, Direction::homology)), expected);
  EXPECT_EQ(hh_cohomology_dims(request(a, regular_bimodule(a), 3, Direction::cohomology)), expected);
}

TEST(Bar, TruncatedPolynomialOverRationals) {
  const QciAlgebra a(QciSpec::commutative(Q, {2}));
  EXPECT_EQ(hh_cohomology_dims(request(a, regular_bimodule(a), 3, Direction::cohomology)),
            (std::vector<std::size_t>{2, 1, 1, 1}));
}

TEST(Bar, CommutativeCenterIsEverything) {
  const QciAlgebra a(QciSpec::commutative(Q, {2, 2}));
  EXPECT_EQ(hh_cohomology_dims(request(a, regular_bimodule(a), 0, Direction::cohomology)).at(0), 4u);
}

TEST(Bar, Codim2CohomologyLowDegrees) {
  const QciAlgebra a(QciSpec::codim2(Q, 2, 2, q(2)));
  const auto dims = hh_cohomology_dims(request(a, regular_bimodule(a), 3, Direction::cohomology));
  EXPECT_EQ(dims, (std::vector<std::size_t>{2, 2, 1, 0}));
  EXPECT_EQ(dims[0], oracle::center_dim(a));
}

TEST(Bar, Codim2InverseNakayamaTwistHasNoHomology) {
  const QciAlgebra a(QciSpec::codim2(Q, 2, 2, q(2)));
  const auto dims =
      hh_homology_dims(request(a, twisted_bimodule(a, nakayama(a, -1), id(a)), 3, Direction::homology));
  EXPECT_EQ(dims[1], 0u);
  EXPECT_EQ(dims[2], 0u);
  EXPECT_EQ(dims[3], 0u);
}

TEST(Bar, DegreeZeroMatchesCommutatorsAndCenter) {
  std::vector<QciSpec> specs = {QciSpec::codim2(Q, 3, 2, q(2)), QciSpec::exterior(Q, 3),
                                QciSpec::exterior(FieldSpec::prime(2), 3), QciSpec::commutative(Q, {3, 2})};
  for (auto& s : random_specs(5, 8, 24)) specs.push_back(s);
  for (const auto& spec : specs) {
    const QciAlgebra a(spec);
    EXPECT_EQ(hh_homology_dims(request(a, regular_bimodule(a), 0, Direction::homology)).at(0),
              oracle::cocenter_dim(a));
    EXPECT_EQ(hh_cohomology_dims(request(a, regular_bimodule(a), 0, Direction::cohomology)).at(0),
              oracle::center_dim(a));
  }
}

TEST(Bar, FirstHomologyDifferentialIsCommutator) {
  // d_1(b (x) l) = b l - l b
  const QciAlgebra a(QciSpec::codim2(Q, 2, 3, q(1, 3)));
  const auto b = twisted_bimodule(a, nakayama(a, 1), id(a));
  const BimoduleActions acts(a, b);
  const auto d1 = bar_homology_differential(a, acts, 1);
  ASSERT_EQ(d1.rows(), a.dim());
  ASSERT_EQ(d1.cols(), a.dim() * a.dim());
  const auto nu = nakayama(a, 1);
  for (std::size_t l = 0; l < a.dim(); ++l)
    for (std::size_t e = 0; e < a.dim(); ++e) {
      const auto want = multiply(a.basis(e), a.basis(l)) - multiply(apply_twist(nu, a.basis(l)), a.basis(e));
      for (std::size_t r = 0; r < a.dim(); ++r) EXPECT_EQ(d1.at(r, e + a.dim() * l), want.coefficient(r));
    }
}

TEST(Bar, DifferentialsCompose) {
  for (const auto& spec : {QciSpec::codim2(Q, 2, 2, q(-2)), QciSpec::exterior(FieldSpec::prime(3), 2)}) {
    const QciAlgebra a(spec);
    const BimoduleActions acts(a, twisted_bimodule(a, nakayama(a, 1), id(a)));
    for (int n = 1; n < 3; ++n) {
      EXPECT_TRUE(multiply(bar_homology_differential(a, acts, n), bar_homology_differential(a, acts, n + 1)).is_zero());
      EXPECT_TRUE(
          multiply(bar_cohomology_differential(a, acts, n), bar_cohomology_differential(a, acts, n - 1)).is_zero());
    }
  }
}

TEST(Bar, CohomologyIsHomologyOfTheDual) {
  std::vector<QciSpec> specs = {QciSpec::codim2(Q, 2, 2, q(2)), QciSpec::codim2(Q, 3, 2, q(-1, 2)),
                                QciSpec::exterior(FieldSpec::prime(3), 2)};
  for (auto& s : random_specs(17, 4, 6)) specs.push_back(s);
  for (const auto& spec : specs) {
    const QciAlgebra a(spec);
    for (int k : {0, 1, -1}) {
      const auto b = twisted_bimodule(a, nakayama(a, k), id(a));
      EXPECT_EQ(hh_cohomology_dims(request(a, b, 3, Direction::cohomology)),
                hh_homology_dims(request(a, dual_bimodule(b), 3, Direction::homology)));
    }
  }
}

TEST(Bar, DualOfRegularBehavesLikeNakayamaTwist) {
  const QciAlgebra a(QciSpec::codim2(Q, 2, 3, q(3)));
  EXPECT_EQ(hh_homology_dims(request(a, dual_bimodule(regular_bimodule(a)), 2, Direction::homology)),
            hh_homology_dims(request(a, twisted_bimodule(a, nakayama(a, 1), id(a)), 2, Direction::homology)));
  const QciAlgebra c(QciSpec::codim2(Q, 2, 2, q(2)));
  const auto nu2 = twisted_bimodule(c, nakayama(c, 2), id(c));
  EXPECT_EQ(hh_homology_dims(request(c, dual_bimodule(nu2), 3, Direction::homology)),
            hh_homology_dims(request(c, twisted_bimodule(c, nakayama(c, -1), id(c)), 3, Direction::homology)));
}

TEST(Bar, TwistShiftInvariance) {
  const QciAlgebra a(QciSpec::codim2(Q, 2, 3, q(2)));
  const DiagonalTwist f({q(3), q(1, 2)}), g({q(-1), q(5)}), h({q(7), q(-2, 3)});
  for (auto dir : {Direction::homology, Direction::cohomology}) {
    auto dims = [&](const Bimodule& b) {
      auto r = request(a, b, 2, dir);
      return dir == Direction::homology ? hh_homology_dims(r) : hh_cohomology_dims(r);
    };
    EXPECT_EQ(dims(twisted_bimodule(a, f.compose(h), g.compose(h))), dims(twisted_bimodule(a, f, g)));
    EXPECT_EQ(dims(twisted_bimodule(a, f, id(a))), dims(twisted_bimodule(a, id(a), f.inverse())));
  }
}

TEST(Bar, BudgetErrorNamesDegree) {
  const QciAlgebra a(QciSpec::codim2(Q, 2, 2, q(2)));
  auto r = request(a, regular_bimodule(a), 5, Direction::homology);
  r.budget = 4 * 4 * 4 * 4;  // fits up to n = 2
  try {
    hh_homology_dims(r);
    FAIL() << "expected a budget error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("degree"), std::string::npos) << e.what();
  }
  r.budget = 4 * 4 * 4 * 4 * 4 * 4 * 4;
  EXPECT_NO_THROW(hh_homology_dims(r));
  EXPECT_FALSE(bar_space_dim(1000, 1000, 10).has_value());
  EXPECT_EQ(bar_space_dim(3, 4, 2), std::optional<std::size_t>(48));
}

TEST(Bar, DumpsDifferentials) {
  const auto dir = std::filesystem::temp_directory_path() / "tatehh_bar_dump_test";
  std::filesystem::remove_all(dir);
  const QciAlgebra a(QciSpec::commutative(Q, {2}));
  auto r = request(a, regular_bimodule(a), 2, Direction::cohomology);
  r.dump_dir = dir;
  hh_cohomology_dims(r);
  std::ifstream in(dir / "cohomology_d1.txt");
  ASSERT_TRUE(in.good());
  const auto m = read_coordinate(in, Q);
  EXPECT_EQ(m.rows(), 8u);
  EXPECT_EQ(m.cols(), 4u);
  std::filesystem::remove_all(dir);
}

}  // namespace
