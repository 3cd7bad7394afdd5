#include <gtest/gtest.h>

#include <sstream>

#include "tatehh/closed_forms.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/tate_engine.hpp"

using namespace tatehh;

namespace {

const FieldSpec Q = FieldSpec::rational();
Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::from_fraction(Q, n, d); }

TateRequest req(QciSpec spec, int lo, int hi, Direction dir, MethodPolicy policy = MethodPolicy::automatic,
                std::int64_t k = 0) {
  TateRequest r;
  r.algebra = std::move(spec);
  r.n_min = lo;
  r.n_max = hi;
  r.variant = dir;
  r.coefficient = {k};
  r.policy = policy;
  return r;
}

std::vector<std::uint64_t> values(const DimensionTable& t) {
  std::vector<std::uint64_t> out;
  for (const auto& e : t.entries) out.push_back(e.dimension.value_or(~std::uint64_t{0}));
  return out;
}

TEST(Engine, Codim2CohomologyTable) {
  // degrees -4..4; 1, 2, 1 at 0, 1, 2
  const std::vector<std::uint64_t> want = {0, 0, 0, 0, 1, 2, 1, 0, 0};
  for (auto policy : {MethodPolicy::automatic, MethodPolicy::bar, MethodPolicy::formula}) {
    const auto t = tate_dims(req(QciSpec::codim2(Q, 2, 2, q(2)), -4, 4, Direction::cohomology, policy));
    EXPECT_EQ(values(t), want) << to_string(policy);
  }
  // the complex route reaches degree <= 0 only
  const auto t = tate_dims(req(QciSpec::codim2(Q, 2, 2, q(2)), -4, 4, Direction::cohomology, MethodPolicy::complex));
  for (int n = -4; n <= 0; ++n) EXPECT_EQ(t.at(n).dimension, std::optional<std::uint64_t>(n == 0 ? 1 : 0));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(t.at(n).method, Method::unavailable);
  EXPECT_EQ(t.at(-3).method, Method::duality);
  EXPECT_EQ(t.at(-3).source, "homology/2/nu:-1/delta");
}

TEST(Engine, Codim2HomologyTableIsConstant) {
  for (auto policy : {MethodPolicy::automatic, MethodPolicy::bar}) {
    const auto t = tate_dims(req(QciSpec::codim2(Q, 2, 3, q(2)), -3, 3, Direction::homology, policy));
    EXPECT_EQ(values(t), std::vector<std::uint64_t>(7, 3));
  }
}

TEST(Engine, ExteriorHomologyPalindrome) {
  const auto f3 = FieldSpec::prime(3);
  for (auto policy : {MethodPolicy::automatic, MethodPolicy::bar}) {
    const auto t = tate_dims(req(QciSpec::exterior(f3, 2), -3, 2, Direction::homology, policy));
    EXPECT_EQ(values(t), (std::vector<std::uint64_t>{6, 4, 2, 2, 4, 6}));
  }
}

TEST(Engine, MethodsFollowThePolicy) {
  const auto spec = QciSpec::codim2(Q, 2, 2, q(2));
  const auto bar = tate_dims(req(spec, -2, 2, Direction::cohomology, MethodPolicy::bar));
  EXPECT_EQ(bar.at(1).method, Method::oracle);
  EXPECT_EQ(bar.at(0).method, Method::duality);
  EXPECT_EQ(bar.at(0).source, "homology/0/nu:1/zeromaps");
  EXPECT_EQ(bar.at(-1).method, Method::duality);
  const auto formula = tate_dims(req(spec, -2, 2, Direction::cohomology, MethodPolicy::formula));
  for (const auto& e : formula.entries) EXPECT_EQ(e.method, Method::formula);
  const auto cx = tate_dims(req(spec, 1, 3, Direction::homology, MethodPolicy::complex, -1));
  for (const auto& e : cx.entries) {
    EXPECT_EQ(e.method, Method::delta);
    EXPECT_EQ(e.dimension, std::optional<std::uint64_t>(0));
  }
}

TEST(Engine, DualitySourcesAreSingleHop) {
  for (auto dir : {Direction::homology, Direction::cohomology})
    for (std::int64_t k : {-1, 0, 1, 2}) {
      const auto t = tate_dims(req(QciSpec::codim2(Q, 2, 2, q(3)), -4, 3, dir, MethodPolicy::automatic, k));
      for (const auto& e : t.entries) {
        ASSERT_TRUE(e.dimension.has_value());
        const auto method = e.source.substr(e.source.rfind('/') + 1);
        EXPECT_NE(method, "duality") << e.source;
        if (e.method != Method::duality) EXPECT_EQ(method, to_string(e.method));
      }
    }
}

TEST(Engine, TwistedCoefficientsAgreeAcrossMethods) {
  const auto spec = QciSpec::codim2(Q, 2, 3, q(1, 2));
  for (auto dir : {Direction::homology, Direction::cohomology})
    for (std::int64_t k : {-1, 0, 1, 2}) {
      const auto a = tate_dims(req(spec, -3, 3, dir, MethodPolicy::automatic, k));
      const auto b = tate_dims(req(spec, -3, 3, dir, MethodPolicy::bar, k));
      EXPECT_EQ(values(a), values(b)) << to_string(dir) << " k=" << k;
    }
}

TEST(Engine, BudgetGivesUnavailableEntries) {
  auto r = req(QciSpec::codim2(Q, 2, 2, q(2)), 0, 6, Direction::cohomology, MethodPolicy::bar);
  r.bar_budget = 2000;
  const auto t = tate_dims(r);
  EXPECT_TRUE(t.at(0).dimension.has_value());
  EXPECT_TRUE(t.at(1).dimension.has_value());
  EXPECT_FALSE(t.at(6).dimension.has_value());
  EXPECT_EQ(t.at(6).method, Method::unavailable);
  std::stringstream ss;
  write_csv(ss, t);
  EXPECT_NE(ss.str().find("6,NA,unavailable,"), std::string::npos) << ss.str();
}

TEST(Engine, PrimeFieldCodim2) {
  const auto f5 = FieldSpec::prime(5);
  const auto spec = QciSpec::codim2(f5, 2, 2, Scalar::from_int(f5, 2));
  EXPECT_EQ(formula_family(spec), FormulaFamily::none);
  const auto t = tate_dims(req(spec, -2, 2, Direction::homology, MethodPolicy::formula));
  for (const auto& e : t.entries) EXPECT_FALSE(e.dimension.has_value());
  EXPECT_THROW(tate_dims(req(spec, 1, 2, Direction::homology, MethodPolicy::complex, -1)), HypothesisError);
  EXPECT_NO_THROW(tate_dims(req(spec, -2, 2, Direction::homology, MethodPolicy::automatic)));
}

TEST(Engine, RequestValidation) {
  EXPECT_THROW(tate_dims(req(QciSpec::exterior(Q, 2), 3, 1, Direction::homology)), UsageError);
  EXPECT_EQ(Coefficient::parse("regular").nu_power, 0);
  EXPECT_EQ(Coefficient::parse("nu:-2").nu_power, -2);
  EXPECT_EQ(Coefficient{3}.to_string(), "nu:3");
  EXPECT_THROW(Coefficient::parse("nu:"), ParseError);
  EXPECT_THROW(Coefficient::parse("nu:1x"), ParseError);
  EXPECT_THROW(parse_policy("fast"), ParseError);
  EXPECT_EQ(parse_policy("auto"), MethodPolicy::automatic);
}

TEST(Engine, FormulaFamilies) {
  EXPECT_EQ(formula_family(QciSpec::codim2(Q, 2, 3, q(2))), FormulaFamily::codim2_generic);
  EXPECT_EQ(formula_family(QciSpec::codim2(Q, 2, 3, q(-1))), FormulaFamily::none);
  EXPECT_EQ(formula_family(QciSpec::exterior(FieldSpec::prime(3), 3)), FormulaFamily::exterior);
  // in characteristic 2 the exterior algebra is commutative and both closed forms apply
  EXPECT_EQ(formula_family(QciSpec::exterior(FieldSpec::prime(2), 3)), FormulaFamily::commutative_ci);
  EXPECT_EQ(formula_family(QciSpec::commutative(Q, {3, 3})), FormulaFamily::commutative_ci);
  EXPECT_EQ(formula_family(QciSpec::commutative(Q, {2, 3})), FormulaFamily::none);
}

TEST(CrossValidation, Examples) {
  // bar and formula in positive degrees; the delta route enters at the mirrored degrees
  const auto c2 = cross_validate(req(QciSpec::codim2(Q, 2, 2, q(2)), -4, 3, Direction::cohomology));
  EXPECT_TRUE(c2.all_agree());
  for (const auto& d : c2.degrees) {
    std::size_t available = 0;
    for (const auto& a : d.attempts) available += a.entry.dimension.has_value();
    EXPECT_EQ(available, d.degree >= 1 ? 2u : 3u) << "degree " << d.degree;
  }
  const auto ext = cross_validate(req(QciSpec::exterior(FieldSpec::prime(2), 2), 0, 0, Direction::homology));
  EXPECT_TRUE(ext.all_agree());
  for (const auto& a : ext.degrees.at(0).attempts)
    if (a.entry.dimension) EXPECT_EQ(*a.entry.dimension, 4u);
  const auto ci = cross_validate(req(QciSpec::commutative(Q, {2, 2}), 1, 3, Direction::homology));
  EXPECT_TRUE(ci.all_agree());
  for (const auto& d : ci.degrees)
    for (const auto& a : d.attempts)
      if (a.entry.dimension) EXPECT_EQ(*a.entry.dimension, static_cast<std::uint64_t>(d.degree + 3));
}

TEST(Serialization, RoundTrips) {
  auto r = req(QciSpec::codim2(Q, 2, 2, q(2)), -3, 5, Direction::cohomology, MethodPolicy::bar);
  r.bar_budget = 5000;
  const auto t = tate_dims(r);
  std::stringstream ss;
  write_csv(ss, t);
  EXPECT_EQ(ss.str().substr(0, 31), "degree,dimension,method,source\n");
  EXPECT_EQ(read_csv(ss), t);
  EXPECT_EQ(table_from_json(to_json(t)), t);
  EXPECT_EQ(to_json(t), to_json(tate_dims(r)));
  std::stringstream bad("degree,dimension,method,source\n1,x,oracle,s\n");
  EXPECT_THROW(read_csv(bad), ParseError);
  EXPECT_THROW(table_from_json("{}"), ParseError);
}

}  // namespace
