#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rhocalc/rhocalc.hpp"

using namespace rhocalc;

namespace {

const DomainSpec kLine = DomainSpec::box({-2.0}, {2.0});
const DomainSpec kPlane = DomainSpec::box({-2.0, -2.0}, {2.0, 2.0});

AsymptoticPoint at(double x) { return AsymptoticPoint::standard({x}); }

}  // namespace

TEST(Evaluate, PolynomialAtNearstandardPoint) {
  const AsymptoticFunction f{parse_expression("x^2"), kLine};
  const auto v = evaluate(f, parse_point("x=1.5+s"));
  EXPECT_EQ(v.re().terms(), (std::vector<Term>{{0, 2.25}, {1, 3.0}, {2, 1.0}}));
}

TEST(Evaluate, StandardFunctionAtStandardPointIsStandard) {
  const auto v = evaluate(lift_standard(Primitive::Exp, kLine), at(0.0));
  EXPECT_EQ(v.re().terms(), (std::vector<Term>{{0, 1.0}}));
}

TEST(Evaluate, ChecksDomainAndDimension) {
  const AsymptoticFunction f{parse_expression("x"), kLine};
  EXPECT_THROW(evaluate(f, at(3.0)), OutsideDomain);
  EXPECT_THROW(evaluate(f, AsymptoticPoint::standard({0.0, 0.0})), OutsideDomain);
  EXPECT_THROW(evaluate(parse_expression("y"), at(0.0)), UnboundVariable);
}

TEST(Evaluate, ReportsValuesAtTheRequestedOrder) {
  const auto line = DomainSpec::whole_space(1);
  const auto d = embed_delta(line);
  EXPECT_EQ(evaluate(d * d, at(0.0)).order(), Exponent(10));
  EXPECT_EQ(evaluate(d, at(0.0)).order(), Exponent(10));
  Config c;
  c.order = 4;
  EXPECT_EQ(evaluate(d * d * d, at(0.0), c).order(), Exponent(4));
}

TEST(Evaluate, DomainErrorsPropagate) {
  EXPECT_THROW(evaluate(parse_expression("log(x)"), at(-1.0)), DomainError);
  EXPECT_THROW(evaluate(parse_expression("exp(s^-1)"), AsymptoticPoint{}), NotModerate);
  EXPECT_THROW(evaluate(parse_expression("sqrt(x)"), at(-1.0)), NotPositive);
  EXPECT_THROW(evaluate(parse_expression("sin(i)"), AsymptoticPoint{}), DomainError);
}

TEST(Evaluate, SeriesMatchNumericEvaluationAtSmallScale) {
  std::mt19937_64 rng(11);
  Config cfg;
  cfg.order = 10;
  const double rho = 1e-3;
  for (int k = 0; k < 200; ++k) {
    const Expr e = gen::random_expr(rng, {2, 3});
    const auto p = gen::random_point(rng, kPlane, k, 11, cfg.order);
    const auto v = evaluate(e, p, cfg).evaluate_at(rho);
    std::vector<double> x;
    for (std::size_t i = 0; i < 2; ++i) x.push_back(p.coordinate(i, cfg.order).evaluate_at(rho));
    const auto direct = oracle::numeric(e, x, rho);
    const double scale = std::max(1.0, std::abs(direct));
    EXPECT_NEAR(v.real(), direct.real(), 1e-9 * scale) << to_dsl(e);
    EXPECT_NEAR(v.imag(), direct.imag(), 1e-9 * scale) << to_dsl(e);
  }
}

TEST(Differentiate, SymbolicDerivativeMatchesFiniteDifferences) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Expr e = gen::random_expr(rng, {2, 3});
    for (std::size_t i = 0; i < 2; ++i) {
      const Expr de = differentiate(e, i);
      const std::vector<double> x{0.3, -0.7};
      const double h = 1e-5, rho = 0.1;
      auto xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const auto fd = (oracle::numeric(e, xp, rho) - oracle::numeric(e, xm, rho)) / (2.0 * h);
      const auto sym = oracle::numeric(de, x, rho);
      EXPECT_NEAR(sym.real(), fd.real(), 1e-5 * std::max(1.0, std::abs(fd))) << to_dsl(e);
    }
  }
}

TEST(Differentiate, KernelDerivatives) {
  // H' = delta and delta' = -2 x s^-2 delta, compared as series at a few points
  const Expr h = parse_expression("heaviside(x)");
  const Expr d = parse_expression("delta(x)");
  for (const char* p : {"x=0", "x=s", "x=0.5*s^(1/2)", "x=-2*s"}) {
    const auto pt = parse_point(p);
    const auto a = evaluate(differentiate(h, 0), pt);
    const auto b = evaluate(d, pt);
    EXPECT_LE(coefficient_gap(a, b), 1e-12) << p;
    const auto dd = evaluate(differentiate(d, 0), pt);
    const auto expect = evaluate(parse_expression("-2*x*s^-2*delta(x)"), pt);
    EXPECT_LE(coefficient_gap(dd, expect), 1e-12 * std::max(1.0, l1(expect))) << p;
  }
}

TEST(Differentiate, MultiIndicesByTotalDegree) {
  const auto idx = multi_indices(2, 2);
  ASSERT_EQ(idx.size(), 6u);
  EXPECT_EQ(idx[0], (MultiIndex{0, 0}));
  EXPECT_EQ(order_of(idx[3]), 2u);
  const Expr e = parse_expression("x^2*y^3");
  const auto v = evaluate(differentiate(e, MultiIndex{2, 1}), AsymptoticPoint::standard({1.0, 2.0}));
  EXPECT_DOUBLE_EQ(v.coefficient(0).real(), 24.0);
}

TEST(NullTests, DeltaAwayFromTheOrigin) {
  const auto d = embed_delta(kLine);
  EXPECT_EQ(is_null_at(d, at(1.0), 3), SeriesVerdict::Holds);
  EXPECT_EQ(is_null_at(d, at(0.0), 3), SeriesVerdict::Fails);
  EXPECT_THROW(is_null_at(d, at(5.0), 3), OutsideDomain);
}

TEST(NullTests, EqualModuloNull) {
  const AsymptoticFunction f{parse_expression("sin(x)"), kLine};
  const AsymptoticFunction g{parse_expression("sin(x) + s^10*cos(x)"), kLine};
  const AsymptoticFunction h{parse_expression("sin(x) + s^9*cos(x)"), kLine};
  EXPECT_EQ(equal_mod_null(f, g, 10, 3), SeriesVerdict::Holds);
  EXPECT_EQ(equal_mod_null(f, h, 10, 3), SeriesVerdict::Fails);
}

TEST(Embeddings, ConstantFunctionReproducesItsValue) {
  const AsymptoticComplex c(normalize({{-1, 2.0}, {0, 3.0}, {Exponent(3, 2), -1.0}}, 10),
                            AsymptoticScalar::monomial(0.5, 2));
  const auto f = constant_function(c, kPlane);
  EXPECT_EQ(evaluate(f, AsymptoticPoint::standard({0.3, 0.1})), c);
  EXPECT_EQ(arity(f.expr), 0u);
}

TEST(Embeddings, KernelsNeedOneDimension) {
  EXPECT_THROW(embed_delta(kPlane), Error);
  EXPECT_THROW(embed_heaviside(kPlane), Error);
}

TEST(Embeddings, PointPerturbationThroughAKernelLosesOneOrder) {
  // H(x) = gausscdf(x/s): a shift of the point at s^N shows up at s^(N-1)
  const auto h = embed_heaviside(DomainSpec::whole_space(1));
  const auto moved = parse_point("x=s^10", Exponent(11));
  const auto v = evaluate(h, moved);
  EXPECT_NEAR(v.coefficient(9).real(), static_cast<double>(oracle::inv_sqrt_pi()), 1e-15);
  // delta is even, so the same shift stays beyond the horizon
  const auto d = embed_delta(DomainSpec::whole_space(1));
  EXPECT_EQ(evaluate(d, moved), evaluate(d, at(0.0)));
}
