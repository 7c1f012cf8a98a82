#include <gtest/gtest.h>

#include <random>

#include "rhocalc/rhocalc.hpp"

using namespace rhocalc;

namespace {

std::size_t count_compositions(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Mul>) {
          return count_compositions(n.lhs) + count_compositions(n.rhs);
        } else if constexpr (std::is_same_v<T, IntPow> || std::is_same_v<T, RatPow>) {
          return count_compositions(n.base);
        } else if constexpr (std::is_same_v<T, Comp>) {
          return 1 + count_compositions(n.arg);
        } else {
          return 0;
        }
      },
      e.node().value);
}

template <typename T>
const T* as(const Expr& e) {
  return std::get_if<T>(&e.node().value);
}

}  // namespace

TEST(Parse, TrigIdentityHasTwoCompositions) {
  EXPECT_EQ(count_compositions(parse_expression("sin(x)^2+cos(x)^2")), 2u);
}

TEST(Parse, DeltaSquaredIsAPowerOfTheKernel) {
  const Expr e = parse_expression("delta(x)^2");
  const auto* p = as<IntPow>(e);
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->power, 2);
  EXPECT_EQ(to_dsl(p->base), "s^-1*gauss(x*s^-1)");
  // same value as the explicit product
  const auto pt = parse_point("x=0.3*s");
  const auto a = evaluate(e, pt);
  const auto b = evaluate(parse_expression("delta(x)*delta(x)"), pt);
  EXPECT_LE(coefficient_gap(a, b), 1e-14 * l1(a));
}

TEST(Parse, HeavisideDesugarsToTheKernel) {
  EXPECT_EQ(to_dsl(parse_expression("heaviside(x)")), "gausscdf(x*s^-1)");
}

TEST(Parse, ScalePowers) {
  EXPECT_EQ(as<RhoPow>(parse_expression("s^(1/2)"))->exp, Exponent(1, 2));
  EXPECT_EQ(as<RhoPow>(parse_expression("rho^(-3/4)"))->exp, Exponent(-3, 4));
  EXPECT_EQ(as<RhoPow>(parse_expression("s^-2"))->exp, Exponent(-2));
  EXPECT_EQ(as<RhoPow>(parse_expression("s"))->exp, Exponent(1));
  EXPECT_NE(as<RatPow>(parse_expression("(1+x)^(1/3)")), nullptr);
  EXPECT_NE(as<RatPow>(parse_expression("sqrt(x)")), nullptr);
}

TEST(Parse, UnparenthesizedRationalExponentIsAnError) {
  try {
    parse_expression("exp(x)+s^1/2");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 11u);
  }
  EXPECT_NO_THROW(parse_expression("s^1/x"));
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_expression("x +\n  * y");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("2:3: ", 0), 0u);
  }
  EXPECT_THROW(parse_expression("sin x"), SyntaxError);
  EXPECT_THROW(parse_expression("(x"), SyntaxError);
  EXPECT_THROW(parse_expression("x # y"), SyntaxError);
  EXPECT_THROW(parse_expression(""), SyntaxError);
  EXPECT_THROW(parse_expression("x^1.5"), SyntaxError);
  EXPECT_THROW(parse_expression("s^(1/0)"), SyntaxError);
  EXPECT_THROW(parse_expression("s^(1/65)"), ExponentRange);
}

TEST(Parse, UnknownNamesAreUnbound) {
  EXPECT_THROW(parse_expression("w + 1"), UnboundVariable);
  EXPECT_THROW(parse_expression("tan(x)"), UnboundVariable);
  EXPECT_THROW(parse_program("x*y", "R"), UnboundVariable);
  EXPECT_NO_THROW(parse_program("x*y", "R^2"));
}

TEST(Parse, PrecedenceAndAssociativity) {
  const auto v = [](const char* text) { return evaluate(parse_expression(text), AsymptoticPoint{}).coefficient(0).real(); };
  EXPECT_DOUBLE_EQ(v("2+3*4"), 14.0);
  EXPECT_DOUBLE_EQ(v("2*3^2"), 18.0);
  EXPECT_DOUBLE_EQ(v("-2^2"), -4.0);
  EXPECT_DOUBLE_EQ(v("8/4/2"), 1.0);
  EXPECT_DOUBLE_EQ(v("10-4-3"), 3.0);
  EXPECT_DOUBLE_EQ(v("2^-1"), 0.5);
  EXPECT_DOUBLE_EQ(v("1.5e1"), 15.0);
  const auto z = evaluate(parse_expression("(1+2*i)*(1-2*i)"), AsymptoticPoint{});
  EXPECT_TRUE(z.is_real());
  EXPECT_DOUBLE_EQ(z.coefficient(0).real(), 5.0);
}

TEST(PrettyPrint, RoundTripPreservesEvaluation) {
  std::mt19937_64 rng(3);
  const auto dom = DomainSpec::box({-2.0, -2.0}, {2.0, 2.0});
  for (int k = 0; k < 100; ++k) {
    Expr e = gen::random_expr(rng, {2, 4});
    if (k % 3 == 0) e = e * parse_expression("delta(x) - heaviside(y)/3 + sqrt(1+x^2)*(2-i)");
    const std::string text = to_dsl(e);
    const Expr back = parse_expression(text);
    EXPECT_EQ(to_dsl(back), text);
    for (std::size_t i = 0; i < 10; ++i) {
      const auto p = gen::random_point(rng, dom, i, 3);
      EXPECT_EQ(evaluate(back, p), evaluate(e, p)) << text;
    }
  }
}

TEST(PrettyPrint, Constants) {
  EXPECT_EQ(to_dsl(expr::constant(-1.5)), "(-1.5)");
  EXPECT_EQ(to_dsl(expr::constant(0.1)), "0.10000000000000001");
  EXPECT_EQ(to_dsl(expr::constant({0.0, 1.0})), "i");
  EXPECT_EQ(to_dsl(expr::constant({2.0, -1.0})), "(2 + (-1)*i)");
}

TEST(PointLiteral, StandardAndInfinitesimalParts) {
  const auto p = parse_point("x=0.5 + 2*s^2 - s^(1/2), y=-1");
  ASSERT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.standard_part(), (std::vector<double>{0.5, -1.0}));
  EXPECT_EQ(p.infinitesimal_part()[0].terms(), (std::vector<Term>{{Exponent(1, 2), -1.0}, {2, 2.0}}));
  EXPECT_TRUE(p.infinitesimal_part()[1].is_null());
  EXPECT_EQ(format_point(p), "x=0.5 - 1*s^(1/2) + 2*s^2, y=-1");
}

TEST(PointLiteral, TinyStandardPartsSurvive) {
  EXPECT_EQ(parse_point("x=1e-13").standard_part(), std::vector<double>{1e-13});
}

TEST(PointLiteral, Errors) {
  EXPECT_THROW(parse_point("x=s^-1"), NotInfinitesimal);
  EXPECT_THROW(parse_point("y=1"), UnboundVariable);
  EXPECT_THROW(parse_point("x=1, x=2"), Error);
  EXPECT_THROW(parse_point("x"), SyntaxError);
  EXPECT_THROW(parse_point("x=y"), Error);
  EXPECT_THROW(parse_point("x=i"), Error);
  EXPECT_THROW(parse_program("x", "R", "x=0, y=0"), Error);
}

TEST(DomainLiteral, Forms) {
  EXPECT_EQ(parse_domain("R").dimension(), 1u);
  EXPECT_EQ(parse_domain("R^3").dimension(), 3u);
  const auto box = parse_domain("box(-2, 2, 0, inf)");
  EXPECT_EQ(box.dimension(), 2u);
  EXPECT_TRUE(box.contains(std::vector<double>{1.0, 1e300}));
  EXPECT_EQ(parse_domain("ball(0,0,0,1)").dimension(), 3u);
  EXPECT_TRUE(parse_domain("annulus(0,0,1,2)").arcwise_connected());
  EXPECT_FALSE(parse_domain("union(0,1,2,3)").arcwise_connected());
  EXPECT_THROW(parse_domain("box(1)"), Error);
  EXPECT_THROW(parse_domain("torus(1,2)"), Error);
  EXPECT_THROW(parse_domain("box(a,b)"), Error);
}
