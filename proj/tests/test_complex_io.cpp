#include <gtest/gtest.h>

#include <random>

#include "rhocalc/complex.hpp"
#include "rhocalc/series_io.hpp"
#include "rhocalc/suites.hpp"

using namespace rhocalc;

TEST(Complex, ImaginaryUnitSquaresToMinusOne) {
  const auto i = AsymptoticComplex::constant({0.0, 1.0});
  const auto sq = cmul(i, i);
  EXPECT_TRUE(sq.is_real());
  EXPECT_EQ(sq.re().terms(), (std::vector<Term>{{0, -1.0}}));
}

TEST(Complex, InverseAndModulus) {
  const auto z = AsymptoticComplex::constant({3.0, 4.0});
  const auto w = cinv(z);
  EXPECT_NEAR(w.coefficient(0).real(), 0.12, 1e-15);
  EXPECT_NEAR(w.coefficient(0).imag(), -0.16, 1e-15);
  EXPECT_NEAR(cabs(z).coefficient(0), 5.0, 1e-15);
  const auto one = cmul(z, w);
  EXPECT_NEAR(one.coefficient(0).real(), 1.0, 1e-15);
  EXPECT_NEAR(one.coefficient(0).imag(), 0.0, 1e-15);
}

TEST(Complex, ModulusOfRealIsAbsoluteValue) {
  const AsymptoticComplex z(normalize({{1, -2.0}, {2, 1.0}}, 10));
  EXPECT_EQ(cabs(z), abs(z.re()));
}

TEST(Complex, PartsShareTheSmallerOrder) {
  const AsymptoticComplex z(AsymptoticScalar::constant(1.0, 5), AsymptoticScalar::constant(2.0, 8));
  EXPECT_EQ(z.order(), Exponent(5));
  EXPECT_EQ(z.im().order(), Exponent(5));
}

TEST(SeriesFormat, HumanForm) {
  EXPECT_EQ(format_coefficient(0.5641895835477563), "5.6418958354775628e-1");
  EXPECT_EQ(format_coefficient(1.0), "1");
  EXPECT_EQ(format_coefficient(-3.0), "-3");
  EXPECT_EQ(format_coefficient(1.5e20), "1.5000000000000000e20");
  const auto a = normalize({{-1, 0.5641895835477563}}, 10);
  EXPECT_EQ(to_string(a), "5.6418958354775628e-1*s^-1 + O(s^10)");
  const auto b = normalize({{0, 1.0}, {Exponent(1, 2), -2.0}, {3, 0.25}}, Exponent(7, 2));
  EXPECT_EQ(to_string(b), "1 - 2*s^(1/2) + 2.5000000000000000e-1*s^3 + O(s^(7/2))");
  EXPECT_EQ(to_string(AsymptoticScalar::zero()), "0 + O(s^10)");
  const AsymptoticComplex z(AsymptoticScalar::constant(1.0), AsymptoticScalar::monomial(2.0, 1));
  EXPECT_EQ(to_string(z), "1 + i*(2*s^1) + O(s^10)");
}

TEST(SeriesJson, LayoutIsStable) {
  const auto a = normalize({{Exponent(-1, 2), 0.1}}, 4);
  EXPECT_EQ(dump_json(to_json(a)), R"({"terms":[{"exp":[-1,2],"re":0.10000000000000001,"im":0}],"order":[4,1]})");
}

TEST(SeriesJson, RoundTripIsExact) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const AsymptoticComplex z(gen::random_scalar(rng), gen::random_scalar(rng));
    const auto text = dump_json(to_json(z));
    const auto back = complex_from_json(Json::parse(text));
    EXPECT_EQ(back, z) << text;
    EXPECT_EQ(dump_json(to_json(back)), text);
  }
}
