#include <gtest/gtest.h>

#include <limits>

#include "rhocalc/asymvec.hpp"

using namespace rhocalc;

namespace {

AsymptoticScalar mono(double c, Exponent e) { return AsymptoticScalar::monomial(c, e); }

}  // namespace

TEST(AsymptoticVector, NormOfThreeFourFiveTriangle) {
  const AsymptoticVector v{mono(3.0, 1), mono(4.0, 1)};
  const auto n = norm(v);
  EXPECT_EQ(n.valuation(), Exponent(1));
  EXPECT_NEAR(n.leading_coefficient(), 5.0, 1e-15);
}

TEST(AsymptoticVector, OneDimensionalNormIsAbsoluteValue) {
  const AsymptoticVector v{mono(-2.0, Exponent(1, 2))};
  EXPECT_EQ(norm(v), mono(2.0, Exponent(1, 2)));
}

TEST(AsymptoticVector, NullVector) {
  const auto z = AsymptoticVector::zero(3);
  EXPECT_TRUE(z.is_null());
  EXPECT_TRUE(norm(z).is_null());
  EXPECT_EQ(classify_vector(z), Classification::NullAtOrder);
}

TEST(AsymptoticVector, BallMembership) {
  EXPECT_EQ(in_ball(AsymptoticVector{mono(1.0, 1)}, 1), SeriesVerdict::Fails);
  EXPECT_EQ(in_ball(AsymptoticVector{mono(1.0, 2)}, 1), SeriesVerdict::Holds);
  EXPECT_EQ(in_ball(AsymptoticVector{mono(0.37, 1)}, 1), SeriesVerdict::Holds);
  EXPECT_EQ(in_ball(AsymptoticVector{mono(1.0, 1)}, 0), SeriesVerdict::Holds);
  EXPECT_EQ(in_ball(AsymptoticVector{mono(0.5, 1), mono(0.5, 1)}, 1), SeriesVerdict::Holds);
  EXPECT_EQ(in_ball(AsymptoticVector{mono(1.0, 1), mono(1.0, 1)}, 1), SeriesVerdict::Fails);
  EXPECT_THROW(in_ball(AsymptoticVector{mono(1.0, 1)}, -1), Error);
}

TEST(AsymptoticVector, LinearOperations) {
  const AsymptoticVector u{mono(1.0, 1), mono(2.0, 2)};
  const AsymptoticVector v{mono(-1.0, 1), mono(1.0, 2)};
  const auto w = add(u, v);
  EXPECT_TRUE(w[0].is_null());
  EXPECT_EQ(w[1], mono(3.0, 2));
  EXPECT_EQ(sub(u, u).is_null(), true);
  EXPECT_EQ(mul(mono(2.0, -1), u)[0], mono(2.0, 0).truncated(9));
}

TEST(NearstandardPoint, Construction) {
  const auto dom = DomainSpec::box({-1.0}, {1.0});
  EXPECT_NO_THROW(make_nearstandard({0.5}, AsymptoticVector{mono(1.0, 1)}, dom));
  EXPECT_THROW(make_nearstandard({1.5}, AsymptoticVector{mono(1.0, 1)}, dom), OutsideDomain);
  EXPECT_THROW(make_nearstandard({0.5}, AsymptoticVector{mono(1.0, 0)}, dom), NotInfinitesimal);
  EXPECT_THROW(make_nearstandard({0.5}, AsymptoticVector{mono(1.0, -1)}, dom), NotInfinitesimal);
}

TEST(NearstandardPoint, CoordinatesAndShift) {
  const AsymptoticPoint p({2.0}, AsymptoticVector{mono(1.0, 1)});
  EXPECT_EQ(p.coordinate(0, 10).terms(), (std::vector<Term>{{0, 2.0}, {1, 1.0}}));
  const auto q = p.shifted(AsymptoticVector{mono(-1.0, 1)});
  EXPECT_TRUE(q.infinitesimal_part().is_null());
  EXPECT_EQ(q.standard_part(), std::vector<double>{2.0});
}

TEST(Domain, Membership) {
  const auto box = DomainSpec::box({-2.0, 0.0}, {2.0, std::numeric_limits<double>::infinity()});
  const std::vector<double> in{0.0, 100.0}, out{0.0, -1.0};
  EXPECT_TRUE(box.contains(in));
  EXPECT_FALSE(box.contains(out));
  const auto ring = DomainSpec::annulus(0.0, 0.0, 1.0, 2.0);
  const std::vector<double> hole{0.1, 0.1}, band{1.5, 0.0};
  EXPECT_FALSE(ring.contains(hole));
  EXPECT_TRUE(ring.contains(band));
  const auto ball = DomainSpec::ball({1.0, 1.0, 1.0}, 0.5);
  const std::vector<double> centre{1.0, 1.0, 1.0};
  EXPECT_TRUE(ball.contains(centre));
  EXPECT_EQ(ball.dimension(), 3u);
}

TEST(Domain, Connectedness) {
  EXPECT_TRUE(DomainSpec::whole_space(2).arcwise_connected());
  EXPECT_TRUE(DomainSpec::annulus(0.0, 0.0, 1.0, 2.0).arcwise_connected());
  EXPECT_FALSE(DomainSpec::interval_union(0.0, 1.0, 2.0, 3.0).arcwise_connected());
  EXPECT_TRUE(DomainSpec::interval_union(0.0, 2.0, 1.0, 3.0).arcwise_connected());
}

TEST(Domain, SamplesAreDeterministicAndInside) {
  for (const auto& dom : {DomainSpec::box({-2.0}, {2.0}), DomainSpec::annulus(0.0, 0.0, 1.0, 2.0),
                          DomainSpec::ball({0.0, 0.0}, 1.0), DomainSpec::interval_union(0.0, 1.0, 2.0, 3.0),
                          DomainSpec::whole_space(3), DomainSpec::box({0.0}, {std::numeric_limits<double>::infinity()})}) {
    const auto a = dom.samples(42, 30);
    EXPECT_EQ(a, dom.samples(42, 30)) << dom.name();
    EXPECT_NE(a, dom.samples(43, 30)) << dom.name();
    for (const auto& x : a) EXPECT_TRUE(dom.contains(x)) << dom.name();
  }
}

TEST(Domain, FirstSampleIsTheCentre) {
  EXPECT_EQ(DomainSpec::box({-2.0}, {2.0}).sample(42, 0), std::vector<double>{0.0});
  EXPECT_EQ(DomainSpec::whole_space(2).sample(9, 0), (std::vector<double>{0.0, 0.0}));
}
