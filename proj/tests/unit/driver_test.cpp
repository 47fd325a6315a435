#include <gtest/gtest.h>

#include "locgad/algebraic.hpp"
#include "locgad/driver.hpp"
#include "locgad/report.hpp"

using namespace locgad;

namespace {

std::vector<std::string> forms_of(const SupportSearch& s) {
  Ring ring = Ring::standard(s.form.nvars());
  std::vector<std::string> out;
  for (const auto& r : s.supports) out.push_back(linear_form(r.support).to_string(ring));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Driver, RunningExampleAllStrategies) {
  Polynomial f = parse_form("x^2*y + x*y*z + y^3");
  for (Strategy st : {Strategy::A, Strategy::B, Strategy::C}) {
    DriverOptions o;
    o.strategy = st;
    SupportSearch s = minimal_supports(f, o);
    ASSERT_TRUE(s.rank);
    EXPECT_EQ(*s.rank, 4);
    EXPECT_TRUE(s.exhaustive);
    EXPECT_EQ(forms_of(s), (std::vector<std::string>{"x", "x + z", "y"}));
    for (const auto& r : s.supports) EXPECT_EQ(r.hilbert.values, (std::vector<long>{1, 3, 4, 4}));
  }
}

TEST(Driver, SingleChartIdeals) {
  Polynomial f = parse_form("x^2*y + x*y*z + y^3");
  DriverOptions o;
  o.charts = ChartMode::Single;
  o.chart = 0;
  SupportSearch s = minimal_supports(f, o);
  ASSERT_EQ(s.supports.size(), 2u);
  EXPECT_EQ(s.supports[0].point, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(s.supports[1].point, (std::vector<Rational>{0, 1}));
  for (const auto& r : s.supports) EXPECT_EQ(r.rank, 4);
}

TEST(Driver, TableCountsSmall) {
  DriverOptions o;
  SupportSearch a = minimal_supports(parse_form("x^2*y*z"), o);
  EXPECT_EQ(*a.rank, 4);
  EXPECT_EQ(a.support_count(), 1u);
  SupportSearch b = minimal_supports(parse_form("x^2*y^2*z"), o);
  EXPECT_EQ(*b.rank, 6);
  EXPECT_EQ(b.support_count(), 2u);
}

TEST(Driver, GenericCoordinatesMapBack) {
  DriverOptions o;
  o.charts = ChartMode::Generic;
  o.seed = 3;
  SupportSearch s = minimal_supports(parse_form("x^2*y*z"), o);
  EXPECT_EQ(*s.rank, 4);
  ASSERT_EQ(s.supports.size(), 1u);
  EXPECT_EQ(forms_of(s), (std::vector<std::string>{"x"}));
  EXPECT_EQ(s.coordinate_change.size(), 3u);
}

TEST(Driver, StratificationConicLocus) {
  StratificationReport rep = rank_stratification(parse_form("x*y + x*z + y*z"), 0, {});
  EXPECT_EQ(rep.minimal_rank, 3);
  EXPECT_EQ(rep.generic_rank, 4);
  ASSERT_EQ(rep.strata.size(), 1u);
  ASSERT_FALSE(rep.strata[0].loci.empty());
  const LocusReport& l = rep.strata[0].loci[0];
  EXPECT_EQ(l.dimension, 1);
  Ring params = Ring::parameters(2);
  Polynomial g = parse_polynomial("a^2 - 2a*b - 2a + b^2 - 2b + 1", params);
  ASSERT_EQ(l.components.size(), 1u);
  EXPECT_TRUE(same_ideal(Ideal(2, l.components[0].ideal), Ideal(2, {g})));
  ASSERT_TRUE(l.components[0].sample);
  EXPECT_EQ(l.components[0].sample->rank, 3);
}

TEST(Driver, FinitenessCertificate) {
  FinitenessCertificate c = finiteness_certificate(parse_form("x^2*y*z"), {});
  EXPECT_TRUE(c.applicable);
  EXPECT_EQ(c.bound, 16);
  EXPECT_EQ(c.supports, 1);
  EXPECT_LE(c.supports, c.bound);
  EXPECT_FALSE(finiteness_certificate(parse_form("x*y + x*z + y*z"), {}).applicable);
  FinitenessCertificate p = finiteness_certificate(parse_form("x^5 + y^5"), {});
  EXPECT_TRUE(p.applicable);
}

TEST(Driver, RejectsBadInput) {
  EXPECT_THROW(minimal_supports(parse_form("x^2 + y"), {}), Error);
}

TEST(Driver, JsonShape) {
  Polynomial f = parse_form("x^2*y + x*y*z + y^3");
  Ring ring = Ring::standard(3);
  Json j = to_json(minimal_supports(f, {}), ring);
  EXPECT_EQ(j["rank"], 4);
  ASSERT_EQ(j["chart_reports"].size(), 3u);
  EXPECT_TRUE(j["chart_reports"][0]["ideal"].is_array());
  EXPECT_TRUE(j["chart_reports"][0]["hilbert"]["stable"].get<bool>());
  EXPECT_TRUE(j["chart_reports"][0]["point"][0].is_string());
}

TEST(Algebraic, ShapeFormOfNonRadicalIdeal) {
  Ring params = Ring::parameters(2);
  // (a^2 - 2)^2 with b = a: two points, doubled.
  Ideal ideal(2, {parse_polynomial("(a^2 - 2)^2", params), parse_polynomial("b - a", params)});
  auto s = shape_form(ideal, 1);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->points.count(), 2u);
}

TEST(Algebraic, SplitByRankPivots) {
  Ring params = Ring::parameters(1);
  AlgebraicPoints pts;
  pts.h = {Rational(-2), Rational(0), Rational(1)};  // a^2 - 2
  pts.coords = {{Rational(0), Rational(1)}};
  PolyMatrix m{{parse_polynomial("a^2 - 2", params), parse_polynomial("a", params)},
               {parse_polynomial("1", params), parse_polynomial("a^2 - 2", params)}};
  auto parts = split_by_rank(pts, m);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].rank, 2u);
  ASSERT_EQ(parts[0].pivots.size(), 2u);
}
