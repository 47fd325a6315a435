#include <gtest/gtest.h>

#include "locgad/solve.hpp"

using namespace locgad;

namespace {
Polynomial G(const char* s) { return parse_polynomial(s, Ring::parameters(2)); }
}  // namespace

TEST(Solve, Dimension) {
  EXPECT_EQ(ideal_dimension(Ideal(2, {G("b*(b - 1)"), G("a")})), 0);
  EXPECT_EQ(ideal_dimension(Ideal(2, {})), 2);
  EXPECT_EQ(ideal_dimension(Ideal(2, {G("a^2 - 2a*b + b^2 - 2a - 2b + 1")})), 1);
  EXPECT_FALSE(ideal_dimension(Ideal(2, {G("a"), G("a - 1")})).has_value());
  EXPECT_TRUE(is_unit_ideal(Ideal(2, {G("a*b - 1"), G("b")})));
  EXPECT_FALSE(is_unit_ideal(Ideal(2, {G("a")})));
}

TEST(Solve, RunningExampleCandidates) {
  Ideal ideal(2, {G("32 b^5 (b - 1)^5"), G("32 a^5 (2b - 1)^5"), G("a*(6a^2 + 6)")});
  SolutionSet s = solve_rational_points(ideal);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[0], (std::vector<Rational>{0, 0}));
  EXPECT_EQ(s.points[1], (std::vector<Rational>{0, 1}));
  EXPECT_TRUE(s.exhaustive);
}

TEST(Solve, ResidualAndLinear) {
  Ring one{{"a"}};
  SolutionSet s = solve_rational_points(Ideal(1, {parse_polynomial("a^2 + 1", one)}));
  EXPECT_TRUE(s.points.empty());
  EXPECT_FALSE(s.exhaustive);
  ASSERT_EQ(s.residual.size(), 1u);
  EXPECT_EQ(s.residual[0].factor, parse_polynomial("a^2 + 1", one));
  SolutionSet t = solve_rational_points(Ideal(2, {G("a - 3"), G("b")}));
  ASSERT_EQ(t.points.size(), 1u);
  EXPECT_EQ(t.points[0], (std::vector<Rational>{3, 0}));
  EXPECT_THROW(solve_rational_points(Ideal(2, {G("a")})), Error);
}

TEST(Solve, FixedSample) {
  Ideal g(2, {G("a^2 - 2a*b + b^2 - 2a - 2b + 1")});
  SolutionSet s = solve_with_fixed(g, {0}, {Rational(4)});
  // b = (1 +- 2)^2 for a = 2^2.
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[0], (std::vector<Rational>{4, 1}));
  EXPECT_EQ(s.points[1], (std::vector<Rational>{4, 9}));
}
