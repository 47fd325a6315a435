#include <gtest/gtest.h>

#include "locgad/invsys.hpp"
#include "locgad/minors.hpp"

using namespace locgad;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s, Ring::standard(3)); }
Polynomial G(const char* s) { return parse_polynomial(s, Ring::parameters(2)); }
const char* kF = "x^2*y + x*y*z + y^3";
}  // namespace

TEST(Invsys, SymbolicDualGenerator) {
  ParamPolynomial f = symbolic_dual_generator(P(kF), 0);
  EXPECT_EQ(f.to_string(Ring{{"y", "z"}}, Ring::parameters(2)),
            "(6*a^2 + 6)*y^3 + (4*a*b - 2*a)*y^2*z + (2*b^2 - 2*b)*y*z^2 - 4*a*y^2 + (-2*b + 1)*y*z + 2*y");
  std::vector<Rational> zero{0, 0};
  EXPECT_EQ(f.specialize(zero), parse_polynomial("6y^3 + y*z + 2y", Ring{{"y", "z"}}));
}

TEST(Invsys, MatrixMatchesDisplay) {
  InverseSystemMatrix m = inverse_system_matrix(P(kF), 0);
  ASSERT_EQ(m.size(), 10u);
  const char* display[10][10] = {
      {"0", "2", "0", "-4a", "-2b+1", "0", "6a^2+6", "4ab-2a", "2b^2-2b", "0"},
      {"2", "-4a", "-2b+1", "6a^2+6", "4ab-2a", "2b^2-2b", "0", "0", "0", "0"},
      {"0", "-2b+1", "0", "4ab-2a", "2b^2-2b", "0", "0", "0", "0", "0"},
      {"-4a", "6a^2+6", "4ab-2a", "0", "0", "0", "0", "0", "0", "0"},
      {"-2b+1", "4ab-2a", "2b^2-2b", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "2b^2-2b", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"6a^2+6", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"4ab-2a", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"2b^2-2b", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}};
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) EXPECT_EQ(m.entry(i, j), G(display[i][j])) << i << "," << j;
  std::vector<Rational> zero{0, 0};
  EXPECT_EQ(specialized_rank(m, zero), 4u);
  std::vector<Rational> generic{Rational(3, 7), Rational(-5, 2)};
  EXPECT_EQ(specialized_rank(m, generic), 6u);
  EXPECT_EQ(symbolic_rank(m), 6u);
}

TEST(Invsys, SymbolicRank) {
  EXPECT_EQ(symbolic_rank(inverse_system_matrix(P("x*y + x*z + y*z"), 0)), 4u);
  // For x^3 the dual generator at x - a*y - b*z is 6 * sum (-gamma)^beta x^beta,
  // whose contractions span the four truncations.
  InverseSystemMatrix cube = inverse_system_matrix(P("x^3"), 0);
  EXPECT_EQ(symbolic_rank(cube), 4u);
  std::vector<Rational> zero{0, 0};
  EXPECT_EQ(specialized_rank(cube, zero), 1u);
}

TEST(Invsys, Catalecticant) {
  CatalecticantMatrix c2 = catalecticant(P(kF), 2);
  RationalMatrix expected2 = {{0, 2, 0, 0, 1, 0}, {2, 0, 1, 6, 0, 0}, {0, 1, 0, 0, 0, 0}};
  EXPECT_EQ(c2.entries, expected2);
  CatalecticantMatrix c3 = catalecticant(P(kF), 3);
  RationalMatrix expected3 = {{0, 2, 0, 0, 1, 0, 6, 0, 0, 0}};
  EXPECT_EQ(c3.entries, expected3);
  EXPECT_EQ(transpose(catalecticant(P(kF), 1).entries), expected2);
  EXPECT_TRUE(embed_check(P(kF)));
  EXPECT_TRUE(embed_check(P("x^3")));
  EXPECT_THROW(catalecticant(P(kF), 4), Error);
}

TEST(Invsys, GenericRankAndBounds) {
  EXPECT_EQ(generic_local_rank(2, 3), 6);
  EXPECT_EQ(generic_local_rank(2, 4), 9);
  EXPECT_EQ(generic_local_rank(2, 2), 4);
  EXPECT_EQ(rank_lower_bound(parse_polynomial("2x^2 + x*z + 6", Ring{{"x", "z"}})), 3);
  auto eqs = degree_d_equations(P(kF), 0);
  ASSERT_FALSE(eqs.empty());
  EXPECT_EQ(eqs.front(), G("6a^2 + 6"));
  auto cube = degree_d_equations(P("x^3"), 0);
  std::vector<Polynomial> expected{G("-6a^3"), G("-6a^2 b"), G("-6a b^2"), G("-6b^3")};
  EXPECT_EQ(cube, expected);
}

TEST(Minors, DisplayedDeterminants) {
  InverseSystemMatrix m = inverse_system_matrix(P(kF), 0);
  auto pos = [&](const char* s) {
    if (std::string(s) == "1") return m.position(Monomial(2));
    return m.position(parse_polynomial(s, Ring{{"y", "z"}}).leading_term().monomial);
  };
  MinorSelection first;
  for (auto r : {"1", "y", "z", "y*z", "z^2"}) first.rows.push_back(pos(r));
  for (auto c : {"y", "z", "y*z", "z^2", "y*z^2"}) first.cols.push_back(pos(c));
  EXPECT_EQ(symbolic_minor_determinant(m, first), G("32 b^5 (b - 1)^5"));
  MinorSelection second;
  for (auto r : {"1", "y", "z", "y^2", "y*z"}) second.rows.push_back(pos(r));
  for (auto c : {"y", "z", "y^2", "y*z", "y^2*z"}) second.cols.push_back(pos(c));
  Polynomial det = symbolic_minor_determinant(m, second);
  for (int b : {0, 1}) {
    Polynomial sub = det.substitute(1, b);
    Polynomial expect = parse_polynomial("32 a^5", Ring{{"a"}}) * Rational((2 * b - 1) * (2 * b - 1) * (2 * b - 1) * (2 * b - 1) * (2 * b - 1));
    EXPECT_EQ(sub, expect);
  }
  MinorSelection one;
  one.rows = {pos("1")};
  one.cols = {pos("y")};
  EXPECT_EQ(symbolic_minor_determinant(m, one), G("2"));
}

TEST(Minors, Strategies) {
  InverseSystemMatrix m = inverse_system_matrix(P(kF), 0);
  SeededRng r1(7), r2(7);
  auto a1 = select_minor_A(m, 4, r1), a2 = select_minor_A(m, 4, r2);
  EXPECT_EQ(a1.rows, a2.rows);
  EXPECT_EQ(a1.cols, a2.cols);
  SeededRng rb(3);
  auto b = select_minor_B(m, 4, rb);
  for (std::size_t i = 0; i < b.size(); ++i)
    EXPECT_EQ(m.index()[b.rows[i]].degree() + m.index()[b.cols[i]].degree(), 3u);
  // Chain from y^3 is forced.
  ParamPolynomial f = symbolic_dual_generator(P(kF), 0);
  SeededRng rc(11);
  auto c = select_minor_C(m, 4, rc, f);
  std::vector<std::size_t> rows{0, 1, 3, 6}, cols{6, 3, 1, 0};
  EXPECT_EQ(c.rows, rows);
  EXPECT_EQ(c.cols, cols);
}
