#include <gtest/gtest.h>

#include "locgad/actions.hpp"
#include "locgad/groebner.hpp"
#include "locgad/polyalg.hpp"
#include "locgad/polynomial.hpp"

using namespace locgad;

namespace {
Ring xyz() { return Ring::standard(3); }
Polynomial P(const char* s) { return parse_polynomial(s, xyz()); }
}  // namespace

TEST(Polyring, ParsePrintRoundTrip) {
  Polynomial f = P("x^2*y + x*y*z + y^3");
  EXPECT_EQ(f.to_string(xyz()), "x^2*y + y^3 + x*y*z");  // degrevlex
  EXPECT_EQ(P("2x(x + z/2) - 3/4").to_string(xyz()), "2*x^2 + x*z - 3/4");
}

TEST(Polyring, DividedPowerAndDehomogenize) {
  Polynomial f = P("x^2*y + x*y*z + y^3");
  Polynomial fdp = divided_power(f);
  EXPECT_EQ(fdp, P("2x^2y + xyz + 6y^3"));
  EXPECT_EQ(dehomogenize(fdp, 1).to_string(Ring::standard(3).without(1)), "2*x^2 + x*z + 6");
}

TEST(Polyring, Actions) {
  Ring r = xyz().without(1);
  Polynomial g = parse_polynomial("2x^2 + x*z + 6", r);
  EXPECT_EQ(contraction_action(parse_polynomial("x", r), g), parse_polynomial("2x + z", r));
  Polynomial f = P("x^2*y + x*y*z + y^3");
  EXPECT_EQ(derivative_action(P("y^2"), f), P("6y"));
}

TEST(Polyring, GcdAndSquarefree) {
  Polynomial a = P("(x - y)^2 * (x + z)");
  Polynomial b = P("(x - y) * (x + z)^3 * (y + 1)");
  EXPECT_EQ(gcd(a, b), P("(x - y)*(x + z)").primitive());
  EXPECT_EQ(squarefree_part(P("x^3*(y-2)^2")), P("x*(y-2)").primitive());
  auto split = rational_roots(P("(2x - 3)*(x + 1)^2*(x^2 - 2)"), 0);
  ASSERT_EQ(split.roots.size(), 2u);
  EXPECT_EQ(split.roots[0], Rational(-1));
  EXPECT_EQ(split.roots[1], Rational(3, 2));
  EXPECT_EQ(split.cofactor, P("x^2 - 2"));
}

TEST(Groebner, LexSmallIdeal) {
  Ring r = Ring::standard(2);
  std::vector<Polynomial> gens{parse_polynomial("x^2", r), parse_polynomial("x - y", r)};
  auto gb = groebner_basis(gens, 2, MonomialOrder::Lex);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], parse_polynomial("y^2", r));
  EXPECT_EQ(gb[1], parse_polynomial("x - y", r));
}
