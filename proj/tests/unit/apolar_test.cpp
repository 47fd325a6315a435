#include <gtest/gtest.h>

#include "locgad/actions.hpp"
#include "locgad/apolar.hpp"

using namespace locgad;

namespace {
Ring xyz() { return Ring::standard(3); }
Polynomial P(const char* s) { return parse_polynomial(s, xyz()); }
Polynomial P2(const char* s, const Ring& r) { return parse_polynomial(s, r); }
Ideal ideal3(std::vector<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g));
  return Ideal(3, ps);
}
const char* kF = "x^2*y + x*y*z + y^3";
}  // namespace

TEST(Apolar, DualGenerator) {
  Ring xz = xyz().without(1), yz = xyz().without(0);
  EXPECT_EQ(dual_generator(P(kF), P("y")), P2("2x^2 + x*z + 6", xz));
  EXPECT_EQ(dual_generator(P(kF), P("x")), P2("6y^3 + y*z + 2y", yz));
  EXPECT_EQ(dual_generator(P("x^4"), P("x")), P2("24", yz));
  // A scaled support gives the same dual generator.
  EXPECT_EQ(dual_generator(P(kF), P("3y")), P2("2x^2 + x*z + 6", xz));
}

TEST(Apolar, OmegaDl) {
  Ring xz = xyz().without(1);
  EXPECT_EQ(omega_dl(P("x^2 + x*z + y^2"), 3, P("y")), P2("x^2 + x*z + 6", xz));
  EXPECT_EQ(omega_dl(P("5"), 4, P("x")), P2("120", xyz().without(0)));
  EXPECT_EQ(omega_dl(P("y^2"), 5, P("x")), P2("6y^2", xyz().without(0)));
  EXPECT_THROW(omega_dl(P("y^4"), 3, P("x")), Error);
}

TEST(Apolar, Annihilator) {
  Ring xz = Ring{{"x", "z"}};
  Ideal ann = annihilator(P2("2x^2 + x*z + 6", xz), 3);
  Ideal expected(2, {P2("(x - z)^2", xz), P2("z^2", xz)});
  EXPECT_TRUE(same_ideal(ann, expected));
  for (const auto& g : ann.generators()) EXPECT_TRUE(contraction_action(g, P2("2x^2 + x*z + 6", xz)).is_zero());
  Ideal max = annihilator(P2("1", xz), 0);
  EXPECT_TRUE(same_ideal(max, Ideal(2, {P2("x", xz), P2("z", xz)})));
  Ring yz = Ring{{"y", "z"}};
  Ideal h = homogenize_ideal(annihilator(P2("6y^3 + y*z + 2y", yz), 3), 0);
  EXPECT_TRUE(same_ideal(h, ideal3({"-6x*z + y^2", "z^2"})));
}

TEST(Apolar, HomogenizeSimple) {
  Ring one = Ring{{"y"}};
  Ideal h = homogenize_ideal(Ideal(1, {P2("y - 1", one)}), 0);
  EXPECT_TRUE(same_ideal(h, Ideal(2, {parse_polynomial("y - x", Ring{{"x", "y"}})})));
}

TEST(Apolar, NaturalApolarScheme) {
  EXPECT_TRUE(same_ideal(natural_apolar_scheme(P(kF), P("y")), ideal3({"(x - z)^2", "z^2"})));
  EXPECT_TRUE(same_ideal(natural_apolar_scheme(P(kF), P("x")), ideal3({"-6x*z + y^2", "z^2"})));
  EXPECT_TRUE(same_ideal(natural_apolar_scheme(P(kF), P("x + z")), ideal3({"-6x*(x - z) + y^2", "(x - z)^2"})));
  EXPECT_TRUE(same_ideal(natural_apolar_scheme(P("x^3"), P("x")), ideal3({"y", "z"})));
}

TEST(Apolar, InverseSystemDimension) {
  Ring xz = Ring{{"x", "z"}};
  EXPECT_EQ(inverse_system_dimension(P2("2x^2 + x*z + 6", xz)), 4u);
  EXPECT_EQ(inverse_system_dimension(P2("7", xz)), 1u);
  EXPECT_EQ(inverse_system_dimension(P2("x^3 - 2x^2*z + 5x*z^2 + 3z^3 + x^2 + 7z + 1", xz)), 6u);
}

TEST(Apolar, HilbertFunction) {
  HilbertPrefix h = hilbert_prefix(ideal3({"(x - z)^2", "z^2"}));
  EXPECT_EQ(h.values, (std::vector<long>{1, 3, 4, 4}));
  EXPECT_TRUE(h.stable);
  EXPECT_EQ(h.to_string(), "(1,3,4,4,...)");
  EXPECT_EQ(hilbert_prefix(ideal3({"x*y^2", "y^2*z", "z^2"})).values, (std::vector<long>{1, 3, 5, 5}));
  EXPECT_EQ(hilbert_prefix(ideal3({"y", "z"})).values, (std::vector<long>{1, 1}));
  EXPECT_EQ(hilbert_function(ideal3({"(x - z)^2", "z^2"}), 3).values, (std::vector<long>{1, 3, 4, 4}));
  EXPECT_THROW(hilbert_function(ideal3({"x + 1"}), 3), Error);
}
