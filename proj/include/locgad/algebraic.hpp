#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "locgad/groebner.hpp"
#include "locgad/linalg.hpp"

namespace locgad {

/// Dense univariate polynomial over Q, coefficient i of u^i, no trailing zeros.
using UPoly = std::vector<Rational>;

namespace upoly {
int degree(const UPoly& p);
UPoly from_polynomial(const Polynomial& p);  // p must involve at most variable 0
Polynomial to_polynomial(const UPoly& p, std::size_t nvars, std::size_t var);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
/// Remainder and quotient of a / b, b non-zero.
UPoly rem(const UPoly& a, const UPoly& b);
UPoly quo(const UPoly& a, const UPoly& b);
UPoly monic_gcd(UPoly a, UPoly b);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
Rational evaluate(const UPoly& p, const Rational& x);
}  // namespace upoly

/// Points of a radical zero-dimensional ideal parametrized by the roots of
/// h: gamma_i = coords[i](theta) for h(theta) = 0.
struct AlgebraicPoints {
  UPoly h;
  std::vector<UPoly> coords;

  std::size_t count() const { return static_cast<std::size_t>(upoly::degree(h)); }
  /// Generators in gamma (separating form `form`) of the ideal of these points.
  std::vector<Polynomial> ideal(const std::vector<Rational>& form) const;
};

/// Radical of a zero-dimensional ideal (Seidenberg: add the squarefree parts
/// of the univariate elimination polynomials).
Ideal zero_dimensional_radical(const Ideal& ideal, const Deadline& deadline = {});

/// Shape-lemma parametrization of a zero-dimensional ideal via a random
/// separating form u = gamma_last + sum c_i gamma_i.
struct ShapeForm {
  std::vector<Rational> form;  // coefficients of u (last one is 1)
  AlgebraicPoints points;
};

std::optional<ShapeForm> shape_form(const Ideal& zero_dim, std::uint64_t seed, const Deadline& deadline = {});

struct RankPart {
  AlgebraicPoints points;
  std::size_t rank = 0;
  // (row, column) of each pivot; together they index a minor that is nonzero
  // at every point of the part.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

/// Splits the points by the rank of a parametric matrix.
std::vector<RankPart> split_by_rank(const AlgebraicPoints& pts, const PolyMatrix& m, const Deadline& deadline = {});

}  // namespace locgad
