#pragma once

#include <span>

#include "locgad/param_polynomial.hpp"
#include "locgad/polynomial.hpp"

namespace locgad {

// The dual ring acts on the polynomial ring through the argument position:
// the first argument is read as an element of k[y_0..y_n].

/// Differentiation: y^b o x^a = a!/(a-b)! x^(a-b) when a >= b, else 0.
Polynomial derivative_action(const Polynomial& g, const Polynomial& f);

/// Contraction: y^b _| x^a = x^(a-b) when a >= b, else 0.
Polynomial contraction_action(const Polynomial& g, const Polynomial& f);

/// F_dp = sum a! F_a x^a.
Polynomial divided_power(const Polynomial& f);

/// Inverse of divided_power.
Polynomial undivided_power(const Polynomial& f);

/// Sets x_chart = 1 in a homogeneous polynomial; the result lives in the
/// ring without that variable.
Polynomial dehomogenize(const Polynomial& f, std::size_t chart);

/// Homogenizes `f` to degree `degree` (>= deg f) by inserting a new variable
/// at position `chart`.
Polynomial homogenize(const Polynomial& f, std::size_t chart, unsigned degree);

inline Polynomial specialize(const ParamPolynomial& p, std::span<const Rational> point) {
  return p.specialize(point);
}

}  // namespace locgad
