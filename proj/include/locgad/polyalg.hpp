#pragma once

#include <optional>
#include <vector>

#include "locgad/polynomial.hpp"

namespace locgad {

/// Greatest common divisor over the rationals, normalized to an integer
/// primitive polynomial with positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Square-free part (char 0): p / gcd(p, dp/dx_1, ..., dp/dx_n), primitive.
Polynomial squarefree_part(const Polynomial& p);

/// Index of the only variable occurring in `p`, or nullopt if `p` is
/// constant or involves several variables.
std::optional<std::size_t> univariate_variable(const Polynomial& p);

/// Result of splitting a univariate polynomial into its rational roots and the
/// remaining factor without rational roots.
struct RationalRootSplit {
  std::vector<Rational> roots;  // distinct, ascending
  Polynomial cofactor;          // square-free, primitive; constant when fully split
  bool complete = true;         // false when divisor enumeration hit its cap
};

/// Rational roots of a univariate polynomial in variable `var` via the
/// rational root theorem on the primitive integer square-free part.
RationalRootSplit rational_roots(const Polynomial& p, std::size_t var);

/// Positive divisors of |n| by trial division. Returns nullopt when |n| has a
/// prime factor above the trial bound.
std::optional<std::vector<Integer>> divisors(const Integer& n, unsigned long trial_bound = 2000000);

}  // namespace locgad
