#pragma once

#include <utility>
#include <vector>

#include "locgad/groebner.hpp"

namespace locgad {

/// A univariate factor without rational roots met during back-substitution,
/// together with the partial point (later variables) it was found under.
struct ResidualFactor {
  Polynomial factor;                                   // in the full parameter ring
  std::vector<std::pair<std::size_t, Rational>> fixed;  // variable index -> value
};

struct SolutionSet {
  std::size_t nvars = 0;
  std::vector<std::vector<Rational>> points;  // sorted lexicographically
  std::vector<ResidualFactor> residual;
  bool exhaustive = true;
};

/// Rational points of a zero-dimensional ideal via lex elimination and
/// rational-root extraction. Throws unless the ideal is zero-dimensional.
SolutionSet solve_rational_points(const Ideal& ideal, const Deadline& deadline = {});

/// Sample of rational points on V(I) for an ideal of any dimension: the
/// independent variables are fixed to the given values, then the remaining
/// zero-dimensional system is solved.
SolutionSet solve_with_fixed(const Ideal& ideal, const std::vector<std::size_t>& free_vars,
                             const std::vector<Rational>& values, const Deadline& deadline = {});

}  // namespace locgad
