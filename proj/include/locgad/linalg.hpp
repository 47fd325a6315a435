#pragma once

#include <utility>
#include <vector>

#include "locgad/groebner.hpp"
#include "locgad/polynomial.hpp"

namespace locgad {

using RationalMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m, std::size_t ncols);

RationalMatrix transpose(const RationalMatrix& m);

/// Pivot positions (row, col) of a complete-pivoting elimination, in order.
/// For every k the first k pivots span a nonsingular k x k submatrix.
std::vector<std::pair<std::size_t, std::size_t>> pivot_profile(const RationalMatrix& m);

/// Determinant of a square matrix of polynomials by Bareiss elimination with
/// exact division; pivots prefer the lowest total degree.
Polynomial determinant(PolyMatrix m, std::size_t nvars, const Deadline& deadline = {});

/// Rank over the fraction field of the polynomial ring (Bareiss with full
/// pivoting on nonzero entries of lowest degree).
std::size_t symbolic_rank(PolyMatrix m, const Deadline& deadline = {});

/// Determinant of an integer matrix modulo a prime (word-size arithmetic).
unsigned long determinant_mod(std::vector<std::vector<unsigned long>> m, unsigned long p);

/// Rank of an integer matrix modulo a prime.
std::size_t rank_mod(std::vector<std::vector<unsigned long>> m, unsigned long p);

}  // namespace locgad
