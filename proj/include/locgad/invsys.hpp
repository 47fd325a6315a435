#pragma once

#include <vector>

#include "locgad/groebner.hpp"
#include "locgad/linalg.hpp"
#include "locgad/param_polynomial.hpp"

namespace locgad {

/// f_gamma = F(phi_gamma x)_dp with x_chart = 1. Parameter i corresponds to
/// the i-th non-chart variable.
ParamPolynomial symbolic_dual_generator(const Polynomial& f, std::size_t chart);

/// Symmetric Hankel matrix of f_gamma: entry (a, b) is the coefficient of
/// x^(a+b) in f_gamma. Indices are the monomials of degree <= d in the
/// non-chart variables, by degree and then degrevlex-descending.
class InverseSystemMatrix {
 public:
  InverseSystemMatrix() = default;
  InverseSystemMatrix(ParamPolynomial fgamma, unsigned degree);

  std::size_t nparams() const { return f_.nparams(); }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return index_.size(); }
  const std::vector<Monomial>& index() const { return index_; }
  const ParamPolynomial& dual_generator() const { return f_; }

  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * index_.size() + j]; }
  /// Position of a monomial in the index list, or size() if absent.
  std::size_t position(const Monomial& m) const;

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  RationalMatrix specialize(std::span<const Rational> point) const;
  PolyMatrix dense() const;

 private:
  ParamPolynomial f_;
  unsigned degree_ = 0;
  std::vector<Monomial> index_;
  std::vector<Polynomial> entries_;
};

InverseSystemMatrix inverse_system_matrix(const Polynomial& f, std::size_t chart);

std::size_t specialized_rank(const InverseSystemMatrix& m, std::span<const Rational> point);
std::size_t symbolic_rank(const InverseSystemMatrix& m, const Deadline& deadline = {});

/// Matrix of p -> p _| F_dp from degree-i operators to degree-(d-i) forms:
/// rows indexed by degree-(d-i) monomials, columns by degree-i monomials,
/// both in lex order.
struct CatalecticantMatrix {
  unsigned i = 0;
  std::vector<Monomial> rows;
  std::vector<Monomial> cols;
  RationalMatrix entries;
};

CatalecticantMatrix catalecticant(const Polynomial& f, unsigned i);

/// True iff every catalecticant of F is a submatrix of the inverse system
/// matrix at the chart x_0 specialized at gamma = 0 (indices matched by
/// dehomogenization).
bool embed_check(const Polynomial& f);

/// Local GAD length of a generic form of degree d in n+1 variables.
long generic_local_rank(unsigned n, unsigned d);

/// 1 + deg f (0 for the zero polynomial).
long rank_lower_bound(const Polynomial& f);

/// Nonzero parameter coefficients of the degree-d monomials of f_gamma.
std::vector<Polynomial> degree_d_equations(const Polynomial& f, std::size_t chart);

/// Nonzero parameter coefficients of all monomials of f_gamma with degree
/// >= `from_degree`.
std::vector<Polynomial> degree_tail_equations(const ParamPolynomial& fgamma, unsigned from_degree);

/// Largest rank over the catalecticants of F.
std::size_t max_catalecticant_rank(const Polynomial& f);

}  // namespace locgad
