#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locgad/polynomial.hpp"

namespace locgad {

/// Polynomial in x-variables whose coefficients are polynomials in the
/// parameters gamma_1..gamma_n. Terms are sorted descending (degrevlex) by
/// their x-monomial; no coefficient is the zero polynomial.
class ParamPolynomial {
 public:
  struct Term {
    Monomial monomial;     // in the x-variables
    Polynomial coeff;      // in the parameters
  };

  ParamPolynomial() = default;
  ParamPolynomial(std::size_t nxvars, std::size_t nparams) : nxvars_(nxvars), nparams_(nparams) {}
  ParamPolynomial(std::size_t nxvars, std::size_t nparams, std::vector<Term> terms);

  /// Splits a polynomial over the combined ring (x-variables first, then the
  /// parameters) into x-monomials with parameter coefficients.
  static ParamPolynomial from_combined(const Polynomial& p, std::size_t nxvars, std::size_t nparams);
  /// Lifts a plain polynomial (no parameter dependence).
  static ParamPolynomial constant_in_params(const Polynomial& p, std::size_t nparams);

  std::size_t nxvars() const { return nxvars_; }
  std::size_t nparams() const { return nparams_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total x-degree; -1 for zero.
  int degree() const;

  /// Parameter polynomial multiplying `m`; the zero polynomial if absent.
  Polynomial coefficient(const Monomial& m) const;

  /// Contraction y^beta _| P (coefficient-free exponent subtraction).
  ParamPolynomial contract(const Monomial& beta) const;

  Polynomial to_combined() const;

  /// Evaluates every coefficient at `point` (length = parameter count).
  Polynomial specialize(std::span<const Rational> point) const;

  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b);

  /// Printed with parameter coefficients in parentheses, e.g.
  /// "(6*a^2 + 6)*y^3 + (4*a*b - 2*a)*y^2*z + ... + 2*y".
  std::string to_string(const Ring& xring, const Ring& params) const;

 private:
  std::size_t nxvars_ = 0;
  std::size_t nparams_ = 0;
  std::vector<Term> terms_;
};

/// Linear change of coordinates x_i -> sum_j M[i][j] x_j with entries in the
/// parameter ring.
struct BaseChange {
  std::size_t nparams = 0;
  std::vector<std::vector<Polynomial>> matrix;

  std::size_t size() const { return matrix.size(); }

  /// The unipotent upper triangular phi_gamma sending x_chart -> x_chart -
  /// sum_{i != chart} gamma_i x_i and fixing the other coordinates. Parameters
  /// are numbered over the non-chart variables in their natural order.
  static BaseChange unipotent(std::size_t nxvars, std::size_t chart);
  /// Numeric matrix (no parameters).
  static BaseChange numeric(const std::vector<std::vector<Rational>>& m);

  Polynomial determinant() const;
};

/// F(M x) expanded exactly in the parameters.
ParamPolynomial apply_base_change(const Polynomial& f, const BaseChange& m);

}  // namespace locgad
