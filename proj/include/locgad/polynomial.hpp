#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locgad/monomial.hpp"

namespace locgad {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variable names of a polynomial ring over the rationals.
struct Ring {
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }

  /// Ring on the first `n` of the letter aliases x, y, z, u when n <= 4,
  /// otherwise x0, x1, ...
  static Ring standard(std::size_t n);
  /// x0, x1, ..., x{n-1}
  static Ring indexed(std::size_t n, std::string_view stem = "x");
  /// Parameter ring g1, ..., gn (printed as a, b, c for n <= 3).
  static Ring parameters(std::size_t n);
  /// Ring with variable `index` removed.
  Ring without(std::size_t index) const;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept sorted descending in degrevlex with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c);
  Polynomial(const Monomial& m, const Rational& c);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    return Polynomial(Monomial::variable(nvars, index), Rational(1));
  }
  static Polynomial constant(std::size_t nvars, const Rational& c) { return Polynomial(nvars, c); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree()); }
  /// Degree in a single variable; -1 for zero.
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Part of total degree exactly `degree`.
  Polynomial homogeneous_part(unsigned degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial multiply(const Polynomial& o) const;
  Polynomial multiply_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Exact division; throws if `divisor` does not divide this polynomial.
  Polynomial exact_divide(const Polynomial& divisor) const;
  /// Division returning quotient if exact, nullopt otherwise.
  std::optional<Polynomial> try_divide(const Polynomial& divisor) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes `value` for variable `var`, removing that variable.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Replaces every variable by a polynomial (in a common ring).
  Polynomial compose(std::span<const Polynomial> images) const;
  /// Partial derivative.
  Polynomial derivative(std::size_t var) const;
  /// Re-embeds into a ring of `nvars` variables, variable i going to map[i].
  Polynomial remap(std::size_t nvars, std::span<const std::size_t> map) const;

  /// Monic normalization (leading coefficient 1); zero stays zero.
  Polynomial monic() const;
  /// Integer primitive form with positive leading coefficient.
  Polynomial primitive() const;
  /// Scalar making the polynomial integer-primitive (content inverse), for non-zero input.
  Rational content() const;

  std::string to_string(const Ring& ring) const;
  std::string to_string() const;

 private:
  friend class PolyBuilder;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses the shared polynomial grammar: terms separated by + or -, each term
/// `[rational][*]var[^int]...`; names must belong to `ring`.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Parses the form with the standard aliases: uses x, y, z, u (or x0..x9) and
/// infers the smallest standard ring containing every variable present.
Polynomial parse_form(std::string_view text, std::size_t min_vars = 0);

/// Rational to "p/q" (or "p" when integral).
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace locgad
