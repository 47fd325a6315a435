#pragma once

#include <string>
#include <vector>

#include "locgad/groebner.hpp"
#include "locgad/polynomial.hpp"

namespace locgad {

/// Values H(0..t) of a Hilbert function. `stable` is set once the tail is
/// certified constant (Gotzmann persistence on the monomial staircase).
struct HilbertPrefix {
  std::vector<long> values;
  bool stable = false;

  friend bool operator==(const HilbertPrefix&, const HilbertPrefix&) = default;
  /// "(1,3,4,4)" with a trailing ",..." when stable.
  std::string to_string() const;
};

/// A linear form normalized to coefficient 1 on its first nonzero variable.
struct Support {
  std::size_t chart = 0;             // index of that variable
  std::vector<Rational> coefficients;  // full coefficient vector, coefficients[chart] == 1
};

/// Normalizes a linear polynomial. Throws on zero or non-linear input.
Support normalize_linear_form(const Polynomial& l);
Polynomial linear_form(const Support& s);

/// f_l: divided power of F in coordinates where l is the chart variable,
/// dehomogenized there. Lives in the ring without the chart variable.
Polynomial dual_generator(const Polynomial& f, const Polynomial& l);
Polynomial dual_generator(const Polynomial& f, const Support& s);

/// omega^{d,l} = sum_j (d-j)! w_j where omega = sum_j w_j l^(k-j), w_j of
/// degree j in the non-chart variables. Lives in the ring without the chart
/// variable. Throws when deg omega > d or l divides omega.
Polynomial omega_dl(const Polynomial& omega, unsigned d, const Polynomial& l);

/// Contraction annihilator of f inside k[y_1..y_n]: the kernel of
/// g -> g _| f on degrees <= d plus all monomials of degree d+1, reduced to a
/// minimal generating set. Generators come back sorted by degree.
Ideal annihilator(const Polynomial& f, unsigned d);

/// Homogenization at a new variable inserted at position `chart`, through a
/// degrevlex Groebner basis.
Ideal homogenize_ideal(const Ideal& ideal, std::size_t chart);

/// Homogeneous ideal of the scheme evinced by the local GAD of F at l, in the
/// original coordinates. Every generator is checked to annihilate F.
Ideal natural_apolar_scheme(const Polynomial& f, const Polynomial& l);
Ideal natural_apolar_scheme(const Polynomial& f, const Support& s);

/// dim_k of the span of all contractions y^a _| f.
std::size_t inverse_system_dimension(const Polynomial& f);

/// H(t) for t <= t_max from the staircase of a degrevlex basis.
HilbertPrefix hilbert_function(const Ideal& ideal, unsigned t_max);

/// Hilbert function computed until certified stable (or `cap` reached) and
/// trimmed after the first repeated value of the constant tail.
HilbertPrefix hilbert_prefix(const Ideal& ideal, unsigned cap = 64);

/// Equality of ideals through reduced degrevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b);

/// Generators sorted by degree, dropping each one that lies in the ideal of
/// the previous ones.
std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens, std::size_t nvars);

}  // namespace locgad
