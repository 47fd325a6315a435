#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "locgad/polynomial.hpp"

namespace locgad {

/// Thrown when a cooperative deadline expires inside a long computation.
class TimeoutError : public Error {
 public:
  TimeoutError() : Error("computation deadline exceeded") {}
};

/// Optional wall-clock deadline threaded through expensive routines.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::steady_clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::duration<double> d) {
    return Deadline(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(d));
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Leading monomial of a non-zero polynomial under `order`.
Monomial leading_monomial(const Polynomial& p, MonomialOrder order);
Rational leading_coefficient(const Polynomial& p, MonomialOrder order);

/// Generator list with an optional cached reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped.
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool has_basis() const { return basis_.has_value(); }
  /// Reduced Groebner basis (monic, sorted ascending by leading monomial).
  const std::vector<Polynomial>& basis() const;
  MonomialOrder order() const { return order_; }

  /// Copy with the Groebner basis computed for `order` (idempotent).
  Ideal with_basis(MonomialOrder order = MonomialOrder::DegRevLex, const Deadline& deadline = {}) const;

  bool is_homogeneous() const;

  std::string to_string(const Ring& ring) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> generators_;
  std::optional<std::vector<Polynomial>> basis_;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
};

/// Incremental Buchberger engine over the rationals (integer fraction-free
/// reduction, Gebauer-Moeller pair criteria, normal selection strategy).
class GroebnerEngine {
 public:
  GroebnerEngine(std::size_t nvars, MonomialOrder order, Deadline deadline = {});
  ~GroebnerEngine();
  GroebnerEngine(GroebnerEngine&&) noexcept;
  GroebnerEngine& operator=(GroebnerEngine&&) noexcept;

  /// Adds a generator. Returns false when it already lies in the ideal of
  /// the current (completed) basis.
  bool add(const Polynomial& p);
  /// Processes all pending pairs.
  void complete();
  bool is_unit() const;
  /// Leading monomials of the current minimal basis (requires complete()).
  std::vector<Monomial> leading_monomials() const;
  /// Reduced basis of everything added so far (requires complete()).
  std::vector<Polynomial> reduced_basis() const;
  /// Normal form of `p` modulo the current basis.
  Polynomial normal_form(const Polynomial& p) const;

  std::size_t nvars() const;
  MonomialOrder order() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, std::size_t nvars,
                                       MonomialOrder order = MonomialOrder::DegRevLex,
                                       const Deadline& deadline = {});

Ideal groebner_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::DegRevLex,
                     const Deadline& deadline = {});

/// Remainder of `p` on division by a Groebner basis.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, MonomialOrder order);

bool is_unit_ideal(const Ideal& ideal, const Deadline& deadline = {});

/// Krull dimension of k[x]/I from the leading monomials of a basis; nullopt
/// for the unit ideal.
std::optional<int> dimension_from_leading(std::span<const Monomial> leading, std::size_t nvars);
std::optional<int> ideal_dimension(const Ideal& ideal, const Deadline& deadline = {});

/// A maximal set of variables independent modulo the leading-monomial ideal.
std::vector<std::size_t> independent_variables(std::span<const Monomial> leading, std::size_t nvars);

/// Membership by normal form.
bool ideal_contains(const Ideal& ideal, const Polynomial& p);

/// S-polynomial of two polynomials under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

}  // namespace locgad
