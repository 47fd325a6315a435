#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "locgad/invsys.hpp"

namespace locgad {

enum class Strategy { A, B, C };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

/// Deterministic 64-bit generator. Draws are defined in terms of raw
/// mt19937_64 output so sequences are identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  long between(long lo, long hi);
  /// Independent generator derived from this one's seed and a stream tag.
  SeededRng split(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct MinorSelection {
  std::vector<std::size_t> rows;  // positions in the matrix index
  std::vector<std::size_t> cols;
  Strategy strategy = Strategy::A;
  std::vector<std::pair<std::size_t, std::size_t>> chain;  // strategy C trace

  std::size_t size() const { return rows.size(); }
};

inline constexpr int kResampleLimit = 1000;

/// Uniform r rows and r columns, restricted to `live` positions when given.
MinorSelection select_minor_A(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng,
                              const std::vector<std::size_t>* live = nullptr);

/// r pairs (a, b) with |a + b| = deg f_gamma; rows are the a's, columns the
/// b's. Pairs reusing a row or column are resampled.
MinorSelection select_minor_B(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng);

/// Chains of consecutive contractions from a leading monomial of f_gamma (or
/// from `start` when given), restarting from random support monomials.
MinorSelection select_minor_C(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng,
                              const ParamPolynomial& fgamma, std::optional<Monomial> start = std::nullopt);

/// Maximal-degree monomial of f_gamma with nonzero coefficient, degrevlex tie-break.
Monomial leading_support_monomial(const ParamPolynomial& fgamma);

/// Exact determinant of the selected submatrix over the parameter ring.
Polynomial symbolic_minor_determinant(const InverseSystemMatrix& m, const MinorSelection& sel,
                                      const Deadline& deadline = {});

}  // namespace locgad
