#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace locgad {

/// Largest supported number of variables in a single ring. Combined rings
/// (x-variables followed by parameters) and elimination variables count too.
inline constexpr std::size_t kMaxVars = 20;

enum class MonomialOrder { DegRevLex, Lex };

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}
  Monomial(std::initializer_list<unsigned> exps) : nvars_(check_nvars(exps.size())) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }
  explicit Monomial(std::span<const unsigned> exps) : nvars_(check_nvars(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw std::out_of_range("monomial variable index out of range");
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  bool is_one() const { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] + o.exps_[i]);
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// Quotient; requires `o` to divide this monomial.
  Monomial operator/(const Monomial& o) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - o.exps_[i]);
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }

  /// Copy with variable `index` removed.
  Monomial drop(std::size_t index) const {
    Monomial r(nvars_ - 1);
    for (std::size_t i = 0, j = 0; i < nvars_; ++i)
      if (i != index) r.set(j++, exps_[i]);
    return r;
  }

  /// Copy with a fresh variable of exponent `e` inserted at `index`.
  Monomial insert(std::size_t index, unsigned e) const {
    Monomial r(nvars_ + 1);
    for (std::size_t i = 0, j = 0; j < nvars_ + 1; ++j) {
      if (j == index) r.set(j, e);
      else r.set(j, exps_[i++]);
    }
    return r;
  }

  std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exps_[i];
    return h;
  }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("too many variables");
    return n;
  }

  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  std::array<Exponent, kMaxVars> exps_{};
};

/// Three-way comparison: positive if a > b in the given order.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.nvars();
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

/// Strict "greater" comparator, used to keep term lists in descending order.
struct MonomialGreater {
  MonomialOrder order = MonomialOrder::DegRevLex;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// sorted descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree,
                                          MonomialOrder order = MonomialOrder::DegRevLex);

/// All monomials of total degree <= `max_degree`, ascending by degree and
/// descending in `order` within each degree (1, y, z, y^2, yz, z^2, ...).
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree,
                                      MonomialOrder order = MonomialOrder::DegRevLex);

}  // namespace locgad
