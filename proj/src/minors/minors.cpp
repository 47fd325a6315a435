#include "locgad/minors.hpp"

#include <algorithm>
#include <set>

namespace locgad {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::A: return "A";
    case Strategy::B: return "B";
    case Strategy::C: return "C";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "A" || text == "a") return Strategy::A;
  if (text == "B" || text == "b") return Strategy::B;
  if (text == "C" || text == "c") return Strategy::C;
  throw Error("unknown strategy '" + std::string(text) + "'");
}

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw Error("SeededRng::below(0)");
  // Rejection sampling on the top of the range keeps draws unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

long SeededRng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

SeededRng SeededRng::split(std::uint64_t tag) const {
  // splitmix64 finalizer over (seed, tag).
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return SeededRng(z ^ (z >> 31));
}

namespace {

std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool, std::size_t r, SeededRng& rng) {
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(r);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

MinorSelection select_minor_A(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng,
                              const std::vector<std::size_t>* live) {
  std::vector<std::size_t> pool;
  if (live) {
    pool = *live;
  } else {
    for (std::size_t i = 0; i < m.size(); ++i) pool.push_back(i);
  }
  if (r > pool.size()) throw Error("minor size exceeds the matrix size");
  MinorSelection sel;
  sel.strategy = Strategy::A;
  sel.rows = sample_without_replacement(pool, r, rng);
  sel.cols = sample_without_replacement(pool, r, rng);
  return sel;
}

MinorSelection select_minor_B(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng) {
  const int top = m.dual_generator().degree();
  if (top < 0) throw Error("strategy B needs a non-zero dual generator");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::size_t> rows_available;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (static_cast<int>(m.index()[i].degree() + m.index()[j].degree()) == top) {
        pairs.emplace_back(i, j);
        rows_available.insert(i);
      }
  if (r > rows_available.size()) throw Error("fewer admissible rows than the requested minor size");
  MinorSelection sel;
  sel.strategy = Strategy::B;
  std::vector<bool> row_used(m.size(), false), col_used(m.size(), false);
  int failures = 0;
  while (sel.rows.size() < r) {
    const auto& [a, b] = pairs[rng.below(pairs.size())];
    if (row_used[a] || col_used[b]) {
      if (++failures > kResampleLimit) throw Error("strategy B could not complete a selection");
      continue;
    }
    row_used[a] = col_used[b] = true;
    sel.rows.push_back(a);
    sel.cols.push_back(b);
  }
  return sel;
}

Monomial leading_support_monomial(const ParamPolynomial& fgamma) {
  if (fgamma.is_zero()) throw Error("zero dual generator has no leading monomial");
  // Terms are sorted degrevlex-descending, so the first term has maximal degree.
  return fgamma.terms().front().monomial;
}

MinorSelection select_minor_C(const InverseSystemMatrix& m, std::size_t r, SeededRng& rng,
                              const ParamPolynomial& fgamma, std::optional<Monomial> start) {
  if (fgamma.is_zero()) throw Error("strategy C needs a non-zero dual generator");
  MinorSelection sel;
  sel.strategy = Strategy::C;
  std::vector<bool> row_used(m.size(), false), col_used(m.size(), false);
  Monomial beta = start ? *start : leading_support_monomial(fgamma);
  const std::size_t nx = fgamma.nxvars();
  int restarts = 0;
  while (true) {
    Monomial alpha(nx);
    while (true) {
      std::size_t a = m.position(alpha), b = m.position(beta);
      if (a < m.size() && b < m.size() && !row_used[a] && !col_used[b]) {
        row_used[a] = col_used[b] = true;
        sel.rows.push_back(a);
        sel.cols.push_back(b);
        sel.chain.emplace_back(a, b);
        if (sel.rows.size() == r) return sel;
      }
      if (beta.degree() == 0) break;
      // Move one unit from beta to alpha, index k with probability beta_k/|beta|.
      std::uint64_t pick = rng.below(beta.degree());
      std::size_t k = 0;
      while (pick >= beta[k]) pick -= beta[k++];
      beta.set(k, beta[k] - 1);
      alpha.set(k, alpha[k] + 1);
    }
    if (++restarts > kResampleLimit) throw Error("strategy C could not collect enough distinct pairs");
    const auto& terms = fgamma.terms();
    beta = terms[rng.below(terms.size())].monomial;
  }
}

Polynomial symbolic_minor_determinant(const InverseSystemMatrix& m, const MinorSelection& sel,
                                      const Deadline& deadline) {
  return determinant(m.submatrix(sel.rows, sel.cols), m.nparams(), deadline);
}

}  // namespace locgad
