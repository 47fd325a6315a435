#include "locgad/linalg.hpp"

#include <algorithm>
#include <limits>

namespace locgad {
namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix clear_denominators(const RationalMatrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Row echelon mod p; returns rank and the determinant sign/product when square.
std::pair<std::size_t, unsigned long> eliminate_mod(std::vector<std::vector<unsigned long>>& m, unsigned long p) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  unsigned long det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      det = det ? p - det : 0;
    }
    det = mulmod(det, m[r][c], p);
    unsigned long inv = powmod(m[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      unsigned long f = mulmod(m[i][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        unsigned long s = mulmod(f, m[r][j], p);
        m[i][j] = m[i][j] >= s ? m[i][j] - s : m[i][j] + p - s;
      }
    }
    ++r;
  }
  if (r < rows) det = 0;
  return {r, det};
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = clear_denominators(m);
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m, std::size_t ncols) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> pivot_profile(const RationalMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (m.empty()) return out;
  RationalMatrix a = m;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  while (true) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = 0; i < rows && pi == rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!col_done[j] && a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi == rows) break;
    row_done[pi] = col_done[pj] = true;
    out.emplace_back(pi, pj);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_done[i] || a[i][pj] == 0) continue;
      Rational f = a[i][pj] / a[pi][pj];
      for (std::size_t j = 0; j < cols; ++j)
        if (!col_done[j] && a[pi][j] != 0) a[i][j] -= f * a[pi][j];
      a[i][pj] = 0;
    }
  }
  return out;
}

namespace {

// Bareiss elimination with full pivoting. Returns the rank; when `det` is
// non-null and the matrix is square and nonsingular, stores the determinant.
std::size_t bareiss(PolyMatrix& a, std::size_t nvars, Polynomial* det, const Deadline& deadline) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Polynomial prev(nvars, Rational(1));
  int sign = 1;
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    // Nonzero pivot of lowest degree, then fewest terms.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const Polynomial& e = a[i][j];
        if (e.is_zero()) continue;
        if (pi == rows || e.degree() < a[pi][pj].degree() ||
            (e.degree() == a[pi][pj].degree() && e.size() < a[pi][pj].size())) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    if (pi != k) {
      std::swap(a[pi], a[k]);
      sign = -sign;
    }
    if (pj != k) {
      for (auto& row : a) std::swap(row[pj], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial v = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) v -= a[i][k] * a[k][j];
        if (!prev.is_constant()) {
          v = v.exact_divide(prev);
        } else if (prev.constant_term() != 1) {
          v *= 1 / prev.constant_term();
        }
        a[i][j] = std::move(v);
      }
      a[i][k] = Polynomial(nvars);
      deadline.check();
    }
    prev = a[k][k];
  }
  if (det) {
    if (rows == cols && k == rows) {
      *det = sign > 0 ? prev : -prev;
    } else {
      *det = Polynomial(nvars);
    }
  }
  return k;
}

}  // namespace

Polynomial determinant(PolyMatrix m, std::size_t nvars, const Deadline& deadline) {
  if (m.empty()) return Polynomial(nvars, Rational(1));
  if (m.size() != m[0].size()) throw Error("determinant of a non-square matrix");
  Polynomial det(nvars);
  bareiss(m, nvars, &det, deadline);
  return det;
}

std::size_t symbolic_rank(PolyMatrix m, const Deadline& deadline) {
  if (m.empty()) return 0;
  std::size_t nvars = 0;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) nvars = e.nvars();
  return bareiss(m, nvars, nullptr, deadline);
}

unsigned long determinant_mod(std::vector<std::vector<unsigned long>> m, unsigned long p) {
  if (m.empty()) return 1;
  return eliminate_mod(m, p).second;
}

std::size_t rank_mod(std::vector<std::vector<unsigned long>> m, unsigned long p) {
  if (m.empty()) return 0;
  return eliminate_mod(m, p).first;
}

}  // namespace locgad
