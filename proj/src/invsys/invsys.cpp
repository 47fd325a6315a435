#include "locgad/invsys.hpp"

#include <algorithm>
#include <map>

#include "locgad/actions.hpp"

namespace locgad {

ParamPolynomial symbolic_dual_generator(const Polynomial& f, std::size_t chart) {
  if (f.is_zero() || !f.is_homogeneous()) throw Error("symbolic_dual_generator needs a non-zero homogeneous form");
  const std::size_t n = f.nvars();
  if (chart >= n) throw Error("chart index out of range");
  ParamPolynomial g = apply_base_change(f, BaseChange::unipotent(n, chart));
  std::map<Monomial, Polynomial, MonomialGreater> acc{MonomialGreater{MonomialOrder::DegRevLex}};
  for (const auto& t : g.terms()) {
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= factorial(t.monomial[i]);
    Monomial m = t.monomial.drop(chart);
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc.emplace(m, t.coeff * scale);
    } else {
      it->second += t.coeff * scale;
    }
  }
  std::vector<ParamPolynomial::Term> terms;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  return ParamPolynomial(n - 1, g.nparams(), std::move(terms));
}

InverseSystemMatrix::InverseSystemMatrix(ParamPolynomial fgamma, unsigned degree)
    : f_(std::move(fgamma)), degree_(degree) {
  index_ = monomials_up_to(f_.nxvars(), degree);
  const std::size_t n = index_.size();
  entries_.assign(n * n, Polynomial(f_.nparams()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (index_[i].degree() + index_[j].degree() > degree) break;
      Polynomial c = f_.coefficient(index_[i] * index_[j]);
      entries_[i * n + j] = c;
      entries_[j * n + i] = std::move(c);
    }
}

std::size_t InverseSystemMatrix::position(const Monomial& m) const {
  for (std::size_t i = 0; i < index_.size(); ++i)
    if (index_[i] == m) return i;
  return index_.size();
}

PolyMatrix InverseSystemMatrix::submatrix(const std::vector<std::size_t>& rows,
                                          const std::vector<std::size_t>& cols) const {
  PolyMatrix out;
  out.reserve(rows.size());
  for (auto r : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(entry(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

PolyMatrix InverseSystemMatrix::dense() const {
  std::vector<std::size_t> all(size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return submatrix(all, all);
}

RationalMatrix InverseSystemMatrix::specialize(std::span<const Rational> point) const {
  if (point.size() != nparams()) throw Error("specialization point has wrong length");
  const std::size_t n = size();
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Polynomial& e = entry(i, j);
      if (e.is_zero()) continue;
      out[i][j] = out[j][i] = e.evaluate(point);
    }
  return out;
}

InverseSystemMatrix inverse_system_matrix(const Polynomial& f, std::size_t chart) {
  return InverseSystemMatrix(symbolic_dual_generator(f, chart), static_cast<unsigned>(f.degree()));
}

std::size_t specialized_rank(const InverseSystemMatrix& m, std::span<const Rational> point) {
  return rank(m.specialize(point));
}

std::size_t symbolic_rank(const InverseSystemMatrix& m, const Deadline& deadline) {
  // Rows and columns beyond deg f_gamma vanish identically.
  const int top = m.dual_generator().degree();
  if (top < 0) return 0;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (static_cast<int>(m.index()[i].degree()) <= top) live.push_back(i);
  return symbolic_rank(m.submatrix(live, live), deadline);
}

CatalecticantMatrix catalecticant(const Polynomial& f, unsigned i) {
  if (f.is_zero() || !f.is_homogeneous()) throw Error("catalecticant needs a non-zero homogeneous form");
  const unsigned d = static_cast<unsigned>(f.degree());
  if (i > d) throw Error("catalecticant index out of range");
  Polynomial fdp = divided_power(f);
  CatalecticantMatrix c;
  c.i = i;
  c.rows = monomials_of_degree(f.nvars(), d - i, MonomialOrder::Lex);
  c.cols = monomials_of_degree(f.nvars(), i, MonomialOrder::Lex);
  c.entries.assign(c.rows.size(), std::vector<Rational>(c.cols.size()));
  for (std::size_t r = 0; r < c.rows.size(); ++r)
    for (std::size_t s = 0; s < c.cols.size(); ++s) c.entries[r][s] = fdp.coefficient(c.rows[r] * c.cols[s]);
  return c;
}

bool embed_check(const Polynomial& f) {
  const unsigned d = static_cast<unsigned>(f.degree());
  InverseSystemMatrix m = inverse_system_matrix(f, 0);
  std::vector<Rational> zero(m.nparams(), Rational(0));
  RationalMatrix at0 = m.specialize(zero);
  for (unsigned i = 0; i <= d; ++i) {
    CatalecticantMatrix c = catalecticant(f, i);
    for (std::size_t r = 0; r < c.rows.size(); ++r) {
      std::size_t pr = m.position(c.rows[r].drop(0));
      if (pr == m.size()) return false;
      for (std::size_t s = 0; s < c.cols.size(); ++s) {
        std::size_t pc = m.position(c.cols[s].drop(0));
        if (pc == m.size() || at0[pr][pc] != c.entries[r][s]) return false;
      }
    }
  }
  return true;
}

long generic_local_rank(unsigned n, unsigned d) {
  if (n < 1 || d < 1) throw Error("generic_local_rank needs n >= 1 and d >= 1");
  const unsigned k = d / 2;
  if (d % 2 == 1) return 2 * binomial(n + k, n).get_si();
  Integer v = Integer(n + 2 * k) * binomial(n + k - 1, n);
  return Integer(v / k).get_si();
}

long rank_lower_bound(const Polynomial& f) { return f.is_zero() ? 0 : 1 + f.degree(); }

std::vector<Polynomial> degree_tail_equations(const ParamPolynomial& fgamma, unsigned from_degree) {
  std::vector<Polynomial> out;
  for (const auto& t : fgamma.terms())
    if (t.monomial.degree() >= from_degree && !t.coeff.is_zero()) out.push_back(t.coeff);
  return out;
}

std::vector<Polynomial> degree_d_equations(const Polynomial& f, std::size_t chart) {
  return degree_tail_equations(symbolic_dual_generator(f, chart), static_cast<unsigned>(f.degree()));
}

std::size_t max_catalecticant_rank(const Polynomial& f) {
  std::size_t best = 0;
  for (unsigned i = 0; i <= static_cast<unsigned>(f.degree()); ++i) best = std::max(best, rank(catalecticant(f, i).entries));
  return best;
}

}  // namespace locgad
