#include "locgad/param_polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace locgad {
namespace {

struct XGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::DegRevLex) > 0;
  }
};

}  // namespace

ParamPolynomial::ParamPolynomial(std::size_t nxvars, std::size_t nparams, std::vector<Term> terms)
    : nxvars_(nxvars), nparams_(nparams) {
  std::map<Monomial, Polynomial, XGreater> acc;
  for (auto& t : terms) {
    if (t.monomial.nvars() != nxvars || (!t.coeff.is_zero() && t.coeff.nvars() != nparams))
      throw Error("parametric term does not match ring sizes");
    auto [it, inserted] = acc.try_emplace(t.monomial, Polynomial(nparams));
    it->second += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

ParamPolynomial ParamPolynomial::from_combined(const Polynomial& p, std::size_t nxvars, std::size_t nparams) {
  if (p.nvars() != nxvars + nparams && !p.is_zero()) throw Error("combined ring has wrong size");
  std::map<Monomial, std::vector<locgad::Term>, XGreater> split;
  for (const auto& t : p.terms()) {
    Monomial xm(nxvars), gm(nparams);
    for (std::size_t i = 0; i < nxvars; ++i) xm.set(i, t.monomial[i]);
    for (std::size_t i = 0; i < nparams; ++i) gm.set(i, t.monomial[nxvars + i]);
    split[xm].push_back({gm, t.coeff});
  }
  ParamPolynomial r(nxvars, nparams);
  for (auto& [m, ts] : split) r.terms_.push_back({m, Polynomial(nparams, std::move(ts))});
  return r;
}

ParamPolynomial ParamPolynomial::constant_in_params(const Polynomial& p, std::size_t nparams) {
  ParamPolynomial r(p.nvars(), nparams);
  for (const auto& t : p.terms()) r.terms_.push_back({t.monomial, Polynomial(nparams, t.coeff)});
  return r;
}

int ParamPolynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

Polynomial ParamPolynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Polynomial(nparams_);
}

ParamPolynomial ParamPolynomial::contract(const Monomial& beta) const {
  ParamPolynomial r(nxvars_, nparams_);
  for (const auto& t : terms_)
    if (beta.divides(t.monomial)) r.terms_.push_back({t.monomial / beta, t.coeff});
  // Exponent subtraction by a fixed monomial preserves degrevlex order.
  return r;
}

Polynomial ParamPolynomial::to_combined() const {
  std::vector<locgad::Term> out;
  for (const auto& t : terms_) {
    for (const auto& ct : t.coeff.terms()) {
      Monomial m(nxvars_ + nparams_);
      for (std::size_t i = 0; i < nxvars_; ++i) m.set(i, t.monomial[i]);
      for (std::size_t i = 0; i < nparams_; ++i) m.set(nxvars_ + i, ct.monomial[i]);
      out.push_back({m, ct.coeff});
    }
  }
  return Polynomial(nxvars_ + nparams_, std::move(out));
}

Polynomial ParamPolynomial::specialize(std::span<const Rational> point) const {
  if (point.size() != nparams_) throw Error("specialization point has wrong length");
  std::vector<locgad::Term> out;
  for (const auto& t : terms_) {
    Rational v = t.coeff.evaluate(point);
    if (v != 0) out.push_back({t.monomial, std::move(v)});
  }
  return Polynomial(nxvars_, std::move(out));
}

bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::string ParamPolynomial::to_string(const Ring& xring, const Ring& params) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string x = t.monomial.is_one() ? "" : Polynomial(t.monomial, 1).to_string(xring);
    bool negative = false;
    std::string c;
    if (t.coeff.size() == 1) {
      // Single-term coefficients print inline with their sign pulled out.
      const auto& ct = t.coeff.leading_term();
      negative = ct.coeff < 0;
      c = Polynomial(ct.monomial, abs(ct.coeff)).to_string(params);
    } else {
      c = "(" + t.coeff.to_string(params) + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (x.empty()) {
      os << c;
    } else if (c == "1") {
      os << x;
    } else {
      os << c << "*" << x;
    }
  }
  return os.str();
}

BaseChange BaseChange::unipotent(std::size_t nxvars, std::size_t chart) {
  if (chart >= nxvars) throw Error("chart index out of range");
  const std::size_t np = nxvars - 1;
  BaseChange b;
  b.nparams = np;
  b.matrix.assign(nxvars, std::vector<Polynomial>(nxvars, Polynomial(np)));
  for (std::size_t i = 0; i < nxvars; ++i) b.matrix[i][i] = Polynomial(np, Rational(1));
  for (std::size_t j = 0, k = 0; j < nxvars; ++j) {
    if (j == chart) continue;
    b.matrix[chart][j] = -Polynomial::variable(np, k++);
  }
  return b;
}

BaseChange BaseChange::numeric(const std::vector<std::vector<Rational>>& m) {
  BaseChange b;
  b.nparams = 0;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error("base change matrix must be square");
    std::vector<Polynomial> r;
    for (const auto& v : row) r.emplace_back(0, v);
    b.matrix.push_back(std::move(r));
  }
  return b;
}

Polynomial BaseChange::determinant() const {
  // Laplace expansion along the first row; matrices here are tiny.
  const std::size_t n = size();
  if (n == 0) return Polynomial(nparams, Rational(1));
  if (n == 1) return matrix[0][0];
  Polynomial det(nparams);
  for (std::size_t c = 0; c < n; ++c) {
    if (matrix[0][c].is_zero()) continue;
    BaseChange minor;
    minor.nparams = nparams;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(matrix[r][k]);
      minor.matrix.push_back(std::move(row));
    }
    Polynomial term = matrix[0][c] * minor.determinant();
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

ParamPolynomial apply_base_change(const Polynomial& f, const BaseChange& m) {
  const std::size_t n = f.nvars();
  if (m.size() != n) throw Error("base change dimension does not match the form");
  const std::size_t total = n + m.nparams;
  // Image of x_i in the combined ring: sum_j M[i][j] x_j.
  std::vector<std::size_t> lift(m.nparams);
  for (std::size_t k = 0; k < m.nparams; ++k) lift[k] = n + k;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(total);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.matrix[i][j].is_zero()) continue;
      img += m.matrix[i][j].remap(total, lift) * Polynomial::variable(total, j);
    }
    images.push_back(std::move(img));
  }
  return ParamPolynomial::from_combined(f.compose(images), n, m.nparams);
}

}  // namespace locgad
