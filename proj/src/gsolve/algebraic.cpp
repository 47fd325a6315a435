#include "locgad/algebraic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "locgad/minors.hpp"
#include "locgad/polyalg.hpp"

namespace locgad {

namespace upoly {

namespace {
void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly from_polynomial(const Polynomial& p) {
  UPoly out;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 1; i < p.nvars(); ++i)
      if (t.monomial[i]) throw Error("expected a univariate polynomial");
    const unsigned e = p.nvars() ? t.monomial[0] : 0;
    if (out.size() <= e) out.resize(e + 1);
    out[e] += t.coeff;
  }
  trim(out);
  return out;
}

Polynomial to_polynomial(const UPoly& p, std::size_t nvars, std::size_t var) {
  Polynomial out(nvars);
  for (std::size_t e = 0; e < p.size(); ++e)
    if (p[e] != 0) out += Polynomial(Monomial::variable(nvars, var, static_cast<unsigned>(e)), p[e]);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out = a;
  if (out.size() < b.size()) out.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

namespace {
void divide(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw Error("univariate division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = 1 / b.back();
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}
}  // namespace

UPoly rem(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divide(a, b, q, r);
  return r;
}

UPoly quo(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divide(a, b, q, r);
  return q;
}

UPoly monic_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the cofactor of a.
  UPoly r0 = m, r1 = rem(a, m), s0, s1{Rational(1)};
  while (!r1.empty()) {
    UPoly q, r;
    divide(r0, r1, q, r);
    UPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error("element is not invertible modulo the polynomial");
  Rational inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  return rem(s0, m);
}

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace upoly

namespace {

// Value of a polynomial in gamma at gamma = coords(u), reduced modulo h.
UPoly evaluate_mod(const Polynomial& p, const std::vector<std::vector<UPoly>>& powers, const UPoly& h) {
  UPoly acc;
  for (const auto& t : p.terms()) {
    UPoly prod{t.coeff};
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (t.monomial[i]) prod = upoly::rem(upoly::mul(prod, powers[i][t.monomial[i]]), h);
    acc = upoly::sub(acc, upoly::sub(UPoly{}, prod));
  }
  return upoly::rem(acc, h);
}

std::vector<std::vector<UPoly>> power_table(const std::vector<UPoly>& coords, const UPoly& h, unsigned maxdeg) {
  std::vector<std::vector<UPoly>> powers(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    powers[i].push_back(UPoly{Rational(1)});
    for (unsigned e = 1; e <= maxdeg; ++e) powers[i].push_back(upoly::rem(upoly::mul(powers[i].back(), coords[i]), h));
  }
  return powers;
}

// Rank of m over Q[u]/(h), splitting h whenever a pivot candidate is a zero divisor.
using Pivots = std::vector<std::pair<std::size_t, std::size_t>>;

struct Branch {
  UPoly h;
  Pivots pivots;
};

// perm[i] is the original index of row i.
void rank_split(std::vector<std::vector<UPoly>> m, std::vector<std::size_t> perm, Pivots pivots, const UPoly& h,
                std::size_t col0, std::vector<Branch>& out, const Deadline& deadline) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = pivots.size();
  for (std::size_t c = col0; c < cols && r < rows; ++c) {
    deadline.check();
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      m[i][c] = upoly::rem(m[i][c], h);
      if (m[i][c].empty()) continue;
      UPoly g = upoly::monic_gcd(m[i][c], h);
      if (g.size() == 1) {
        piv = i;
        break;
      }
      // Zero divisor: h = g * (h/g); continue on both factors from this column.
      UPoly h2 = upoly::quo(h, g);
      auto reduce = [&](const UPoly& hh) {
        auto mm = m;
        for (auto& row : mm)
          for (auto& e : row) e = upoly::rem(e, hh);
        return mm;
      };
      rank_split(reduce(g), perm, pivots, g, c, out, deadline);
      rank_split(reduce(h2), perm, pivots, h2, c, out, deadline);
      return;
    }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(perm[piv], perm[r]);
    pivots.emplace_back(perm[r], c);
    UPoly inv = upoly::inverse_mod(m[r][c], h);
    for (std::size_t i = r + 1; i < rows; ++i) {
      UPoly ei = upoly::rem(m[i][c], h);
      if (ei.empty()) continue;
      UPoly f = upoly::rem(upoly::mul(ei, inv), h);
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].empty()) m[i][j] = upoly::rem(upoly::sub(m[i][j], upoly::mul(f, m[r][j])), h);
    }
    ++r;
  }
  out.push_back({h, std::move(pivots)});
}

}  // namespace

std::vector<Polynomial> AlgebraicPoints::ideal(const std::vector<Rational>& form) const {
  const std::size_t n = coords.size();
  Polynomial u(n);
  for (std::size_t i = 0; i < n; ++i)
    if (form[i] != 0) u += Polynomial::variable(n, i) * form[i];
  std::vector<Polynomial> images{u};
  auto compose = [&](const UPoly& p) { return upoly::to_polynomial(p, 1, 0).compose(images); };
  std::vector<Polynomial> out{compose(h).primitive()};
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back((Polynomial::variable(n, i) - compose(coords[i])).primitive());
  return out;
}

namespace {

using Vec = std::vector<Rational>;

// k[gamma]/I for a zero-dimensional ideal, in the basis of standard monomials
// of its reduced degrevlex Groebner basis.
class Quotient {
 public:
  Quotient(const Ideal& ideal, const Deadline& deadline) : n_(ideal.nvars()) {
    basis_ = groebner_basis(ideal.generators(), n_, MonomialOrder::DegRevLex, deadline);
    std::vector<Monomial> leads;
    for (const auto& b : basis_) leads.push_back(leading_monomial(b, MonomialOrder::DegRevLex));
    auto standard = [&](const Monomial& m) {
      return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    if (!leads.empty() && leads.front().is_one()) return;  // unit ideal
    std::vector<Monomial> frontier{Monomial(n_)};
    std::set<Monomial, MonomialGreater> seen{Monomial(n_)};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        if (!standard(m)) continue;
        monomials_.push_back(m);
        if (monomials_.size() > 100000) throw Error("quotient algebra is too large");
        for (std::size_t i = 0; i < n_; ++i) {
          Monomial g = m;
          g.set(i, g[i] + 1);
          if (seen.insert(g).second) next.push_back(g);
        }
      }
      frontier = std::move(next);
    }
    std::sort(monomials_.begin(), monomials_.end(), MonomialGreater{});
    for (std::size_t k = 0; k < monomials_.size(); ++k) position_[monomials_[k]] = k;
    mult_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (const auto& m : monomials_) {
        deadline.check();
        mult_[i].push_back(vector_of(Polynomial::variable(n_, i).multiply_term(m, Rational(1))));
      }
  }

  std::size_t dim() const { return monomials_.size(); }

  Vec vector_of(const Polynomial& p) const {
    Polynomial r = normal_form(p, basis_, MonomialOrder::DegRevLex);
    Vec v(monomials_.size());
    for (const auto& t : r.terms()) v[position_.at(t.monomial)] = t.coeff;
    return v;
  }

  // (sum_i c_i gamma_i) * v
  Vec multiply(const std::vector<Rational>& c, const Vec& v) const {
    Vec out(v.size());
    for (std::size_t i = 0; i < n_; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const Vec& col = mult_[i][k];
        Rational f = c[i] * v[k];
        for (std::size_t j = 0; j < col.size(); ++j)
          if (col[j] != 0) out[j] += f * col[j];
      }
    }
    return out;
  }

  Vec one() const { return vector_of(Polynomial(n_, Rational(1))); }

 private:
  std::size_t n_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> position_;
  std::vector<std::vector<Vec>> mult_;  // mult_[i][k] = gamma_i * monomial k
};

// Incremental echelon form recording how each reduced vector combines the inputs.
class Krylov {
 public:
  explicit Krylov(std::size_t dim) : dim_(dim) {}

  // Vectors spanning a subspace to work modulo; they take no part in the
  // recorded combinations.
  void add_base(Vec v) {
    reduce(v, nullptr);
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return;
    normalize(v, piv, nullptr);
    rows_.push_back(std::move(v));
    combs_.emplace_back();
    pivots_.push_back(piv);
  }

  std::size_t rank() const { return rows_.size(); }

  // Adds v_k; returns the coefficients c_0..c_k with sum c_j v_j = 0 and c_k = 1
  // once v_k depends on the earlier vectors.
  std::optional<Vec> add(Vec v) {
    const std::size_t k = count_++;
    Vec comb(k + 1);
    comb[k] = 1;
    reduce(v, &comb);
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return comb;
    normalize(v, piv, &comb);
    rows_.push_back(std::move(v));
    combs_.push_back(std::move(comb));
    pivots_.push_back(piv);
    return std::nullopt;
  }

 private:
  void reduce(Vec& v, Vec* comb) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
      if (comb)
        for (std::size_t j = 0; j < combs_[r].size(); ++j) (*comb)[j] -= f * combs_[r][j];
    }
  }

  static void normalize(Vec& v, std::size_t piv, Vec* comb) {
    Rational inv = 1 / v[piv];
    for (auto& e : v) e *= inv;
    if (comb)
      for (auto& e : *comb) e *= inv;
  }

  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Vec> rows_, combs_;
  std::vector<std::size_t> pivots_;
};

// Minimal polynomial of multiplication by the linear form c.
UPoly minimal_polynomial(const Quotient& q, const std::vector<Rational>& c, const Deadline& deadline) {
  Krylov kr(q.dim());
  Vec v = q.one();
  while (true) {
    deadline.check();
    if (auto dep = kr.add(v)) return *dep;
    v = q.multiply(c, v);
  }
}

UPoly squarefree(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) return p;
  return upoly::quo(p, upoly::monic_gcd(p, d));
}

}  // namespace

Ideal zero_dimensional_radical(const Ideal& ideal, const Deadline& deadline) {
  const std::size_t n = ideal.nvars();
  Quotient q(ideal, deadline);
  std::vector<Polynomial> gens = ideal.generators();
  if (q.dim() == 0) return Ideal(n, {Polynomial(n, Rational(1))});
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> c(n);
    c[v] = 1;
    gens.push_back(upoly::to_polynomial(squarefree(minimal_polynomial(q, c, deadline)), n, v));
  }
  return Ideal(n, std::move(gens));
}

std::optional<ShapeForm> shape_form(const Ideal& zero_dim, std::uint64_t seed, const Deadline& deadline) {
  const std::size_t n = zero_dim.nvars();
  if (n == 0) throw Error("shape_form needs at least one variable");
  Quotient q(zero_dim, deadline);
  ShapeForm s;
  s.points.coords.assign(n, UPoly{});
  auto unit = [&] {
    s.form.assign(n, Rational(0));
    s.form[n - 1] = 1;
    s.points.h = UPoly{Rational(1)};
    return s;
  };
  if (q.dim() == 0) return unit();
  // The nilradical of the quotient is generated by f_v(gamma_v), f_v the
  // squarefree part of the minimal polynomial of gamma_v; all work below is
  // modulo the subspace it spans.
  std::vector<Vec> nil;
  Krylov span(q.dim());
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> c(n);
    c[v] = 1;
    UPoly mu = minimal_polynomial(q, c, deadline);
    UPoly f = squarefree(mu);
    if (f.size() == mu.size()) continue;
    Vec w(q.dim());
    const Vec one = q.one();
    for (std::size_t j = f.size(); j-- > 0;) {
      w = q.multiply(c, w);
      for (std::size_t t = 0; t < w.size(); ++t) w[t] += f[j] * one[t];
    }
    nil.push_back(std::move(w));
  }
  // Close the span under multiplication by the variables.
  for (std::size_t i = 0; i < nil.size(); ++i) {
    deadline.check();
    const std::size_t before = span.rank();
    span.add_base(nil[i]);
    if (span.rank() == before) continue;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Rational> c(n);
      c[v] = 1;
      nil.push_back(q.multiply(c, nil[i]));
    }
  }
  auto seeded = [&] { return span; };
  const std::size_t nilrank = span.rank();
  const std::size_t points = q.dim() - nilrank;
  if (points == 0) return unit();
  SeededRng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> form(n, Rational(0));
    form[n - 1] = 1;
    // The first attempt tries the plain last coordinate.
    for (std::size_t i = 0; i + 1 < n; ++i) form[i] = attempt == 0 ? 0 : rng.between(-3 - attempt, 3 + attempt);
    // Powers 1, u, ..., u^(D-1) must span the reduced quotient.
    std::vector<Vec> powers;
    Krylov kr = seeded();
    Vec v = q.one();
    std::optional<Vec> dep;
    while (!(dep = kr.add(v))) {
      deadline.check();
      powers.push_back(v);
      v = q.multiply(form, v);
    }
    if (powers.size() != points) continue;
    s.form = form;
    s.points.h = *dep;
    // gamma_i = g_i(u): solve sum_k a_k u^k = gamma_i in the power basis.
    for (std::size_t i = 0; i < n; ++i) {
      Krylov solve = seeded();
      for (const auto& p : powers) solve.add(p);
      auto rel = solve.add(q.vector_of(Polynomial::variable(n, i)));
      if (!rel) throw Error("internal error: coordinate outside the power basis");
      UPoly g(powers.size());
      for (std::size_t k = 0; k < powers.size(); ++k) g[k] = -(*rel)[k];
      while (!g.empty() && g.back() == 0) g.pop_back();
      s.points.coords[i] = std::move(g);
    }
    return s;
  }
  return std::nullopt;
}

std::vector<RankPart> split_by_rank(const AlgebraicPoints& pts, const PolyMatrix& m, const Deadline& deadline) {
  std::vector<RankPart> result;
  if (upoly::degree(pts.h) < 1) return result;
  unsigned maxdeg = 0;
  for (const auto& row : m)
    for (const auto& e : row)
      for (const auto& t : e.terms())
        for (std::size_t i = 0; i < pts.coords.size(); ++i) maxdeg = std::max(maxdeg, t.monomial[i]);
  auto powers = power_table(pts.coords, pts.h, maxdeg);
  std::vector<std::vector<UPoly>> vm(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i]) vm[i].push_back(evaluate_mod(e, powers, pts.h));
  std::vector<std::size_t> perm(m.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<Branch> parts;
  rank_split(std::move(vm), std::move(perm), {}, pts.h, 0, parts, deadline);
  for (auto& b : parts) {
    RankPart part;
    part.points.h = b.h;
    for (const auto& c : pts.coords) part.points.coords.push_back(upoly::rem(c, b.h));
    part.rank = b.pivots.size();
    part.pivots = std::move(b.pivots);
    result.push_back(std::move(part));
  }
  return result;
}

}  // namespace locgad
