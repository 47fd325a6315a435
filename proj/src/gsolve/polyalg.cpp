#include "locgad/polyalg.hpp"

#include <algorithm>
#include <map>

namespace locgad {
namespace {

int highest_variable(const Polynomial& p) {
  int v = -1;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.monomial[i]) v = std::max(v, static_cast<int>(i));
  return v;
}

// Coefficients of p viewed as a polynomial in x_var; index = exponent.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  if (buckets.empty()) return out;
  out.assign(buckets.rbegin()->first + 1, Polynomial(p.nvars()));
  for (auto& [e, ts] : buckets) out[e] = Polynomial(p.nvars(), std::move(ts));
  return out;
}

Polynomial normalize(const Polynomial& p) { return p.is_zero() ? p : p.primitive(); }

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to x_var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  auto bc = coefficients_in(b, var);
  const Polynomial& lb = bc.back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    auto ac = coefficients_in(a, var);
    const int da = static_cast<int>(ac.size()) - 1;
    Polynomial shift = b.multiply_term(Monomial::variable(a.nvars(), var, static_cast<unsigned>(da - db)), 1);
    a = lb * a - ac.back() * shift;
    if (!a.is_zero()) a = a.primitive();
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.nvars() != b.nvars()) throw Error("gcd of polynomials from different rings");
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
  const int va = highest_variable(a), vb = highest_variable(b);
  const std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  // If only one of them involves v, the gcd lies among the coefficients.
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial p = a.exact_divide(ca), q = b.exact_divide(cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      q = Polynomial(n, Rational(1));
      break;
    }
    p = std::move(q);
    q = r.exact_divide(content_in(r, v));
  }
  return normalize(q * c);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return normalize(p);
  Polynomial g = p;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (p.degree_in(i) <= 0) continue;
    g = gcd(g, p.derivative(i));
    if (g.is_constant()) break;
  }
  return normalize(p.exact_divide(g));
}

std::optional<std::size_t> univariate_variable(const Polynomial& p) {
  std::optional<std::size_t> var;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (!t.monomial[i]) continue;
      if (var && *var != i) return std::nullopt;
      var = i;
    }
  return var;
}

std::optional<std::vector<Integer>> divisors(const Integer& n, unsigned long trial_bound) {
  Integer m = abs(n);
  if (m == 0) return std::vector<Integer>{};
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long p = 2; m > 1; ++p) {
    if (Integer(p) * p > m) {
      factors.emplace_back(m, 1);
      m = 1;
      break;
    }
    if (p > trial_bound) return std::nullopt;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      factors.emplace_back(Integer(p), e);
    }
  }
  std::vector<Integer> divs{1};
  for (const auto& [prime, e] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RationalRootSplit rational_roots(const Polynomial& p, std::size_t var) {
  RationalRootSplit out;
  if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
  const std::size_t n = p.nvars();
  Polynomial f = squarefree_part(p);
  if (f.is_constant()) {
    out.cofactor = Polynomial(n, Rational(1));
    return out;
  }
  const Polynomial x = Polynomial::variable(n, var);
  // Zero root.
  if (f.constant_term() == 0) {
    out.roots.push_back(0);
    f = f.exact_divide(x);
  }
  // Dense integer coefficients, index = degree.
  auto coeffs = [&](const Polynomial& g) {
    std::vector<Integer> c(static_cast<std::size_t>(g.degree_in(var)) + 1, 0);
    for (const auto& t : g.terms()) c[t.monomial[var]] = t.coeff.get_num();
    return c;
  };
  // num/den is a root iff sum_k c_k num^k den^(deg-k) == 0.
  auto is_root = [](const std::vector<Integer>& c, const Integer& num, const Integer& den) {
    Integer acc = c.back(), dpow = 1;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      dpow *= den;
      acc = acc * num + c[k] * dpow;
    }
    return acc == 0;
  };
  while (f.degree_in(var) > 0) {
    f = f.primitive();
    auto c = coeffs(f);
    auto num_divs = divisors(c.front());
    auto den_divs = divisors(c.back());
    if (!num_divs || !den_divs) {
      out.complete = false;
      break;
    }
    std::optional<Rational> found;
    for (const auto& q : *den_divs) {
      for (const auto& pnum : *num_divs) {
        for (int sign : {1, -1}) {
          Integer num = sign * pnum;
          Integer g;
          mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
          if (g != 1) continue;
          if (is_root(c, num, q)) {
            found = Rational(num, q);
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    out.roots.push_back(*found);
    Polynomial lin = x * Rational(found->get_den()) - Polynomial(n, Rational(found->get_num()));
    f = f.exact_divide(lin);
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.cofactor = f.is_constant() ? Polynomial(n, Rational(1)) : f.primitive();
  return out;
}

}  // namespace locgad
