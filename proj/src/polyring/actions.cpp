#include "locgad/actions.hpp"

namespace locgad {
namespace {

void check_sizes(const Polynomial& g, const Polynomial& f) {
  if (!g.is_zero() && !f.is_zero() && g.nvars() != f.nvars())
    throw Error("operator and polynomial have different variable counts");
}

// alpha! / (alpha - beta)!
Rational falling(const Monomial& alpha, const Monomial& beta) {
  Rational r = 1;
  for (std::size_t i = 0; i < alpha.nvars(); ++i)
    for (unsigned k = 0; k < beta[i]; ++k) r *= alpha[i] - k;
  return r;
}

Rational monomial_factorial(const Monomial& m) {
  Rational r = 1;
  for (std::size_t i = 0; i < m.nvars(); ++i) r *= factorial(m[i]);
  return r;
}

}  // namespace

Polynomial derivative_action(const Polynomial& g, const Polynomial& f) {
  check_sizes(g, f);
  std::vector<Term> out;
  for (const auto& gt : g.terms())
    for (const auto& ft : f.terms())
      if (gt.monomial.divides(ft.monomial))
        out.push_back({ft.monomial / gt.monomial, gt.coeff * ft.coeff * falling(ft.monomial, gt.monomial)});
  return Polynomial(f.nvars(), std::move(out));
}

Polynomial contraction_action(const Polynomial& g, const Polynomial& f) {
  check_sizes(g, f);
  std::vector<Term> out;
  for (const auto& gt : g.terms())
    for (const auto& ft : f.terms())
      if (gt.monomial.divides(ft.monomial)) out.push_back({ft.monomial / gt.monomial, gt.coeff * ft.coeff});
  return Polynomial(f.nvars(), std::move(out));
}

Polynomial divided_power(const Polynomial& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.monomial, t.coeff * monomial_factorial(t.monomial)});
  return Polynomial(f.nvars(), std::move(out));
}

Polynomial undivided_power(const Polynomial& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.monomial, t.coeff / monomial_factorial(t.monomial)});
  return Polynomial(f.nvars(), std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t chart) {
  if (!f.is_homogeneous()) throw Error("dehomogenize: polynomial is not homogeneous");
  if (chart >= f.nvars()) throw Error("dehomogenize: chart index out of range");
  return f.substitute(chart, Rational(1));
}

Polynomial homogenize(const Polynomial& f, std::size_t chart, unsigned degree) {
  if (f.degree() > static_cast<int>(degree)) throw Error("homogenize: degree below polynomial degree");
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back({t.monomial.insert(chart, degree - t.monomial.degree()), t.coeff});
  return Polynomial(f.nvars() + 1, std::move(out));
}

}  // namespace locgad
