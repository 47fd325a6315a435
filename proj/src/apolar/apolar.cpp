#include "locgad/apolar.hpp"

#include <algorithm>
#include <sstream>

#include "locgad/actions.hpp"
#include "locgad/linalg.hpp"

namespace locgad {
namespace {

// F in coordinates where the support becomes the chart variable:
// x_chart -> x_chart - sum c_i x_i, other variables fixed.
Polynomial to_chart_coordinates(const Polynomial& f, const Support& s) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i));
  for (std::size_t i = 0; i < n; ++i)
    if (i != s.chart && s.coefficients[i] != 0) images[s.chart] -= Polynomial::variable(n, i) * s.coefficients[i];
  return f.compose(images);
}

// Pulls an operator annihilating F in chart coordinates back to the original
// ones: y_i -> y_i - c_i y_chart.
Polynomial operator_to_original(const Polynomial& p, const Support& s) {
  const std::size_t n = p.nvars();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img = Polynomial::variable(n, i);
    if (i != s.chart && s.coefficients[i] != 0) img -= Polynomial::variable(n, s.chart) * s.coefficients[i];
    images.push_back(std::move(img));
  }
  return p.compose(images);
}

void check_form(const Polynomial& f) {
  if (f.is_zero()) throw Error("form must be non-zero");
  if (!f.is_homogeneous()) throw Error("form must be homogeneous");
}

// Coefficient matrix of the contraction map on monomials up to `deg` in the
// domain, rows indexed by the codomain monomials up to deg f.
RationalMatrix contraction_matrix(const Polynomial& f, const std::vector<Monomial>& domain,
                                  const std::vector<Monomial>& codomain) {
  RationalMatrix m(codomain.size(), std::vector<Rational>(domain.size()));
  for (std::size_t i = 0; i < codomain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j) m[i][j] = f.coefficient(codomain[i] * domain[j]);
  return m;
}

}  // namespace

std::string HilbertPrefix::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  if (stable) os << ",...";
  os << ')';
  return os.str();
}

Support normalize_linear_form(const Polynomial& l) {
  if (l.is_zero()) throw Error("linear form is zero");
  if (l.degree() != 1 || !l.is_homogeneous()) throw Error("support must be a linear form");
  Support s;
  s.coefficients.assign(l.nvars(), 0);
  for (const auto& t : l.terms())
    for (std::size_t i = 0; i < l.nvars(); ++i)
      if (t.monomial[i]) s.coefficients[i] = t.coeff;
  std::size_t j = 0;
  while (s.coefficients[j] == 0) ++j;
  s.chart = j;
  Rational inv = 1 / s.coefficients[j];
  for (auto& c : s.coefficients) c *= inv;
  return s;
}

Polynomial linear_form(const Support& s) {
  const std::size_t n = s.coefficients.size();
  Polynomial l(n);
  for (std::size_t i = 0; i < n; ++i)
    if (s.coefficients[i] != 0) l += Polynomial::variable(n, i) * s.coefficients[i];
  return l;
}

Polynomial dual_generator(const Polynomial& f, const Polynomial& l) {
  return dual_generator(f, normalize_linear_form(l));
}

Polynomial dual_generator(const Polynomial& f, const Support& s) {
  check_form(f);
  if (s.coefficients.size() != f.nvars()) throw Error("support and form have different variable counts");
  return dehomogenize(divided_power(to_chart_coordinates(f, s)), s.chart);
}

Polynomial omega_dl(const Polynomial& omega, unsigned d, const Polynomial& l) {
  if (omega.degree() > static_cast<int>(d)) throw Error("omega has degree above d");
  Support s = normalize_linear_form(l);
  Polynomial g = to_chart_coordinates(omega, s);
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    Monomial m = t.monomial.drop(s.chart);
    out.push_back({m, t.coeff * factorial(d - m.degree())});
  }
  return Polynomial(omega.nvars() - 1, std::move(out));
}

std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens, std::size_t nvars) {
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.size() < b.size();
  });
  GroebnerEngine engine(nvars, MonomialOrder::DegRevLex);
  std::vector<Polynomial> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!engine.add(g)) continue;
    engine.complete();
    kept.push_back(g.primitive());
  }
  return kept;
}

Ideal annihilator(const Polynomial& f, unsigned d) {
  const std::size_t n = f.nvars();
  if (f.degree() > static_cast<int>(d)) throw Error("annihilator degree bound below deg f");
  std::vector<Monomial> domain = monomials_up_to(n, d);
  std::vector<Polynomial> gens;
  if (f.is_zero()) return Ideal(n, {Polynomial(n, Rational(1))});
  std::vector<Monomial> codomain = monomials_up_to(n, static_cast<unsigned>(f.degree()));
  for (const auto& v : kernel(contraction_matrix(f, domain, codomain), domain.size())) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < domain.size(); ++j)
      if (v[j] != 0) ts.push_back({domain[j], v[j]});
    gens.emplace_back(n, std::move(ts));
  }
  for (const auto& m : monomials_of_degree(n, d + 1)) gens.emplace_back(m, Rational(1));
  return Ideal(n, minimal_generators(std::move(gens), n));
}

Ideal homogenize_ideal(const Ideal& ideal, std::size_t chart) {
  Ideal withb = ideal.with_basis(MonomialOrder::DegRevLex);
  std::vector<Polynomial> gens;
  for (const auto& g : withb.basis()) gens.push_back(homogenize(g, chart, static_cast<unsigned>(std::max(g.degree(), 0))));
  return Ideal(ideal.nvars() + 1, std::move(gens));
}

Ideal natural_apolar_scheme(const Polynomial& f, const Polynomial& l) {
  return natural_apolar_scheme(f, normalize_linear_form(l));
}

Ideal natural_apolar_scheme(const Polynomial& f, const Support& s) {
  Polynomial g = dual_generator(f, s);
  const unsigned d = static_cast<unsigned>(f.degree());
  Ideal local = homogenize_ideal(annihilator(g, d), s.chart);
  std::vector<Polynomial> gens;
  for (const auto& p : local.generators()) gens.push_back(operator_to_original(p, s));
  gens = minimal_generators(std::move(gens), f.nvars());
  for (const auto& q : gens)
    if (!derivative_action(q, f).is_zero()) throw Error("apolarity self-check failed for " + q.to_string());
  return Ideal(f.nvars(), std::move(gens));
}

std::size_t inverse_system_dimension(const Polynomial& f) {
  if (f.is_zero()) return 0;
  auto mons = monomials_up_to(f.nvars(), static_cast<unsigned>(f.degree()));
  return rank(contraction_matrix(f, mons, mons));
}

HilbertPrefix hilbert_function(const Ideal& ideal, unsigned t_max) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw Error("hilbert_function needs a homogeneous ideal");
  Ideal withb = ideal.with_basis(MonomialOrder::DegRevLex);
  std::vector<Monomial> leads;
  unsigned maxdeg = 0;
  for (const auto& g : withb.basis()) {
    leads.push_back(leading_monomial(g, MonomialOrder::DegRevLex));
    maxdeg = std::max(maxdeg, leads.back().degree());
  }
  HilbertPrefix h;
  for (unsigned t = 0; t <= t_max; ++t) {
    long count = 0;
    for (const auto& m : monomials_of_degree(ideal.nvars(), t)) {
      bool standard = true;
      for (const auto& l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      count += standard;
    }
    h.values.push_back(count);
    // Gotzmann persistence: generated in degrees <= t-1 and H(t) = H(t-1) = c <= t-1.
    if (t >= 1 && maxdeg <= t - 1 && count == h.values[t - 1] && count <= static_cast<long>(t - 1)) h.stable = true;
  }
  return h;
}

HilbertPrefix hilbert_prefix(const Ideal& ideal, unsigned cap) {
  Ideal withb = ideal.with_basis(MonomialOrder::DegRevLex);
  HilbertPrefix h;
  for (unsigned t = 4; t <= cap; t *= 2) {
    h = hilbert_function(withb, t);
    if (h.stable) break;
  }
  if (!h.stable) h = hilbert_function(withb, cap);
  if (h.stable) {
    // Trim to the first repeat of the final value.
    const long c = h.values.back();
    std::size_t k = h.values.size() - 1;
    while (k > 0 && h.values[k - 1] == c) --k;
    h.values.resize(std::min(h.values.size(), k + 2));
  }
  return h;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.with_basis().basis() == b.with_basis().basis();
}

}  // namespace locgad
