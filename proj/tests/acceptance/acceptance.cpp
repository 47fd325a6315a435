// Acceptance checks. Run with a criterion number (1-10) or with no argument
// for all of them; prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "locgad/actions.hpp"
#include "locgad/apolar.hpp"
#include "locgad/driver.hpp"
#include "locgad/invsys.hpp"
#include "locgad/linalg.hpp"
#include "locgad/minors.hpp"
#include "locgad/solve.hpp"

using namespace locgad;

namespace {

// Collects failed checks with a short reason.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

const char* kF = "x^2*y + x*y*z + y^3";

Polynomial P(const char* s) { return parse_polynomial(s, Ring::standard(3)); }
Polynomial G(const char* s) { return parse_polynomial(s, Ring::parameters(2)); }

Rational small_rational(SeededRng& rng) {
  return Rational(rng.between(-9, 9)) / Rational(rng.between(1, 4));
}

Polynomial random_form(std::size_t nvars, unsigned d, SeededRng& rng, bool dense = true) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    long c = rng.between(-5, 5);
    if (dense && c == 0) c = 1;
    if (!dense && rng.below(3) != 0) continue;
    terms.push_back({m, Rational(c)});
  }
  Polynomial f(nvars, std::move(terms));
  if (f.is_zero()) f = Polynomial(Monomial::variable(nvars, 0, d), Rational(1));
  return f;
}

Polynomial random_poly(std::size_t nvars, unsigned maxdeg, std::size_t nterms, SeededRng& rng) {
  auto mons = monomials_up_to(nvars, maxdeg);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < nterms; ++k) terms.push_back({mons[rng.below(mons.size())], small_rational(rng)});
  return Polynomial(nvars, std::move(terms));
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string str(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// 1
Check pipeline() {
  Check c;
  Ring xz = Ring::standard(3).without(1);
  Polynomial f = dual_generator(P(kF), P("y"));
  c.expect(f == parse_polynomial("2x^2 + x*z + 6", xz), "f_y = " + f.to_string(xz));
  Ideal ann = annihilator(f, 3);
  c.expect(same_ideal(ann, Ideal(2, {parse_polynomial("(x - z)^2", xz), parse_polynomial("z^2", xz)})),
           "annihilator " + ann.to_string(xz));
  HilbertPrefix h = hilbert_prefix(natural_apolar_scheme(P(kF), P("y")));
  c.expect(h.values == std::vector<long>{1, 3, 4, 4} && h.stable, "Hilbert prefix " + h.to_string());
  c.expect(inverse_system_dimension(f) == 4, "inverse-system dimension");
  return c;
}

// 2
Check equivalent_generators() {
  Check c;
  SeededRng rng(2022);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(3);
    const unsigned d = 1 + static_cast<unsigned>(rng.below(5));
    const unsigned k = static_cast<unsigned>(rng.below(d + 1));
    Polynomial omega = random_form(n + 1, k, rng, rng.below(2) == 0);
    Polynomial f = omega * Polynomial(Monomial::variable(n + 1, 0, d - k), Rational(1));
    Polynomial x0 = Polynomial::variable(n + 1, 0);
    Polynomial lhs = divided_power(omega_dl(omega, d, x0));
    Polynomial rhs = dual_generator(f, x0);
    c.expect(lhs == rhs, "case " + std::to_string(t) + ": omega = " + omega.to_string());
  }
  Ring xz = Ring::standard(3).without(1);
  c.expect(omega_dl(P("x^2 + x*z + y^2"), 3, P("y")) == parse_polynomial("x^2 + x*z + 6", xz), "omega^{3,y}");
  return c;
}

// 3
Check symbolic_matrix() {
  Check c;
  ParamPolynomial f = symbolic_dual_generator(P(kF), 0);
  Ring yz = Ring{{"y", "z"}};
  ParamPolynomial expected = ParamPolynomial::from_combined(
      parse_polynomial("(6a^2 + 6)*y^3 + (4a*b - 2a)*y^2*z + (2b^2 - 2b)*y*z^2 - 4a*y^2 + (1 - 2b)*y*z + 2y",
                       Ring{{"y", "z", "a", "b"}}),
      2, 2);
  c.expect(f == expected, "f_gamma = " + f.to_string(yz, Ring::parameters(2)));
  InverseSystemMatrix m = inverse_system_matrix(P(kF), 0);
  c.expect(m.size() == 10, "matrix size");
  const char* display[10][10] = {
      {"0", "2", "0", "-4a", "-2b+1", "0", "6a^2+6", "4ab-2a", "2b^2-2b", "0"},
      {"2", "-4a", "-2b+1", "6a^2+6", "4ab-2a", "2b^2-2b", "0", "0", "0", "0"},
      {"0", "-2b+1", "0", "4ab-2a", "2b^2-2b", "0", "0", "0", "0", "0"},
      {"-4a", "6a^2+6", "4ab-2a", "0", "0", "0", "0", "0", "0", "0"},
      {"-2b+1", "4ab-2a", "2b^2-2b", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "2b^2-2b", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"6a^2+6", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"4ab-2a", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"2b^2-2b", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}};
  if (m.size() == 10)
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        c.expect(m.entry(i, j) == G(display[i][j]), "entry " + std::to_string(i) + "," + std::to_string(j));
  return c;
}

// 4
Check determinants() {
  Check c;
  InverseSystemMatrix m = inverse_system_matrix(P(kF), 0);
  auto pos = [&](const char* s) {
    if (std::string(s) == "1") return m.position(Monomial(2));
    return m.position(parse_polynomial(s, Ring{{"y", "z"}}).leading_term().monomial);
  };
  MinorSelection first, second;
  for (auto r : {"1", "y", "z", "y*z", "z^2"}) first.rows.push_back(pos(r));
  for (auto col : {"y", "z", "y*z", "z^2", "y*z^2"}) first.cols.push_back(pos(col));
  for (auto r : {"1", "y", "z", "y^2", "y*z"}) second.rows.push_back(pos(r));
  for (auto col : {"y", "z", "y^2", "y*z", "y^2*z"}) second.cols.push_back(pos(col));
  Polynomial d1 = symbolic_minor_determinant(m, first);
  c.expect(d1 == G("32 b^5 (b - 1)^5"), "first minor " + d1.to_string(Ring::parameters(2)));
  Polynomial d2 = symbolic_minor_determinant(m, second);
  for (int b : {0, 1}) {
    Polynomial sub = d2.substitute(1, b);
    const long s = (2 * b - 1) * (2 * b - 1) * (2 * b - 1) * (2 * b - 1) * (2 * b - 1);
    c.expect(sub == parse_polynomial("32 a^5", Ring{{"a"}}) * Rational(s),
             "second minor at b=" + std::to_string(b) + ": " + sub.to_string(Ring{{"a"}}));
  }
  return c;
}

// 5
Check golden_run() {
  Check c;
  Polynomial f = P(kF);
  DriverOptions o;
  o.charts = ChartMode::Single;
  o.chart = 0;
  SupportSearch s = minimal_supports(f, o);
  c.expect(s.rank && *s.rank == 4, "chart x rank");
  c.expect(s.exhaustive, "chart x exhaustive");
  std::vector<std::vector<Rational>> points;
  for (const auto& r : s.supports) points.push_back(r.point);
  c.expect(points == std::vector<std::vector<Rational>>{{0, 0}, {0, 1}}, "chart x points");
  if (s.supports.size() == 2) {
    c.expect(same_ideal(s.supports[0].ideal, Ideal(3, {P("-6x*z + y^2"), P("z^2")})), "ideal at x");
    c.expect(same_ideal(s.supports[1].ideal, Ideal(3, {P("-6x*(x - z) + y^2"), P("(x - z)^2")})), "ideal at x + z");
    for (const auto& r : s.supports) c.expect(r.rank == 4, "rank 4 at each point");
  }
  SupportSearch all = minimal_supports(f, DriverOptions{});
  c.expect(all.rank && *all.rank == 4 && all.support_count() == 3 && all.exhaustive, "all charts: 3 supports");
  // No support of rank <= 3 in any chart: the 4x4 minors generate the unit ideal.
  for (std::size_t ch = 0; ch < 3; ++ch)
    c.expect(probe_rank(f, ch, 3, DriverOptions{}).kind == LevelResult::Kind::Empty,
             "unit ideal at size 4 in chart " + std::to_string(ch));
  return c;
}

// 6
Check table() {
  Check c;
  const std::vector<std::tuple<const char*, std::size_t, long>> rows{
      {"(x^2 + x*z + y^2)*y", 3, 4},
      {"x^2*y*z", 1, 4},
      {"x^2*(y + z) + y^2*(x + z) + z^2*(x + y)", 9, 5},
      {"x^2*y^2*z", 2, 6},
      {"x^3 + y^3 + z^3 + x*u*z + x*u^2", 9, 7},
      {"x*(x^3 + x^2*y + x*z^2 + y^3 + z^3 + u^3)", 1, 8}};
  for (const auto& [form, count, rank] : rows)
    for (Strategy st : {Strategy::A, Strategy::B, Strategy::C}) {
      DriverOptions o;
      o.strategy = st;
      o.seed = 1;
      auto t0 = std::chrono::steady_clock::now();
      SupportSearch s = minimal_supports(parse_form(form), o);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::printf("  %-44s %s  supports %zu  rank %ld  %.2fs\n", form, to_string(st).c_str(), s.support_count(),
                  s.rank ? *s.rank : -1L, secs);
      c.expect(s.rank && *s.rank == rank && s.support_count() == count && s.exhaustive,
               std::string(form) + " strategy " + to_string(st));
    }
  return c;
}

// 7
Check stratification() {
  Check c;
  {
    StratificationReport rep = rank_stratification(P(kF), 0);
    c.expect(rep.minimal_rank == 4 && rep.generic_rank == 6, "x^2y+xyz+y^3 ranks");
    c.expect(rep.strata.size() == 2 && rep.strata[0].supports.size() == 3 && rep.strata[1].empty(),
             "x^2y+xyz+y^3: rank 4 three supports, rank 5 none");
  }
  {
    Polynomial f = P("x*y + x*z + y*z");
    StratificationReport rep = rank_stratification(f, 0);
    Polynomial g = G("a^2 - 2a*b - 2a + b^2 - 2b + 1");
    c.expect(rep.minimal_rank == 3 && rep.strata.size() == 1, "xy+xz+yz minimal rank 3");
    const LocusReport* chart_x = nullptr;
    if (!rep.strata.empty())
      for (const auto& l : rep.strata[0].loci)
        if (l.chart == 0) chart_x = &l;
    c.expect(chart_x && chart_x->dimension == 1, "rank-3 locus of dimension 1 in chart x");
    if (chart_x) {
      // rad(I) = <g>: I lies in the prime <g> and a power of g lies in I.
      Ideal locus(2, chart_x->ideal);
      bool inside = true;
      for (const auto& p : chart_x->ideal) inside &= p.try_divide(g).has_value();
      bool power = false;
      for (unsigned e = 1; e <= 6 && !power; ++e) power = ideal_contains(locus.with_basis(), g.pow(e));
      c.expect(inside && power, "radical of the locus is <g>");
    }
    InverseSystemMatrix m = inverse_system_matrix(f, 0);
    for (long a : {1, 2, 3})
      for (long sgn : {1, -1}) {
        std::vector<Rational> pt{Rational(a * a), Rational((1 + sgn * a) * (1 + sgn * a))};
        c.expect(g.evaluate(pt) == 0 && specialized_rank(m, pt) == 3,
                 "sample a=" + std::to_string(a) + " sign " + std::to_string(sgn));
      }
  }
  {
    Polynomial f = P("x^2*(x + y)*(x + z)");
    StratificationReport rep = rank_stratification(f, 0);
    Ring ring = Ring::standard(3);
    auto forms = [&](const Stratum& st) {
      std::set<std::string> out;
      for (const auto& s : st.supports) out.insert(linear_form(s.support).to_string(ring));
      return out;
    };
    c.expect(rep.minimal_rank == 4 && rep.generic_rank == 9 && rep.strata.size() == 5, "x^2(x+y)(x+z) rank range");
    if (rep.strata.size() == 5) {
      c.expect(forms(rep.strata[0]) == std::set<std::string>{"x"} && rep.strata[0].loci.empty(), "rank 4 at x");
      c.expect(rep.strata[1].empty(), "rank 5 none");
      c.expect(forms(rep.strata[2]) == std::set<std::string>{"x + y", "x + z"} && rep.strata[2].loci.empty(),
               "rank 6 at x + y and x + z");
      c.expect(rep.strata[3].empty(), "rank 7 none");
      const Stratum& top = rep.strata[4];
      std::set<std::string> families;
      bool hilbert = true;
      for (const auto& l : top.loci) {
        if (l.chart != 0) continue;
        c.expect(l.dimension == 1, "rank 8 loci are 1-dimensional");
        for (const auto& comp : l.components) {
          families.insert(Ideal(2, comp.ideal).to_string(Ring::parameters(2)));
          hilbert &= comp.sample && comp.sample->rank == 8 &&
                     comp.sample->hilbert.values == std::vector<long>{1, 3, 5, 7, 8, 8};
        }
      }
      c.expect(families.size() == 2, "rank 8: two families in chart x");
      c.expect(hilbert, "rank 8 families have Hilbert prefix (1,3,5,7,8,8)");
    }
  }
  return c;
}

// 8
Check generic_rank() {
  Check c;
  SeededRng rng(88);
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned d = 2; d <= 5; ++d) {
      const long expected = generic_local_rank(n, d);
      for (int t = 0; t < 20; ++t) {
        Polynomial f = random_form(n + 1, d, rng);
        std::vector<Term> l{{Monomial::variable(n + 1, 0), Rational(1)}};
        for (std::size_t i = 1; i <= n; ++i) l.push_back({Monomial::variable(n + 1, i), small_rational(rng)});
        const long dim = static_cast<long>(inverse_system_dimension(dual_generator(f, Polynomial(n + 1, l))));
        c.expect(dim == expected, "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ") got " +
                                      std::to_string(dim) + " expected " + std::to_string(expected));
      }
    }
  c.expect(generic_local_rank(2, 2) == 4 && generic_local_rank(2, 3) == 6 && generic_local_rank(2, 4) == 9,
           "values 4, 6, 9");
  return c;
}

// 9
Check invariants() {
  Check c;
  SeededRng rng(99);
  std::size_t failed_before = 0;
  auto suite = [&](const char* name, const std::function<void(int)>& body) {
    failed_before = c.failures.size();
    for (int t = 0; t < 500; ++t) body(t);
    std::printf("  %-40s %s\n", name, c.failures.size() == failed_before ? "ok" : "failed");
  };

  suite("matrix structure", [&](int t) {
    const std::size_t nv = 2 + rng.below(2);
    const unsigned d = 1 + static_cast<unsigned>(rng.below(4));
    Polynomial f = random_form(nv, d, rng, false);
    const std::size_t chart = rng.below(nv);
    InverseSystemMatrix m = inverse_system_matrix(f, chart);
    ParamPolynomial fg = symbolic_dual_generator(f, chart);
    bool ok = fg.degree() <= static_cast<int>(d);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        const Monomial s = m.index()[i] * m.index()[j];
        ok &= m.entry(i, j) == m.entry(j, i);
        ok &= m.entry(i, j) == (s.degree() > d ? Polynomial(m.nparams()) : fg.coefficient(s));
      }
    c.expect(ok, "matrix case " + std::to_string(t));
  });

  suite("dp commutation", [&](int t) {
    const std::size_t nv = 1 + rng.below(4);
    std::vector<unsigned> a(nv), b(nv);
    unsigned da = static_cast<unsigned>(rng.below(6)), db = static_cast<unsigned>(rng.below(6));
    for (unsigned k = 0; k < da; ++k) ++a[rng.below(nv)];
    for (unsigned k = 0; k < db; ++k) ++b[rng.below(nv)];
    Polynomial xa(Monomial(std::span<const unsigned>(a)), Rational(1));
    Polynomial yb(Monomial(std::span<const unsigned>(b)), Rational(1));
    c.expect(divided_power(derivative_action(yb, xa)) == contraction_action(yb, divided_power(xa)),
             "dp case " + std::to_string(t));
  });

  suite("degree bound vs inverse system", [&](int t) {
    Polynomial f = random_poly(1 + rng.below(3), 1 + static_cast<unsigned>(rng.below(5)), 1 + rng.below(5), rng);
    c.expect(rank_lower_bound(f) <= static_cast<long>(inverse_system_dimension(f)), "bound case " + std::to_string(t));
  });

  suite("specialization vs determinant", [&](int t) {
    Polynomial f = random_form(3, 2 + static_cast<unsigned>(rng.below(2)), rng, false);
    InverseSystemMatrix m = inverse_system_matrix(f, rng.below(3));
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(4, m.size()));
    std::vector<std::size_t> all(m.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto pick = [&] {
      std::vector<std::size_t> pool = all, out;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = rng.below(pool.size());
        out.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<long>(j));
      }
      return out;
    };
    MinorSelection sel{pick(), pick()};
    Polynomial det = symbolic_minor_determinant(m, sel);
    std::vector<Rational> pt{small_rational(rng), small_rational(rng)};
    RationalMatrix num = m.specialize(pt);
    PolyMatrix sub(k, std::vector<Polynomial>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = Polynomial(0, num[sel.rows[i]][sel.cols[j]]);
    Polynomial numeric = determinant(sub, 0);
    c.expect(det.evaluate(pt) == (numeric.is_zero() ? Rational(0) : numeric.constant_term()),
             "determinant case " + std::to_string(t));
  });

  suite("S-polynomials reduce to zero", [&](int t) {
    const std::size_t nv = 2 + rng.below(2);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0, k = 2 + rng.below(2); i < k; ++i)
      gens.push_back(random_poly(nv, 1 + static_cast<unsigned>(rng.below(2)), 1 + rng.below(3), rng));
    auto basis = groebner_basis(gens, nv);
    bool ok = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        ok &= normal_form(s_polynomial(basis[i], basis[j], MonomialOrder::DegRevLex), basis, MonomialOrder::DegRevLex)
                  .is_zero();
    for (const auto& g : gens) ok &= normal_form(g, basis, MonomialOrder::DegRevLex).is_zero();
    c.expect(ok, "Groebner case " + std::to_string(t));
  });

  suite("solution points annihilate generators", [&](int t) {
    // Triangular system through known points, mixed by a unimodular change of generators.
    const std::size_t nv = 2 + rng.below(2);
    const std::size_t npts = 1 + rng.below(3);
    std::set<Rational> firsts;
    while (firsts.size() < npts) firsts.insert(small_rational(rng));
    Polynomial a = Polynomial::variable(nv, 0);
    Polynomial elim(nv, Rational(1));
    for (const auto& r : firsts) elim = elim * (a - Polynomial(nv, r));
    std::vector<Polynomial> gens{elim};
    for (std::size_t v = 1; v < nv; ++v) {
      Polynomial interp(nv);
      for (std::size_t e = 0; e < npts; ++e) interp += Polynomial(Monomial::variable(nv, 0, static_cast<unsigned>(e)), small_rational(rng));
      gens.push_back(Polynomial::variable(nv, v) - interp);
    }
    gens[0] = gens[0] + random_poly(nv, 1, 2, rng) * gens[1];
    SolutionSet sols = solve_rational_points(Ideal(nv, gens));
    bool ok = sols.points.size() == npts && sols.exhaustive;
    for (const auto& p : sols.points)
      for (const auto& g : gens) ok &= g.evaluate(p) == 0;
    c.expect(ok, "solve case " + std::to_string(t));
  });
  return c;
}

// 10
Check catalecticants() {
  Check c;
  Polynomial f = P(kF);
  c.expect(embed_check(f), "embed_check on x^2y+xyz+y^3");
  RationalMatrix cat2 = {{0, 2, 0, 0, 1, 0}, {2, 0, 1, 6, 0, 0}, {0, 1, 0, 0, 0, 0}};
  RationalMatrix cat3 = {{0, 2, 0, 0, 1, 0, 6, 0, 0, 0}};
  c.expect(catalecticant(f, 2).entries == cat2, "Cat^2 rows");
  c.expect(catalecticant(f, 3).entries == cat3, "Cat^3 rows");
  SeededRng rng(10);
  std::vector<Polynomial> forms{f};
  for (int t = 0; t < 50; ++t) forms.push_back(random_form(3, 3, rng, rng.below(2) == 0));
  for (std::size_t t = 0; t < forms.size(); ++t) {
    const Polynomial& g = forms[t];
    if (t > 0) c.expect(embed_check(g), "embed_check on random cubic " + std::to_string(t));
    for (unsigned i = 0; i <= 3; ++i)
      c.expect(catalecticant(g, i).entries == transpose(catalecticant(g, 3 - i).entries),
               "transpose symmetry form " + std::to_string(t) + " i=" + std::to_string(i));
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Check()>>> criteria{
      {1, {"dual generator pipeline", pipeline}},
      {2, {"equivalent dual generators (200 cases)", equivalent_generators}},
      {3, {"symbolic dual generator and matrix", symbolic_matrix}},
      {4, {"minor determinants", determinants}},
      {5, {"support search golden run", golden_run}},
      {6, {"support counts and ranks, strategies A/B/C", table}},
      {7, {"rank stratification", stratification}},
      {8, {"generic local rank", generic_rank}},
      {9, {"invariant suites (500 cases each)", invariants}},
      {10, {"catalecticant embedding", catalecticants}}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (const auto& [k, v] : criteria) selected.push_back(k);
  int failed = 0;
  for (int k : selected) {
    auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::printf("criterion %d: unknown\n", k);
      ++failed;
      continue;
    }
    const auto& [name, run] = it->second;
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s  (%zu checks, %.1fs)%s%s\n", k, c.ok() ? "PASS" : "FAIL", name, c.count, secs,
                c.ok() ? "" : "  ", join(c.failures).c_str());
    std::fflush(stdout);
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
