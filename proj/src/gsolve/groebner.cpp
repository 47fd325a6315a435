#include "locgad/groebner.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace locgad {

Monomial leading_monomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw Error("leading monomial of zero polynomial");
  if (order == MonomialOrder::DegRevLex) return p.leading_term().monomial;
  const Monomial* best = &p.terms().front().monomial;
  for (const auto& t : p.terms())
    if (compare(t.monomial, *best, order) > 0) best = &t.monomial;
  return *best;
}

Rational leading_coefficient(const Polynomial& p, MonomialOrder order) {
  return p.coefficient(leading_monomial(p, order));
}

namespace {

struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;  // descending in the engine order

IPoly to_ipoly(const Polynomial& p, MonomialOrder order) {
  Polynomial prim = p.primitive();
  IPoly out;
  out.reserve(prim.size());
  for (const auto& t : prim.terms()) out.push_back({t.monomial, t.coeff.get_num()});
  std::sort(out.begin(), out.end(), [order](const ITerm& a, const ITerm& b) { return compare(a.m, b.m, order) > 0; });
  return out;
}

Polynomial to_poly(const IPoly& p, std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.m, Rational(t.c)});
  return Polynomial(nvars, std::move(terms));
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// s * a[from_a..] - t * m * b[from_b..]
IPoly combine(const IPoly& a, std::size_t from_a, const Integer& s, const IPoly& b, std::size_t from_b,
              const Monomial& m, const Integer& t, MonomialOrder order) {
  IPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = from_a, j = from_b;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].m * m;
      have_bm = true;
    }
    int c;
    if (i >= a.size()) c = -1;
    else if (j >= b.size()) c = 1;
    else c = compare(a[i].m, bm, order);
    if (c > 0) {
      out.push_back({a[i].m, s * a[i].c});
      ++i;
    } else if (c < 0) {
      out.push_back({bm, -t * b[j].c});
      ++j;
      have_bm = false;
    } else {
      Integer v = s * a[i].c - t * b[j].c;
      if (v != 0) out.push_back({a[i].m, std::move(v)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- engine

struct GroebnerEngine::Impl {
  std::size_t nvars;
  MonomialOrder order;
  Deadline deadline;
  std::vector<IPoly> polys;
  std::vector<bool> active;  // member of the current minimal generating set
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  bool unit = false;

  const Monomial& lm(std::size_t k) const { return polys[k].front().m; }

  // Full reduction (head and tail) of p by the active polynomials.
  IPoly reduce(IPoly p) const {
    IPoly done;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const ITerm& head = p[pos];
      std::size_t found = polys.size();
      for (std::size_t k = 0; k < polys.size(); ++k) {
        if (active[k] && lm(k).divides(head.m)) {
          found = k;
          break;
        }
      }
      if (found == polys.size()) {
        done.push_back(head);
        ++pos;
        continue;
      }
      const IPoly& g = polys[found];
      Integer a = head.c, b = g.front().c, gg;
      mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer s = b / gg, t = a / gg;
      Monomial m = head.m / g.front().m;
      p = combine(p, pos + 1, s, g, 1, m, t, order);
      pos = 0;
      if (s != 1)
        for (auto& d : done) d.c *= s;
      if (done.empty() && p.size() > 8) make_primitive(p);
      deadline.check();
    }
    make_primitive(done);
    return done;
  }

  void add_reduced(IPoly h) {
    if (h.empty()) return;
    if (h.front().m.is_one()) {
      unit = true;
      polys.push_back(std::move(h));
      active.push_back(true);
      return;
    }
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(false);
    const Monomial hm = lm(hi);

    // Gebauer-Moeller update.
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) c.push_back({k, hm.lcm(lm(k))});
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (hm.coprime(lm(c[a].g))) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].keep) continue;
        if (c[b].lcm.divides(c[a].lcm) && !(c[b].lcm == c[a].lcm && b > a)) {
          c[a].keep = false;
          break;
        }
      }
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (const auto& cd : c)
      if (cd.keep && !hm.coprime(lm(cd.g))) fresh.push_back({cd.g, hi, cd.lcm});
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      if (hm.divides(p.lcm) && !(hm.lcm(lm(p.i)) == p.lcm) && !(hm.lcm(lm(p.j)) == p.lcm)) continue;
      kept.push_back(std::move(p));
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs = std::move(kept);
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && hm.divides(lm(k))) active[k] = false;
    active[hi] = true;
  }

  IPoly spoly(const Pair& p) const {
    const IPoly& f = polys[p.i];
    const IPoly& g = polys[p.j];
    Integer a = f.front().c, b = g.front().c, gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // (b/gg) * (lcm/lmf) f - (a/gg) * (lcm/lmg) g
    Monomial mf = p.lcm / f.front().m, mg = p.lcm / g.front().m;
    IPoly fs;
    fs.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].m * mf, f[k].c});
    return combine(fs, 0, b / gg, g, 1, mg, a / gg, order);
  }

  void complete() {
    while (!unit && !pairs.empty()) {
      deadline.check();
      // Normal strategy by degree of the lcm, then by the order.
      auto best = pairs.begin();
      for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
        if (it->lcm.degree() != best->lcm.degree()) {
          if (it->lcm.degree() < best->lcm.degree()) best = it;
        } else if (compare(it->lcm, best->lcm, order) < 0) {
          best = it;
        }
      }
      Pair p = *best;
      pairs.erase(best);
      IPoly s = spoly(p);
      make_primitive(s);
      IPoly h = reduce(std::move(s));
      add_reduced(std::move(h));
    }
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) idx.push_back(k);
    return idx;
  }
};

GroebnerEngine::GroebnerEngine(std::size_t nvars, MonomialOrder order, Deadline deadline)
    : impl_(std::make_unique<Impl>()) {
  impl_->nvars = nvars;
  impl_->order = order;
  impl_->deadline = deadline;
}
GroebnerEngine::~GroebnerEngine() = default;
GroebnerEngine::GroebnerEngine(GroebnerEngine&&) noexcept = default;
GroebnerEngine& GroebnerEngine::operator=(GroebnerEngine&&) noexcept = default;

bool GroebnerEngine::add(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.nvars() != impl_->nvars) throw Error("generator ring size differs from engine ring");
  if (impl_->unit) return false;
  IPoly h = impl_->reduce(to_ipoly(p, impl_->order));
  if (h.empty()) return false;
  impl_->add_reduced(std::move(h));
  return true;
}

void GroebnerEngine::complete() { impl_->complete(); }

bool GroebnerEngine::is_unit() const { return impl_->unit; }

std::vector<Monomial> GroebnerEngine::leading_monomials() const {
  if (impl_->unit) return {Monomial(impl_->nvars)};
  std::vector<Monomial> out;
  for (auto k : impl_->minimal_indices()) out.push_back(impl_->lm(k));
  return out;
}

std::vector<Polynomial> GroebnerEngine::reduced_basis() const {
  const std::size_t n = impl_->nvars;
  if (impl_->unit) return {Polynomial(n, Rational(1))};
  std::vector<Polynomial> basis;
  for (auto k : impl_->minimal_indices()) basis.push_back(to_poly(impl_->polys[k], n));
  // Tail reduction over the rationals; heads are irreducible by minimality.
  for (std::size_t a = 0; a < basis.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (b != a) others.push_back(basis[b]);
    Polynomial f = basis[a];
    Monomial lmf = leading_monomial(f, impl_->order);
    Rational lcf = f.coefficient(lmf);
    Polynomial head(lmf, lcf);
    basis[a] = head + locgad::normal_form(f - head, others, impl_->order);
  }
  for (auto& b : basis) b *= 1 / leading_coefficient(b, impl_->order);
  std::sort(basis.begin(), basis.end(), [this](const Polynomial& a, const Polynomial& b) {
    return compare(leading_monomial(a, impl_->order), leading_monomial(b, impl_->order), impl_->order) < 0;
  });
  return basis;
}

Polynomial GroebnerEngine::normal_form(const Polynomial& p) const {
  std::vector<Polynomial> basis;
  for (auto k : impl_->minimal_indices()) basis.push_back(to_poly(impl_->polys[k], impl_->nvars));
  return locgad::normal_form(p, basis, impl_->order);
}

std::size_t GroebnerEngine::nvars() const { return impl_->nvars; }
MonomialOrder GroebnerEngine::order() const { return impl_->order; }

// ---------------------------------------------------------------- free functions

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, MonomialOrder order) {
  if (p.is_zero()) return p;
  std::vector<std::pair<Monomial, Rational>> leads;
  for (const auto& g : basis) {
    Monomial m = leading_monomial(g, order);
    leads.emplace_back(m, g.coefficient(m));
  }
  // Work on a term list sorted by `order`.
  Polynomial rem = p;
  Polynomial out(p.nvars());
  while (!rem.is_zero()) {
    Monomial lm = leading_monomial(rem, order);
    Rational lc = rem.coefficient(lm);
    std::size_t k = 0;
    for (; k < basis.size(); ++k)
      if (leads[k].first.divides(lm)) break;
    if (k == basis.size()) {
      Polynomial t(lm, lc);
      out += t;
      rem -= t;
    } else {
      rem -= basis[k].multiply_term(lm / leads[k].first, lc / leads[k].second);
    }
  }
  return out;
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, std::size_t nvars,
                                       MonomialOrder order, const Deadline& deadline) {
  GroebnerEngine engine(nvars, order, deadline);
  // Adding in order of increasing leading monomial keeps early reductions cheap.
  std::vector<Polynomial> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  std::sort(gens.begin(), gens.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(leading_monomial(a, order), leading_monomial(b, order), order) < 0;
  });
  for (const auto& g : gens) {
    engine.add(g);
    if (engine.is_unit()) break;
  }
  engine.complete();
  return engine.reduced_basis();
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars) throw Error("ideal generator lives in a ring of the wrong size");
    generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::basis() const {
  if (!basis_) throw Error("ideal has no cached Groebner basis");
  return *basis_;
}

Ideal Ideal::with_basis(MonomialOrder order, const Deadline& deadline) const {
  if (basis_ && order_ == order) return *this;
  Ideal r = *this;
  r.basis_ = groebner_basis(generators_, nvars_, order, deadline);
  r.order_ = order;
  return r;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string Ideal::to_string(const Ring& ring) const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << generators_[i].to_string(ring);
  os << ">";
  return os.str();
}

Ideal groebner_basis(const Ideal& ideal, MonomialOrder order, const Deadline& deadline) {
  return ideal.with_basis(order, deadline);
}

bool is_unit_ideal(const Ideal& ideal, const Deadline& deadline) {
  Ideal g = ideal.with_basis(MonomialOrder::DegRevLex, deadline);
  return g.basis().size() == 1 && g.basis()[0].is_constant();
}

std::optional<int> dimension_from_leading(std::span<const Monomial> leading, std::size_t nvars) {
  for (const auto& m : leading)
    if (m.is_one()) return std::nullopt;
  auto indep = independent_variables(leading, nvars);
  return static_cast<int>(indep.size());
}

std::vector<std::size_t> independent_variables(std::span<const Monomial> leading, std::size_t nvars) {
  // Largest U such that no leading monomial is supported inside U.
  std::vector<std::size_t> best;
  const std::size_t total = std::size_t{1} << nvars;
  int best_size = -1;
  for (std::size_t mask = 0; mask < total; ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best_size) continue;
    bool ok = true;
    for (const auto& m : leading) {
      bool inside = true;
      for (std::size_t v = 0; v < nvars && inside; ++v)
        if (m[v] && !((mask >> v) & 1u)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best_size = size;
      best.clear();
      for (std::size_t v = 0; v < nvars; ++v)
        if ((mask >> v) & 1u) best.push_back(v);
    }
  }
  return best;
}

std::optional<int> ideal_dimension(const Ideal& ideal, const Deadline& deadline) {
  Ideal g = ideal.with_basis(MonomialOrder::DegRevLex, deadline);
  std::vector<Monomial> leads;
  for (const auto& p : g.basis()) leads.push_back(leading_monomial(p, g.order()));
  return dimension_from_leading(leads, ideal.nvars());
}

bool ideal_contains(const Ideal& ideal, const Polynomial& p) {
  Ideal g = ideal.has_basis() ? ideal : ideal.with_basis();
  return normal_form(p, g.basis(), g.order()).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  Monomial mf = leading_monomial(f, order), mg = leading_monomial(g, order);
  Monomial l = mf.lcm(mg);
  return f.multiply_term(l / mf, 1 / f.coefficient(mf)) - g.multiply_term(l / mg, 1 / g.coefficient(mg));
}

}  // namespace locgad
