#include "locgad/driver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locgad/actions.hpp"
#include "locgad/polyalg.hpp"

namespace locgad {

std::string to_string(ChartMode m) {
  switch (m) {
    case ChartMode::Single: return "single";
    case ChartMode::All: return "all";
    case ChartMode::Generic: return "generic";
  }
  return "?";
}

namespace {

constexpr unsigned long kPrime = 2305843009213693951UL;  // 2^61 - 1

unsigned long mulmod(unsigned long a, unsigned long b) {
  return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % kPrime);
}

unsigned long powmod(unsigned long a, unsigned long e) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

unsigned long integer_mod(const Integer& z) {
  Integer m = z % Integer(std::to_string(kPrime));
  if (m < 0) m += Integer(std::to_string(kPrime));
  return std::stoul(m.get_str());
}

unsigned long rational_mod(const Rational& q) {
  unsigned long den = integer_mod(q.get_den());
  if (den == 0) return 0;  // probability ~2^-61; only weakens the zero filter
  return mulmod(integer_mod(q.get_num()), powmod(den, kPrime - 2));
}

unsigned long evaluate_mod(const Polynomial& p, const std::vector<unsigned long>& z) {
  unsigned long acc = 0;
  for (const auto& t : p.terms()) {
    unsigned long v = rational_mod(t.coeff);
    for (std::size_t i = 0; i < z.size(); ++i)
      if (t.monomial[i]) v = mulmod(v, powmod(z[i], t.monomial[i]));
    acc = (acc + v) % kPrime;
  }
  return acc;
}

std::size_t default_budget(std::size_t n) { return 50 * binomial(static_cast<unsigned>(n) + 2, 2).get_ui(); }

// f_gamma with every coefficient replaced by its normal form modulo the
// current ideal; zero coefficients are dropped.
ParamPolynomial reduce_dual_generator(const ParamPolynomial& f, const GroebnerEngine& eng) {
  std::vector<ParamPolynomial::Term> terms;
  for (const auto& t : f.terms()) {
    Polynomial c = eng.normal_form(t.coeff);
    if (!c.is_zero()) terms.push_back({t.monomial, std::move(c)});
  }
  return ParamPolynomial(f.nxvars(), f.nparams(), std::move(terms));
}

// Drops monomial content; the full squarefree part only for small inputs,
// since the multivariate gcd dominates on large minors.
Polynomial simplify_generator(const Polynomial& p) {
  Monomial common = p.terms().front().monomial;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < common.nvars(); ++i) common.set(i, std::min(common[i], t.monomial[i]));
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({t.monomial / common, t.coeff});
  Polynomial q(p.nvars(), std::move(terms));
  for (std::size_t i = 0; i < common.nvars(); ++i)
    if (common[i]) q = q * Polynomial::variable(p.nvars(), i);
  return q.size() <= 40 ? squarefree_part(q) : q.primitive();
}

struct SelectionKey {
  std::vector<std::size_t> rows, cols;
  auto operator<=>(const SelectionKey&) const = default;
};

SelectionKey key_of(const MinorSelection& s) {
  SelectionKey k{s.rows, s.cols};
  std::sort(k.rows.begin(), k.rows.end());
  std::sort(k.cols.begin(), k.cols.end());
  // The matrix is symmetric: a minor and its transpose agree.
  if (k.cols < k.rows) std::swap(k.rows, k.cols);
  return k;
}

class LevelProbe {
 public:
  LevelProbe(const Polynomial& f, std::size_t chart, long r, const DriverOptions& opts, const Deadline& deadline)
      : f_(f),
        chart_(chart),
        r_(r),
        opts_(opts),
        deadline_(deadline),
        fgamma_(symbolic_dual_generator(f, chart)),
        full_(fgamma_, static_cast<unsigned>(f.degree())),
        n_(fgamma_.nparams()),
        eng_(n_, MonomialOrder::DegRevLex, deadline),
        rng_(SeededRng(opts.seed).split(chart * 1000003ULL + static_cast<std::uint64_t>(r))) {
    budget_ = opts.budget ? opts.budget : default_budget(n_);
    for (std::size_t i = 0; i < n_; ++i) zmod_.push_back(rng_.next() % kPrime);
  }

  LevelResult run() {
    LevelResult res;
    if (n_ == 0) {
      if (static_cast<long>(specialized_rank(full_, {})) <= r_) {
        res.kind = LevelResult::Kind::Finite;
        res.points.push_back({});
        res.ranks.push_back(static_cast<long>(specialized_rank(full_, {})));
      }
      return res;
    }
    // rank <= r forces every coefficient of degree >= r to vanish.
    for (const auto& g : degree_tail_equations(fgamma_, static_cast<unsigned>(std::max<long>(r_, 0))))
      eng_.add(g);
    eng_.complete();

    int passes = 0, stalls = 0;
    while (true) {
      deadline_.check();
      if (eng_.is_unit()) return finish_empty();
      refresh();
      const int dim = *dimension_from_leading(eng_.leading_monomials(), n_);
      if (live_.size() <= static_cast<std::size_t>(r_)) {
        // Every point left has at most live_.size() nonzero rows.
        return dim == 0 ? finish_finite() : finish_locus(dim, false);
      }
      const bool budget_left = stats_.determinants < budget_;
      if (dim == 0) {
        if (auto done = resolve_finite()) return *done;
        SolutionSet sols = solve_rational_points(Ideal(n_, eng_.reduced_basis()), deadline_);
        bool cut = false;
        for (const auto& p : sols.points)
          if (static_cast<long>(specialized_rank(full_, p)) > r_) cut |= add_witness_minor(p);
        if (cut) {
          eng_.complete();
          continue;
        }
        if (sols.residual.empty() || !budget_left) return build_finite(sols);
      } else {
        const int bad = witness_round();
        if (bad > 0) {
          passes = 0;
          continue;
        }
        if (bad == 0 && ++passes >= 2) return finish_locus(dim, false);
        if (!budget_left) return finish_locus(dim, true);
      }
      const std::size_t added = draw_batch();
      ++stats_.batches;
      eng_.complete();
      if (added == 0 && ++stalls >= 3) return dim == 0 ? finish_finite() : finish_locus(dim, !budget_left);
    }
  }

 private:
  const Polynomial& f_;
  std::size_t chart_;
  long r_;
  const DriverOptions& opts_;
  const Deadline& deadline_;
  ParamPolynomial fgamma_;
  InverseSystemMatrix full_;
  std::size_t n_;
  GroebnerEngine eng_;
  SeededRng rng_;
  std::size_t budget_ = 0;
  std::vector<unsigned long> zmod_;
  LevelStats stats_;
  std::set<SelectionKey> seen_;

  ParamPolynomial reduced_;
  InverseSystemMatrix m_;
  std::vector<std::size_t> live_;

  void refresh() {
    reduced_ = reduce_dual_generator(fgamma_, eng_);
    m_ = InverseSystemMatrix(reduced_, static_cast<unsigned>(f_.degree()));
    live_.clear();
    const int top = reduced_.degree();
    for (std::size_t i = 0; i < m_.size(); ++i)
      if (static_cast<int>(m_.index()[i].degree()) <= top) live_.push_back(i);
  }

  MinorSelection draw(std::size_t size) {
    switch (opts_.strategy) {
      case Strategy::A: return select_minor_A(m_, size, rng_, &live_);
      case Strategy::B:
        try {
          return select_minor_B(m_, size, rng_);
        } catch (const TimeoutError&) {
          throw;
        } catch (const Error&) {
          return select_minor_A(m_, size, rng_, &live_);
        }
      case Strategy::C:
        try {
          return select_minor_C(m_, size, rng_, reduced_);
        } catch (const TimeoutError&) {
          throw;
        } catch (const Error&) {
          return select_minor_A(m_, size, rng_, &live_);
        }
    }
    throw Error("unknown strategy");
  }

  bool vanishes_mod_p(const MinorSelection& sel) const {
    std::vector<std::vector<unsigned long>> a(sel.rows.size(), std::vector<unsigned long>(sel.cols.size()));
    for (std::size_t i = 0; i < sel.rows.size(); ++i)
      for (std::size_t j = 0; j < sel.cols.size(); ++j) a[i][j] = evaluate_mod(m_.entry(sel.rows[i], sel.cols[j]), zmod_);
    return determinant_mod(std::move(a), kPrime) == 0;
  }

  bool add_minor(const MinorSelection& sel) {
    Polynomial det = determinant(m_.submatrix(sel.rows, sel.cols), n_, deadline_);
    ++stats_.determinants;
    if (det.is_zero()) return false;
    return eng_.add(simplify_generator(det));
  }

  std::size_t draw_batch() {
    const std::size_t size = static_cast<std::size_t>(r_) + 1;
    const std::size_t target = std::max<std::size_t>(opts_.minor_batch, 1);
    std::size_t added = 0;
    int misses = 0;
    while (added < target && stats_.determinants < budget_ && misses < kResampleLimit) {
      deadline_.check();
      MinorSelection sel = draw(size);
      ++stats_.draws;
      if (!seen_.insert(key_of(sel)).second || vanishes_mod_p(sel)) {
        ++misses;
        continue;
      }
      if (add_minor(sel))
        ++added;
      else
        ++misses;
    }
    return added;
  }

  // A minor that does not vanish at p, from the pivots of the numeric matrix.
  bool add_witness_minor(const std::vector<Rational>& p) {
    auto piv = pivot_profile(full_.specialize(p));
    MinorSelection sel;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(r_); ++k) {
      sel.rows.push_back(piv[k].first);
      sel.cols.push_back(piv[k].second);
    }
    ++stats_.witness_minors;
    seen_.insert(key_of(sel));
    return add_minor(sel);
  }

  // Samples points of V(I) and cuts away those of rank > r. Returns the
  // number of points removed, or -1 when no point could be sampled.
  int witness_round() {
    auto leads = eng_.leading_monomials();
    auto free = independent_variables(leads, n_);
    Ideal ideal(n_, eng_.reduced_basis());
    int bad = 0, good = 0;
    for (int s = 0; s < 4; ++s) {
      std::vector<Rational> values;
      for (std::size_t i = 0; i < free.size(); ++i) values.emplace_back(rng_.between(-4, 4));
      SolutionSet sols;
      try {
        sols = solve_with_fixed(ideal, free, values, deadline_);
      } catch (const TimeoutError&) {
        throw;
      } catch (const Error&) {
        continue;
      }
      for (const auto& p : sols.points) {
        if (static_cast<long>(specialized_rank(full_, p)) <= r_) {
          ++good;
          continue;
        }
        if (add_witness_minor(p)) ++bad;
      }
      if (!bad && (sols.points.empty() || !sols.residual.empty())) bad += algebraic_slice(free, values, good);
      if (bad) break;
    }
    if (bad) {
      eng_.complete();
      return bad;
    }
    return good ? 0 : -1;
  }

  // Slice points without rational coordinates: exact rank on the slice where
  // the free variables take `values`, cutting with the pivot minor of every
  // part whose rank exceeds r.
  int algebraic_slice(const std::vector<std::size_t>& free, const std::vector<Rational>& values, int& good) {
    std::vector<Polynomial> gens = eng_.reduced_basis();
    for (std::size_t i = 0; i < free.size(); ++i)
      gens.push_back(Polynomial::variable(n_, free[i]) - Polynomial(n_, values[i]));
    std::optional<ShapeForm> shape;
    try {
      shape = shape_form(Ideal(n_, std::move(gens)), rng_.next(), deadline_);
    } catch (const TimeoutError&) {
      throw;
    } catch (const Error&) {
      return 0;
    }
    if (!shape) return 0;
    int bad = 0;
    for (const auto& part : split_by_rank(shape->points, m_.submatrix(live_, live_), deadline_)) {
      if (static_cast<long>(part.rank) <= r_) {
        ++good;
        continue;
      }
      MinorSelection sel;
      for (std::size_t k = 0; k <= static_cast<std::size_t>(r_); ++k) {
        sel.rows.push_back(live_[part.pivots[k].first]);
        sel.cols.push_back(live_[part.pivots[k].second]);
      }
      ++stats_.witness_minors;
      seen_.insert(key_of(sel));
      if (add_minor(sel)) ++bad;
    }
    return bad;
  }

  // Exact rank on every algebraic point of V(I) through a shape-lemma
  // parametrization; nullopt when no separating form was found.
  std::optional<LevelResult> resolve_finite() {
    auto shape = shape_form(Ideal(n_, eng_.reduced_basis()), rng_.next(), deadline_);
    if (!shape) return std::nullopt;
    LevelResult res;
    res.kind = LevelResult::Kind::Finite;
    PolyMatrix live = m_.submatrix(live_, live_);
    for (auto& part : split_by_rank(shape->points, live, deadline_)) {
      const auto& pts = part.points;
      const std::size_t rk = part.rank;
      if (static_cast<long>(rk) > r_) continue;
      RationalRootSplit split = rational_roots(upoly::to_polynomial(pts.h, 1, 0), 0);
      for (const auto& root : split.roots) {
        std::vector<Rational> p;
        for (const auto& c : pts.coords) p.push_back(upoly::evaluate(c, root));
        const long exact = static_cast<long>(specialized_rank(full_, p));
        if (exact != static_cast<long>(rk)) throw Error("internal error: rank mismatch on a rational point");
        res.points.push_back(std::move(p));
        res.ranks.push_back(exact);
      }
      UPoly rest = upoly::from_polynomial(split.cofactor);
      if (upoly::degree(rest) >= 1) {
        AlgebraicSupports alg;
        alg.chart = chart_;
        alg.rank = static_cast<long>(rk);
        alg.form = shape->form;
        alg.points.h = rest;
        for (const auto& c : pts.coords) alg.points.coords.push_back(upoly::rem(c, rest));
        res.algebraic.push_back(std::move(alg));
      }
    }
    std::vector<std::size_t> order(res.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return res.points[a] < res.points[b]; });
    LevelResult sorted = res;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.points[i] = res.points[order[i]];
      sorted.ranks[i] = res.ranks[order[i]];
    }
    if (sorted.points.empty() && sorted.algebraic.empty()) sorted.kind = LevelResult::Kind::Empty;
    sorted.stats = stats_;
    return sorted;
  }

  LevelResult build_finite(const SolutionSet& sols) {
    LevelResult res;
    res.kind = LevelResult::Kind::Finite;
    for (const auto& p : sols.points) {
      long rk = static_cast<long>(specialized_rank(full_, p));
      if (rk > r_) continue;
      res.points.push_back(p);
      res.ranks.push_back(rk);
    }
    res.residual = sols.residual;
    res.exhaustive = sols.exhaustive;
    if (res.points.empty() && res.residual.empty()) res.kind = LevelResult::Kind::Empty;
    res.stats = stats_;
    return res;
  }

  LevelResult finish_empty() {
    LevelResult res;
    res.stats = stats_;
    return res;
  }

  LevelResult finish_finite() {
    if (auto done = resolve_finite()) return *done;
    return build_finite(solve_rational_points(Ideal(n_, eng_.reduced_basis()), deadline_));
  }

  LevelResult finish_locus(int dim, bool exhausted);

};

}  // namespace

SupportReport make_support_report(const Polynomial& f, std::size_t chart, const std::vector<Rational>& point) {
  const std::size_t nv = f.nvars();
  if (point.size() + 1 != nv) throw Error("support point has wrong length");
  SupportReport rep;
  rep.chart = chart;
  rep.point = point;
  std::vector<Rational> c(nv);
  c[chart] = 1;
  for (std::size_t i = 0, k = 0; i < nv; ++i)
    if (i != chart) c[i] = point[k++];
  Polynomial l(nv);
  for (std::size_t i = 0; i < nv; ++i)
    if (c[i] != 0) l += Polynomial::variable(nv, i) * c[i];
  rep.support = normalize_linear_form(l);
  InverseSystemMatrix m = inverse_system_matrix(f, chart);
  rep.rank = static_cast<long>(specialized_rank(m, point));
  rep.ideal = natural_apolar_scheme(f, rep.support);
  rep.hilbert = hilbert_prefix(rep.ideal);
  return rep;
}

namespace {

// Hypersurface components are split into monomial factors and the rest;
// otherwise the whole ideal forms one component.
std::vector<std::vector<Polynomial>> split_components(const std::vector<Polynomial>& basis, std::size_t n) {
  Polynomial h = basis.front();
  for (std::size_t i = 1; i < basis.size() && !h.is_constant(); ++i) h = gcd(h, basis[i]);
  if (h.is_constant()) return {basis};
  h = squarefree_part(h);
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial v = Polynomial::variable(n, i);
    if (auto q = h.try_divide(v)) {
      out.push_back({v});
      h = *q;
    }
  }
  if (!h.is_constant()) out.push_back({h.primitive()});
  return out;
}

std::optional<SupportReport> sample_component(const Polynomial& f, std::size_t chart, long r,
                                              const InverseSystemMatrix& full, const std::vector<Polynomial>& comp,
                                              std::size_t n, SeededRng& rng, const Deadline& deadline) {
  Ideal ideal = Ideal(n, comp).with_basis(MonomialOrder::DegRevLex, deadline);
  std::vector<Monomial> leads;
  for (const auto& b : ideal.basis()) leads.push_back(leading_monomial(b, MonomialOrder::DegRevLex));
  auto free = independent_variables(leads, n);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < free.size(); ++i) values.emplace_back(rng.between(-5, 5));
    SolutionSet sols;
    try {
      sols = solve_with_fixed(ideal, free, values, deadline);
    } catch (const TimeoutError&) {
      throw;
    } catch (const Error&) {
      continue;
    }
    for (const auto& p : sols.points)
      if (static_cast<long>(specialized_rank(full, p)) == r) return make_support_report(f, chart, p);
  }
  return std::nullopt;
}

LevelResult LevelProbe::finish_locus(int dim, bool exhausted) {
  LevelResult res;
  res.kind = LevelResult::Kind::Locus;
  res.exhaustive = false;
  LocusReport& loc = res.locus;
  loc.chart = chart_;
  loc.rank = r_;
  loc.dimension = dim;
  loc.ideal = eng_.reduced_basis();
  loc.budget_exhausted = exhausted;
  if (loc.ideal.empty()) {
    loc.components.push_back({});
  } else {
    for (auto& comp : split_components(loc.ideal, n_)) loc.components.push_back({std::move(comp), std::nullopt});
  }
  SeededRng srng = rng_.split(0x5a);
  for (auto& comp : loc.components) comp.sample = sample_component(f_, chart_, r_, full_, comp.ideal, n_, srng, deadline_);
  res.stats = stats_;
  return res;
}

}  // namespace

LevelResult probe_rank(const Polynomial& f, std::size_t chart, long r, const DriverOptions& options,
                       const Deadline& deadline) {
  if (f.is_zero() || !f.is_homogeneous()) throw Error("form must be a non-zero homogeneous polynomial");
  if (f.degree() < 1) throw Error("form must have degree >= 1");
  if (chart >= f.nvars()) throw Error("chart index out of range");
  LevelProbe probe(f, chart, r, options, deadline);
  return probe.run();
}

}  // namespace locgad
