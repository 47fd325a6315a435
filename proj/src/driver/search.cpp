#include <algorithm>
#include <set>

#include "locgad/actions.hpp"
#include "locgad/driver.hpp"

namespace locgad {

namespace {

Deadline deadline_for(const DriverOptions& o) {
  return o.timeout_seconds > 0 ? Deadline::after(std::chrono::duration<double>(o.timeout_seconds)) : Deadline{};
}

void accumulate(LevelStats& into, const LevelStats& s) {
  into.draws += s.draws;
  into.determinants += s.determinants;
  into.witness_minors += s.witness_minors;
  into.batches += s.batches;
}

long max_rank_bound(const Polynomial& f) {
  if (f.nvars() == 1) return 1;
  return generic_local_rank(static_cast<unsigned>(f.nvars() - 1), static_cast<unsigned>(f.degree()));
}

void check_input(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw Error("form must be a non-zero homogeneous polynomial");
  if (f.degree() < 1) throw Error("form must have degree >= 1");
}

// Inverse of an invertible rational matrix by Gauss-Jordan.
std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error("matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Chart point of a normalized support.
std::vector<Rational> point_of(const Support& s) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < s.coefficients.size(); ++i)
    if (i != s.chart) p.push_back(s.coefficients[i]);
  return p;
}

struct SupportOrder {
  bool operator()(const SupportReport& a, const SupportReport& b) const {
    if (a.chart != b.chart) return a.chart < b.chart;
    return a.point < b.point;
  }
};

}  // namespace

std::vector<std::vector<Rational>> random_coordinate_change(std::size_t n, SeededRng& rng) {
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (auto& row : a)
      for (auto& e : row) e = rng.between(-5, 5);
    if (rank(a) == n) return a;
  }
  throw Error("could not sample an invertible coordinate change");
}

Polynomial change_coordinates(const Polynomial& f, const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = f.nvars();
  if (a.size() != n) throw Error("coordinate change has wrong size");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(n);
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != 0) img += Polynomial::variable(n, j) * a[i][j];
    images.push_back(std::move(img));
  }
  return f.compose(images);
}

SupportSearch minimal_supports(const Polynomial& f, const DriverOptions& options) {
  check_input(f);
  const Deadline deadline = deadline_for(options);
  SupportSearch out;
  out.form = f;
  out.options = options;

  Polynomial g = f;
  std::vector<std::size_t> charts;
  switch (options.charts) {
    case ChartMode::Single:
      if (options.chart >= f.nvars()) throw Error("chart index out of range");
      charts.push_back(options.chart);
      break;
    case ChartMode::All:
      for (std::size_t j = 0; j < f.nvars(); ++j) charts.push_back(j);
      break;
    case ChartMode::Generic: {
      SeededRng rng = SeededRng(options.seed).split(0xC0FFEE);
      out.coordinate_change = random_coordinate_change(f.nvars(), rng);
      g = change_coordinates(f, out.coordinate_change);
      charts.push_back(0);
      break;
    }
  }

  for (std::size_t c : charts) {
    ChartReport cr;
    cr.chart = c;
    out.charts.push_back(std::move(cr));
  }
  auto report_for = [&](std::size_t c) -> ChartReport& {
    return *std::find_if(out.charts.begin(), out.charts.end(), [&](const ChartReport& cr) { return cr.chart == c; });
  };

  const long lo = std::max<long>(1, static_cast<long>(max_catalecticant_rank(g)));
  const long hi = max_rank_bound(g);
  for (long r = lo; r <= hi && !out.rank; ++r) {
    std::vector<std::pair<std::size_t, LevelResult>> level;
    bool found = false;
    for (std::size_t c : charts) {
      LevelResult lr = probe_rank(g, c, r, options, deadline);
      if (lr.kind != LevelResult::Kind::Empty) found = true;
      accumulate(out.stats, lr.stats);
      level.emplace_back(c, std::move(lr));
    }
    for (auto& [c, lr] : level) accumulate(report_for(c).stats, lr.stats);
    if (!found) continue;
    out.rank = r;
    for (auto& [c, lr] : level) {
      ChartReport& cr = report_for(c);
      cr.residual = lr.residual;
      if (!lr.exhaustive) out.exhaustive = false;
      if (lr.kind == LevelResult::Kind::Finite) {
        for (const auto& p : lr.points) cr.supports.push_back(make_support_report(g, c, p));
        cr.algebraic = lr.algebraic;
        if (!cr.supports.empty() || !cr.algebraic.empty()) cr.rank = r;
      } else if (lr.kind == LevelResult::Kind::Locus) {
        cr.rank = r;
        cr.locus = lr.locus;
      }
    }
  }
  if (!out.rank) throw Error("no support found below the generic local rank bound");

  // Map back to the original coordinates and de-duplicate proportional forms.
  std::optional<std::vector<std::vector<Rational>>> ainv;
  if (options.charts == ChartMode::Generic) ainv = inverse(out.coordinate_change);
  std::set<std::vector<Rational>> seen;
  for (auto& cr : out.charts) {
    for (auto& rep : cr.supports) {
      if (ainv) {
        // G(x) = F(Ax): the support c of G corresponds to c A^{-1} for F.
        const std::size_t n = f.nvars();
        std::vector<Rational> cf(n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i) cf[j] += rep.support.coefficients[i] * (*ainv)[i][j];
        Polynomial l(n);
        for (std::size_t j = 0; j < n; ++j)
          if (cf[j] != 0) l += Polynomial::variable(n, j) * cf[j];
        Support s = normalize_linear_form(l);
        rep = make_support_report(f, s.chart, point_of(s));
      }
      if (seen.insert(rep.support.coefficients).second) out.supports.push_back(rep);
    }
  }
  std::sort(out.supports.begin(), out.supports.end(), SupportOrder{});
  // Keep each algebraic point only in its first chart: the parameters of the
  // earlier variables must vanish there.
  for (const auto& cr : out.charts)
    for (auto alg : cr.algebraic) {
      if (options.charts == ChartMode::All)
        for (std::size_t i = 0; i < cr.chart; ++i) alg.points.h = upoly::monic_gcd(alg.points.h, alg.points.coords[i]);
      if (upoly::degree(alg.points.h) < 1) continue;
      for (auto& c : alg.points.coords) c = upoly::rem(c, alg.points.h);
      out.algebraic.push_back(std::move(alg));
    }
  for (const auto& cr : out.charts)
    if (cr.locus) out.exhaustive = out.exhaustive && !cr.locus->budget_exhausted;
  return out;
}

std::size_t SupportSearch::support_count() const {
  std::size_t n = supports.size();
  for (const auto& a : algebraic) n += a.count();
  return n;
}

bool SupportSearch::has_locus() const {
  return std::any_of(charts.begin(), charts.end(), [](const ChartReport& c) { return c.locus.has_value(); });
}

StratificationReport rank_stratification(const Polynomial& f, std::uint64_t seed, const DriverOptions& base) {
  check_input(f);
  DriverOptions opts = base;
  opts.seed = seed;
  opts.charts = ChartMode::All;
  const Deadline deadline = deadline_for(opts);
  StratificationReport rep;
  rep.form = f;
  rep.generic_bound = max_rank_bound(f);

  SupportSearch minimal = minimal_supports(f, opts);
  rep.minimal_rank = *minimal.rank;

  // Rank at a random support, the same in every chart.
  SeededRng rng = SeededRng(seed).split(0x6e);
  {
    InverseSystemMatrix m = inverse_system_matrix(f, 0);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < m.nparams(); ++i) p.push_back(Rational(rng.between(-1000, 1000)) / Rational(static_cast<long>(7 + rng.below(50))));
    rep.generic_rank = static_cast<long>(specialized_rank(m, p));
  }

  std::set<std::vector<Rational>> reported;
  std::vector<std::optional<std::vector<Polynomial>>> previous(f.nvars());
  for (long r = rep.minimal_rank; r < rep.generic_rank; ++r) {
    Stratum st;
    st.rank = r;
    for (std::size_t c = 0; c < f.nvars(); ++c) {
      LevelResult lr = probe_rank(f, c, r, opts, deadline);
      if (lr.kind == LevelResult::Kind::Finite) {
        for (std::size_t k = 0; k < lr.points.size(); ++k) {
          if (lr.ranks[k] != r) continue;
          SupportReport s = make_support_report(f, c, lr.points[k]);
          if (reported.insert(s.support.coefficients).second) st.supports.push_back(std::move(s));
        }
        previous[c].reset();
      } else if (lr.kind == LevelResult::Kind::Locus) {
        const std::size_t n = f.nvars() - 1;
        const bool same = previous[c] && same_ideal(Ideal(n, lr.locus.ideal), Ideal(n, *previous[c]));
        previous[c] = lr.locus.ideal;
        if (!same) st.loci.push_back(lr.locus);
      } else {
        previous[c].reset();
      }
    }
    std::sort(st.supports.begin(), st.supports.end(), SupportOrder{});
    rep.strata.push_back(std::move(st));
  }
  return rep;
}

FinitenessCertificate finiteness_certificate(const Polynomial& f, const DriverOptions& options) {
  check_input(f);
  FinitenessCertificate cert;
  const long d = f.degree();
  long bound = 1;
  for (std::size_t i = 1; i < f.nvars(); ++i) bound *= d;
  cert.bound = bound;
  SupportSearch s = minimal_supports(f, options);
  cert.rank = *s.rank;
  cert.supports = static_cast<long>(s.support_count());
  bool has_locus = false;
  for (const auto& cr : s.charts) has_locus |= cr.locus.has_value();
  cert.applicable = cert.rank <= d && !has_locus;
  return cert;
}

}  // namespace locgad
