#include "locgad/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace locgad {

std::string rational_vector_string(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + rational_to_string(v[i]);
  return out + ")";
}

namespace {

Json points_json(const std::vector<Rational>& p) {
  Json a = Json::array();
  for (const auto& q : p) a.push_back(rational_to_string(q));
  return a;
}

Json polys_json(const std::vector<Polynomial>& ps, const Ring& ring) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string(ring));
  return a;
}

Json stats_json(const LevelStats& s) {
  return Json{{"draws", s.draws}, {"determinants", s.determinants}, {"witness_minors", s.witness_minors},
              {"batches", s.batches}};
}

std::string ideal_text(const std::vector<Polynomial>& ps, const Ring& ring) {
  std::string out = "<";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string(ring);
  return out + ">";
}

}  // namespace

Json to_json(const HilbertPrefix& h) { return Json{{"values", h.values}, {"stable", h.stable}}; }

Json to_json(const Ideal& ideal, const Ring& ring) { return polys_json(ideal.generators(), ring); }

Json to_json(const SupportReport& s, const Ring& ring) {
  return Json{{"chart", s.chart},
              {"chart_variable", ring.names.at(s.chart)},
              {"point", points_json(s.point)},
              {"linear_form", linear_form(s.support).to_string(ring)},
              {"rank", s.rank},
              {"ideal", to_json(s.ideal, ring)},
              {"hilbert", to_json(s.hilbert)}};
}

Json to_json(const LocusReport& l, const Ring& ring) {
  const Ring params = Ring::parameters(ring.nvars() - 1);
  Json comps = Json::array();
  for (const auto& c : l.components) {
    Json j{{"ideal", polys_json(c.ideal, params)}};
    j["sample"] = c.sample ? to_json(*c.sample, ring) : Json(nullptr);
    comps.push_back(std::move(j));
  }
  return Json{{"chart", l.chart},         {"rank", l.rank},
              {"dimension", l.dimension}, {"ideal", polys_json(l.ideal, params)},
              {"components", comps},      {"budget_exhausted", l.budget_exhausted}};
}

Json to_json(const AlgebraicSupports& a, const Ring& ring) {
  const Ring params = Ring::parameters(ring.nvars() - 1);
  return Json{{"chart", a.chart}, {"rank", a.rank}, {"count", a.count()}, {"ideal", polys_json(a.ideal(), params)}};
}

Json to_json(const SupportSearch& s, const Ring& ring) {
  Json j;
  j["form"] = s.form.to_string(ring);
  j["variables"] = ring.names;
  j["strategy"] = to_string(s.options.strategy);
  j["seed"] = s.options.seed;
  j["charts"] = to_string(s.options.charts);
  if (s.options.charts == ChartMode::Single) j["chart"] = s.options.chart;
  j["rank"] = s.rank ? Json(*s.rank) : Json(nullptr);
  j["support_count"] = s.support_count();
  j["exhaustive"] = s.exhaustive;
  Json reports = Json::array();
  for (const auto& r : s.supports) reports.push_back(to_json(r, ring));
  j["chart_reports"] = reports;
  Json alg = Json::array();
  for (const auto& a : s.algebraic) alg.push_back(to_json(a, ring));
  j["algebraic_supports"] = alg;
  Json loci = Json::array();
  for (const auto& c : s.charts)
    if (c.locus) loci.push_back(to_json(*c.locus, ring));
  j["loci"] = loci;
  Json charts = Json::array();
  for (const auto& c : s.charts)
    charts.push_back(Json{{"chart", c.chart},
                          {"rank", c.rank ? Json(*c.rank) : Json(nullptr)},
                          {"supports", c.supports.size()},
                          {"stats", stats_json(c.stats)}});
  j["chart_runs"] = charts;
  if (!s.coordinate_change.empty()) {
    Json a = Json::array();
    for (const auto& row : s.coordinate_change) a.push_back(points_json(row));
    j["coordinate_change"] = a;
  }
  j["stats"] = stats_json(s.stats);
  return j;
}

Json to_json(const StratificationReport& s, const Ring& ring) {
  Json strata = Json::array();
  for (const auto& st : s.strata) {
    Json j{{"rank", st.rank}};
    if (st.empty()) {
      j["status"] = "none";
    } else {
      j["status"] = st.loci.empty() ? "finite" : "locus";
      Json sup = Json::array();
      for (const auto& r : st.supports) sup.push_back(to_json(r, ring));
      j["supports"] = sup;
      Json loci = Json::array();
      for (const auto& l : st.loci) loci.push_back(to_json(l, ring));
      j["loci"] = loci;
    }
    strata.push_back(std::move(j));
  }
  strata.push_back(Json{{"rank", s.generic_rank}, {"status", "generic"}});
  return Json{{"form", s.form.to_string(ring)},
              {"minimal_rank", s.minimal_rank},
              {"generic_rank", s.generic_rank},
              {"generic_local_rank", s.generic_bound},
              {"strata", strata}};
}

std::string to_text(const SupportSearch& s, const Ring& ring) {
  std::ostringstream os;
  os << "F = " << s.form.to_string(ring) << "\n";
  os << "strategy " << to_string(s.options.strategy) << ", seed " << s.options.seed << ", charts "
     << to_string(s.options.charts) << "\n";
  if (!s.rank) return os.str() + "no support found\n";
  os << "minimal local rank " << *s.rank << ", " << s.support_count() << " minimal support(s)"
     << (s.exhaustive ? "" : " (not exhaustive)") << "\n";
  for (const auto& r : s.supports)
    os << "  l = " << linear_form(r.support).to_string(ring) << "   gamma = " << rational_vector_string(r.point)
       << " in chart " << ring.names[r.chart] << "\n     I = " << ideal_text(r.ideal.generators(), ring)
       << "\n     H = " << r.hilbert.to_string() << "\n";
  const Ring params = Ring::parameters(ring.nvars() - 1);
  for (const auto& a : s.algebraic)
    os << "  " << a.count() << " algebraic support(s) in chart " << ring.names[a.chart] << ": "
       << ideal_text(a.ideal(), params) << "\n";
  for (const auto& c : s.charts)
    if (c.locus)
      os << "  positive-dimensional locus in chart " << ring.names[c.chart] << " (dimension " << c.locus->dimension
         << "): " << ideal_text(c.locus->ideal, params) << "\n";
  return os.str();
}

std::string to_text(const StratificationReport& s, const Ring& ring) {
  std::ostringstream os;
  const Ring params = Ring::parameters(ring.nvars() - 1);
  os << "F = " << s.form.to_string(ring) << "\n";
  for (const auto& st : s.strata) {
    os << "rank " << st.rank << ": ";
    if (st.empty()) {
      os << "none\n";
      continue;
    }
    os << "\n";
    for (const auto& r : st.supports)
      os << "  l = " << linear_form(r.support).to_string(ring) << "   H = " << r.hilbert.to_string() << "\n";
    for (const auto& l : st.loci) {
      os << "  locus in chart " << ring.names[l.chart] << ", dimension " << l.dimension << ": "
         << ideal_text(l.ideal, params) << "\n";
      for (const auto& c : l.components) {
        os << "    component " << ideal_text(c.ideal, params);
        if (c.sample)
          os << "  e.g. l = " << linear_form(c.sample->support).to_string(ring)
             << ", H = " << c.sample->hilbert.to_string();
        os << "\n";
      }
    }
  }
  os << "rank " << s.generic_rank << ": generic\n";
  return os.str();
}

std::vector<BenchCell> bench(const std::vector<Polynomial>& forms, const BenchOptions& options) {
  std::vector<BenchCell> cells;
  for (const auto& f : forms)
    for (Strategy st : options.strategies)
      for (ChartMode mode : options.modes) {
        BenchCell cell;
        cell.form = f.to_string();
        cell.strategy = st;
        cell.mode = mode;
        double total = 0;
        for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
          DriverOptions o;
          o.strategy = st;
          o.charts = mode;
          o.seed = options.seed + rep;
          o.minor_batch = options.minor_batch;
          o.budget = options.budget;
          o.timeout_seconds = options.timeout_seconds;
          auto t0 = std::chrono::steady_clock::now();
          try {
            SupportSearch s = minimal_supports(f, o);
            total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            const std::size_t count = s.support_count();
            if (rep > 0 && (count != cell.supports || *s.rank != cell.rank)) cell.consistent = false;
            cell.supports = count;
            cell.rank = *s.rank;
            cell.stats.draws += s.stats.draws;
            cell.stats.determinants += s.stats.determinants;
            cell.stats.witness_minors += s.stats.witness_minors;
            cell.stats.batches += s.stats.batches;
            ++cell.repetitions;
          } catch (const TimeoutError&) {
            cell.timed_out = true;
            break;
          }
        }
        cell.seconds = cell.repetitions ? total / static_cast<double>(cell.repetitions) : 0;
        cells.push_back(std::move(cell));
      }
  return cells;
}

Json to_json(const std::vector<BenchCell>& cells) {
  Json a = Json::array();
  for (const auto& c : cells) {
    Json j{{"form", c.form}, {"strategy", to_string(c.strategy)}, {"mode", c.mode == ChartMode::Generic ? "generic" : "plain"}};
    j["plain_charts"] = to_string(ChartMode::All);
    if (c.timed_out) {
      j["time"] = "-";
    } else {
      j["time_s"] = c.seconds;
      j["supports"] = c.supports;
      j["rank"] = c.rank;
      j["consistent"] = c.consistent;
      j["repetitions"] = c.repetitions;
      j["stats"] = stats_json(c.stats);
    }
    a.push_back(std::move(j));
  }
  return a;
}

std::string to_text(const std::vector<BenchCell>& cells) {
  if (cells.empty()) return "";
  // Rows keep first-appearance order of the forms.
  std::vector<std::string> forms;
  std::vector<std::pair<Strategy, ChartMode>> columns;
  for (const auto& c : cells) {
    if (std::find(forms.begin(), forms.end(), c.form) == forms.end()) forms.push_back(c.form);
    auto col = std::make_pair(c.strategy, c.mode);
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
  }
  std::size_t width = 6;
  for (const auto& f : forms) width = std::max(width, f.size() + 2);
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "Form" << std::setw(12) << "# supports" << std::setw(6) << "rank";
  for (const auto& [st, mode] : columns)
    os << std::setw(14) << (to_string(st) + (mode == ChartMode::Generic ? " generic" : " plain"));
  os << "\n";
  for (const auto& f : forms) {
    std::string count = "-", rank = "-";
    for (const auto& c : cells)
      if (c.form == f && !c.timed_out) {
        count = std::to_string(c.supports);
        rank = std::to_string(c.rank);
        break;
      }
    os << std::setw(static_cast<int>(width)) << f << std::setw(12) << count << std::setw(6) << rank;
    for (const auto& col : columns) {
      std::string v = "-";
      for (const auto& c : cells)
        if (c.form == f && c.strategy == col.first && c.mode == col.second && !c.timed_out) {
          std::ostringstream t;
          t << std::fixed << std::setprecision(2) << c.seconds << "s";
          v = t.str();
        }
      os << std::setw(14) << v;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace locgad
