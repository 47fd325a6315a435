#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locgad/actions.hpp"
#include "locgad/report.hpp"

using namespace locgad;

namespace {

struct Common {
  std::string form;
  std::string vars;
  std::string strategy = "C";
  std::uint64_t seed = 0;
  std::string charts = "all";
  std::size_t minor_batch = 4;
  std::size_t budget = 0;
  bool json = false;
  bool text = false;
  double timeout = 0;
};

struct Parsed {
  Polynomial form;
  Ring ring;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

Parsed parse_input(const Common& c) {
  if (c.form.empty()) throw Error("--form is required");
  if (c.vars.empty()) {
    Polynomial f = parse_form(c.form);
    return {f, Ring::standard(f.nvars())};
  }
  Ring ring;
  for (auto& v : split(c.vars, ',')) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
    ring.names.push_back(v);
  }
  return {parse_polynomial(c.form, ring), ring};
}

DriverOptions driver_options(const Common& c, const Ring& ring) {
  DriverOptions o;
  o.strategy = parse_strategy(c.strategy);
  o.seed = c.seed;
  o.minor_batch = c.minor_batch;
  o.budget = c.budget;
  o.timeout_seconds = c.timeout;
  if (c.charts == "all") {
    o.charts = ChartMode::All;
  } else if (c.charts == "generic") {
    o.charts = ChartMode::Generic;
  } else {
    o.charts = ChartMode::Single;
    auto it = std::find(ring.names.begin(), ring.names.end(), c.charts);
    if (it != ring.names.end())
      o.chart = static_cast<std::size_t>(it - ring.names.begin());
    else
      o.chart = std::stoul(c.charts);
  }
  return o;
}

void add_common(CLI::App* app, Common& c, bool driver) {
  app->add_option("--form", c.form, "homogeneous form, e.g. \"x^2*y + x*y*z + y^3\"")->required();
  app->add_option("--vars", c.vars, "comma-separated variable names (default x,y,z,u or x0,x1,...)");
  if (driver) {
    app->add_option("--strategy", c.strategy, "minor strategy A, B or C")->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--charts", c.charts, "chart index or variable, 'all' or 'generic'");
    app->add_option("--minor-batch", c.minor_batch, "minors per batch");
    app->add_option("--budget", c.budget, "symbolic determinants per rank level (0: 50*C(n+2,2))");
    app->add_option("--timeout", c.timeout, "wall-clock limit in seconds (0: none)");
  }
  auto* j = app->add_flag("--json", c.json, "JSON output");
  auto* t = app->add_flag("--text", c.text, "text output (default)");
  j->excludes(t);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal local generalized additive decompositions of forms"};
  app.require_subcommand(1);

  Common ms;
  auto* cmd_ms = app.add_subcommand("minimal-supports", "minimal local GAD supports (rank minimization)");
  add_common(cmd_ms, ms, true);

  Common st;
  auto* cmd_st = app.add_subcommand("stratify", "stratification of supports by local rank");
  add_common(cmd_st, st, true);

  Common as;
  std::string support;
  auto* cmd_as = app.add_subcommand("apolar-scheme", "natural apolar scheme evinced at a support");
  add_common(cmd_as, as, false);
  cmd_as->add_option("--support", support, "linear form, e.g. \"x+z\"")->required();

  Common hb;
  std::string hb_support, hb_ideal;
  unsigned hb_cap = 64;
  auto* cmd_hb = app.add_subcommand("hilbert", "Hilbert function prefix of an ideal or of an evinced scheme");
  cmd_hb->add_option("--form", hb.form, "form (with --support)");
  cmd_hb->add_option("--vars", hb.vars, "comma-separated variable names");
  cmd_hb->add_option("--support", hb_support, "linear form");
  cmd_hb->add_option("--ideal", hb_ideal, "semicolon-separated homogeneous generators");
  cmd_hb->add_option("--cap", hb_cap, "largest degree examined");
  cmd_hb->add_flag("--json", hb.json, "JSON output");
  cmd_hb->add_flag("--text", hb.text, "text output (default)");

  Common im;
  std::string im_chart = "0";
  auto* cmd_im = app.add_subcommand("inverse-matrix", "symbolic dual generator and inverse system matrix");
  add_common(cmd_im, im, false);
  cmd_im->add_option("--chart", im_chart, "chart index or variable");

  Common ct;
  unsigned ct_degree = 1;
  auto* cmd_ct = app.add_subcommand("catalecticant", "catalecticant matrix of a form");
  add_common(cmd_ct, ct, false);
  cmd_ct->add_option("--degree", ct_degree, "operator degree i")->required();

  unsigned gr_n = 2, gr_d = 3;
  bool gr_json = false;
  auto* cmd_gr = app.add_subcommand("generic-rank", "local GAD length of a generic form");
  cmd_gr->add_option("-n,--n", gr_n, "number of variables minus one")->required();
  cmd_gr->add_option("-d,--d", gr_d, "degree")->required();
  cmd_gr->add_flag("--json", gr_json, "JSON output");

  std::vector<std::string> bench_forms{"(x^2+x*z+y^2)*y", "x^2*y*z", "x^2*(y+z)+y^2*(x+z)+z^2*(x+y)", "x^2*y^2*z",
                                       "x^3+y^3+z^3+x*u*z+x*u^2", "x*(x^3+x^2*y+x*z^2+y^3+z^3+u^3)"};
  std::string bench_strategies = "ABC", bench_modes = "plain,generic";
  BenchOptions bo;
  bool bench_json = false;
  auto* cmd_bench = app.add_subcommand("bench", "support counts, ranks and timings in the layout of the benchmark table");
  cmd_bench->add_option("--form", bench_forms, "forms (repeatable); defaults to the six benchmark forms");
  cmd_bench->add_option("--strategies", bench_strategies, "subset of ABC");
  cmd_bench->add_option("--modes", bench_modes, "comma-separated subset of plain,generic");
  cmd_bench->add_option("--repetitions", bo.repetitions, "runs per cell");
  cmd_bench->add_option("--seed", bo.seed, "first seed");
  cmd_bench->add_option("--timeout", bo.timeout_seconds, "per-run limit in seconds");
  cmd_bench->add_option("--minor-batch", bo.minor_batch, "minors per batch");
  cmd_bench->add_option("--budget", bo.budget, "determinants per rank level");
  cmd_bench->add_flag("--json", bench_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto t0 = std::chrono::steady_clock::now();
    if (*cmd_ms) {
      Parsed in = parse_input(ms);
      SupportSearch s = minimal_supports(in.form, driver_options(ms, in.ring));
      if (ms.json) {
        Json j = to_json(s, in.ring);
        j["timing_ms"] = elapsed_ms(t0);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_text(s, in.ring);
      }
    } else if (*cmd_st) {
      Parsed in = parse_input(st);
      DriverOptions o = driver_options(st, in.ring);
      StratificationReport r = rank_stratification(in.form, o.seed, o);
      if (st.json) {
        SupportSearch s = minimal_supports(in.form, o);
        Json j;
        j["form"] = in.form.to_string(in.ring);
        Json reports = Json::array();
        for (const auto& rep : s.supports) reports.push_back(to_json(rep, in.ring));
        j["chart_reports"] = reports;
        j["stratification"] = to_json(r, in.ring);
        j["timing_ms"] = elapsed_ms(t0);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_text(r, in.ring);
      }
    } else if (*cmd_as) {
      Parsed in = parse_input(as);
      Polynomial l = parse_polynomial(support, in.ring);
      Ideal ideal = natural_apolar_scheme(in.form, l);
      HilbertPrefix h = hilbert_prefix(ideal);
      if (as.json) {
        Json j{{"form", in.form.to_string(in.ring)},
               {"support", linear_form(normalize_linear_form(l)).to_string(in.ring)},
               {"ideal", to_json(ideal, in.ring)},
               {"hilbert", to_json(h)},
               {"length", inverse_system_dimension(dual_generator(in.form, l))},
               {"timing_ms", elapsed_ms(t0)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "I = " << ideal.to_string(in.ring) << "\nH = " << h.to_string() << "\n";
      }
    } else if (*cmd_hb) {
      Ideal ideal;
      Ring ring;
      if (!hb_ideal.empty()) {
        std::vector<std::string> gens = split(hb_ideal, ';');
        if (!hb.vars.empty()) {
          Common c = hb;
          c.form = gens.front();
          ring = parse_input(c).ring;
        } else {
          std::size_t n = 0;
          for (const auto& g : gens) n = std::max(n, parse_form(g).nvars());
          ring = Ring::standard(n);
        }
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
        ideal = Ideal(ring.nvars(), ps);
      } else {
        if (hb_support.empty()) throw Error("hilbert needs --ideal or --form with --support");
        Parsed in = parse_input(hb);
        ring = in.ring;
        ideal = natural_apolar_scheme(in.form, parse_polynomial(hb_support, ring));
      }
      HilbertPrefix h = hilbert_prefix(ideal, hb_cap);
      if (hb.json)
        std::cout << Json{{"ideal", to_json(ideal, ring)}, {"hilbert", to_json(h)}, {"timing_ms", elapsed_ms(t0)}}.dump(2)
                  << "\n";
      else
        std::cout << h.to_string() << "\n";
    } else if (*cmd_im) {
      Parsed in = parse_input(im);
      auto it = std::find(in.ring.names.begin(), in.ring.names.end(), im_chart);
      std::size_t chart = it != in.ring.names.end() ? static_cast<std::size_t>(it - in.ring.names.begin())
                                                     : std::stoul(im_chart);
      InverseSystemMatrix m = inverse_system_matrix(in.form, chart);
      Ring xr = in.ring.without(chart), pr = Ring::parameters(m.nparams());
      if (im.json) {
        Json idx = Json::array();
        for (const auto& mono : m.index()) idx.push_back(Polynomial(mono, Rational(1)).to_string(xr));
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.entry(i, j).to_string(pr));
          rows.push_back(row);
        }
        std::cout << Json{{"form", in.form.to_string(in.ring)},
                          {"chart", chart},
                          {"dual_generator", m.dual_generator().to_string(xr, pr)},
                          {"index", idx},
                          {"matrix", rows},
                          {"generic_rank", symbolic_rank(m)},
                          {"timing_ms", elapsed_ms(t0)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "f = " << m.dual_generator().to_string(xr, pr) << "\n";
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m.size(); ++j) std::cout << (j ? " | " : "") << m.entry(i, j).to_string(pr);
          std::cout << "\n";
        }
      }
    } else if (*cmd_ct) {
      Parsed in = parse_input(ct);
      CatalecticantMatrix c = catalecticant(in.form, ct_degree);
      if (ct.json) {
        Json rows = Json::array();
        for (const auto& row : c.entries) {
          Json r = Json::array();
          for (const auto& e : row) r.push_back(rational_to_string(e));
          rows.push_back(r);
        }
        std::cout << Json{{"degree", ct_degree}, {"rank", rank(c.entries)}, {"entries", rows}}.dump(2) << "\n";
      } else {
        for (const auto& row : c.entries) {
          for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << rational_to_string(row[j]);
          std::cout << "\n";
        }
      }
    } else if (*cmd_gr) {
      long r = generic_local_rank(gr_n, gr_d);
      if (gr_json)
        std::cout << Json{{"n", gr_n}, {"d", gr_d}, {"generic_local_rank", r}}.dump(2) << "\n";
      else
        std::cout << r << "\n";
    } else if (*cmd_bench) {
      bo.strategies.clear();
      for (char ch : bench_strategies) bo.strategies.push_back(parse_strategy(std::string(1, ch)));
      bo.modes.clear();
      for (const auto& m : split(bench_modes, ','))
        bo.modes.push_back(m == "generic" ? ChartMode::Generic : ChartMode::All);
      std::vector<Polynomial> forms;
      for (const auto& f : bench_forms) forms.push_back(parse_form(f));
      auto cells = bench(forms, bo);
      if (bench_json)
        std::cout << Json{{"plain_charts", "all"}, {"cells", to_json(cells)}, {"timing_ms", elapsed_ms(t0)}}.dump(2)
                  << "\n";
      else
        std::cout << to_text(cells);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
