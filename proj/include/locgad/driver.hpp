#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locgad/algebraic.hpp"
#include "locgad/apolar.hpp"
#include "locgad/invsys.hpp"
#include "locgad/minors.hpp"
#include "locgad/solve.hpp"

namespace locgad {

enum class ChartMode { Single, All, Generic };

std::string to_string(ChartMode m);

struct DriverOptions {
  Strategy strategy = Strategy::C;
  std::uint64_t seed = 0;
  ChartMode charts = ChartMode::All;
  std::size_t chart = 0;  // used by ChartMode::Single
  std::size_t minor_batch = 4;
  /// Symbolic determinants per rank level and chart; 0 selects 50*C(n+2,2).
  std::size_t budget = 0;
  /// Wall-clock limit in seconds; 0 disables it.
  double timeout_seconds = 0;
};

struct SupportReport {
  std::size_t chart = 0;
  std::vector<Rational> point;  // gamma in that chart
  Support support;              // normalized linear form
  long rank = 0;
  Ideal ideal;
  HilbertPrefix hilbert;
};

/// Non-rational supports of one chart: the roots of h, parametrized through
/// the separating form.
struct AlgebraicSupports {
  std::size_t chart = 0;
  long rank = 0;
  std::vector<Rational> form;
  AlgebraicPoints points;
  std::size_t count() const { return points.count(); }
  std::vector<Polynomial> ideal() const { return points.ideal(form); }
};

struct LocusComponent {
  std::vector<Polynomial> ideal;        // in the chart parameters
  std::optional<SupportReport> sample;  // a point of exactly the locus rank
};

/// Positive-dimensional set of supports of rank <= `rank` in one chart.
struct LocusReport {
  std::size_t chart = 0;
  long rank = 0;
  int dimension = 0;
  std::vector<Polynomial> ideal;  // reduced degrevlex basis of the minor ideal
  std::vector<LocusComponent> components;
  bool budget_exhausted = false;
};

struct LevelStats {
  std::size_t draws = 0;          // selections drawn
  std::size_t determinants = 0;   // symbolic determinants computed
  std::size_t witness_minors = 0;
  std::size_t batches = 0;
};

/// Rank-<=r support set of one chart.
struct LevelResult {
  enum class Kind { Empty, Finite, Locus };
  Kind kind = Kind::Empty;
  std::vector<std::vector<Rational>> points;  // Finite: points of rank <= r
  std::vector<long> ranks;                    // exact rank at each point
  std::vector<AlgebraicSupports> algebraic;   // Finite: non-rational points of rank <= r
  std::vector<ResidualFactor> residual;       // set only when no shape form was found
  bool exhaustive = true;
  LocusReport locus;  // Kind::Locus
  LevelStats stats;
};

struct ChartReport {
  std::size_t chart = 0;
  std::optional<long> rank;  // minimal rank found in this chart
  std::vector<SupportReport> supports;
  std::optional<LocusReport> locus;
  std::vector<AlgebraicSupports> algebraic;
  std::vector<ResidualFactor> residual;
  LevelStats stats;
};

struct SupportSearch {
  Polynomial form;
  DriverOptions options;
  std::optional<long> rank;  // minimal local GAD-rank (over the searched charts)
  std::vector<SupportReport> supports;  // de-duplicated
  std::vector<AlgebraicSupports> algebraic;  // each point counted in its first chart only
  std::vector<ChartReport> charts;
  std::vector<std::vector<Rational>> coordinate_change;  // generic mode: G(x) = F(A x)
  bool exhaustive = true;  // false on budget exhaustion or unresolved residual content
  LevelStats stats;

  /// Rational supports plus the number of algebraic ones.
  std::size_t support_count() const;
  bool has_locus() const;
};

/// Rank-<=r locus of a single chart of F at a fixed r.
LevelResult probe_rank(const Polynomial& f, std::size_t chart, long r, const DriverOptions& options,
                       const Deadline& deadline = {});

SupportSearch minimal_supports(const Polynomial& f, const DriverOptions& options);

SupportReport make_support_report(const Polynomial& f, std::size_t chart, const std::vector<Rational>& point);

struct Stratum {
  long rank = 0;
  std::vector<SupportReport> supports;  // finitely many supports of exactly this rank
  std::vector<LocusReport> loci;         // positive-dimensional loci first appearing here
  bool empty() const { return supports.empty() && loci.empty(); }
};

struct StratificationReport {
  Polynomial form;
  long minimal_rank = 0;
  long generic_rank = 0;    // rank at a general support
  long generic_bound = 0;   // generic_local_rank(n, d)
  std::vector<Stratum> strata;  // ranks minimal_rank .. generic_rank - 1
};

StratificationReport rank_stratification(const Polynomial& f, std::uint64_t seed, const DriverOptions& base = {});

struct FinitenessCertificate {
  bool applicable = false;
  long bound = 0;       // d^n
  long supports = 0;    // number found
  long rank = 0;
};

FinitenessCertificate finiteness_certificate(const Polynomial& f, const DriverOptions& options = {});

/// Seeded integer matrix with entries in [-5, 5], resampled until invertible.
std::vector<std::vector<Rational>> random_coordinate_change(std::size_t n, SeededRng& rng);

/// F(A x).
Polynomial change_coordinates(const Polynomial& f, const std::vector<std::vector<Rational>>& a);

}  // namespace locgad
