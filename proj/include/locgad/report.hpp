#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "locgad/driver.hpp"

namespace locgad {

using Json = nlohmann::ordered_json;

struct BenchCell {
  std::string form;
  Strategy strategy = Strategy::C;
  ChartMode mode = ChartMode::All;
  bool timed_out = false;
  double seconds = 0;  // mean wall time per repetition
  std::size_t repetitions = 0;
  std::size_t supports = 0;
  long rank = 0;
  bool consistent = true;  // same count and rank in every repetition
  LevelStats stats;        // totals over the repetitions
};

struct BenchOptions {
  std::vector<Strategy> strategies{Strategy::A, Strategy::B, Strategy::C};
  std::vector<ChartMode> modes{ChartMode::All, ChartMode::Generic};
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  double timeout_seconds = 300;
  std::size_t minor_batch = 4;
  std::size_t budget = 0;
};

std::vector<BenchCell> bench(const std::vector<Polynomial>& forms, const BenchOptions& options);

Json to_json(const HilbertPrefix& h);
Json to_json(const Ideal& ideal, const Ring& ring);
Json to_json(const SupportReport& s, const Ring& ring);
Json to_json(const LocusReport& l, const Ring& ring);
Json to_json(const AlgebraicSupports& a, const Ring& ring);
Json to_json(const SupportSearch& s, const Ring& ring);
Json to_json(const StratificationReport& s, const Ring& ring);
Json to_json(const std::vector<BenchCell>& cells);

std::string to_text(const SupportSearch& s, const Ring& ring);
std::string to_text(const StratificationReport& s, const Ring& ring);
/// Table layout: one row per form, one column per (strategy, mode).
std::string to_text(const std::vector<BenchCell>& cells);

std::string rational_vector_string(const std::vector<Rational>& v);

}  // namespace locgad
