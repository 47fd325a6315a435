#include "locgad/solve.hpp"

#include <algorithm>
#include <numeric>

#include "locgad/polyalg.hpp"

namespace locgad {
namespace {

struct Solver {
  std::size_t nvars;
  const Deadline& deadline;
  SolutionSet out;

  // Variables k..nvars-1 are already fixed in `tail` (tail[0] is variable k).
  void run(std::vector<Polynomial> gens, std::size_t k, std::vector<Rational> tail) {
    deadline.check();
    if (k == 0) {
      for (const auto& g : gens)
        if (!g.is_zero()) return;
      out.points.push_back(std::move(tail));
      return;
    }
    std::vector<Polynomial> basis = groebner_basis(gens, k, MonomialOrder::Lex, deadline);
    if (basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero()) return;
    const std::size_t v = k - 1;
    const Polynomial* eliminant = nullptr;
    for (const auto& b : basis) {
      auto var = univariate_variable(b);
      if (var && *var == v) {
        eliminant = &b;
        break;
      }
    }
    if (!eliminant) {
      // The last variable is unconstrained: V(I) is not finite here.
      throw Error("solve_rational_points: ideal is not zero-dimensional");
    }
    RationalRootSplit split = rational_roots(*eliminant, v);
    if (!split.complete) out.exhaustive = false;
    if (!split.cofactor.is_constant()) {
      out.exhaustive = false;
      ResidualFactor rf;
      std::vector<std::size_t> map(k);
      std::iota(map.begin(), map.end(), 0);
      rf.factor = split.cofactor.remap(nvars, map);
      for (std::size_t i = 0; i < tail.size(); ++i) rf.fixed.emplace_back(k + i, tail[i]);
      out.residual.push_back(std::move(rf));
    }
    for (const auto& root : split.roots) {
      std::vector<Polynomial> next;
      for (const auto& b : basis) {
        Polynomial s = b.substitute(v, root);
        if (!s.is_zero()) next.push_back(std::move(s));
      }
      std::vector<Rational> t{root};
      t.insert(t.end(), tail.begin(), tail.end());
      run(std::move(next), v, std::move(t));
    }
  }
};

}  // namespace

SolutionSet solve_rational_points(const Ideal& ideal, const Deadline& deadline) {
  const std::size_t n = ideal.nvars();
  auto dim = ideal_dimension(ideal, deadline);
  SolutionSet result;
  result.nvars = n;
  if (!dim) return result;  // unit ideal: no points at all
  if (*dim != 0) throw Error("solve_rational_points needs a zero-dimensional ideal");
  Solver s{n, deadline, {}};
  s.out.nvars = n;
  s.run(ideal.generators(), n, {});
  result = std::move(s.out);
  std::sort(result.points.begin(), result.points.end());
  for (const auto& p : result.points)
    for (const auto& g : ideal.generators())
      if (g.evaluate(p) != 0) throw Error("internal error: solution point does not annihilate the ideal");
  return result;
}

SolutionSet solve_with_fixed(const Ideal& ideal, const std::vector<std::size_t>& free_vars,
                             const std::vector<Rational>& values, const Deadline& deadline) {
  const std::size_t n = ideal.nvars();
  if (free_vars.size() != values.size()) throw Error("solve_with_fixed: value count mismatch");
  std::vector<std::pair<std::size_t, Rational>> fixed;
  for (std::size_t i = 0; i < free_vars.size(); ++i) fixed.emplace_back(free_vars[i], values[i]);
  std::sort(fixed.begin(), fixed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Polynomial> gens;
  for (auto g : ideal.generators()) {
    for (const auto& [var, val] : fixed) g = g.substitute(var, val);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < n; ++i)
    if (std::none_of(fixed.begin(), fixed.end(), [&](const auto& f) { return f.first == i; })) remaining.push_back(i);
  SolutionSet sub;
  if (gens.empty()) {
    if (!remaining.empty()) throw Error("solve_with_fixed: remaining system is not zero-dimensional");
    sub.points.push_back({});
  } else {
    sub = solve_rational_points(Ideal(remaining.size(), std::move(gens)), deadline);
  }
  SolutionSet out;
  out.nvars = n;
  out.exhaustive = sub.exhaustive;
  for (const auto& p : sub.points) {
    std::vector<Rational> full(n);
    for (std::size_t i = 0; i < remaining.size(); ++i) full[remaining[i]] = p[i];
    for (const auto& [var, val] : fixed) full[var] = val;
    out.points.push_back(std::move(full));
  }
  for (auto rf : sub.residual) {
    ResidualFactor lifted;
    lifted.factor = rf.factor.remap(n, remaining);
    for (const auto& [var, val] : rf.fixed) lifted.fixed.emplace_back(remaining[var], val);
    for (const auto& f : fixed) lifted.fixed.push_back(f);
    out.residual.push_back(std::move(lifted));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace locgad
