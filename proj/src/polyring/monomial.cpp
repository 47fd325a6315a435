#include "locgad/monomial.hpp"

namespace locgad {
namespace {

void enumerate(std::size_t nvars, std::size_t var, unsigned remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(var, e);
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree, MonomialOrder order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, degree, cur, out);
  std::sort(out.begin(), out.end(), MonomialGreater{order});
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree, MonomialOrder order) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto slice = monomials_of_degree(nvars, d, order);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

}  // namespace locgad
