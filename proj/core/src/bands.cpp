#include "hypcover/bands.hpp"

#include <algorithm>

namespace hypcover {

UnionCoverage covers_unit_interval(std::vector<Interval> parts, double tol) {
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  UnionCoverage r;
  double reach = 0.0;
  for (const auto& p : parts) {
    if (p.hi < p.lo) continue;
    if (p.lo > reach + tol) {
      r.witness = Interval{reach, p.lo};
      return r;
    }
    reach = std::max(reach, p.hi);
  }
  if (reach < 1.0 - tol) {
    r.witness = Interval{reach, 1.0};
    return r;
  }
  r.covered = true;
  return r;
}

}  // namespace hypcover
