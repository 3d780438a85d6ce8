#ifndef LBFLOW_SHORTEST_PATHS_HPP
#define LBFLOW_SHORTEST_PATHS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lbflow/network.hpp"

namespace lbflow {

// Nonnegative dual weight per edge id.
using DualLengths = std::vector<double>;

// Result of a bounded shortest-path query. Absence of a path is a value,
// not an error. When present, `cost` is the edge sum of y over the path in
// path order (recomputed after reconstruction, so it matches a caller's own
// left-to-right summation exactly).
struct SPResult {
  std::optional<Path> path;
  double cost = 0.0;

  bool found() const { return path.has_value(); }
};

inline constexpr std::size_t kDefaultTableCap = 50'000'000;

// Minimum-y-cost s-t path among paths with at most L edges. Layered DP
// (Bellman-Ford truncated at L layers), O(Lm). Ties at every DP cell are
// broken by the lexicographically smallest edge-id sequence, so repeated
// runs are bit-identical.
SPResult hop_shortest_path(const Network& net, const DualLengths& y, int L);

// Minimum-y-cost s-t path among paths with total edge length at most L.
// Pseudo-polynomial DP over the length budget, table (L+1) x n; throws
// ParamError when the table would exceed `table_cap` cells. Same tie-break
// rule as hop_shortest_path.
SPResult rcsp_exact(const Network& net, const DualLengths& y, int L,
                    std::size_t table_cap = kDefaultTableCap);

// (1+w)-approximation of rcsp_exact: the returned path always satisfies the
// length budget exactly (never relaxed); only the cost is approximate, with
// cost <= (1+w) * exact minimum. Cost scaling with a test procedure:
// threshold search establishes LB <= OPT <= UB, geometric-mean tests shrink
// UB/LB to a constant, and a final DP over integer costs rounded at
// granularity LB*w/(3n) extracts the path. Deterministic for fixed inputs.
SPResult rcsp_approx(const Network& net, const DualLengths& y, int L, double w,
                     std::size_t table_cap = kDefaultTableCap);

// Same scheme with externally established bounds 0 < cost_lb <= OPT <= cost_ub
// (the caller is responsible for their validity; the solver loop derives them
// from the previous iteration). Skips the bound-finding phase when the ratio
// is already small.
SPResult rcsp_approx_bounded(const Network& net, const DualLengths& y, int L,
                             double w, double cost_lb, double cost_ub,
                             std::size_t table_cap = kDefaultTableCap);

}  // namespace lbflow

#endif  // LBFLOW_SHORTEST_PATHS_HPP
