#ifndef LBFLOW_CERTIFICATES_HPP
#define LBFLOW_CERTIFICATES_HPP

#include <string>
#include <vector>

#include "lbflow/fptas.hpp"
#include "lbflow/network.hpp"
#include "lbflow/shortest_paths.hpp"

namespace lbflow {

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Per-edge totals (compensated sums) against capacities: f(e) <= c(e)*(1+rel_tol).
// Throws ParseError on dangling edge ids.
CheckReport check_capacity_feasible(const Network& net, const PathFlow& flow,
                                    double rel_tol = 1e-9);

// Every flow-carrying path has mode-length <= L.
CheckReport check_l_bounded(const Network& net, const PathFlow& flow, int L,
                            LengthMode mode);

// Every flow-carrying path is a contiguous simple s-t path.
CheckReport check_path_structure(const Network& net, const PathFlow& flow);

// Weak-duality upper bound from any nonnegative dual vector: D(y)/d where
// D(y) = sum c(e) y(e) and d is the exact minimum y-cost over L-bounded
// paths (hop DP or the exact length-budget DP, so the bound is unconditional
// in both modes). d = 0 yields +inf: a true but useless bound.
struct DualBound {
  double value = 0.0;
  // No L-feasible s-t path exists at all, which certifies OPT = 0 without
  // reference to y.
  bool opt_zero_certified = false;
};
DualBound dual_bound(const Network& net, const DualLengths& y, int L, LengthMode mode);

// Standalone re-verification of a solver run: never consults the oracle, so
// it works at scales where exact solving is infeasible.
struct Certificate {
  double primal_value = 0.0;
  double dual_bound = 0.0;
  double ratio = 0.0;  // dual_bound / primal_value; 1 when OPT = 0 certified
  bool feasible = false;
  bool l_bounded = false;
  bool opt_zero_certified = false;
  std::vector<std::string> details;
};

Certificate certify(const Network& net, const SolveResult& result, int L,
                    LengthMode mode, double rel_tol = 1e-9);

}  // namespace lbflow

#endif  // LBFLOW_CERTIFICATES_HPP
