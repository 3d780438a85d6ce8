#ifndef LBFLOW_FPTAS_HPP
#define LBFLOW_FPTAS_HPP

#include <map>
#include <vector>

#include "lbflow/network.hpp"
#include "lbflow/shortest_paths.hpp"

namespace lbflow {

// Compensated (Kahan) accumulator; keeps the post-run feasibility checks
// inside their 1e-9 relative tolerance even over many small additions.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = x - comp;
    const double s = sum + t;
    comp = (s - sum) - t;
    sum = s;
  }
  double value() const { return sum; }
};

// Internal parameters of one solver run, all derived from the user epsilon.
//
//   hop mode:     eps' = eps/3, w = 0,    delta = (1+eps') / ((1+eps')L)^(1/eps')
//   general mode: eps' = eps/5, w = eps', delta = (1+eps')(1+w) / ((1+eps')(1+w)L)^(1/eps')
//
// scale_factor = log_{1+eps'}((1+eps')(1+w)/delta) restores capacity
// feasibility when the raw iterate is divided by it.
struct RunParams {
  double eps_user = 0.0;
  double eps_internal = 0.0;
  double delta = 0.0;
  double w = 0.0;
  double scale_factor = 0.0;
  long long max_iterations = 0;
  LengthMode mode = LengthMode::Hop;
  int L = 0;
};

// Throws ParamError unless 0 < eps_user < 1 and delta stays representable
// (delta >= 1e-300); smaller eps or larger L must be rejected, not rounded.
RunParams derive_params(double eps_user, int L, int m, LengthMode mode);

// Proven cap on iterations: m * ceil(scale_factor). Exceeding it means a bug.
long long iteration_bound(const RunParams& params, int m);

// Path-indexed flow; the primal object. Entries are strictly positive.
struct PathFlow {
  std::map<Path, double> entries;

  void add(const Path& path, double amount);
  double value() const;
  std::vector<double> edge_totals(int m) const;
  bool empty() const { return entries.empty(); }
};

// Divides every entry by `factor` (single division per entry).
PathFlow scale_flow(const PathFlow& raw, double factor);

// One routing step: the path chosen, its bottleneck capacity, the sentinel
// cost the while-test saw (exact shortest-path cost in hop mode, the
// (1+w)-approximate cost in general mode), and the flow size afterwards.
struct IterationRecord {
  long long iteration = 0;
  Path path;
  double bottleneck = 0.0;
  double alpha = 0.0;
  double flow_after = 0.0;
};

struct SolveTrace {
  std::vector<IterationRecord> steps;
  double exit_alpha = 0.0;  // sentinel value that stopped the loop
  long long iterations = 0;
  double runtime_ms = 0.0;
};

struct SolveResult {
  PathFlow raw;        // pre-scaling iterate
  PathFlow scaled;     // raw / scale_factor; the deliverable
  DualLengths final_duals;
  RunParams params;
  SolveTrace trace;
};

// Multiplicative-weights routing loop for unit edge lengths: repeatedly send
// the bottleneck capacity along the cheapest <=L-hop path under the duals and
// inflate the traversed duals, until that cheapest cost reaches 1. The
// scaled output is capacity-feasible and within (1+eps_user) of the maximum
// L-bounded flow.
SolveResult approx_unit(const Network& net, int L, double eps_user);

// Same loop for general edge lengths, with the (1+w)-approximate restricted
// shortest path as the routing subroutine and stop threshold 1+w.
SolveResult approx_general(const Network& net, int L, double eps_user);

}  // namespace lbflow

#endif  // LBFLOW_FPTAS_HPP
