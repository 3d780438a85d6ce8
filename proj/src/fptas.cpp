#include "lbflow/fptas.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace lbflow {

RunParams derive_params(double eps_user, int L, int m, LengthMode mode) {
  if (!(eps_user > 0.0) || !(eps_user < 1.0))
    throw ParamError("eps must lie in (0,1), got " + std::to_string(eps_user));
  if (L < 1) throw ParamError("L must be >= 1");
  if (m < 0) throw ParamError("negative edge count");

  RunParams p;
  p.eps_user = eps_user;
  p.mode = mode;
  p.L = L;
  if (mode == LengthMode::Hop) {
    p.eps_internal = eps_user / 3.0;
    p.w = 0.0;
  } else {
    p.eps_internal = eps_user / 5.0;
    p.w = p.eps_internal;
  }
  const double a = (1.0 + p.eps_internal) * (1.0 + p.w);
  p.delta = a * std::exp(-std::log(a * L) / p.eps_internal);
  if (!(p.delta >= 1e-300))
    throw ParamError("delta underflow (" + std::to_string(p.delta) +
                     "); use a larger eps or a smaller L");
  p.scale_factor = std::log(a / p.delta) / std::log1p(p.eps_internal);
  p.max_iterations = 10 * static_cast<long long>(std::ceil(m * p.scale_factor));
  return p;
}

long long iteration_bound(const RunParams& params, int m) {
  return static_cast<long long>(m) *
         static_cast<long long>(std::ceil(params.scale_factor));
}

void PathFlow::add(const Path& path, double amount) {
  entries[path] += amount;
}

double PathFlow::value() const {
  KahanSum total;
  for (const auto& [path, amount] : entries) total.add(amount);
  return total.value();
}

std::vector<double> PathFlow::edge_totals(int m) const {
  std::vector<KahanSum> acc(m);
  for (const auto& [path, amount] : entries)
    for (int id : path) acc[id].add(amount);
  std::vector<double> totals(m);
  for (int id = 0; id < m; ++id) totals[id] = acc[id].value();
  return totals;
}

PathFlow scale_flow(const PathFlow& raw, double factor) {
  if (!(factor > 0.0)) throw ParamError("scale_flow: factor must be positive");
  PathFlow scaled;
  for (const auto& [path, amount] : raw.entries)
    scaled.entries.emplace(path, amount / factor);
  return scaled;
}

namespace {

SolveResult run_engine(const Network& net, int L, double eps_user, LengthMode mode) {
  net.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const int m = net.m();
  RunParams params = derive_params(eps_user, L, m, mode);
  const double eps = params.eps_internal;
  const double stop = 1.0 + params.w;

  SolveResult result;
  result.params = params;
  DualLengths y(m, params.delta);
  KahanSum flow_size;

  // Valid optimum bounds carried between the general-mode subroutine calls:
  // duals only grow, so the previous cost/(1+w) stays a lower bound, and the
  // previous path re-costed under the new duals is an upper bound.
  double warm_lb = 0.0, warm_ub = 0.0;

  for (long long iter = 1;; ++iter) {
    SPResult sp = mode == LengthMode::Hop
                      ? hop_shortest_path(net, y, L)
                      : rcsp_approx_bounded(net, y, L, params.w, warm_lb, warm_ub);
    if (!sp.found()) {
      if (iter > 1)
        throw InternalError("shortest path vanished mid-run");
      // No L-bounded s-t path at all: the optimum is zero.
      result.trace.exit_alpha = std::numeric_limits<double>::infinity();
      break;
    }
    if (sp.cost >= stop) {
      result.trace.exit_alpha = sp.cost;
      break;
    }
    if (iter > params.max_iterations)
      throw InternalError("iteration cap " + std::to_string(params.max_iterations) +
                          " exceeded; proven bound violated");

    const Path& path = *sp.path;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (int id : path) bottleneck = std::min(bottleneck, net.cap(id));

    result.raw.add(path, bottleneck);
    flow_size.add(bottleneck);
    for (int id : path) y[id] *= 1.0 + eps * bottleneck / net.cap(id);

    result.trace.steps.push_back(
        IterationRecord{iter, path, bottleneck, sp.cost, flow_size.value()});

    if (mode == LengthMode::General) {
      double recost = 0.0;
      for (int id : path) recost += y[id];
      warm_lb = sp.cost / (1.0 + params.w) * (1.0 - 1e-12);
      warm_ub = recost * (1.0 + 1e-12);
    }
  }

  result.final_duals = std::move(y);
  result.scaled = scale_flow(result.raw, params.scale_factor);
  result.trace.iterations = static_cast<long long>(result.trace.steps.size());
  result.trace.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace

SolveResult approx_unit(const Network& net, int L, double eps_user) {
  return run_engine(net, L, eps_user, LengthMode::Hop);
}

SolveResult approx_general(const Network& net, int L, double eps_user) {
  return run_engine(net, L, eps_user, LengthMode::General);
}

}  // namespace lbflow
