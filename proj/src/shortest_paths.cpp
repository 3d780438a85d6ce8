#include "lbflow/shortest_paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace lbflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Removes cycles from an s-t walk by truncating back to the first occurrence
// of a revisited vertex. With nonnegative costs this never increases the
// y-cost, and it never increases any length measure.
Path simplify_walk(const Network& net, const Path& walk) {
  std::vector<int> pos(net.vertex_count, -1);
  Path out;
  pos[net.source] = 0;
  for (int id : walk) {
    const Edge& e = net.edges[id];
    if (pos[e.head] >= 0) {
      for (std::size_t i = pos[e.head]; i < out.size(); ++i)
        pos[net.edges[out[i]].head] = -1;
      out.resize(pos[e.head]);
    } else {
      out.push_back(id);
      pos[e.head] = static_cast<int>(out.size());
    }
  }
  return out;
}

double path_cost(const DualLengths& y, const Path& path) {
  double total = 0.0;
  for (int id : path) total += y[id];
  return total;
}

// Layered DP over (layer, vertex) cells where traversing edge e advances the
// layer by weight(e) >= 1. weight = 1 gives the hop-bounded problem, weight =
// edge length the exact resource-constrained one. Equal-cost ties keep the
// lexicographically smallest edge-id sequence.
template <typename WeightFn>
SPResult layered_min_cost_path(const Network& net, const DualLengths& y, int L,
                               WeightFn weight) {
  const int n = net.vertex_count;
  const int m = net.m();
  const std::size_t layers = static_cast<std::size_t>(L) + 1;
  std::vector<double> dist(layers * n, kInf);
  std::vector<std::int32_t> pred(layers * n, -1);
  dist[net.source] = 0.0;

  auto cell = [n](int layer, int v) { return static_cast<std::size_t>(layer) * n + v; };
  auto reconstruct = [&](int layer, int v) {
    Path path;
    while (true) {
      std::int32_t e = pred[cell(layer, v)];
      if (e < 0) break;
      path.push_back(e);
      layer -= weight(e);
      v = net.edges[e].tail;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (int layer = 1; layer <= L; ++layer) {
    for (int id = 0; id < m; ++id) {
      const int w = weight(id);
      if (w > layer) continue;
      const Edge& e = net.edges[id];
      const double base = dist[cell(layer - w, e.tail)];
      if (base == kInf) continue;
      const double cand = base + y[id];
      double& cur = dist[cell(layer, e.head)];
      if (cand < cur) {
        cur = cand;
        pred[cell(layer, e.head)] = id;
      } else if (cand == cur) {
        Path mine = reconstruct(layer - w, e.tail);
        mine.push_back(id);
        if (mine < reconstruct(layer, e.head)) pred[cell(layer, e.head)] = id;
      }
    }
  }

  double best = kInf;
  Path best_path;
  for (int layer = 1; layer <= L; ++layer) {
    const double d = dist[cell(layer, net.sink)];
    if (d == kInf || d > best) continue;
    Path cand = reconstruct(layer, net.sink);
    if (d < best || cand < best_path) {
      best = d;
      best_path = std::move(cand);
    }
  }
  if (best == kInf) return {};

  Path simple = simplify_walk(net, best_path);
  return SPResult{simple, path_cost(y, simple)};
}

}  // namespace

SPResult hop_shortest_path(const Network& net, const DualLengths& y, int L) {
  if (L < 1) throw ParamError("hop_shortest_path: L must be >= 1");
  // No simple path has more than n-1 edges, and with nonnegative costs every
  // longer walk shortcuts to one, so extra layers cannot change the optimum.
  const int layers = std::min(L, net.vertex_count - 1);
  return layered_min_cost_path(net, y, layers, [](int) { return 1; });
}

SPResult rcsp_exact(const Network& net, const DualLengths& y, int L,
                    std::size_t table_cap) {
  if (L < 1) throw ParamError("rcsp_exact: L must be >= 1");
  const std::size_t cells =
      (static_cast<std::size_t>(L) + 1) * static_cast<std::size_t>(net.vertex_count);
  if (cells > table_cap)
    throw ParamError("rcsp_exact: DP table of " + std::to_string(cells) +
                     " cells exceeds cap " + std::to_string(table_cap));
  return layered_min_cost_path(net, y, L,
                               [&net](int id) { return net.edges[id].length; });
}

// ---- Approximate restricted shortest path ------------------------------------

namespace {

// Minimum total edge length of an s-t walk restricted to edges with
// y(e) <= cost_cap. Lengths are >= 1, so the optimum walk is a simple path;
// predecessors reconstruct it. Returns nothing when t is unreachable.
struct MinLengthResult {
  long long length = 0;
  Path path;
};

std::optional<MinLengthResult> min_length_path(const Network& net, const DualLengths& y,
                                               double cost_cap) {
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(net.vertex_count, inf);
  std::vector<std::int32_t> pred(net.vertex_count, -1);
  dist[net.source] = 0;
  for (int round = 0; round < net.vertex_count; ++round) {
    bool changed = false;
    for (int id = 0; id < net.m(); ++id) {
      if (y[id] > cost_cap) continue;
      const Edge& e = net.edges[id];
      if (dist[e.tail] == inf) continue;
      const long long cand = dist[e.tail] + e.length;
      if (cand < dist[e.head]) {
        dist[e.head] = cand;
        pred[e.head] = id;
        changed = true;
      }
    }
    if (!changed) break;
  }
  if (dist[net.sink] == inf) return std::nullopt;
  Path path;
  for (int v = net.sink; v != net.source;) {
    const int e = pred[v];
    path.push_back(e);
    v = net.edges[e].tail;
  }
  std::reverse(path.begin(), path.end());
  return MinLengthResult{dist[net.sink], path};
}

// Minimum y-cost of an s-t walk ignoring the length budget (lower bound on
// the constrained optimum). Plain Bellman-Ford over nonnegative costs.
double unconstrained_min_cost(const Network& net, const DualLengths& y) {
  std::vector<double> dist(net.vertex_count, kInf);
  dist[net.source] = 0.0;
  for (int round = 0; round < net.vertex_count; ++round) {
    bool changed = false;
    for (int id = 0; id < net.m(); ++id) {
      const Edge& e = net.edges[id];
      if (dist[e.tail] == kInf) continue;
      const double cand = dist[e.tail] + y[id];
      if (cand < dist[e.head]) {
        dist[e.head] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist[net.sink];
}

// DP over integer costs rounded at granularity `grain`: g(b, v) = minimum
// total length of an s-t walk whose rounded cost is at most b. Scans budgets
// upward and stops at the first b where the sink becomes reachable within L,
// which is the rounded-cost minimizer among length-feasible paths.
std::optional<Path> scaled_cost_dp(const Network& net, const DualLengths& y, int L,
                                   double grain, std::size_t max_budget,
                                   std::size_t table_cap) {
  const int n = net.vertex_count;
  const int m = net.m();
  const std::size_t cells = (max_budget + 1) * static_cast<std::size_t>(n);
  if (cells > table_cap)
    throw ParamError("rcsp_approx: scaled DP of " + std::to_string(cells) +
                     " cells exceeds cap " + std::to_string(table_cap));

  // Edges whose rounded cost already exceeds the budget can never be used;
  // clamp before casting so huge y/grain ratios stay well-defined.
  std::vector<std::int64_t> rounded(m);
  const double clamp = static_cast<double>(max_budget) + 1.0;
  for (int id = 0; id < m; ++id) {
    const double r = std::floor(y[id] / grain);
    rounded[id] = r >= clamp ? static_cast<std::int64_t>(clamp)
                             : static_cast<std::int64_t>(r) + 1;
  }

  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> g(cells, inf);
  // pred: edge id, or -2 for "copy from previous budget", -1 for none.
  std::vector<std::int32_t> pred(cells, -1);
  auto cell = [n](std::size_t b, int v) { return b * n + v; };
  g[cell(0, net.source)] = 0;

  for (std::size_t b = 0; b <= max_budget; ++b) {
    if (b > 0) {
      for (int v = 0; v < n; ++v) {
        if (g[cell(b - 1, v)] < g[cell(b, v)]) {
          g[cell(b, v)] = g[cell(b - 1, v)];
          pred[cell(b, v)] = -2;
        }
      }
    }
    for (int id = 0; id < m; ++id) {
      if (rounded[id] > static_cast<std::int64_t>(b)) continue;
      const Edge& e = net.edges[id];
      const long long base = g[cell(b - rounded[id], e.tail)];
      if (base == inf) continue;
      const long long cand = base + e.length;
      if (cand < g[cell(b, e.head)]) {
        g[cell(b, e.head)] = cand;
        pred[cell(b, e.head)] = id;
      }
    }
    if (g[cell(b, net.sink)] <= L) {
      Path path;
      std::size_t bb = b;
      int v = net.sink;
      while (v != net.source || g[cell(bb, v)] != 0) {
        const std::int32_t p = pred[cell(bb, v)];
        if (p == -2) {
          --bb;
        } else {
          path.push_back(p);
          bb -= static_cast<std::size_t>(rounded[p]);
          v = net.edges[p].tail;
        }
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
  }
  return std::nullopt;
}

SPResult approx_from_bounds(const Network& net, const DualLengths& y, int L, double w,
                            double lb, double ub, std::size_t table_cap) {
  const int n = net.vertex_count;

  // Geometric-mean tests shrink ub/lb to a small constant so the final DP
  // budget stays O(n/w). Each test either raises lb (no path of cost <= V)
  // or lowers ub (a witness path was found).
  for (int guard = 0; guard < 100 && ub > 6.0 * lb; ++guard) {
    const double v = std::sqrt(lb * ub);
    const double theta = 0.5;
    const double grain = v * theta / (3.0 * n);
    const std::size_t budget =
        static_cast<std::size_t>(std::ceil(v / grain)) + 2 * static_cast<std::size_t>(n);
    std::optional<Path> witness = scaled_cost_dp(net, y, L, grain, budget, table_cap);
    if (witness) {
      ub = std::min(ub, path_cost(y, *witness));
    } else {
      lb = v;
    }
  }

  const double grain = lb * w / (3.0 * n);
  const std::size_t budget =
      static_cast<std::size_t>(std::ceil(ub / grain)) + 2 * static_cast<std::size_t>(n);
  std::optional<Path> path = scaled_cost_dp(net, y, L, grain, budget, table_cap);
  if (!path)
    throw InternalError("rcsp_approx: final DP found no path despite feasible bounds");
  Path simple = simplify_walk(net, *path);
  return SPResult{simple, path_cost(y, simple)};
}

}  // namespace

SPResult rcsp_approx(const Network& net, const DualLengths& y, int L, double w,
                     std::size_t table_cap) {
  if (L < 1) throw ParamError("rcsp_approx: L must be >= 1");
  if (!(w > 0.0)) throw ParamError("rcsp_approx: w must be positive");

  std::optional<MinLengthResult> any = min_length_path(net, y, kInf);
  if (!any || any->length > L) return {};

  // Threshold search: the smallest distinct edge cost c* whose subgraph
  // {e : y(e) <= c*} still admits a length-feasible path. Every feasible
  // path then uses an edge of cost >= c*, so c* <= OPT; the witness path is
  // simple, so its cost is a valid upper bound.
  std::vector<double> costs(y.begin(), y.end());
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  std::size_t lo = 0, hi = costs.size() - 1;
  std::optional<MinLengthResult> witness;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::optional<MinLengthResult> r = min_length_path(net, y, costs[mid]);
    if (r && r->length <= L) {
      hi = mid;
      witness = std::move(r);
    } else {
      lo = mid + 1;
    }
  }
  if (!witness) witness = min_length_path(net, y, costs[lo]);
  const double threshold = costs[lo];

  if (threshold == 0.0) {
    // A feasible path over zero-cost edges is exactly optimal.
    Path simple = simplify_walk(net, witness->path);
    return SPResult{simple, path_cost(y, simple)};
  }

  const double unconstrained = unconstrained_min_cost(net, y);
  const double lb = std::max(threshold, unconstrained);
  const double ub = std::max(lb, path_cost(y, witness->path));
  return approx_from_bounds(net, y, L, w, lb, ub, table_cap);
}

SPResult rcsp_approx_bounded(const Network& net, const DualLengths& y, int L,
                             double w, double cost_lb, double cost_ub,
                             std::size_t table_cap) {
  if (L < 1) throw ParamError("rcsp_approx_bounded: L must be >= 1");
  if (!(w > 0.0)) throw ParamError("rcsp_approx_bounded: w must be positive");
  if (!(cost_lb > 0.0) || !(cost_ub >= cost_lb))
    return rcsp_approx(net, y, L, w, table_cap);
  return approx_from_bounds(net, y, L, w, cost_lb, cost_ub, table_cap);
}

}  // namespace lbflow
