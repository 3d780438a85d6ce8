#include "lbflow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "lbflow/fptas.hpp"

namespace lbflow {

Rational capacity_rational(const Edge& edge) {
  boost::multiprecision::cpp_int den = 1;
  for (int i = 0; i < edge.capacity.scale; ++i) den *= 10;
  return Rational(boost::multiprecision::cpp_int(edge.capacity.units), den);
}

namespace {

// Dense tableau simplex for  max sum(x_P)  s.t.  Ax + s = c, x,s >= 0.
// Row 0 holds the reduced costs and the objective value in the rhs column;
// Bland's rule (smallest eligible index) on both the entering and the
// leaving choice keeps the run cycle-free and deterministic.
struct PackingSimplex {
  int rows;             // m constraints
  int path_cols;        // number of path variables
  int cols;             // path_cols + rows + 1 (rhs)
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;  // variable index per constraint row
  long long pivots = 0;

  PackingSimplex(const Network& net, const std::vector<Path>& paths,
                 std::size_t cell_cap)
      : rows(net.m()),
        path_cols(static_cast<int>(paths.size())),
        cols(path_cols + rows + 1) {
    const std::size_t cells =
        (static_cast<std::size_t>(rows) + 1) * static_cast<std::size_t>(cols);
    if (cells > cell_cap)
      throw BudgetError("oracle LP tableau of " + std::to_string(cells) +
                        " cells exceeds cap " + std::to_string(cell_cap));
    t.assign(rows + 1, std::vector<Rational>(cols));
    for (int j = 0; j < path_cols; ++j) {
      t[0][j] = -1;
      for (int id : paths[j]) t[1 + id][j] += 1;
    }
    basis.resize(rows);
    for (int i = 0; i < rows; ++i) {
      t[1 + i][path_cols + i] = 1;
      t[1 + i][cols - 1] = capacity_rational(net.edges[i]);
      basis[i] = path_cols + i;
    }
  }

  void pivot(int row, int col) {
    const Rational inv = 1 / t[row][col];
    for (int j = 0; j < cols; ++j)
      if (t[row][j] != 0) t[row][j] *= inv;
    for (int i = 0; i <= rows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational factor = t[i][col];
      for (int j = 0; j < cols; ++j)
        if (t[row][j] != 0) t[i][j] -= factor * t[row][j];
    }
    basis[row - 1] = col;
    ++pivots;
  }

  void solve() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols - 1; ++j) {
        if (t[0][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      Rational best_ratio;
      for (int i = 1; i <= rows; ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = t[i][cols - 1] / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i - 1] < basis[leave - 1])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0)
        throw InternalError("oracle LP unbounded; packing LP cannot be");
      pivot(leave, enter);
    }
  }
};

}  // namespace

RationalFlow exact_max_l_flow(const Network& net, int L, LengthMode mode,
                              std::size_t path_budget, std::size_t cell_cap) {
  net.validate();
  std::vector<Path> paths = enumerate_l_bounded_paths(net, L, mode, path_budget);

  RationalFlow out;
  out.dual_values.assign(net.m(), Rational(0));
  if (paths.empty()) return out;  // P_L empty: optimum 0, zero dual

  PackingSimplex lp(net, paths, cell_cap);
  lp.solve();
  out.pivots = lp.pivots;
  out.value = lp.t[0][lp.cols - 1];
  for (int i = 0; i < lp.rows; ++i) {
    const int var = lp.basis[i];
    if (var < lp.path_cols && lp.t[1 + i][lp.cols - 1] != 0)
      out.path_amounts[paths[var]] = lp.t[1 + i][lp.cols - 1];
  }
  for (int id = 0; id < net.m(); ++id)
    out.dual_values[id] = lp.t[0][lp.path_cols + id];

  // Exact optimality certificates; failure here is a solver bug.
  Rational dual_objective = 0;
  for (int id = 0; id < net.m(); ++id) {
    if (out.dual_values[id] < 0)
      throw InternalError("oracle dual has a negative entry");
    dual_objective += capacity_rational(net.edges[id]) * out.dual_values[id];
  }
  if (dual_objective != out.value)
    throw InternalError("oracle strong duality violated");
  for (const Path& path : paths) {
    Rational along = 0;
    for (int id : path) along += out.dual_values[id];
    if (along < 1) throw InternalError("oracle dual infeasible on a path");
  }
  return out;
}

Rational max_flow_value(const Network& net) {
  const int m = net.m();
  std::vector<Rational> cap(m), flow(m, Rational(0));
  for (int id = 0; id < m; ++id) cap[id] = capacity_rational(net.edges[id]);
  std::vector<std::vector<int>> out(net.vertex_count), in(net.vertex_count);
  for (int id = 0; id < m; ++id) {
    out[net.edges[id].tail].push_back(id);
    in[net.edges[id].head].push_back(id);
  }

  Rational total = 0;
  while (true) {
    // BFS over the residual graph; parent edge, +1 forward or -1 backward.
    std::vector<int> parent_edge(net.vertex_count, -1);
    std::vector<int> parent_dir(net.vertex_count, 0);
    std::vector<char> seen(net.vertex_count, 0);
    std::queue<int> queue;
    queue.push(net.source);
    seen[net.source] = 1;
    while (!queue.empty() && !seen[net.sink]) {
      const int v = queue.front();
      queue.pop();
      for (int id : out[v]) {
        const int h = net.edges[id].head;
        if (!seen[h] && flow[id] < cap[id]) {
          seen[h] = 1;
          parent_edge[h] = id;
          parent_dir[h] = 1;
          queue.push(h);
        }
      }
      for (int id : in[v]) {
        const int tl = net.edges[id].tail;
        if (!seen[tl] && flow[id] > 0) {
          seen[tl] = 1;
          parent_edge[tl] = id;
          parent_dir[tl] = -1;
          queue.push(tl);
        }
      }
    }
    if (!seen[net.sink]) break;

    Rational bottleneck;
    bool first = true;
    for (int v = net.sink; v != net.source;) {
      const int id = parent_edge[v];
      const Rational residual =
          parent_dir[v] > 0 ? cap[id] - flow[id] : flow[id];
      if (first || residual < bottleneck) bottleneck = residual;
      first = false;
      v = parent_dir[v] > 0 ? net.edges[id].tail : net.edges[id].head;
    }
    for (int v = net.sink; v != net.source;) {
      const int id = parent_edge[v];
      if (parent_dir[v] > 0) {
        flow[id] += bottleneck;
        v = net.edges[id].tail;
      } else {
        flow[id] -= bottleneck;
        v = net.edges[id].head;
      }
    }
    total += bottleneck;
  }
  return total;
}

CrossCheckReport oracle_cross_check(const Network& net, int L, LengthMode mode,
                                    const std::vector<double>& eps_grid,
                                    std::size_t path_budget) {
  CrossCheckReport report;
  RationalFlow opt = exact_max_l_flow(net, L, mode, path_budget);
  report.oracle_value = opt.value;
  const double opt_value = static_cast<double>(opt.value);
  report.min_slack = std::numeric_limits<double>::infinity();

  for (double eps : eps_grid) {
    SolveResult run = mode == LengthMode::Hop ? approx_unit(net, L, eps)
                                              : approx_general(net, L, eps);
    CrossCheckRow row;
    row.eps = eps;
    row.scaled_value = run.scaled.value();
    if (opt_value == 0.0) {
      row.slack = row.scaled_value == 0.0 ? 1.0 : 0.0;
    } else {
      row.slack = row.scaled_value * (1.0 + eps) / opt_value;
    }
    report.min_slack = std::min(report.min_slack, row.slack);
    report.rows.push_back(row);
  }
  report.all_ok = report.min_slack >= 1.0 - 1e-9;
  return report;
}

}  // namespace lbflow
