#ifndef LBFLOW_ORACLE_HPP
#define LBFLOW_ORACLE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lbflow/network.hpp"

namespace lbflow {

using Rational = boost::multiprecision::cpp_rational;

// Exact capacity of an edge (decimal digits over a power of ten).
Rational capacity_rational(const Edge& edge);

// Exact optimum of the path-packing LP over the enumerated L-bounded paths,
// with the optimal dual attached. Primal and dual objectives agree exactly
// (strong duality in rational arithmetic); ground truth for everything else.
struct RationalFlow {
  Rational value;
  std::map<Path, Rational> path_amounts;  // strictly positive entries only
  std::vector<Rational> dual_values;      // per edge id
  long long pivots = 0;                   // simplex pivot count
};

// Enumerates P_L (lexicographic id order) and solves the packing LP by a
// dense rational simplex with Bland's rule. Throws BudgetError when the
// enumeration exceeds `path_budget` or the tableau exceeds `cell_cap` cells;
// refuses rather than approximates.
RationalFlow exact_max_l_flow(const Network& net, int L, LengthMode mode,
                              std::size_t path_budget = 10000,
                              std::size_t cell_cap = 50'000'000);

// Classical (unbounded-length) maximum flow by BFS augmenting paths, exact.
// A flow decomposes into simple paths, so this equals the hop-mode optimum
// at L = n-1.
Rational max_flow_value(const Network& net);

// Runs the approximation at each epsilon and compares against the exact
// optimum: slack = scaled_value*(1+eps)/opt must stay >= 1 - 1e-9. OPT = 0
// instances require the solver to return exactly zero.
struct CrossCheckRow {
  double eps = 0.0;
  double scaled_value = 0.0;
  double slack = 0.0;
};
struct CrossCheckReport {
  Rational oracle_value;
  std::vector<CrossCheckRow> rows;
  double min_slack = 0.0;
  bool all_ok = true;
};
CrossCheckReport oracle_cross_check(const Network& net, int L, LengthMode mode,
                                    const std::vector<double>& eps_grid,
                                    std::size_t path_budget = 10000);

}  // namespace lbflow

#endif  // LBFLOW_ORACLE_HPP
