#include "lbflow/certificates.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lbflow {

namespace {

void require_valid_ids(const Network& net, const PathFlow& flow) {
  for (const auto& [path, amount] : flow.entries)
    for (int id : path)
      if (id < 0 || id >= net.m())
        throw ParseError("flow references edge id " + std::to_string(id) +
                         " outside 0.." + std::to_string(net.m() - 1));
}

std::string describe_path(const Path& path) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
  os << ']';
  return os.str();
}

}  // namespace

CheckReport check_capacity_feasible(const Network& net, const PathFlow& flow,
                                    double rel_tol) {
  require_valid_ids(net, flow);
  CheckReport report;
  std::vector<double> totals = flow.edge_totals(net.m());
  for (int id = 0; id < net.m(); ++id) {
    const double cap = net.cap(id);
    if (totals[id] > cap * (1.0 + rel_tol)) {
      report.ok = false;
      std::ostringstream os;
      os << "capacity: edge " << id << " carries " << totals[id] << " > " << cap;
      report.violations.push_back(os.str());
    }
  }
  return report;
}

CheckReport check_l_bounded(const Network& net, const PathFlow& flow, int L,
                            LengthMode mode) {
  require_valid_ids(net, flow);
  CheckReport report;
  for (const auto& [path, amount] : flow.entries) {
    const long long len = path_length(net, path, mode);
    if (len > L) {
      report.ok = false;
      std::ostringstream os;
      os << "length: path " << describe_path(path) << " has " << to_string(mode)
         << "-length " << len << " > " << L;
      report.violations.push_back(os.str());
    }
  }
  return report;
}

CheckReport check_path_structure(const Network& net, const PathFlow& flow) {
  require_valid_ids(net, flow);
  CheckReport report;
  for (const auto& [path, amount] : flow.entries) {
    if (!is_simple_st_path(net, path)) {
      report.ok = false;
      report.violations.push_back("structure: " + describe_path(path) +
                                  " is not a simple s-t path");
    }
    if (!(amount > 0.0)) {
      report.ok = false;
      report.violations.push_back("structure: " + describe_path(path) +
                                  " carries a nonpositive amount");
    }
  }
  return report;
}

DualBound dual_bound(const Network& net, const DualLengths& y, int L, LengthMode mode) {
  SPResult sp = mode == LengthMode::Hop ? hop_shortest_path(net, y, L)
                                        : rcsp_exact(net, y, L);
  if (!sp.found()) return DualBound{0.0, true};
  KahanSum objective;
  for (int id = 0; id < net.m(); ++id) objective.add(net.cap(id) * y[id]);
  if (sp.cost <= 0.0)
    return DualBound{std::numeric_limits<double>::infinity(), false};
  return DualBound{objective.value() / sp.cost, false};
}

namespace {

// Tightest sound upper bound on OPT extractable from a run. The final duals
// give the plain bound D(y_tau)/d(y_tau), but idle edges stuck at the start
// value delta can inflate D badly when delta is large (small L). Shifting
// every dual down by delta keeps it nonnegative, so for every iterate y_i,
//   (D(i) - D(0)) / (alpha_i/(1+w) - delta*L)
// is also a weak-duality bound (any L-feasible path loses at most delta*L in
// the shift, and the recorded sentinel underestimates d(y_i) by at most the
// subroutine's (1+w) factor). The dual-growth recurrence puts the minimum of
// these within (1+eps_user) of the scaled primal, which the plain final
// bound alone does not guarantee. The replay below reproduces the engine's
// update arithmetic exactly, so the result is a pure function of the run.
double best_run_bound(const Network& net, const SolveResult& result) {
  const RunParams& p = result.params;
  const double shift_loss = p.delta * p.L;
  double best = std::numeric_limits<double>::infinity();

  DualLengths y(net.m(), p.delta);
  KahanSum d0_acc;
  for (int id = 0; id < net.m(); ++id) d0_acc.add(net.cap(id) * p.delta);
  const double d0 = d0_acc.value();
  KahanSum dual_objective;
  dual_objective.add(d0);

  auto consider = [&](double sentinel) {
    const double denom = sentinel / (1.0 + p.w) - shift_loss;
    const double numer = dual_objective.value() - d0;
    // numer == 0 means the shifted duals are identically zero: no bound at
    // all, not a bound of zero. It happens before the first update, where
    // rounding can also leave `denom` a few ulps above its true nonpositive
    // value, so both guards are needed.
    if (denom > 0.0 && numer > 0.0) best = std::min(best, numer / denom);
  };

  for (const IterationRecord& rec : result.trace.steps) {
    consider(rec.alpha);
    for (int id : rec.path) {
      const double growth = p.eps_internal * rec.bottleneck / net.cap(id);
      dual_objective.add(net.cap(id) * y[id] * growth);
      y[id] *= 1.0 + growth;
    }
  }
  if (std::isfinite(result.trace.exit_alpha)) consider(result.trace.exit_alpha);
  return best;
}

}  // namespace

Certificate certify(const Network& net, const SolveResult& result, int L,
                    LengthMode mode, double rel_tol) {
  Certificate cert;
  CheckReport cap = check_capacity_feasible(net, result.scaled, rel_tol);
  CheckReport len = check_l_bounded(net, result.scaled, L, mode);
  cert.feasible = cap.ok;
  cert.l_bounded = len.ok;
  cert.details = cap.violations;
  cert.details.insert(cert.details.end(), len.violations.begin(), len.violations.end());
  cert.primal_value = result.scaled.value();

  DualBound bound = dual_bound(net, result.final_duals, L, mode);
  if (bound.opt_zero_certified) {
    cert.opt_zero_certified = true;
    cert.dual_bound = 0.0;
    cert.ratio = 1.0;
    if (cert.primal_value != 0.0) {
      cert.feasible = false;
      cert.details.push_back("dual: no L-bounded path exists but primal value is nonzero");
    }
    return cert;
  }
  cert.dual_bound = std::min(bound.value, best_run_bound(net, result));
  cert.ratio = cert.primal_value > 0.0
                   ? cert.dual_bound / cert.primal_value
                   : std::numeric_limits<double>::infinity();
  return cert;
}

}  // namespace lbflow
