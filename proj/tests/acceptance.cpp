// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is checked at the stated tolerance; runs are
// shared across criteria where they assert different properties of the same
// sweep.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lbflow/certificates.hpp"
#include "lbflow/cli.hpp"
#include "lbflow/fptas.hpp"
#include "lbflow/network.hpp"
#include "lbflow/oracle.hpp"
#include "lbflow/shortest_paths.hpp"
#include "support/brute_force.hpp"

using namespace lbflow;

namespace {

struct Criterion {
  std::string name;
  bool ok = true;
  long long checks = 0;
  std::string first_failure;

  void expect(bool condition, const std::string& detail) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      first_failure = detail;
    } else if (!condition) {
      ok = false;
    }
  }
};

std::string describe(const Network& net, int L, LengthMode mode, double eps) {
  std::ostringstream os;
  os << "n=" << net.vertex_count << " m=" << net.m() << " L=" << L << " mode="
     << to_string(mode) << " eps=" << eps;
  return os.str();
}

}  // namespace

int main() {
  const auto t_start = std::chrono::steady_clock::now();
  const std::vector<double> eps_grid{0.1, 0.3, 0.5};

  Criterion c1{"guarantee: scaled*(1+eps) >= oracle - 1e-9"};
  Criterion c2{"feasibility: capacities within 1e-9, paths within L"};
  Criterion c3{"dual cap and iteration bound"};
  Criterion c4{"restricted shortest path contract"};
  Criterion c5{"certificate soundness and negative controls"};
  Criterion c6{"oracle self-consistency"};
  Criterion c7{"counterexample fixture"};
  Criterion c8{"iteration trend in eps"};

  // ---- Instance sweep: criteria 1, 2, 3, 5, 6 share these runs. ----------
  std::mt19937_64 sampler(20260810);
  std::vector<std::pair<Network, int>> instances;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(sampler() % 7);   // <= 8
    const int m = 1 + static_cast<int>(sampler() % 20);  // <= 20
    const int L = 1 + static_cast<int>(sampler() % 6);   // <= 6
    instances.emplace_back(
        generate_random(n, m, 1.0, 10.0, 1, 3, sampler()), L);
  }
  {
    Fixture fx = counterexample_fixture();
    instances.emplace_back(fx.net, fx.L);
  }

  for (const auto& [net, L] : instances) {
    for (LengthMode mode : {LengthMode::Hop, LengthMode::General}) {
      RationalFlow opt = exact_max_l_flow(net, L, mode);
      const double opt_value = static_cast<double>(opt.value);

      // Criterion 6 (first half): exact primal equals exact dual.
      Rational dual_objective = 0;
      for (int id = 0; id < net.m(); ++id)
        dual_objective += capacity_rational(net.edges[id]) * opt.dual_values[id];
      Rational primal = 0;
      for (const auto& [path, amount] : opt.path_amounts) primal += amount;
      c6.expect(dual_objective == opt.value && primal == opt.value,
                "strong duality broke on " + describe(net, L, mode, 0));

      for (double eps : eps_grid) {
        SolveResult run = mode == LengthMode::Hop ? approx_unit(net, L, eps)
                                                  : approx_general(net, L, eps);
        const std::string tag = describe(net, L, mode, eps);
        const double value = run.scaled.value();

        c1.expect(value * (1.0 + eps) >= opt_value - 1e-9,
                  tag + ": value " + std::to_string(value) + " vs oracle " +
                      std::to_string(opt_value));

        const CheckReport cap = check_capacity_feasible(net, run.scaled, 1e-9);
        const CheckReport len = check_l_bounded(net, run.scaled, L, mode);
        c2.expect(cap.ok && len.ok,
                  tag + (cap.ok ? ": length violation" : ": capacity violation"));

        const double dual_cap =
            (1.0 + run.params.eps_internal) * (1.0 + run.params.w);
        bool duals_ok = true;
        for (int id = 0; id < net.m(); ++id)
          duals_ok = duals_ok && run.final_duals[id] < dual_cap;
        c3.expect(duals_ok, tag + ": dual cap exceeded");
        c3.expect(run.trace.iterations <= iteration_bound(run.params, net.m()),
                  tag + ": " + std::to_string(run.trace.iterations) +
                      " iterations exceed the proven bound");

        Certificate cert = certify(net, run, L, mode);
        if (cert.opt_zero_certified) {
          c5.expect(cert.primal_value == 0.0 && opt_value == 0.0,
                    tag + ": OPT=0 certificate disagrees with the oracle");
        } else {
          c5.expect(cert.feasible && cert.l_bounded && cert.ratio >= 1.0 - 1e-9 &&
                        cert.ratio <= (1.0 + eps) * (1.0 + 1e-6),
                    tag + ": certificate ratio " + std::to_string(cert.ratio));
        }
      }
    }
  }

  // Criterion 5 (second half): tampered flows must be rejected by verify,
  // both via the certificate check and via the actual verify command.
  {
    Fixture fx = counterexample_fixture();
    SolveResult run = approx_unit(fx.net, fx.L, 0.3);
    SolveResult tampered = run;
    tampered.scaled.entries.begin()->second *= 2.0;
    Certificate cert = certify(fx.net, tampered, fx.L, LengthMode::Hop);
    c5.expect(!cert.feasible, "doubled entry passed the capacity check");

    const std::string net_file = "acceptance_fixture.net";
    const std::string doc_file = "acceptance_result.json";
    {
      std::ofstream nf(net_file);
      serialize_network(fx.net, nf);
    }
    cli::SolveArgs solve_args;
    solve_args.input = net_file;
    solve_args.L = fx.L;
    solve_args.eps = 0.3;
    std::ostringstream doc, errs;
    c5.expect(cli::cmd_solve(solve_args, doc, errs) == cli::kExitOk,
              "solve command failed on the fixture");
    {
      std::ofstream df(doc_file);
      df << doc.str();
    }
    std::ostringstream vout, verr;
    c5.expect(cli::cmd_verify(cli::VerifyArgs{net_file, doc_file}, vout, verr) ==
                  cli::kExitOk,
              "verify rejected an untampered document");
    {
      // Double the first amount in place; the document must now fail.
      std::string text = doc.str();
      const std::string key = "\"amount\": ";
      const std::size_t at = text.find(key);
      c5.expect(at != std::string::npos, "no amount field in the document");
      if (at != std::string::npos) {
        std::size_t end = text.find_first_of(",\n}", at + key.size());
        const double amount = std::stod(text.substr(at + key.size(), end));
        text.replace(at + key.size(), end - at - key.size(),
                     std::to_string(amount * 2.0));
        std::ofstream df(doc_file);
        df << text;
      }
      std::ostringstream tout, terr;
      c5.expect(cli::cmd_verify(cli::VerifyArgs{net_file, doc_file}, tout, terr) ==
                    cli::kExitVerifyFailed,
                "verify accepted a tampered document");
    }
    std::remove(net_file.c_str());
    std::remove(doc_file.c_str());
  }

  // Criterion 4: rcsp_approx contract on 500 tuples, exact DP vs brute force.
  {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> ydist(0.0, 1.0);
    const double w_grid[3] = {0.05, 0.2, 1.0};
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int m = 1 + static_cast<int>(rng() % 20);
      Network net = generate_random(n, m, 1.0, 10.0, 1, 3, rng());
      DualLengths y(net.m());
      for (double& v : y) v = (rng() % 10 == 0) ? 0.0 : ydist(rng);
      const int L = 1 + static_cast<int>(rng() % 7);
      const double w = w_grid[trial % 3];

      SPResult exact = rcsp_exact(net, y, L);
      SPResult approx = rcsp_approx(net, y, L, w);
      c4.expect(exact.found() == approx.found(),
                "feasibility disagreement on tuple " + std::to_string(trial));
      if (exact.found() && approx.found()) {
        c4.expect(path_length(net, *approx.path, LengthMode::General) <= L,
                  "length budget violated on tuple " + std::to_string(trial));
        c4.expect(approx.cost <= (1.0 + w) * exact.cost + 1e-12,
                  "cost ratio violated on tuple " + std::to_string(trial) + ": " +
                      std::to_string(approx.cost) + " vs exact " +
                      std::to_string(exact.cost));
      }
      if (n <= 7) {
        const double bf = lbflow::testing::bf_min_cost(net, y, L, LengthMode::General);
        if (std::isinf(bf)) {
          c4.expect(!exact.found(), "exact DP found a path brute force rules out");
        } else {
          c4.expect(exact.found() &&
                        std::abs(exact.cost - bf) <= 1e-12 * std::max(1.0, bf),
                    "exact DP disagrees with brute force on tuple " +
                        std::to_string(trial));
        }
      }
    }
  }

  // Criterion 6 (second half): hop oracle at L = n-1 equals classical max flow.
  {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int m = 1 + static_cast<int>(rng() % 16);
      Network net = generate_random(n, m, 1.0, 10.0, 1, 1, rng());
      RationalFlow lp = exact_max_l_flow(net, net.vertex_count - 1, LengthMode::Hop);
      c6.expect(lp.value == max_flow_value(net),
                "L=n-1 oracle differs from augmenting-path max flow, trial " +
                    std::to_string(trial));
    }
  }

  // Criterion 7: the fixture's ground truth and the eps=0.1 bracket.
  {
    Fixture fx = counterexample_fixture();
    RationalFlow opt = exact_max_l_flow(fx.net, fx.L, LengthMode::Hop);
    c7.expect(opt.value == 2, "fixture optimum is not exactly 2");
    SolveResult run = approx_unit(fx.net, fx.L, 0.1);
    const double value = run.scaled.value();
    c7.expect(value >= 2.0 / 1.1 - 1e-9 && value <= 2.0 + 1e-9,
              "fixture value " + std::to_string(value) + " outside [2/1.1, 2]");
  }

  // Criterion 8: iterations are nonincreasing in eps at fixed instances.
  {
    const std::vector<double> trend_eps{0.1, 0.2, 0.4};
    std::vector<std::pair<Network, int>> fixed;
    fixed.emplace_back(generate_random(8, 20, 1.0, 10.0, 1, 1, 1234), 4);
    Fixture fx = counterexample_fixture();
    fixed.emplace_back(fx.net, fx.L);
    for (const auto& [net, L] : fixed) {
      long long prev = std::numeric_limits<long long>::max();
      for (double eps : trend_eps) {
        SolveResult run = approx_unit(net, L, eps);
        c8.expect(run.trace.iterations <= prev,
                  "hop iterations increased with eps on " + describe(net, L, LengthMode::Hop, eps));
        prev = run.trace.iterations;
      }
    }
    Network gen_net = generate_random(6, 12, 1.0, 10.0, 1, 3, 4321);
    long long prev = std::numeric_limits<long long>::max();
    for (double eps : trend_eps) {
      SolveResult run = approx_general(gen_net, 5, eps);
      c8.expect(run.trace.iterations <= prev,
                "general iterations increased with eps");
      prev = run.trace.iterations;
    }
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  int failures = 0;
  int index = 0;
  for (const Criterion* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8}) {
    ++index;
    if (c->ok) {
      std::printf("PASS  criterion %d: %s (%lld checks)\n", index, c->name.c_str(),
                  c->checks);
    } else {
      ++failures;
      std::printf("FAIL  criterion %d: %s — %s\n", index, c->name.c_str(),
                  c->first_failure.c_str());
    }
  }
  std::printf("acceptance: %d/8 criteria passed in %.1fs\n", 8 - failures, elapsed);
  return failures == 0 ? 0 : 1;
}
