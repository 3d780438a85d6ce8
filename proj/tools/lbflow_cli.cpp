// Command-line front end for the L-bounded flow toolkit: approximate solver,
// result verifier, exact oracle, instance generator, and benchmark harness.

#include <iostream>

#include <CLI11.hpp>

#include "lbflow/cli.hpp"

int main(int argc, char** argv) {
  using namespace lbflow::cli;

  CLI::App app{"Maximum L-bounded s-t flow: (1+eps)-approximation with certificates"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* cmd_s = app.add_subcommand("solve", "Approximate a maximum L-bounded flow");
  cmd_s->add_option("--input", solve.input, "network file")->required();
  cmd_s->add_option("--L", solve.L, "length bound")->required();
  cmd_s->add_option("--eps", solve.eps, "approximation parameter in (0,1)")->required();
  cmd_s->add_option("--mode", solve.mode, "hop|general");
  cmd_s->add_option("--out", solve.out, "json|csv (default json)");
  cmd_s->add_option("--trace", solve.trace_file, "write per-iteration CSV trace");
  cmd_s->add_option("--seed", solve.seed, "accepted for harness compatibility; the solver is deterministic");

  VerifyArgs verify;
  CLI::App* cmd_v = app.add_subcommand("verify", "Re-check a result document");
  cmd_v->add_option("--input", verify.input, "network file")->required();
  cmd_v->add_option("--result", verify.result, "result JSON")->required();

  OracleArgs oracle;
  CLI::App* cmd_o = app.add_subcommand("oracle", "Exact optimum by rational LP");
  cmd_o->add_option("--input", oracle.input, "network file")->required();
  cmd_o->add_option("--L", oracle.L, "length bound")->required();
  cmd_o->add_option("--mode", oracle.mode, "hop|general");
  cmd_o->add_option("--budget", oracle.path_budget, "path enumeration budget");

  GenArgs gen;
  CLI::App* cmd_g = app.add_subcommand("gen", "Generate a random instance");
  cmd_g->add_option("--n", gen.n, "vertex count")->required();
  cmd_g->add_option("--m", gen.m, "edge count")->required();
  cmd_g->add_option("--caps", gen.caps, "capacity range LO:HI");
  cmd_g->add_option("--lens", gen.lens, "length range LO:HI");
  cmd_g->add_option("--seed", gen.seed, "rng seed");

  BenchArgs bench;
  CLI::App* cmd_b = app.add_subcommand("bench", "Benchmark runs as CSV");
  cmd_b->add_option("--suite", bench.suite, "random|fixtures");
  cmd_b->add_option("--sizes", bench.sizes, "comma list of n:m:L");
  cmd_b->add_option("--eps", bench.eps, "comma list of eps values");
  cmd_b->add_option("--repeats", bench.repeats, "instances per size");
  cmd_b->add_option("--seed", bench.seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (cmd_s->parsed()) return cmd_solve(solve, std::cout, std::cerr);
  if (cmd_v->parsed()) return cmd_verify(verify, std::cout, std::cerr);
  if (cmd_o->parsed()) return cmd_oracle(oracle, std::cout, std::cerr);
  if (cmd_g->parsed()) return cmd_gen(gen, std::cout, std::cerr);
  if (cmd_b->parsed()) return cmd_bench(bench, std::cout, std::cerr);
  return kExitInputError;
}
