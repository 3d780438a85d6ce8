#ifndef LBFLOW_CLI_HPP
#define LBFLOW_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lbflow::cli {

// Exit code taxonomy, fixed so harnesses can assert failure modes:
//   0 success, 1 verification failed, 2 input error, 3 parameter error,
//   4 internal-bound violation (a bug), 5 oracle/enumeration budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitParamError = 3;
inline constexpr int kExitInternalError = 4;
inline constexpr int kExitBudgetExceeded = 5;

struct SolveArgs {
  std::string input;
  int L = 1;
  double eps = 0.3;
  std::string mode = "hop";  // hop | general
  std::string out = "json";  // json | csv
  std::string trace_file;    // optional per-iteration CSV
  std::uint64_t seed = 0;    // accepted but unused; the solver is deterministic
};

struct VerifyArgs {
  std::string input;
  std::string result;
};

struct OracleArgs {
  std::string input;
  int L = 1;
  std::string mode = "hop";
  std::uint64_t path_budget = 10000;
};

struct GenArgs {
  int n = 2;
  int m = 1;
  std::string caps = "1:10";  // "lo:hi" decimal range
  std::string lens = "1:1";   // "lo:hi" integer range
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string suite = "random";  // random | fixtures
  std::string sizes = "8:20:4";  // comma list of n:m:L triples
  std::string eps = "0.3";       // comma list
  int repeats = 1;
  std::uint64_t seed = 0;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace lbflow::cli

#endif  // LBFLOW_CLI_HPP
