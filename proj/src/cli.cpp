#include "lbflow/cli.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "lbflow/certificates.hpp"
#include "lbflow/fptas.hpp"
#include "lbflow/network.hpp"
#include "lbflow/oracle.hpp"

namespace lbflow::cli {

namespace {

using nlohmann::json;

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/'
     << boost::multiprecision::denominator(r);
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw ParseError("trailing characters in '" + text + "'");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + text + "'");
  }
}

long long parse_int(const std::string& text) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected an integer, got '" + text + "'");
  return v;
}

json paths_to_json(const PathFlow& flow) {
  json arr = json::array();
  for (const auto& [path, amount] : flow.entries)
    arr.push_back(json{{"edges", path}, {"amount", amount}});
  return arr;
}

json solve_document(const Network& net, const SolveResult& result,
                    const Certificate& cert) {
  return json{{"n", net.vertex_count},
              {"m", net.m()},
              {"L", result.params.L},
              {"mode", to_string(result.params.mode)},
              {"params",
               {{"eps", result.params.eps_user},
                {"eps_internal", result.params.eps_internal},
                {"delta", result.params.delta},
                {"w", result.params.w},
                {"scale_factor", result.params.scale_factor}}},
              {"value", cert.primal_value},
              {"paths", paths_to_json(result.scaled)},
              {"dual_bound", cert.dual_bound},
              {"ratio", cert.ratio},
              {"iterations", result.trace.iterations},
              {"runtime_ms", result.trace.runtime_ms},
              {"violations", cert.details}};
}

void write_trace(const std::string& file, const SolveTrace& trace) {
  std::ofstream out(file);
  if (!out) throw ParseError("cannot open trace file '" + file + "'");
  out << "iteration,alpha,bottleneck,flow_after,path\n";
  for (const IterationRecord& rec : trace.steps) {
    out << rec.iteration << ',' << rec.alpha << ',' << rec.bottleneck << ','
        << rec.flow_after << ',';
    for (std::size_t i = 0; i < rec.path.size(); ++i)
      out << (i ? "|" : "") << rec.path[i];
    out << '\n';
  }
  out << "# exit_alpha " << trace.exit_alpha << '\n';
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const LengthMode mode = parse_length_mode(args.mode);
    Network net = load_network_file(args.input);
    SolveResult result = mode == LengthMode::Hop
                             ? approx_unit(net, args.L, args.eps)
                             : approx_general(net, args.L, args.eps);
    Certificate cert = certify(net, result, args.L, mode);
    if (!args.trace_file.empty()) write_trace(args.trace_file, result.trace);
    if (args.out == "csv") {
      out << "n,m,L,mode,eps,value,dual_bound,ratio,iterations,runtime_ms\n"
          << net.vertex_count << ',' << net.m() << ',' << args.L << ','
          << to_string(mode) << ',' << args.eps << ',' << cert.primal_value << ','
          << cert.dual_bound << ',' << cert.ratio << ',' << result.trace.iterations
          << ',' << result.trace.runtime_ms << '\n';
    } else if (args.out == "json") {
      out << solve_document(net, result, cert).dump(2) << '\n';
    } else {
      throw ParseError("unknown output format '" + args.out + "'");
    }
    return kExitOk;
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParamError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Network net = load_network_file(args.input);
    std::ifstream rf(args.result);
    if (!rf) throw ParseError("cannot open '" + args.result + "'");
    json doc = json::parse(rf, nullptr, true);

    const LengthMode mode = parse_length_mode(doc.at("mode").get<std::string>());
    const int L = doc.at("L").get<int>();
    const double stated_value = doc.at("value").get<double>();
    PathFlow flow;
    for (const json& entry : doc.at("paths")) {
      Path path = entry.at("edges").get<Path>();
      flow.add(path, entry.at("amount").get<double>());
    }

    std::vector<std::string> violations;
    bool ids_ok = true;
    for (const auto& [path, amount] : flow.entries)
      for (int id : path)
        if (id < 0 || id >= net.m()) {
          violations.push_back("structure: edge id " + std::to_string(id) +
                               " does not exist in the instance");
          ids_ok = false;
        }
    if (ids_ok) {
      auto collect = [&violations](const CheckReport& r) {
        violations.insert(violations.end(), r.violations.begin(), r.violations.end());
      };
      collect(check_path_structure(net, flow));
      collect(check_capacity_feasible(net, flow, 1e-9));
      collect(check_l_bounded(net, flow, L, mode));
      const double recomputed = flow.value();
      if (std::abs(stated_value - recomputed) > 1e-9 + 1e-9 * std::abs(recomputed)) {
        std::ostringstream os;
        os << "value: document states " << stated_value << " but paths sum to "
           << recomputed;
        violations.push_back(os.str());
      }
    }

    json report{{"ok", violations.empty()}, {"violations", violations}};
    out << report.dump(2) << '\n';
    return violations.empty() ? kExitOk : kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const LengthMode mode = parse_length_mode(args.mode);
    Network net = load_network_file(args.input);
    const auto t0 = std::chrono::steady_clock::now();
    RationalFlow flow = exact_max_l_flow(net, args.L, mode, args.path_budget);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    json paths = json::array();
    for (const auto& [path, amount] : flow.path_amounts)
      paths.push_back(json{{"edges", path},
                           {"amount", rational_str(amount)},
                           {"amount_approx", static_cast<double>(amount)}});
    json doc{{"n", net.vertex_count},
             {"m", net.m()},
             {"L", args.L},
             {"mode", to_string(mode)},
             {"value", rational_str(flow.value)},
             {"value_approx", static_cast<double>(flow.value)},
             {"paths", paths},
             {"dual_bound", rational_str(flow.value)},
             {"ratio", "1/1"},
             {"iterations", flow.pivots},
             {"runtime_ms", ms},
             {"violations", json::array()}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParamError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> caps = split(args.caps, ':');
    std::vector<std::string> lens = split(args.lens, ':');
    if (caps.size() != 2 || lens.size() != 2)
      throw ParseError("ranges must look like LO:HI");
    Network net = generate_random(args.n, args.m, parse_double(caps[0]),
                                  parse_double(caps[1]),
                                  static_cast<int>(parse_int(lens[0])),
                                  static_cast<int>(parse_int(lens[1])), args.seed);
    serialize_network(net, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<double> eps_grid;
    for (const std::string& tok : split(args.eps, ',')) eps_grid.push_back(parse_double(tok));
    if (eps_grid.empty()) throw ParseError("empty eps list");
    if (args.repeats < 1) throw ParseError("repeats must be >= 1");

    struct Run {
      Network net;
      int L;
    };
    std::vector<Run> runs;
    if (args.suite == "random") {
      std::vector<std::array<long long, 3>> sizes;
      for (const std::string& tok : split(args.sizes, ',')) {
        std::vector<std::string> triple = split(tok, ':');
        if (triple.size() != 3) throw ParseError("sizes must look like n:m:L");
        sizes.push_back({parse_int(triple[0]), parse_int(triple[1]), parse_int(triple[2])});
      }
      std::uint64_t counter = 0;
      for (const auto& [n, m, L] : sizes)
        for (int rep = 0; rep < args.repeats; ++rep) {
          Network net = generate_random(static_cast<int>(n), static_cast<int>(m),
                                        1.0, 10.0, 1, 1,
                                        args.seed * 1000003ULL + counter++);
          runs.push_back(Run{std::move(net), static_cast<int>(L)});
        }
    } else if (args.suite == "fixtures") {
      Fixture fx = counterexample_fixture();
      runs.push_back(Run{fx.net, fx.L});
    } else {
      throw ParseError("unknown suite '" + args.suite + "'");
    }

    out << "n,m,L,eps,iterations,theoretical_iter_bound,ratio_to_oracle,runtime_ms\n";
    for (const Run& run : runs) {
      for (double eps : eps_grid) {
        SolveResult result = approx_unit(run.net, run.L, eps);
        std::string ratio;
        try {
          RationalFlow opt = exact_max_l_flow(run.net, run.L, LengthMode::Hop);
          const double value = result.scaled.value();
          if (value > 0.0) {
            std::ostringstream os;
            os << static_cast<double>(opt.value) / value;
            ratio = os.str();
          } else if (opt.value == 0) {
            ratio = "1";
          }
        } catch (const BudgetError&) {
          // Oracle-infeasible size; leave the column empty.
        }
        out << run.net.vertex_count << ',' << run.net.m() << ',' << run.L << ','
            << eps << ',' << result.trace.iterations << ','
            << iteration_bound(result.params, run.net.m()) << ',' << ratio << ','
            << result.trace.runtime_ms << '\n';
      }
    }
    return kExitOk;
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParamError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lbflow::cli
