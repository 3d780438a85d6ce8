// Shared hand-built instances for the unit tests.

#ifndef LBFLOW_TESTS_FIXTURES_HPP
#define LBFLOW_TESTS_FIXTURES_HPP

#include <string>

#include "lbflow/network.hpp"

namespace lbflow::testing {

// 0=s, 1=a, 2=b, 3=t; four unit-capacity edges forming two 2-hop routes.
inline Network diamond() {
  Network net;
  net.vertex_count = 4;
  net.source = 0;
  net.sink = 3;
  net.edges = {
      Edge{0, 1, Decimal(1, 0), 1},
      Edge{1, 3, Decimal(1, 0), 1},
      Edge{0, 2, Decimal(1, 0), 1},
      Edge{2, 3, Decimal(1, 0), 1},
  };
  return net;
}

// Diamond plus the direct s->t edge; max 2-bounded hop flow is 3, 1-bounded is 1.
inline Network diamond_plus_direct() {
  Network net = diamond();
  net.edges.push_back(Edge{0, 3, Decimal(1, 0), 1});
  return net;
}

inline std::string diamond_file() {
  return "c diamond\n"
         "p lflow 4 4\n"
         "n 1 s\n"
         "n 4 t\n"
         "a 1 2 1 1\n"
         "a 2 4 1 1\n"
         "a 1 3 1 1\n"
         "a 3 4 1 1\n";
}

// 0=s, 1=a, 2=t; direct edge is length 3, the detour is two length-1 edges.
// With L=2 only the detour (capacity 1) is usable; with L=3 both are.
inline Network long_direct_short_detour() {
  Network net;
  net.vertex_count = 3;
  net.source = 0;
  net.sink = 2;
  net.edges = {
      Edge{0, 2, Decimal(10, 0), 3},
      Edge{0, 1, Decimal(1, 0), 1},
      Edge{1, 2, Decimal(1, 0), 1},
  };
  return net;
}

}  // namespace lbflow::testing

#endif  // LBFLOW_TESTS_FIXTURES_HPP
