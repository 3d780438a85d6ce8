#ifndef LBFLOW_NETWORK_HPP
#define LBFLOW_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lbflow/errors.hpp"

namespace lbflow {

// Exact decimal number, stored as units * 10^-scale with trailing zeros
// stripped. Capacities are kept in this form so that file round trips and
// the rational oracle are exact; everything double-based reads to_double().
struct Decimal {
  std::int64_t units = 0;
  int scale = 0;  // units / 10^scale

  Decimal() = default;
  Decimal(std::int64_t units_, int scale_);

  static Decimal parse(const std::string& text);
  std::string str() const;
  double to_double() const;

  friend bool operator==(const Decimal& a, const Decimal& b) = default;
};

// How path length is measured: HOP counts every edge as 1, GENERAL uses the
// per-edge integer length. HOP on a network is equivalent to GENERAL on the
// same network with all lengths set to 1.
enum class LengthMode { Hop, General };

std::string to_string(LengthMode mode);
LengthMode parse_length_mode(const std::string& text);

struct Edge {
  int tail = 0;
  int head = 0;
  Decimal capacity;  // > 0
  int length = 1;    // >= 1

  friend bool operator==(const Edge& a, const Edge& b) = default;
};

// Directed network with distinguished source/sink. Edge ids are dense
// 0..m-1 (the index into `edges`); parallel edges are permitted and kept
// distinct. Immutable by convention after construction.
struct Network {
  int vertex_count = 0;
  std::vector<Edge> edges;
  int source = 0;
  int sink = 0;

  int m() const { return static_cast<int>(edges.size()); }
  double cap(int edge_id) const { return edges[edge_id].capacity.to_double(); }

  // Throws ParseError if any structural invariant is broken.
  void validate() const;

  friend bool operator==(const Network& a, const Network& b) = default;
};

// An s-t path as its edge-id sequence. Simple; edges contiguous.
using Path = std::vector<int>;

// Mode-length of an edge sequence (hops or sum of edge lengths).
long long path_length(const Network& net, const Path& path, LengthMode mode);

// Checks the Path invariants: nonempty, contiguous s->t, no repeated vertex.
bool is_simple_st_path(const Network& net, const Path& path);

// Out-edge ids per vertex, in increasing id order. Built once and shared by
// the DP solvers so repeated shortest-path calls do not rescan the edge list.
struct AdjacencyIndex {
  std::vector<std::vector<int>> out;
  explicit AdjacencyIndex(const Network& net);
};

// ---- File format -----------------------------------------------------------
//
// Extended-DIMACS text, one record per line:
//   c <comment>                       ignored
//   p lflow <n> <m>                   header, first non-comment line
//   n <vertex> s | n <vertex> t       exactly one each, 1-based vertices
//   a <tail> <head> <capacity> <length>
// Capacity is a positive decimal real, length a positive decimal integer.
// Unknown record tags are errors. Vertices are 0-based internally.

Network parse_network(std::istream& in);
Network parse_network_string(const std::string& text);
Network load_network_file(const std::string& path);

void serialize_network(const Network& net, std::ostream& out);
std::string serialize_network_string(const Network& net);

// ---- Instance generation ---------------------------------------------------

// Deterministic random instance: s = 0, t = n-1, no self-loops. When
// m >= n-1 the first n-1 edges chain a random spanning s->t path so at least
// one s-t path exists. Capacities are decimals with two fractional digits in
// [cap_lo, cap_hi]; lengths are uniform integers in [len_lo, len_hi].
Network generate_random(int n, int m, double cap_lo, double cap_hi,
                        int len_lo, int len_hi, std::uint64_t seed);

// ---- Path enumeration ------------------------------------------------------

// All simple s-t paths with mode-length <= L, in lexicographic edge-id
// order. Throws BudgetError once more than `budget` paths are found.
std::vector<Path> enumerate_l_bounded_paths(const Network& net, long long L,
                                            LengthMode mode, std::size_t budget);

// ---- Fixture ----------------------------------------------------------------

// Small fixed network whose maximum 2-bounded (hop) flow value is exactly 2:
// two unit-capacity edges out of s saturate, and the extra s->u->{a,b}
// structure only becomes useful at L >= 3. Ground truth is established by
// the exact oracle, not asserted here.
struct Fixture {
  Network net;
  int L = 2;
};
Fixture counterexample_fixture();

}  // namespace lbflow

#endif  // LBFLOW_NETWORK_HPP
