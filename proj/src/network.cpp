#include "lbflow/network.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace lbflow {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

void require_line_end(std::istringstream& ls, int line_no) {
  std::string extra;
  if (ls >> extra) parse_fail(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace

// ---- Decimal ----------------------------------------------------------------

Decimal::Decimal(std::int64_t units_, int scale_) : units(units_), scale(scale_) {
  if (scale < 0) throw ParseError("Decimal: negative scale");
  while (scale > 0 && units % 10 == 0) {
    units /= 10;
    --scale;
  }
  if (units == 0) scale = 0;
}

Decimal Decimal::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty decimal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t units = 0;
  int scale = 0;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch == '.') {
      if (seen_dot) throw ParseError("malformed decimal '" + text + "'");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("malformed decimal '" + text + "'");
    if (units > (INT64_MAX - 9) / 10)
      throw ParseError("decimal '" + text + "' too large");
    units = units * 10 + (ch - '0');
    if (seen_dot) ++scale;
    seen_digit = true;
  }
  if (!seen_digit) throw ParseError("malformed decimal '" + text + "'");
  if (scale > 18) throw ParseError("decimal '" + text + "' has too many digits");
  if (negative) units = -units;
  return Decimal(units, scale);
}

std::string Decimal::str() const {
  std::string digits = std::to_string(units < 0 ? -units : units);
  std::string out = units < 0 ? "-" : "";
  if (scale == 0) return out + digits;
  if (static_cast<int>(digits.size()) <= scale)
    digits.insert(0, scale + 1 - digits.size(), '0');
  digits.insert(digits.size() - scale, ".");
  return out + digits;
}

double Decimal::to_double() const {
  double value = static_cast<double>(units);
  for (int i = 0; i < scale; ++i) value /= 10.0;
  return value;
}

// ---- LengthMode -------------------------------------------------------------

std::string to_string(LengthMode mode) {
  return mode == LengthMode::Hop ? "hop" : "general";
}

LengthMode parse_length_mode(const std::string& text) {
  if (text == "hop") return LengthMode::Hop;
  if (text == "general") return LengthMode::General;
  throw ParseError("unknown length mode '" + text + "'");
}

// ---- Network ----------------------------------------------------------------

void Network::validate() const {
  if (vertex_count < 2) throw ParseError("network needs at least 2 vertices");
  if (source < 0 || source >= vertex_count) throw ParseError("source out of range");
  if (sink < 0 || sink >= vertex_count) throw ParseError("sink out of range");
  if (source == sink) throw ParseError("source equals sink");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    std::string where = "edge " + std::to_string(i);
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count)
      throw ParseError(where + ": endpoint out of range");
    if (e.tail == e.head) throw ParseError(where + ": self-loop");
    if (e.capacity.units <= 0) throw ParseError(where + ": capacity must be positive");
    if (e.length < 1) throw ParseError(where + ": length must be >= 1");
  }
}

long long path_length(const Network& net, const Path& path, LengthMode mode) {
  if (mode == LengthMode::Hop) return static_cast<long long>(path.size());
  long long total = 0;
  for (int id : path) total += net.edges[id].length;
  return total;
}

bool is_simple_st_path(const Network& net, const Path& path) {
  if (path.empty()) return false;
  std::vector<char> seen(net.vertex_count, 0);
  int at = net.source;
  seen[at] = 1;
  for (int id : path) {
    if (id < 0 || id >= net.m()) return false;
    const Edge& e = net.edges[id];
    if (e.tail != at) return false;
    at = e.head;
    if (seen[at]) return false;
    seen[at] = 1;
  }
  return at == net.sink;
}

AdjacencyIndex::AdjacencyIndex(const Network& net) : out(net.vertex_count) {
  for (int id = 0; id < net.m(); ++id) out[net.edges[id].tail].push_back(id);
}

// ---- Parsing ----------------------------------------------------------------

Network parse_network(std::istream& in) {
  Network net;
  bool have_header = false, have_source = false, have_sink = false;
  int declared_m = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) parse_fail(line_no, "duplicate header");
      std::string kind;
      int n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || kind != "lflow")
        parse_fail(line_no, "expected 'p lflow <n> <m>'");
      if (n < 2) parse_fail(line_no, "n must be >= 2");
      if (m < 0) parse_fail(line_no, "m must be >= 0");
      require_line_end(ls, line_no);
      net.vertex_count = n;
      declared_m = m;
      have_header = true;
      continue;
    }
    if (!have_header) parse_fail(line_no, "record before 'p lflow' header");
    if (tag == "n") {
      int v = 0;
      std::string role;
      if (!(ls >> v >> role)) parse_fail(line_no, "expected 'n <vertex> s|t'");
      if (v < 1 || v > net.vertex_count) parse_fail(line_no, "vertex out of range");
      if (role == "s") {
        if (have_source) parse_fail(line_no, "duplicate source declaration");
        net.source = v - 1;
        have_source = true;
      } else if (role == "t") {
        if (have_sink) parse_fail(line_no, "duplicate sink declaration");
        net.sink = v - 1;
        have_sink = true;
      } else {
        parse_fail(line_no, "vertex role must be 's' or 't'");
      }
      require_line_end(ls, line_no);
      continue;
    }
    if (tag == "a") {
      int tail = 0, head = 0;
      std::string cap_text;
      long long length = 0;
      if (!(ls >> tail >> head >> cap_text >> length))
        parse_fail(line_no, "expected 'a <tail> <head> <capacity> <length>'");
      if (tail < 1 || tail > net.vertex_count || head < 1 || head > net.vertex_count)
        parse_fail(line_no, "edge endpoint out of range");
      if (tail == head) parse_fail(line_no, "self-loop");
      Decimal cap;
      try {
        cap = Decimal::parse(cap_text);
      } catch (const ParseError& err) {
        parse_fail(line_no, err.what());
      }
      if (cap.units <= 0) parse_fail(line_no, "capacity must be positive");
      if (length < 1 || length > INT32_MAX) parse_fail(line_no, "length must be a positive integer");
      require_line_end(ls, line_no);
      net.edges.push_back(Edge{tail - 1, head - 1, cap, static_cast<int>(length)});
      continue;
    }
    parse_fail(line_no, "unknown record tag '" + tag + "'");
  }
  if (!have_header) throw ParseError("missing 'p lflow' header");
  if (!have_source) throw ParseError("missing source declaration");
  if (!have_sink) throw ParseError("missing sink declaration");
  if (net.source == net.sink) throw ParseError("source equals sink");
  if (net.m() != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, file has " +
                     std::to_string(net.m()));
  net.validate();
  return net;
}

Network parse_network_string(const std::string& text) {
  std::istringstream in(text);
  return parse_network(in);
}

Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_network(in);
}

void serialize_network(const Network& net, std::ostream& out) {
  out << "p lflow " << net.vertex_count << ' ' << net.m() << '\n';
  out << "n " << net.source + 1 << " s\n";
  out << "n " << net.sink + 1 << " t\n";
  for (const Edge& e : net.edges)
    out << "a " << e.tail + 1 << ' ' << e.head + 1 << ' ' << e.capacity.str() << ' '
        << e.length << '\n';
}

std::string serialize_network_string(const Network& net) {
  std::ostringstream out;
  serialize_network(net, out);
  return out.str();
}

// ---- Generation -------------------------------------------------------------

Network generate_random(int n, int m, double cap_lo, double cap_hi,
                        int len_lo, int len_hi, std::uint64_t seed) {
  if (n < 2) throw ParamError("generate_random: n must be >= 2");
  if (m < 1) throw ParamError("generate_random: m must be >= 1");
  if (!(cap_lo > 0.0) || cap_hi < cap_lo) throw ParamError("generate_random: bad capacity range");
  if (len_lo < 1 || len_hi < len_lo) throw ParamError("generate_random: bad length range");

  std::mt19937_64 rng(seed);
  // Two fractional digits keep capacities exact as decimals.
  std::int64_t cap_units_lo = std::llround(cap_lo * 100.0);
  std::int64_t cap_units_hi = std::llround(cap_hi * 100.0);
  std::uniform_int_distribution<std::int64_t> cap_dist(cap_units_lo, cap_units_hi);
  std::uniform_int_distribution<int> len_dist(len_lo, len_hi);
  std::uniform_int_distribution<int> vert_dist(0, n - 1);

  Network net;
  net.vertex_count = n;
  net.source = 0;
  net.sink = n - 1;

  auto add_edge = [&](int tail, int head) {
    net.edges.push_back(Edge{tail, head, Decimal(cap_dist(rng), 2), len_dist(rng)});
  };

  int remaining = m;
  if (m >= n - 1) {
    std::vector<int> middle(std::max(0, n - 2));
    std::iota(middle.begin(), middle.end(), 1);
    std::shuffle(middle.begin(), middle.end(), rng);
    int at = net.source;
    for (int v : middle) {
      add_edge(at, v);
      at = v;
    }
    add_edge(at, net.sink);
    remaining = m - (n - 1);
  }
  while (remaining > 0) {
    int tail = vert_dist(rng);
    int head = vert_dist(rng);
    if (tail == head) continue;
    add_edge(tail, head);
    --remaining;
  }
  net.validate();
  return net;
}

// ---- Enumeration ------------------------------------------------------------

namespace {

struct Enumerator {
  const Network& net;
  const AdjacencyIndex adj;
  LengthMode mode;
  long long budget_left;  // mode-length remaining
  std::size_t max_paths;
  std::vector<char> on_path;
  Path current;
  std::vector<Path> found;
  std::vector<long long> to_sink_lb;  // min mode-length of any walk v->t

  Enumerator(const Network& n_, long long L, LengthMode mode_, std::size_t max_paths_)
      : net(n_), adj(n_), mode(mode_), budget_left(L), max_paths(max_paths_),
        on_path(n_.vertex_count, 0), to_sink_lb(n_.vertex_count) {
    // Reverse Bellman-Ford over walk lengths; a valid pruning bound because
    // any simple path is at least as long as the shortest walk.
    const long long inf = std::numeric_limits<long long>::max() / 4;
    to_sink_lb.assign(net.vertex_count, inf);
    to_sink_lb[net.sink] = 0;
    for (int round = 0; round < net.vertex_count; ++round) {
      bool changed = false;
      for (const Edge& e : net.edges) {
        long long w = mode == LengthMode::Hop ? 1 : e.length;
        if (to_sink_lb[e.head] + w < to_sink_lb[e.tail]) {
          to_sink_lb[e.tail] = to_sink_lb[e.head] + w;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  void dfs(int v) {
    if (v == net.sink) {
      if (found.size() >= max_paths)
        throw BudgetError("path enumeration exceeded budget of " + std::to_string(max_paths));
      found.push_back(current);
      return;
    }
    for (int id : adj.out[v]) {
      const Edge& e = net.edges[id];
      long long w = mode == LengthMode::Hop ? 1 : e.length;
      if (w > budget_left || on_path[e.head]) continue;
      if (budget_left - w < to_sink_lb[e.head]) continue;
      on_path[e.head] = 1;
      current.push_back(id);
      budget_left -= w;
      dfs(e.head);
      budget_left += w;
      current.pop_back();
      on_path[e.head] = 0;
    }
  }
};

}  // namespace

std::vector<Path> enumerate_l_bounded_paths(const Network& net, long long L,
                                            LengthMode mode, std::size_t budget) {
  Enumerator en(net, L, mode, budget);
  en.on_path[net.source] = 1;
  en.dfs(net.source);
  return en.found;
}

// ---- Fixture ----------------------------------------------------------------

Fixture counterexample_fixture() {
  // Vertices: 0=s, 1=a, 2=b, 3=u, 4=t.
  Network net;
  net.vertex_count = 5;
  net.source = 0;
  net.sink = 4;
  auto add = [&](int tail, int head, std::int64_t cap) {
    net.edges.push_back(Edge{tail, head, Decimal(cap, 0), 1});
  };
  add(0, 1, 1);  // s->a, saturated in every maximum 2-bounded flow
  add(0, 2, 1);  // s->b, saturated likewise
  add(1, 4, 2);  // a->t
  add(2, 4, 2);  // b->t
  add(0, 3, 2);  // s->u
  add(3, 1, 1);  // u->a, part of 3-hop augmenting structure only
  add(3, 2, 1);  // u->b
  net.validate();
  return Fixture{net, 2};
}

}  // namespace lbflow
