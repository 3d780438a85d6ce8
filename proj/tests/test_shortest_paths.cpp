#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lbflow/shortest_paths.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace lbflow;
using lbflow::testing::bf_min_cost;
using lbflow::testing::long_direct_short_detour;

namespace {

// 0=s, 1=a, 2=t with a direct edge and a two-hop detour.
Network triangle() {
  Network net;
  net.vertex_count = 3;
  net.source = 0;
  net.sink = 2;
  net.edges = {
      Edge{0, 2, Decimal(1, 0), 1},  // s->t
      Edge{0, 1, Decimal(1, 0), 1},  // s->a
      Edge{1, 2, Decimal(1, 0), 1},  // a->t
  };
  return net;
}

DualLengths random_duals(const Network& net, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  DualLengths y(net.m());
  for (double& v : y) v = dist(rng);
  return y;
}

}  // namespace

TEST_CASE("hop shortest path picks the cheapest route within the budget") {
  Network net = triangle();
  DualLengths y{5.0, 2.0, 2.0};

  SPResult one = hop_shortest_path(net, y, 1);
  REQUIRE(one.found());
  CHECK(*one.path == Path{0});
  CHECK(one.cost == 5.0);

  SPResult two = hop_shortest_path(net, y, 2);
  REQUIRE(two.found());
  CHECK(*two.path == Path{1, 2});
  CHECK(two.cost == 4.0);
  CHECK(two.cost == doctest::Approx(bf_min_cost(net, y, 2, LengthMode::Hop)));
}

TEST_CASE("hop shortest path reports absence as a value") {
  Network net;
  net.vertex_count = 3;
  net.source = 0;
  net.sink = 2;
  net.edges = {Edge{0, 1, Decimal(1, 0), 1}};  // t unreachable
  CHECK(!hop_shortest_path(net, DualLengths{1.0}, 2).found());

  // Reachable, but not within the hop budget.
  Network chain;
  chain.vertex_count = 4;
  chain.source = 0;
  chain.sink = 3;
  chain.edges = {Edge{0, 1, Decimal(1, 0), 1}, Edge{1, 2, Decimal(1, 0), 1},
                 Edge{2, 3, Decimal(1, 0), 1}};
  CHECK(!hop_shortest_path(chain, DualLengths{1, 1, 1}, 2).found());
  CHECK(hop_shortest_path(chain, DualLengths{1, 1, 1}, 3).found());
}

TEST_CASE("hop shortest path tie-break is lexicographic and reproducible") {
  // Two equal-cost 2-hop routes; ids (0,1) must beat (2,3).
  Network net = lbflow::testing::diamond();
  DualLengths y{0.5, 0.5, 0.5, 0.5};
  SPResult r = hop_shortest_path(net, y, 2);
  REQUIRE(r.found());
  CHECK(*r.path == Path{0, 1});
  SPResult again = hop_shortest_path(net, y, 2);
  CHECK(*again.path == *r.path);
}

TEST_CASE("rcsp_exact on unit lengths reduces to the hop DP") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = generate_random(2 + trial % 6, 1 + trial % 12, 1.0, 5.0, 1, 1,
                                  1000 + trial);
    DualLengths y = random_duals(net, rng);
    const int L = 1 + trial % 5;
    SPResult hop = hop_shortest_path(net, y, L);
    SPResult exact = rcsp_exact(net, y, L);
    CHECK(hop.found() == exact.found());
    if (hop.found()) {
      CHECK(exact.cost == doctest::Approx(hop.cost).epsilon(1e-12));
      CHECK(*exact.path == *hop.path);
    }
  }
}

TEST_CASE("rcsp_exact trades cost against the length budget") {
  Network net = long_direct_short_detour();
  DualLengths y{1.0, 0.1, 0.1};

  SPResult tight = rcsp_exact(net, y, 2);
  REQUIRE(tight.found());
  CHECK(*tight.path == Path{1, 2});
  CHECK(tight.cost == doctest::Approx(0.2));

  SPResult loose = rcsp_exact(net, y, 3);
  REQUIRE(loose.found());
  CHECK(*loose.path == Path{1, 2});  // still the cheaper route
  CHECK(loose.cost == doctest::Approx(0.2));
}

TEST_CASE("rcsp_exact refuses oversized DP tables") {
  Network net = triangle();
  CHECK_THROWS_AS(rcsp_exact(net, DualLengths{1, 1, 1}, 100, /*table_cap=*/10),
                  ParamError);
}

TEST_CASE("rcsp_approx stays within (1+w) of the exact optimum") {
  Network net = long_direct_short_detour();
  DualLengths y{1.0, 0.1, 0.1};
  SPResult r = rcsp_approx(net, y, 2, 0.5);
  REQUIRE(r.found());
  CHECK(path_length(net, *r.path, LengthMode::General) <= 2);
  CHECK(r.cost <= 0.3 + 1e-12);  // (1+w) * exact 0.2
}

TEST_CASE("rcsp_approx on unit lengths stays within (1+w) of the hop optimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Network net = generate_random(2 + trial % 7, 1 + trial % 15, 1.0, 5.0, 1, 1,
                                  2000 + trial);
    DualLengths y = random_duals(net, rng);
    const int L = 1 + trial % 5;
    SPResult hop = hop_shortest_path(net, y, L);
    SPResult approx = rcsp_approx(net, y, L, 0.25);
    REQUIRE(hop.found() == approx.found());
    if (hop.found()) CHECK(approx.cost <= 1.25 * hop.cost + 1e-12);
  }
}

TEST_CASE("rcsp_approx honors budget and ratio on random tuples") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    Network net = generate_random(2 + trial % 7, 1 + (trial * 3) % 18, 1.0, 9.0, 1, 3,
                                  3000 + trial);
    DualLengths y = random_duals(net, rng);
    const int L = 1 + trial % 7;
    const double w = (trial % 3 == 0) ? 0.05 : (trial % 3 == 1) ? 0.2 : 1.0;
    SPResult exact = rcsp_exact(net, y, L);
    SPResult approx = rcsp_approx(net, y, L, w);
    REQUIRE(exact.found() == approx.found());
    if (!exact.found()) continue;
    CHECK(path_length(net, *approx.path, LengthMode::General) <= L);
    CHECK(approx.cost <= (1.0 + w) * exact.cost + 1e-12);
    CHECK(is_simple_st_path(net, *approx.path));
  }
}

TEST_CASE("all three solvers agree with brute force on small graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;  // <= 7 vertices
    Network net = generate_random(n, 1 + (trial * 7) % 16, 1.0, 5.0, 1, 3,
                                  4000 + trial);
    DualLengths y = random_duals(net, rng);
    const int L = 1 + trial % 6;

    const double bf_hop = bf_min_cost(net, y, L, LengthMode::Hop);
    SPResult hop = hop_shortest_path(net, y, L);
    if (std::isinf(bf_hop)) {
      CHECK(!hop.found());
    } else {
      REQUIRE(hop.found());
      CHECK(hop.cost == doctest::Approx(bf_hop).epsilon(1e-12));
    }

    const double bf_gen = bf_min_cost(net, y, L, LengthMode::General);
    SPResult exact = rcsp_exact(net, y, L);
    SPResult approx = rcsp_approx(net, y, L, 0.1);
    if (std::isinf(bf_gen)) {
      CHECK(!exact.found());
      CHECK(!approx.found());
    } else {
      REQUIRE(exact.found());
      CHECK(exact.cost == doctest::Approx(bf_gen).epsilon(1e-12));
      REQUIRE(approx.found());
      CHECK(approx.cost <= 1.1 * bf_gen + 1e-12);
    }
  }
}

TEST_CASE("raising one dual never lowers the hop optimum") {
  std::mt19937_64 rng(8);
  Network net = generate_random(6, 14, 1.0, 5.0, 1, 1, 77);
  DualLengths y = random_duals(net, rng);
  SPResult base = hop_shortest_path(net, y, 4);
  REQUIRE(base.found());
  for (int id = 0; id < net.m(); ++id) {
    DualLengths bumped = y;
    bumped[id] += 0.7;
    SPResult r = hop_shortest_path(net, bumped, 4);
    REQUIRE(r.found());
    CHECK(r.cost >= base.cost - 1e-12);
  }
}

TEST_CASE("relaxing the budget never hurts") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Network net = generate_random(6, 12, 1.0, 5.0, 1, 3, 500 + trial);
    DualLengths y = random_duals(net, rng);
    double prev = std::numeric_limits<double>::infinity();
    for (int L = 1; L <= 8; ++L) {
      SPResult r = rcsp_exact(net, y, L);
      if (r.found()) {
        CHECK(r.cost <= prev + 1e-12);
        prev = r.cost;
      }
    }
  }
}

TEST_CASE("rcsp_approx handles zero and wildly spread duals") {
  Network net = long_direct_short_detour();

  SPResult zero = rcsp_approx(net, DualLengths{0.0, 0.0, 0.0}, 3, 0.2);
  REQUIRE(zero.found());
  CHECK(zero.cost == 0.0);
  CHECK(path_length(net, *zero.path, LengthMode::General) <= 3);

  // Zero-cost detour, expensive direct edge: the optimum is still 0.
  SPResult mixed = rcsp_approx(net, DualLengths{1e300, 0.0, 0.0}, 2, 0.05);
  REQUIRE(mixed.found());
  CHECK(mixed.cost == 0.0);

  // Huge spread without zeros must not overflow the rounding.
  SPResult spread = rcsp_approx(net, DualLengths{1e280, 1e-280, 1e-280}, 3, 0.5);
  REQUIRE(spread.found());
  CHECK(*spread.path == Path{1, 2});
}
