#include <doctest.h>

#include <cmath>
#include <random>

#include "netdiv/betweenness.hpp"
#include "netdiv/errors.hpp"
#include "netdiv/generators.hpp"
#include "test_support.hpp"

using namespace netdiv;
using testsupport::load;

namespace {

double score(const Graph& g, const std::vector<double>& values, const char* label) {
  return values[g.require_index(label)];
}

}  // namespace

TEST_CASE("fig1 3-betweenness matches the exhaustive oracle and known values") {
  const auto g = load(testsupport::kFig1Csv);
  const auto params = betweenness_params_for(g, 3);
  const auto fast = k_betweenness(g, params);
  const auto slow = betweenness_oracle(g, params);

  CHECK(score(g, fast, "A") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(score(g, fast, "B") == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(score(g, fast, "C") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(score(g, fast, "D") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(score(g, fast, "E") == 0.0);
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
  }
}

TEST_CASE("linking A's sources directly removes A's brokerage") {
  const auto g = load(testsupport::kFig1PlusCdCsv);
  const auto values = k_betweenness(g, betweenness_params_for(g, 3));
  CHECK(score(g, values, "A") == 0.0);
}

TEST_CASE("star hub carries every leaf pair") {
  const auto g = fixtures::star(5);
  const auto values = k_betweenness(g, betweenness_params_for(g, 3));
  CHECK(values[0] == doctest::Approx(6.0).epsilon(1e-12));
  for (std::size_t leaf = 1; leaf < values.size(); ++leaf) CHECK(values[leaf] == 0.0);
}

TEST_CASE("complete graphs have zero betweenness at every cutoff") {
  for (int n : {4, 6}) {
    const auto g = fixtures::complete_graph(n);
    for (const auto& cutoff : {std::optional<int>(1), std::optional<int>(3), std::optional<int>()}) {
      for (double v : k_betweenness(g, betweenness_params_for(g, cutoff))) {
        CHECK(v == 0.0);
      }
    }
  }
}

TEST_CASE("cutoff 1 excludes the only routed pair of a path") {
  const auto g = load("A,B,1\nB,C,1");
  const auto params = betweenness_params_for(g, 1);
  for (double v : k_betweenness(g, params)) CHECK(v == 0.0);
  for (double v : betweenness_oracle(g, params)) CHECK(v == 0.0);
}

TEST_CASE("single edge graph is all zeros") {
  const auto g = load("A,B,1");
  for (double v : betweenness_oracle(g, betweenness_params_for(g, std::nullopt))) {
    CHECK(v == 0.0);
  }
}

TEST_CASE("directed paths are orientation specific") {
  const auto g = load("A,B,1\nB,C,1", true);
  const auto values = k_betweenness(g, betweenness_params_for(g, 3));
  CHECK(score(g, values, "B") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(score(g, values, "A") == 0.0);
  CHECK(score(g, values, "C") == 0.0);
}

TEST_CASE("pair convention must match graph directedness") {
  const auto undirected = load("A,B,1");
  const auto directed = load("A,B,1", true);
  CHECK_THROWS_AS(
      k_betweenness(undirected, BetweennessParams{3, PairConvention::ordered_pairs}),
      ValidationError);
  CHECK_THROWS_AS(
      k_betweenness(directed, BetweennessParams{3, PairConvention::unordered_pairs}),
      ValidationError);
  CHECK_THROWS_AS(k_betweenness(directed, BetweennessParams{0, PairConvention::ordered_pairs}),
                  ValidationError);
}

TEST_CASE("self-loops never affect betweenness") {
  const auto plain = load("A,B,1\nB,C,1\nC,D,1");
  const auto looped = load("A,B,1\nB,C,1\nC,D,1\nB,B,9\nD,D,2");
  const auto params_plain = betweenness_params_for(plain, 3);
  const auto a = k_betweenness(plain, params_plain);
  const auto b = k_betweenness(looped, betweenness_params_for(looped, 3));
  for (NodeIndex i = 0; i < plain.node_count(); ++i) {
    CHECK(a[i] == b[looped.require_index(plain.label(i))]);
  }
}

TEST_CASE("oracle rejects graphs beyond its exhaustive limit") {
  const auto g = fixtures::ring(13);
  CHECK_THROWS_AS(betweenness_oracle(g, betweenness_params_for(g, 3)), SizeError);
}

TEST_CASE("fast betweenness equals the oracle on 100 seeded random graphs") {
  const auto result = run_oracle_check({100, 10, 0.3, 1});
  CHECK(result.passed);
  CHECK(result.max_deviation <= 1e-9);
  CHECK(result.trials == 100);
}

TEST_CASE("betweenness is non-decreasing in the cutoff and saturates at n-1") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const bool directed = trial % 2 == 0;
    const auto g = fixtures::random_gnp(n, 0.35, rng(), directed);

    const auto unbounded = k_betweenness(g, betweenness_params_for(g, std::nullopt));
    std::vector<double> previous(g.node_count(), 0.0);
    for (int cutoff = 1; cutoff < n; ++cutoff) {
      const auto current = k_betweenness(g, betweenness_params_for(g, cutoff));
      for (std::size_t i = 0; i < current.size(); ++i) {
        CHECK(current[i] >= previous[i] - 1e-12);
        CHECK(current[i] <= unbounded[i] + 1e-12);
      }
      previous = current;
    }

    // cutoff n-1 bounds every geodesic, so the truncation never fires and the
    // result is bit-identical to the classic algorithm.
    const auto saturated = k_betweenness(g, betweenness_params_for(g, n - 1));
    for (std::size_t i = 0; i < saturated.size(); ++i) {
      CHECK(saturated[i] == unbounded[i]);
    }
  }
}

TEST_CASE("thread count does not change the result bits") {
  const auto g = fixtures::random_gnp(40, 0.12, 777, false);
  const auto params = betweenness_params_for(g, 3);
  const auto sequential = k_betweenness(g, params, 1);
  for (unsigned threads : {2u, 5u, 16u}) {
    const auto parallel = k_betweenness(g, params, threads);
    REQUIRE(parallel.size() == sequential.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      CHECK(parallel[i] == sequential[i]);
    }
  }
}
