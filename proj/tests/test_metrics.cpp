#include <doctest.h>

#include <cmath>

#include "netdiv/errors.hpp"
#include "netdiv/generators.hpp"
#include "netdiv/metrics.hpp"
#include "test_support.hpp"

using namespace netdiv;
using testsupport::load;

namespace {

const NodeMetrics& row_of(const MetricReport& report, const std::string& node) {
  for (const auto& row : report.rows) {
    if (row.node == node) return row;
  }
  REQUIRE(false);
  return report.rows.front();
}

}  // namespace

TEST_CASE("fig1 constraint: A is more constrained than B") {
  const auto g = load(testsupport::kFig1Csv);
  const auto ca = burt_constraint(g, g.require_index("A"));
  const auto cb = burt_constraint(g, g.require_index("B"));
  REQUIRE(ca.has_value());
  REQUIRE(cb.has_value());
  CHECK(std::abs(*ca - 0.5) <= 1e-12);
  CHECK(std::abs(*cb - 1.0 / 3.0) <= 1e-12);
  CHECK(*ca > *cb);
}

TEST_CASE("linking A's sources raises A's constraint to 8/9") {
  const auto g = load(testsupport::kFig1PlusCdCsv);
  const auto ca = burt_constraint(g, g.require_index("A"));
  REQUIRE(ca.has_value());
  CHECK(std::abs(*ca - 8.0 / 9.0) <= 1e-12);
}

TEST_CASE("a single contact gives constraint one; no contacts give none") {
  const auto g = load("A,B,1", true);
  const auto ca = burt_constraint(g, g.require_index("A"));
  REQUIRE(ca.has_value());
  CHECK(*ca == 1.0);
  CHECK_FALSE(burt_constraint(g, g.require_index("B")).has_value());

  const auto lonely = load("X,X,5", true);
  CHECK_FALSE(burt_constraint(lonely, 0).has_value());
}

TEST_CASE("k unconnected equal contacts give constraint 1/k") {
  for (int k = 2; k <= 6; ++k) {
    const auto g = fixtures::star(k + 1);
    const auto c = burt_constraint(g, 0);
    REQUIRE(c.has_value());
    CHECK(std::abs(*c - 1.0 / k) <= 1e-12);
  }
}

TEST_CASE("constraint uses weighted p rows") {
  // X -> A (2), X -> B (1), A -> B (1):
  // c_XA = (2/3)^2, c_XB = (1/3 + 2/3 * 1)^2 = 1, total 13/9.
  const auto g = load("X,A,2\nX,B,1\nA,B,1", true);
  const auto c = burt_constraint(g, g.require_index("X"));
  REQUIRE(c.has_value());
  CHECK(std::abs(*c - 13.0 / 9.0) <= 1e-12);
}

TEST_CASE("local clustering counts ties among non-self neighbors") {
  const auto fig1 = load(testsupport::kFig1Csv);
  const auto a = local_clustering(fig1, fig1.require_index("A"));
  REQUIRE(a.has_value());
  CHECK(*a == 0.0);
  CHECK_FALSE(local_clustering(fig1, fig1.require_index("E")).has_value());

  const auto closed = load(testsupport::kFig1PlusCdCsv);
  const auto a2 = local_clustering(closed, closed.require_index("A"));
  REQUIRE(a2.has_value());
  CHECK(*a2 == 1.0);
}

TEST_CASE("directed clustering uses ordered neighbor pairs") {
  const auto g = load("X,A,1\nX,B,1\nA,B,1", true);
  const auto c = local_clustering(g, g.require_index("X"));
  REQUIRE(c.has_value());
  CHECK(*c == 0.5);  // one of the two ordered pairs (A,B),(B,A) is tied
}

TEST_CASE("closing A's neighborhood raises clustering and lowers betweenness") {
  const auto open = load(testsupport::kFig1Csv);
  const auto closed = load(testsupport::kFig1PlusCdCsv);
  const auto a_open = open.require_index("A");
  const auto a_closed = closed.require_index("A");

  const auto cl_open = local_clustering(open, a_open);
  const auto cl_closed = local_clustering(closed, a_closed);
  REQUIRE(cl_open.has_value());
  REQUIRE(cl_closed.has_value());
  CHECK(*cl_closed > *cl_open);

  const auto bc_open = k_betweenness(open, betweenness_params_for(open, 3));
  const auto bc_closed = k_betweenness(closed, betweenness_params_for(closed, 3));
  CHECK(bc_closed[a_closed] < bc_open[a_open]);
}

TEST_CASE("fig1 report: equal entropy, separated betweenness") {
  const auto g = load(testsupport::kFig1Csv);
  const auto report =
      compute_report(g, {0.0, ThresholdMode::filter_weighted}, betweenness_params_for(g, 3), true);

  REQUIRE(report.rows.size() == 5);
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    CHECK(report.rows[k - 1].node < report.rows[k].node);
  }
  const auto& a = row_of(report, "A");
  const auto& b = row_of(report, "B");
  REQUIRE(a.entropy.has_value());
  REQUIRE(b.entropy.has_value());
  CHECK(*a.entropy == 1.0);
  CHECK(*b.entropy == 1.0);
  CHECK(a.k_betweenness == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.k_betweenness == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(a.k_betweenness < b.k_betweenness);
  CHECK(a.degree == 2);
  CHECK(b.degree == 3);
  CHECK(a.self_weight_share == 0.0);
}

TEST_CASE("a threshold that removes every tie leaves missing metrics, zero betweenness") {
  const auto g = load(testsupport::kFig1Csv);
  const auto report =
      compute_report(g, {10.0, ThresholdMode::binarize}, betweenness_params_for(g, 3), true);
  REQUIRE(report.rows.size() == 5);
  for (const auto& row : report.rows) {
    CHECK(row.k_betweenness == 0.0);
    CHECK(row.degree == 0);
    CHECK_FALSE(row.entropy.has_value());
    CHECK_FALSE(row.constraint.has_value());
    CHECK_FALSE(row.clustering.has_value());
  }
}

TEST_CASE("a self-loop-only node reports full self weight and no entropy") {
  const auto g = load("X,X,3", true);
  const auto report =
      compute_report(g, {0.0, ThresholdMode::filter_weighted}, betweenness_params_for(g, 3), true);
  REQUIRE(report.rows.size() == 1);
  const auto& x = report.rows.front();
  CHECK(x.self_weight_share == 1.0);
  CHECK_FALSE(x.entropy.has_value());
  CHECK(x.k_betweenness == 0.0);
  CHECK_FALSE(x.constraint.has_value());
  CHECK(x.degree == 0);
}

TEST_CASE("entropy reads surviving weights while constraint reads the binarized graph") {
  const auto g = load("A,B,5\nA,C,1\nB,C,1", true);
  const ThresholdPolicy policy{1.0, ThresholdMode::binarize};
  const auto report = compute_report(g, policy, betweenness_params_for(g, 3), true);

  const auto& a = row_of(report, "A");
  REQUIRE(a.entropy.has_value());
  CHECK(*a.entropy < 1.0);  // weighted: attention is uneven
  REQUIRE(a.constraint.has_value());
  // Binarized rows: c_AB = (1/2)^2, c_AC = (1/2 + 1/2)^2.
  CHECK(std::abs(*a.constraint - 1.25) <= 1e-12);

  const auto weighted = apply_threshold(g, {1.0, ThresholdMode::filter_weighted});
  const auto direct = normalized_entropy(weighted, weighted.require_index("A"), true);
  REQUIRE(direct.has_value());
  CHECK(*a.entropy == *direct);
}

TEST_CASE("identical inputs give bit-identical reports at any thread count") {
  const auto fixture = fixtures::broker_specialist(25, 11);
  const auto& g = fixture.graph;
  const auto params = betweenness_params_for(g, 3);
  const ThresholdPolicy policy{1.0, ThresholdMode::binarize};

  const auto base = compute_report(g, policy, params, true, 1);
  for (unsigned threads : {1u, 4u}) {
    const auto again = compute_report(g, policy, params, true, threads);
    REQUIRE(again.rows.size() == base.rows.size());
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
      CHECK(again.rows[i].node == base.rows[i].node);
      CHECK(again.rows[i].degree == base.rows[i].degree);
      CHECK(again.rows[i].self_weight_share == base.rows[i].self_weight_share);
      CHECK(again.rows[i].entropy == base.rows[i].entropy);
      CHECK(again.rows[i].k_betweenness == base.rows[i].k_betweenness);
      CHECK(again.rows[i].constraint == base.rows[i].constraint);
      CHECK(again.rows[i].clustering == base.rows[i].clustering);
    }
  }
}
