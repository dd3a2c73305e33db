#include <gtest/gtest.h>

#include <bit>

#include "lintersect/bounds.hpp"
#include "lintersect/certificate.hpp"
#include "lintersect/search.hpp"
#include "support/oracles.hpp"

using namespace lintersect;

namespace {

// Independent brute force for n <= 3: every subfamily of 2^[n], checked set by set.
std::size_t tiny_brute_force(int n, const IntersectionSpec& spec) {
  const auto pool = lintersect::testing::all_subsets(n);
  const std::uint64_t count = std::uint64_t{1} << pool.size();
  std::size_t best = 0;
  for (std::uint64_t pick = 0; pick < count; ++pick) {
    std::vector<SubsetMask> chosen;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if ((pick >> k) & 1U) chosen.push_back(pool[k]);
    }
    bool ok = true;
    int max_apex = -1;
    int min_free = n + 1;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      if (chosen[i].contains(n)) {
        max_apex = std::max(max_apex, chosen[i].size());
      } else {
        min_free = std::min(min_free, chosen[i].size());
      }
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
        ok = spec.contains(std::popcount(chosen[i].bits() & chosen[j].bits()));
      }
    }
    if (ok && max_apex <= min_free) best = std::max(best, chosen.size());
  }
  return best;
}

}  // namespace

TEST(BuildGraph, Examples) {
  const auto g = build_graph(2, IntersectionSpec({0}));
  EXPECT_EQ(g.vertices.size(), 4U);
  EXPECT_EQ(g.edge_count(), 4U);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(3, 1));

  const auto one = build_graph(1, IntersectionSpec({0}));
  EXPECT_EQ(one.vertices.size(), 2U);
  EXPECT_EQ(one.edge_count(), 1U);

  EXPECT_EQ(build_graph(3, IntersectionSpec({5})).edge_count(), 0U);
  EXPECT_EQ(build_graph(3, IntersectionSpec({0}), 1).vertices.size(), 4U);
  EXPECT_THROW(build_graph(17, IntersectionSpec({0})), CapExceeded);
  EXPECT_NO_THROW(build_graph(5, IntersectionSpec({0}), std::nullopt, 5));
}

TEST(BuildGraph, AdjacencyMatchesDefinition) {
  const IntersectionSpec spec({1, 3});
  const auto g = build_graph(5, spec);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    EXPECT_FALSE(g.adjacent(a, a));
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      const bool expected = spec.contains(std::popcount(g.vertices[a].bits() & g.vertices[b].bits()));
      EXPECT_EQ(g.adjacent(a, b), expected);
      EXPECT_EQ(g.adjacent(b, a), expected);
    }
  }
}

TEST(MaxOrderedFamily, Examples) {
  const auto r = max_ordered_family(3, IntersectionSpec({0}));
  EXPECT_EQ(r.best_size, 3U);
  EXPECT_EQ(r.witness, SetFamily(3, {SubsetMask{}, SubsetMask::of({1}), SubsetMask::of({2})}));
  EXPECT_EQ(r.bound_value, 3);
  EXPECT_TRUE(r.bound_respected);
  EXPECT_FALSE(r.truncated);

  EXPECT_EQ(max_ordered_family(2, IntersectionSpec({0})).best_size, 2U);
  EXPECT_EQ(max_ordered_family(3, IntersectionSpec({5})).best_size, 1U);
  EXPECT_EQ(max_ordered_family(4, IntersectionSpec{}).best_size, 1U);
}

TEST(MaxOrderedFamily, CapExceeded) {
  EXPECT_THROW(max_ordered_family(17, IntersectionSpec({0})), CapExceeded);
  SearchLimits limits;
  limits.max_n = 3;
  EXPECT_THROW(max_ordered_family(4, IntersectionSpec({0}), limits), CapExceeded);
  EXPECT_THROW(exhaustive_oracle(5, IntersectionSpec({0})), CapExceeded);
}

TEST(ExhaustiveOracle, Pins) {
  EXPECT_EQ(exhaustive_oracle(1, IntersectionSpec({0})), 1U);
  EXPECT_EQ(exhaustive_oracle(2, IntersectionSpec({0, 1})), 2U);
  EXPECT_EQ(exhaustive_oracle(3, IntersectionSpec({0})), 3U);
  // Without the orderability filter, {∅,{1},{2},{3}} is allowed.
  EXPECT_EQ(exhaustive_oracle(3, IntersectionSpec({0}), false), 4U);
}

TEST(ExhaustiveOracle, AgreesWithDirectEnumerationForTinyN) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& spec : all_specs(n, 0, n)) {
      EXPECT_EQ(exhaustive_oracle(n, spec), tiny_brute_force(n, spec)) << "n=" << n << " L=" << spec.to_string();
    }
  }
}

TEST(MaxOrderedFamily, MatchesOracleForEverySpecUpToFour) {
  for (int n = 1; n <= kOracleMaxN; ++n) {
    for (const auto& spec : all_specs(n, 0, n)) {
      SearchLimits limits;
      limits.analytic_cutoff = false;
      const auto r = max_ordered_family(n, spec, limits);
      EXPECT_EQ(r.best_size, exhaustive_oracle(n, spec)) << "n=" << n << " L=" << spec.to_string();
      EXPECT_EQ(r.witness.size(), r.best_size);
      EXPECT_TRUE(is_l_intersecting(r.witness, spec).holds);
      EXPECT_TRUE(std::holds_alternative<OrderingWitness>(check_ordered_indexing(r.witness)));
    }
  }
}

TEST(MaxOrderedFamily, SharpForInitialSegments) {
  for (int s = 1; s <= 3; ++s) {
    for (int n = std::max(3, s + 1); n <= 7; ++n) {
      const auto spec = IntersectionSpec::range(s);
      const auto r = max_ordered_family(n, spec);
      EXPECT_EQ(BigInt(r.best_size), bound_ordered(n, s)) << "n=" << n << " s=" << s;
      EXPECT_TRUE(r.bound_respected);
    }
  }
}

TEST(MaxOrderedFamily, EveryWitnessCertifies) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& spec : all_specs(n, 1, 2)) {
      SearchLimits limits;
      limits.analytic_cutoff = false;
      const auto r = max_ordered_family(n, spec, limits);
      const auto report = certify(r.witness, spec);
      EXPECT_TRUE(report.verdict) << "n=" << n << " L=" << spec.to_string();
      EXPECT_EQ(report.rank, report.m + report.N);
    }
  }
}

TEST(MaxOrderedFamily, WorkerCountDoesNotChangeSize) {
  for (const auto& spec : {IntersectionSpec({0, 1}), IntersectionSpec({1}), IntersectionSpec({0, 2})}) {
    SearchLimits one;
    one.analytic_cutoff = false;
    SearchLimits four = one;
    four.workers = 4;
    const auto a = max_ordered_family(6, spec, one);
    const auto b = max_ordered_family(6, spec, four);
    EXPECT_EQ(a.best_size, b.best_size) << spec.to_string();
    EXPECT_TRUE(is_l_intersecting(b.witness, spec).holds);
  }
}

TEST(MaxOrderedFamily, DeterministicWitness) {
  SearchLimits limits;
  limits.analytic_cutoff = false;
  const auto a = max_ordered_family(6, IntersectionSpec({0, 2}), limits);
  const auto b = max_ordered_family(6, IntersectionSpec({0, 2}), limits);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(MaxOrderedFamily, NodeBudgetMarksTruncation) {
  SearchLimits limits;
  limits.analytic_cutoff = false;
  limits.node_budget = 5;
  const auto r = max_ordered_family(7, IntersectionSpec({0, 1, 2}), limits);
  EXPECT_TRUE(r.truncated);
  EXPECT_LE(BigInt(r.best_size), bound_ordered(7, 3));
}

TEST(Sweep, SmallCatalog) {
  const std::vector<IntersectionSpec> catalog{IntersectionSpec({0}), IntersectionSpec({0, 1})};
  const auto report = sweep_verify(4, catalog);
  ASSERT_EQ(report.rows.size(), 8U);
  for (const auto& row : report.rows) {
    EXPECT_LE(BigInt(row.best), row.bound);
    EXPECT_EQ(row.gap, row.bound - row.best);
    EXPECT_FALSE(row.truncated);
  }
  EXPECT_EQ(report.rows.front().n, 1);
  EXPECT_EQ(report.rows.back().n, 4);

  EXPECT_TRUE(sweep_verify(4, std::vector<IntersectionSpec>{}).rows.empty());
}

TEST(Sweep, SizeCatalog) {
  const auto report = sweep_verify_sizes(3, 4, 1, 1);
  EXPECT_EQ(report.rows.size(), 3U + 4U);
  EXPECT_EQ(all_specs(3, 1, 2).size(), 6U);
  EXPECT_EQ(all_specs(3, 0, 0).size(), 1U);
  EXPECT_EQ(all_specs(3, 1, 2).front(), IntersectionSpec({0}));
  EXPECT_EQ(all_specs(3, 1, 2).back(), IntersectionSpec({1, 2}));
}

TEST(Dimacs, Examples) {
  EXPECT_EQ(export_dimacs(build_graph(1, IntersectionSpec({0}))), "p edge 2 1\ne 1 2\n");
  EXPECT_EQ(export_dimacs(build_graph(2, IntersectionSpec({0}), 0)), "p edge 1 0\n");
  EXPECT_EQ(export_dimacs(build_graph(2, IntersectionSpec({0}))), "p edge 4 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\n");
  EXPECT_EQ(export_dimacs(CompatGraph{}), "p edge 0 0\n");
}

TEST(SearchJson, Keys) {
  const auto r = max_ordered_family(3, IntersectionSpec({0}));
  EXPECT_EQ(to_json(r).dump(),
            R"({"best_size":3,"witness":{"n":3,"sets":[[],[1],[2]]},"nodes_explored":)" +
                std::to_string(r.nodes_explored) + R"(,"bound_value":3,"bound_respected":true,"truncated":false})");
  SweepRow row;
  row.n = 3;
  row.spec = IntersectionSpec({0});
  row.best = 3;
  row.bound = 3;
  row.gap = 0;
  row.nodes = 9;
  EXPECT_EQ(to_json(row).dump(),
            R"({"n":3,"l_values":[0],"best":3,"bound":3,"gap":0,"nodes":9,"truncated":false})");
}
