#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/theory/clique_stats.hpp"

namespace cm = cliquematch;
namespace th = cliquematch::theory;

TEST(CountCliques, SmallGraphs) {
  const auto k5 = cm::erdos_renyi(5, 1.0, 0);
  EXPECT_EQ(th::count_cliques(k5, 1), 5u);
  EXPECT_EQ(th::count_cliques(k5, 2), 10u);
  EXPECT_EQ(th::count_cliques(k5, 3), 10u);
  EXPECT_EQ(th::count_cliques(k5, 5), 1u);
  EXPECT_EQ(th::count_cliques(k5, 6), 0u);
  EXPECT_EQ(th::count_cliques(k5, 0), 1u);
}

TEST(CountCliques, AgreesWithComplexEnumeration) {
  for (int s = 0; s < 50; ++s) {
    const auto g = cm::erdos_renyi(15, 0.5, s);
    const auto c = cm::CliqueComplex::enumerate(g, 3);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(th::count_cliques(g, k), c.count(k - 1));
  }
}

TEST(CliqueFormulas, Values) {
  EXPECT_NEAR(th::expected_clique_count(5, 0.5, 3), 1.25, 1e-12);
  EXPECT_NEAR(th::expected_clique_count(10, 0.3, 3), 3.24, 1e-12);
  EXPECT_NEAR(th::clique_count_bound(10, 3), std::pow(std::numbers::e * 10 / 3, 3), 1e-9);
  EXPECT_NEAR(th::percolation_scale_p(30, 3, 2), std::pow(30.0, -0.5), 1e-12);
}

TEST(CliqueFormulas, ExhaustiveOracle) {
  EXPECT_NEAR(th::exhaustive_clique_mean(5, 0.5, 3), 1.25, 1e-12);
  EXPECT_NEAR(th::exhaustive_clique_mean(4, 0.3, 2), 6 * 0.3, 1e-12);
  EXPECT_NEAR(th::exhaustive_clique_mean(6, 0.7, 4), th::expected_clique_count(6, 0.7, 4), 1e-12);
  EXPECT_THROW(th::exhaustive_clique_mean(8, 0.5, 3), cm::ArgumentError);
}

TEST(CliqueCountStats, CertainGraphs) {
  const auto full = th::clique_count_stats(8, 1.0, 3, 1000, 1);
  EXPECT_EQ(full.mean, 56.0);
  EXPECT_EQ(full.variance, 0.0);
  const auto empty = th::clique_count_stats(8, 0.0, 2, 1000, 1);
  EXPECT_EQ(empty.mean, 0.0);
  EXPECT_EQ(empty.max_observed, 0u);
  EXPECT_TRUE(std::isnan(empty.poissonness));
}

TEST(CliqueCountStats, MonteCarloMatchesExpectation) {
  const auto r = th::clique_count_stats(10, 0.3, 3, 10'000, 4);
  EXPECT_NEAR(r.expectation, 3.24, 1e-12);
  EXPECT_NEAR(r.mean, 3.24, 3 * r.standard_error);
  EXPECT_TRUE(r.mean_ok);
  EXPECT_TRUE(r.bound_ok);
  EXPECT_LE(static_cast<double>(r.max_observed), r.bound);
}

TEST(CliqueCountStats, Preconditions) {
  EXPECT_THROW(th::clique_count_stats(10, 0.3, 3, 999, 1), cm::ArgumentError);
  EXPECT_THROW(th::clique_count_stats(10, 0.3, 11, 1000, 1), cm::ArgumentError);
  EXPECT_THROW(th::clique_count_stats(10, 0.3, 0, 1000, 1), cm::ArgumentError);
}
