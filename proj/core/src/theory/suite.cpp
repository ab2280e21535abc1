#include "cliquematch/theory/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"
#include "cliquematch/theory/clique_stats.hpp"
#include "cliquematch/theory/qap.hpp"
#include "cliquematch/theory/ratio.hpp"
#include "cliquematch/theory/spectral.hpp"

namespace cliquematch::theory {

namespace {

constexpr double kNoBound = std::numeric_limits<double>::quiet_NaN();

ValidationRow trace_qap_row(std::uint64_t seed) {
  struct Trial {
    double sandwich = 0.0;
    double identity = 0.0;
  };
  const auto trials = parallel_map(200, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const auto a = uniform_symmetric(5, rng);
    const auto b = uniform_symmetric(5, rng);
    const auto bounds = trace_qap_bounds(a, b);
    const auto ex = brute_force_trace_qap(a, b);
    return Trial{std::max({bounds.lower - ex.min, ex.max - bounds.upper, 0.0}), ex.max_identity_error};
  });
  double sandwich = 0.0, identity = 0.0;
  for (const auto& t : trials) {
    sandwich = std::max(sandwich, t.sandwich);
    identity = std::max(identity, t.identity);
  }
  return {"trace_qap", "n=5;pairs=200", "max_bound_violation", std::max(sandwich, identity), 1e-8,
          sandwich <= 1e-8 && identity <= 1e-8};
}

ValidationRow spread_gaps_row(std::uint64_t seed) {
  struct Trial {
    double gap_ratio = 0.0;
    double telescope = 0.0;
  };
  const auto trials = parallel_map(1000, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const auto rep = spread_and_gaps(uniform_symmetric(10, rng));
    double worst = 0.0;
    for (const double g : rep.gaps) worst = std::max(worst, g / (2.0 * rep.norm_value));
    return Trial{worst, std::abs(rep.gap_sum - rep.spread)};
  });
  double ratio = 0.0, telescope = 0.0;
  for (const auto& t : trials) {
    ratio = std::max(ratio, t.gap_ratio);
    telescope = std::max(telescope, t.telescope);
  }
  return {"spread_gaps", "n=10;trials=1000", "max_gap_over_twice_norm", ratio, 1.0,
          ratio <= 1.0 && telescope <= 1e-10};
}

ValidationRow finke_row(std::uint64_t seed) {
  const auto reduced = parallel_map(500, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const auto r = finke_reduction(uniform_symmetric(8, rng));
    return r.spread_after < r.spread_before ? 1 : 0;
  });
  double count = 0.0;
  for (const int r : reduced) count += r;
  return {"finke", "n=8;trials=500", "fraction_spread_reduced", count / 500.0, kNoBound, true};
}

ValidationRow spread_concentration_row(std::uint64_t seed) {
  const auto c = spread_concentration(20, 5000, seed);
  return {"spread_concentration", "n=20;trials=5000", "tail_3sd", c.tail[2], 0.05, c.tail[2] < 0.05};
}

ValidationRow lawler_row(std::uint64_t seed) {
  const auto errors = parallel_map(100, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto m = SymmetricMatrix::random(6, rng, [&](std::mt19937_64& r) { return unit(r); });
    const double power = lawler_spectral(AffinityMatrix(m)).value;
    return std::abs(power - jacobi_eigen(m).values.back());
  });
  const double worst = *std::max_element(errors.begin(), errors.end());
  return {"lawler", "m=6;trials=100", "max_abs_error_vs_jacobi", worst, 1e-8, worst <= 1e-8};
}

ValidationRow talagrand_row(std::uint64_t seed) {
  const auto rep = talagrand_check(50, 2000, {1, 2, 3, 4, 5, 6}, seed);
  double excess = -std::numeric_limits<double>::infinity();
  bool ok = rep.degree_sandwich_ok;
  for (const auto& row : rep.rows) {
    excess = std::max(excess, row.empirical - row.bound - 3.0 * row.stderr_binomial);
    ok = ok && row.ok;
  }
  return {"talagrand", "m=50;trials=2000;t=1..6", "max_tail_excess", excess, 0.0, ok};
}

ValidationRow clique_counts_row(std::uint64_t seed) {
  const auto s = clique_count_stats(10, 0.3, 3, 2000, seed);
  return {"clique_counts", "n=10;p=0.3;k=3;trials=2000", "mean_count", s.mean, s.expectation,
          s.mean_ok && s.bound_ok};
}

ValidationRow clique_poisson_row(std::uint64_t seed) {
  const double p = percolation_scale_p(30, 3, 2);
  const auto s = clique_count_stats(30, p, 3, 2000, seed);
  return {"clique_poisson", "n=30;k=3;l=2;p=threshold_scale;trials=2000", "variance_over_mean",
          s.poissonness, kNoBound, s.bound_ok};
}

ValidationRow ratio_row(std::uint64_t seed) {
  RatioExperimentSpec spec;
  spec.seed = seed;
  const auto r = ratio_bound_experiment(spec);
  return {"ratio_bound", "n=6;lambda=10;epsilon=0.5;trials=2000", "empirical_probability", r.empirical,
          r.psi ? *r.psi : kNoBound, !r.violated};
}

}  // namespace

const std::vector<std::string>& validator_names() {
  static const std::vector<std::string> names = {
      "trace_qap", "spread_gaps",    "finke",          "spread_concentration", "lawler",
      "talagrand", "clique_counts", "clique_poisson", "ratio_bound"};
  return names;
}

ValidationRow run_validator(const std::string& name, std::uint64_t seed) {
  if (name == "trace_qap") return trace_qap_row(seed);
  if (name == "spread_gaps") return spread_gaps_row(seed);
  if (name == "finke") return finke_row(seed);
  if (name == "spread_concentration") return spread_concentration_row(seed);
  if (name == "lawler") return lawler_row(seed);
  if (name == "talagrand") return talagrand_row(seed);
  if (name == "clique_counts") return clique_counts_row(seed);
  if (name == "clique_poisson") return clique_poisson_row(seed);
  if (name == "ratio_bound") return ratio_row(seed);
  throw ArgumentError("unknown validator: " + name);
}

std::vector<ValidationRow> run_validators(const std::vector<std::string>& selection, std::uint64_t seed) {
  const auto& names = validator_names();
  for (const auto& s : selection) {
    if (s != "all" && std::find(names.begin(), names.end(), s) == names.end()) {
      throw ArgumentError("unknown validator: " + s);
    }
  }
  const bool all = std::find(selection.begin(), selection.end(), "all") != selection.end();
  std::vector<ValidationRow> rows;
  for (const auto& name : names) {
    if (all || std::find(selection.begin(), selection.end(), name) != selection.end()) {
      rows.push_back(run_validator(name, seed));
    }
  }
  return rows;
}

void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows) {
  out << "validator,param_set,statistic,value,bound,ok\n";
  for (const auto& r : rows) {
    out << r.validator << ',' << r.param_set << ',' << r.statistic << ',' << detail::format_double(r.value)
        << ',' << (std::isnan(r.bound) ? std::string() : detail::format_double(r.bound)) << ','
        << (r.ok ? "true" : "false") << '\n';
  }
}

}  // namespace cliquematch::theory
