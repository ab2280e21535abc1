// Acceptance runner: one PASS/FAIL line per criterion.
//
// Exit codes: 0 every selected criterion passed, 1 a criterion failed,
// 77 the only selected criterion was skipped.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/experiments.hpp"
#include "cliquematch/hungarian.hpp"
#include "cliquematch/noise.hpp"
#include "cliquematch/theory/clique_stats.hpp"
#include "cliquematch/theory/qap.hpp"
#include "cliquematch/theory/ratio.hpp"
#include "cliquematch/theory/spectral.hpp"
#include "fixtures.hpp"

namespace cm = cliquematch;
namespace th = cliquematch::theory;
namespace fs = std::filesystem;

namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

struct Options {
  std::string cli;
  std::string dataset;
  fs::path scratch = fs::temp_directory_path() / "cliquematch_acceptance";
};

std::string num(double v) { return cm::detail::format_double(v); }

Outcome verdict(bool ok, std::string detail) { return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)}; }

// 1. End-to-end equivariance under rotation, reflection, scale and shear.
Outcome c1_equivariance(const Options&) {
  const std::vector<std::string> specs = {"rotation:20", "rotation:60", "reflection", "scale:0.5",
                                          "scale:0.75",  "scale:1.25",  "scale:1.5",  "shear:0.5"};
  cm::ExperimentConfig cfg;
  cfg.shared_graph = true;
  cfg.shuffle_partner = false;
  cfg.match.share_seed = true;
  cfg.match.error_mode = cm::ErrorMode::kStrict;
  auto shuffled = cfg;
  shuffled.shuffle_partner = true;

  const int trials = 50;
  int failures = 0, shuffled_failures = 0;
  double worst = 0.0;
  std::string first_failure;
  for (int t = 0; t < trials; ++t) {
    const auto spec = cm::parse_transform_spec(specs[t % specs.size()]);
    const auto a = cmtest::random_frame(30, 1000 + t);
    const auto b = cm::apply_transform_about_centroid(a, spec.make());
    const auto out = cm::evaluate_pair(a, b, cfg, static_cast<std::uint64_t>(t));
    const double err = out.error.value_or(100.0);
    if (err != 0.0) {
      ++failures;
      worst = std::max(worst, err);
      if (first_failure.empty()) first_failure = " first=" + spec.label() + "#" + std::to_string(t);
    }
    const auto sh = cm::evaluate_pair(a, b, shuffled, static_cast<std::uint64_t>(t));
    shuffled_failures += sh.error.value_or(100.0) != 0.0;
  }
  return verdict(failures == 0, std::to_string(failures) + "/" + std::to_string(trials) +
                                    " trials with nonzero error, worst " + num(worst) + "%" + first_failure +
                                    "; shuffled partner: " + std::to_string(shuffled_failures) + "/" +
                                    std::to_string(trials));
}

double brute_force_assignment(const cm::CostMatrix& c) {
  const std::size_t n = std::min(c.rows(), c.cols());
  const bool by_rows = c.rows() <= c.cols();
  const std::size_t big = std::max(c.rows(), c.cols());
  std::vector<int> perm(big);
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += by_rows ? c(i, perm[i]) : c(perm[i], i);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// 2. Assignment optimality against exhaustive search.
Outcome c2_hungarian(const Options&) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    cm::CostMatrix c(dim(rng), dim(rng));
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t k = 0; k < c.cols(); ++k) c(r, k) = u(rng);
    }
    const auto a = cm::hungarian(c);
    if (std::abs(a.total_cost - brute_force_assignment(c)) > 1e-9) ++mismatches;
  }
  return verdict(mismatches == 0, std::to_string(trials - mismatches) + "/" + std::to_string(trials) +
                                      " assignments optimal");
}

std::string pair_names(const cm::MatchResult& r, const cm::PreparedSide& a, const cm::PreparedSide& b, int dim) {
  std::string s;
  for (const auto& p : r.dims[dim].pairs) {
    s += (s.empty() ? "" : " ") + cmtest::letters(a.complex.clique({dim, p.a})) + "->" +
         cmtest::letters(b.complex.clique({dim, p.b}));
  }
  return "{" + s + "}";
}

// 3. Worked example: cliques, neighbourhood table and matching table.
Outcome c3_worked_example(const Options&) {
  std::vector<std::string> problems;
  const auto cfg = cmtest::appendix_config();
  const auto g1 = cmtest::appendix_g1();
  const auto g2 = cmtest::appendix_g2();

  auto triangles = [](const cm::RandomGraph& g) {
    std::set<std::string> s;
    const auto c = cm::CliqueComplex::enumerate(g, 2);
    for (const auto& q : c.cliques(2)) s.insert(cmtest::letters(q));
    return s;
  };
  if (triangles(g1) != std::set<std::string>{"ABD", "BDE"}) problems.push_back("G1 triangles");
  if (triangles(g2) != std::set<std::string>{"ACD", "BDE"}) problems.push_back("G2 triangles");

  for (const auto& m : cmtest::neighbourhood_mismatches(g1, cmtest::appendix_g1_neighbours(), cfg.l)) {
    problems.push_back("neighbours G1 " + m);
  }
  for (const auto& m : cmtest::neighbourhood_mismatches(g2, cmtest::appendix_g2_neighbours(), cfg.l)) {
    problems.push_back("neighbours G2 " + m);
  }

  const auto f = cmtest::appendix_frame();
  const auto a = cm::prepare_side(f, g1, cfg);
  const auto b = cm::prepare_side(f, g2, cfg);
  const auto r = cm::match_complexes(a, b, cfg);
  // Listed matches are identities by label.
  const std::vector<std::vector<std::string>> listed = {
      {"A", "B", "C", "D", "E", "F"}, {"AC", "AD", "BD", "BE", "DE", "DF"}, {"BDE"}};
  for (int dim = 2; dim >= 0; --dim) {
    std::set<std::string> got;
    for (const auto& p : r.dims[dim].pairs) {
      const auto x = cmtest::letters(a.complex.clique({dim, p.a}));
      const auto y = cmtest::letters(b.complex.clique({dim, p.b}));
      if (x == y) got.insert(x);
    }
    for (const auto& name : listed[dim]) {
      if (!got.count(name)) {
        problems.push_back("matching dim " + std::to_string(dim) + " misses " + name + "->" + name + ", got " +
                           pair_names(r, a, b, dim));
        break;
      }
    }
  }
  std::string detail = problems.empty() ? "all tables reproduced" : std::to_string(problems.size()) + " mismatches";
  for (const auto& p : problems) detail += "\n    " + p;
  return verdict(problems.empty(), detail);
}

// 4. Trace sandwich and eigenvalue identity over exhaustive permutations.
Outcome c4_trace_sandwich(const Options&) {
  std::mt19937_64 rng(4);
  int bad = 0;
  double worst_identity = 0.0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto a = th::uniform_symmetric(5, rng);
    const auto b = th::uniform_symmetric(5, rng);
    const auto bounds = th::trace_qap_bounds(a, b);
    const auto ex = th::brute_force_trace_qap(a, b);
    worst_identity = std::max(worst_identity, ex.max_identity_error);
    const bool ok = ex.permutations == 120 && bounds.lower <= ex.min + 1e-8 && ex.max <= bounds.upper + 1e-8 &&
                    ex.max_identity_error <= 1e-8;
    bad += !ok;
  }
  return verdict(bad == 0, std::to_string(trials - bad) + "/" + std::to_string(trials) +
                               " pairs inside bounds, max identity error " + num(worst_identity));
}

// 5. Eigenvalue gaps bounded by twice the operator norm.
Outcome c5_gap_bound(const Options&) {
  std::mt19937_64 rng(5);
  int bad = 0;
  double worst_telescope = 0.0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const auto r = th::spread_and_gaps(th::uniform_symmetric(10, rng));
    bool ok = true;
    for (const double g : r.gaps) ok = ok && g <= 2.0 * r.norm_value;
    const double telescope = std::abs(r.gap_sum - (r.eigenvalues.back() - r.eigenvalues.front()));
    worst_telescope = std::max(worst_telescope, telescope);
    bad += !(ok && telescope <= 1e-10);
  }
  return verdict(bad == 0, std::to_string(trials - bad) + "/" + std::to_string(trials) +
                               " matrices, max telescoping error " + num(worst_telescope));
}

// 6. Clique counts: exhaustive mean, Monte Carlo mean and the upper bound.
Outcome c6_clique_counts(const Options&) {
  const double exact = th::exhaustive_clique_mean(5, 0.5, 3);
  const auto mc = th::clique_count_stats(10, 0.3, 3, 20'000, 6);
  const bool exact_ok = exact == 10 * 0.125;
  const bool mc_ok = std::abs(mc.mean - 3.24) <= 3 * mc.standard_error;
  bool bound_ok = mc.bound_ok;
  for (const int k : {2, 3, 4, 5}) {
    const auto s = th::clique_count_stats(12, 0.6, k, 2000, 60 + k);
    bound_ok = bound_ok && static_cast<double>(s.max_observed) <= th::clique_count_bound(12, k);
  }
  return verdict(exact_ok && mc_ok && bound_ok, "exhaustive mean " + num(exact) + ", MC mean " + num(mc.mean) +
                                                    " (SE " + num(mc.standard_error) + "), bound " +
                                                    (bound_ok ? "held" : "violated"));
}

// 7. Leading-eigenvalue tail of G(50, 1/4).
Outcome c7_talagrand(const Options&) {
  const auto r = th::talagrand_check(50, 2000, {1, 2, 3, 4, 5, 6}, 7);
  bool ok = r.degree_sandwich_ok;
  std::string rows;
  for (const auto& row : r.rows) {
    const bool within = row.empirical <= row.bound + 3 * row.stderr_binomial;
    ok = ok && within;
    rows += " t=" + num(row.t) + ":" + num(row.empirical);
  }
  return verdict(ok, "median " + num(r.median) + ", degree sandwich violations " +
                         std::to_string(r.degree_sandwich_violations) + ";" + rows);
}

// 8. Worst/best ratio probability against the closed-form bound.
Outcome c8_ratio(const Options&) {
  th::RatioExperimentSpec spec;
  spec.n = 6;
  spec.lambda = 10.0;
  spec.epsilon = 0.5;
  spec.trials = 2000;
  spec.seed = 8;
  const auto r = th::ratio_bound_experiment(spec);
  if (!r.psi || *r.psi <= 0.0) {
    return {Verdict::kPass, "bound vacuous (psi " + (r.psi ? num(*r.psi) : std::string("undefined")) +
                                "), empirical " + num(r.empirical) + " reported only"};
  }
  return verdict(r.empirical >= *r.psi, "psi " + num(*r.psi) + ", empirical P[ratio <= 1.5] " + num(r.empirical) +
                                            ", mean ratio " + num(r.mean_ratio));
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

Moments edge_moments(const cm::RandomGraph& g, cm::NoiseModel model, double q, double r, std::uint64_t seed0,
                     int trials) {
  double s = 0.0, s2 = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double e = static_cast<double>(cm::perturb(g, {model, q, r, seed0 + t}).edge_count());
    s += e;
    s2 += e * e;
  }
  const double mean = s / trials;
  return {mean, (s2 - trials * mean * mean) / (trials - 1)};
}

// 9. Noise models: expected edge count, Model II at r = q, identity at q = 0.
Outcome c9_noise(const Options&) {
  const int n = 30, trials = 5000;
  const double q = 0.1;
  const auto g = cm::erdos_renyi(n, 0.3, 9);
  const double pairs = n * (n - 1) / 2.0;
  const double e = static_cast<double>(g.edge_count());
  const double expected = e * (1 - q) + (pairs - e) * q;

  const auto m1 = edge_moments(g, cm::NoiseModel::kI, q, 0.0, 100'000, trials);
  const auto m2 = edge_moments(g, cm::NoiseModel::kII, q, q, 200'000, trials);
  const bool mean_ok = std::abs(m1.mean - expected) <= 3 * std::sqrt(m1.variance / trials);
  const double diff_se = std::sqrt(m1.variance / trials + m2.variance / trials);
  const bool same_mean = std::abs(m1.mean - m2.mean) <= 3 * diff_se;
  // Variance ratio of two samples of 5000: standard error about sqrt(4 / 4999).
  const double ratio = m2.variance / m1.variance;
  const bool same_var = std::abs(ratio - 1.0) <= 3 * std::sqrt(4.0 / (trials - 1));

  bool identity = true;
  for (std::uint64_t s = 0; s < 50; ++s) {
    identity = identity && cm::perturb(g, {cm::NoiseModel::kI, 0.0, 0.0, s}).edges() == g.edges();
    identity = identity && cm::perturb(g, {cm::NoiseModel::kII, 0.0, 0.0, s}).edges() == g.edges();
  }
  return verdict(mean_ok && same_mean && same_var && identity,
                 "Model I mean " + num(m1.mean) + " vs " + num(expected) + ", Model II mean " + num(m2.mean) +
                     ", variance ratio " + num(ratio) + ", q=0 identity " + (identity ? "yes" : "no"));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

// 10. Every CLI protocol twice with the same config and seed, byte for byte.
Outcome c10_determinism(const Options& opt) {
  if (opt.cli.empty()) return {Verdict::kFail, "no --cli given"};
  fs::create_directories(opt.scratch);
  const auto cfg_path = opt.scratch / "small.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "frames = 12\npoints = 20\nrepetitions = 2\nimpurities = 0.4\ntransforms = rotation:20, shear:0.5\n"
           "missing_counts = 2, 6\ngaps = 3, 6\nnoise_q = 0, 0.1\nnoise_gaps = 3\nsweep_k = 3, 6\nsweep_gap = 3\n";
  }
  const auto landmarks = opt.scratch / "landmarks.csv";
  {
    const auto seq = cm::synthetic_sequence(2, 20, 15.0, 10);
    std::ofstream out(landmarks);
    cm::write_landmarks_csv(out, seq);
  }
  std::vector<std::pair<std::string, std::string>> runs = {
      {"match", "match " + quote(landmarks.string())},
      {"validate", "validate trace_qap spread_gaps finke lawler clique_counts"},
      {"sweep", "sweep --k 3,5"},
  };
  for (const char* p : {"transform", "occlusion", "frame_separation", "noise", "knn_sweep", "pairwise_all"}) {
    runs.emplace_back(p, std::string("experiment --protocol ") + p);
  }
  std::vector<std::string> differing;
  for (const auto& [name, args] : runs) {
    std::string outputs[2];
    for (int i = 0; i < 2; ++i) {
      const auto out = opt.scratch / (name + "_" + std::to_string(i) + ".csv");
      fs::remove(out);
      const std::string cmd = quote(opt.cli) + " --config " + quote(cfg_path.string()) + " --seed 10 --out " +
                              quote(out.string()) + " " + args + " 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      (void)rc;
      outputs[i] = read_file(out);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) differing.push_back(name);
  }
  std::string detail = std::to_string(runs.size() - differing.size()) + "/" + std::to_string(runs.size()) +
                       " protocols byte-identical";
  for (const auto& d : differing) detail += " differs:" + d;
  return verdict(differing.empty(), detail);
}

// 11. Dataset run: 20 degree rotation at 20% impurity, then the occlusion curve.
Outcome c11_dataset(const Options& opt) {
  if (opt.dataset.empty()) return {Verdict::kSkip, "no dataset given"};
  cm::ExperimentConfig cfg;
  cfg.dataset = opt.dataset;
  auto transform_cfg = cfg;
  transform_cfg.transforms = {cm::parse_transform_spec("rotation:20")};
  transform_cfg.impurities = {0.2};
  const double err = cm::run_transform_experiment(transform_cfg).rows.front().mean_error;
  auto occlusion_cfg = cfg;
  occlusion_cfg.missing_counts = {0, 2, 4, 6, 8, 10};
  const auto occ = cm::run_occlusion_experiment(occlusion_cfg);
  bool monotone = true;
  std::string curve;
  for (std::size_t i = 0; i < occ.rows.size(); ++i) {
    curve += " " + num(occ.rows[i].mean_error);
    if (i > 0) {
      const double slack = 3 * std::hypot(occ.rows[i - 1].std_error, occ.rows[i].std_error);
      monotone = monotone && occ.rows[i].mean_error + slack >= occ.rows[i - 1].mean_error;
    }
  }
  return verdict(!std::isnan(err) && err <= 2.0 && monotone,
                 "rotation:20 error " + num(err) + "% (limit 2), occlusion curve" + curve);
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome(const Options&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Options opt;
  int only = 0;
  std::string scratch;
  app.add_option("--criterion", only, "Run one criterion (1-11); all when omitted")->check(CLI::Range(1, 11));
  app.add_option("--cli", opt.cli, "Path to the clique_match executable");
  app.add_option("--with-dataset", opt.dataset, "Landmark CSV for the dataset criterion");
  app.add_option("--scratch", scratch, "Directory for temporary files");
  CLI11_PARSE(app, argc, argv);
  if (!scratch.empty()) opt.scratch = scratch;

  const std::vector<Criterion> criteria = {
      {1, "affine equivariance end to end", 60, c1_equivariance},
      {2, "assignment optimality", 30, c2_hungarian},
      {3, "worked example tables", 1, c3_worked_example},
      {4, "trace sandwich and identity", 60, c4_trace_sandwich},
      {5, "eigenvalue gap bound", 30, c5_gap_bound},
      {6, "clique counts", 60, c6_clique_counts},
      {7, "leading eigenvalue tail", 120, c7_talagrand},
      {8, "worst/best ratio bound", 120, c8_ratio},
      {9, "noise models", 30, c9_noise},
      {10, "CLI determinism", 0, c10_determinism},
      {11, "dataset transform and occlusion", 0, c11_dataset},
  };

  int failed = 0, skipped = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run(opt);
    } catch (const std::exception& e) {
      out = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.verdict == Verdict::kPass && c.limit_s > 0 && secs >= c.limit_s) {
      out.verdict = Verdict::kFail;
      out.detail += "; over time limit";
    }
    const char* tag = out.verdict == Verdict::kPass ? "PASS" : out.verdict == Verdict::kFail ? "FAIL" : "SKIP";
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs;
    std::cout << tag << " C" << c.id << " " << c.name << " [" << time.str() << " s";
    if (c.limit_s > 0) std::cout << " / limit " << c.limit_s << " s";
    std::cout << "]: " << out.detail << std::endl;
    failed += out.verdict == Verdict::kFail;
    skipped += out.verdict == Verdict::kSkip;
  }
  if (failed > 0) return 1;
  if (ran > 0 && skipped == ran) return 77;
  return 0;
}
