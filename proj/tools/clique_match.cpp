// clique_match: match landmark frames, run experiment protocols and theory
// validators from the command line.
//
// Exit codes: 0 success, 1 an assertion failed, 2 usage or configuration error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/experiments.hpp"
#include "cliquematch/geometry.hpp"
#include "cliquematch/matching.hpp"
#include "cliquematch/theory/suite.hpp"

namespace cm = cliquematch;

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string dataset;
  bool timing = false;
};

cm::ExperimentConfig load_config(const GlobalOptions& g) {
  cm::ExperimentConfig cfg;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw cm::ConfigError("cannot open config '" + g.config_path + "'");
    cfg = cm::parse_experiment_config(in);
  }
  if (g.seed) {
    cfg.seed = *g.seed;
    cfg.match.seed_a = *g.seed;
    cfg.match.seed_b = *g.seed + 1;
  }
  if (g.timing) cfg.timing = true;
  return cfg;
}

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw cm::ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_match(const GlobalOptions& g, const std::vector<std::string>& inputs, int frame_a, int frame_b,
              bool report_error) {
  auto cfg = load_config(g);
  const auto first = cm::load_landmarks(inputs.at(0));
  const auto second = inputs.size() > 1 ? cm::load_landmarks(inputs[1]) : first;
  if (inputs.size() > 1 && frame_b < 0) frame_b = 0;
  if (frame_b < 0) frame_b = 1;
  auto pick = [](const cm::LandmarkSequence& s, int index) -> const cm::Frame& {
    if (index < 0 || static_cast<std::size_t>(index) >= s.frames.size()) {
      throw cm::ArgumentError("frame index " + std::to_string(index) + " out of range");
    }
    return s.frames[index];
  };
  const auto& a = pick(first, frame_a);
  const auto& b = pick(second, frame_b);
  const auto result = cm::match_frames(a, b, cfg.match);
  Output out(g.out_path);
  cm::write_match_csv(out.stream(), result);
  if (report_error) {
    const auto err = cm::match_error(result, cm::shared_id_truth(a, b), cfg.match.error_mode);
    std::cerr << "vertex error (%): " << (err ? cm::detail::format_double(*err) : std::string("N/A")) << '\n';
  }
  return 0;
}

bool occlusion_monotone(const cm::ReportTable& t) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const auto& prev = t.rows[i - 1];
    const auto& cur = t.rows[i];
    const double slack = 3.0 * std::hypot(prev.std_error, cur.std_error);
    if (cur.mean_error + slack < prev.mean_error) return false;
  }
  return true;
}

int run_experiment(const GlobalOptions& g, const std::string& protocol) {
  auto cfg = load_config(g);
  if (!protocol.empty()) cfg.protocol = cm::parse_protocol(protocol);
  Output out(g.out_path);
  if (g.dataset.empty()) {
    cm::write_report_csv(out.stream(), cm::run_experiment(cfg));
    return 0;
  }

  // Dataset checks: 20 degree rotation on 20% of frames, then the occlusion curve.
  cfg.dataset = g.dataset;
  auto transform_cfg = cfg;
  transform_cfg.transforms = {cm::parse_transform_spec("rotation:20")};
  transform_cfg.impurities = {0.2};
  const auto transform = cm::run_transform_experiment(transform_cfg);
  auto occlusion_cfg = cfg;
  occlusion_cfg.missing_counts = {0, 2, 4, 6, 8, 10};
  const auto occlusion = cm::run_occlusion_experiment(occlusion_cfg);
  cm::ReportTable combined = transform;
  combined.rows.insert(combined.rows.end(), occlusion.rows.begin(), occlusion.rows.end());
  cm::write_report_csv(out.stream(), combined);

  const double err = transform.rows.front().mean_error;
  const bool transform_ok = !std::isnan(err) && err <= 2.0;
  const bool occlusion_ok = occlusion_monotone(occlusion);
  std::cerr << "transform rotation:20 impurity 0.2: mean error " << cm::detail::format_double(err)
            << "% (limit 2.0) " << (transform_ok ? "PASS" : "FAIL") << '\n'
            << "occlusion curve monotone: " << (occlusion_ok ? "PASS" : "FAIL") << '\n';
  return transform_ok && occlusion_ok ? 0 : kExitAssertion;
}

int run_validate(const GlobalOptions& g, std::vector<std::string> selection) {
  const auto cfg = load_config(g);
  if (selection.empty()) selection = {"all"};
  const auto rows = cm::run_theory_suite(selection, cfg.seed);
  Output out(g.out_path);
  cm::theory::write_validation_csv(out.stream(), rows);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.ok;
  return ok ? 0 : kExitAssertion;
}

int run_sweep(const GlobalOptions& g, const std::string& k_grid, std::optional<double> p) {
  auto cfg = load_config(g);
  if (!k_grid.empty()) cm::apply_experiment_key(cfg, "sweep_k", k_grid);
  if (p) cfg.sweep_p = *p;
  cm::validate(cfg);
  Output out(g.out_path);
  cm::write_report_csv(out.stream(), cm::run_knn_sweep(cfg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landmark matching with random clique complexes"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Master seed");
  app.add_option("--out", g.out_path, "Write CSV here instead of stdout");
  app.add_option("--with-dataset", g.dataset, "Landmark CSV enabling the dataset assertions")
      ->check(CLI::ExistingFile);
  app.add_flag("--timing", g.timing, "Include measured runtime in experiment output");

  auto* match = app.add_subcommand("match", "Match two frames");
  std::vector<std::string> inputs;
  int frame_a = 0;
  int frame_b = -1;
  bool report_error = false;
  match->add_option("inputs", inputs, "Landmark CSV (one or two files)")->required()->expected(1, 2);
  match->add_option("--frame-a", frame_a, "Frame index in the first file");
  match->add_option("--frame-b", frame_b, "Frame index in the second file (default: next frame)");
  match->add_flag("--report-error", report_error, "Print vertex error against shared point ids");

  auto* experiment = app.add_subcommand("experiment", "Run an experiment protocol");
  std::string protocol;
  experiment->add_option("--protocol", protocol,
                         "transform, occlusion, frame_separation, noise, knn_sweep, pairwise_all");

  auto* validate = app.add_subcommand("validate", "Run theory validators");
  std::vector<std::string> validators;
  validate->add_option("validators", validators, "Validator names or 'all' (default)");

  auto* sweep = app.add_subcommand("sweep", "k-NN sweep at fixed p");
  std::string k_grid;
  std::optional<double> sweep_p;
  sweep->add_option("--k", k_grid, "Comma-separated k grid");
  sweep->add_option("--p", sweep_p, "Edge keep probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (seed_opt->count()) g.seed = seed;

  try {
    if (match->parsed()) return run_match(g, inputs, frame_a, frame_b, report_error);
    if (experiment->parsed()) return run_experiment(g, protocol);
    if (validate->parsed()) return run_validate(g, validators);
    if (sweep->parsed()) return run_sweep(g, k_grid, sweep_p);
  } catch (const cm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cm::StructuralError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cm::ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitUsage;
}
