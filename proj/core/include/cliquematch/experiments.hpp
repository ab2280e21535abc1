#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquematch/geometry.hpp"
#include "cliquematch/matching.hpp"
#include "cliquematch/noise.hpp"
#include "cliquematch/theory/suite.hpp"

namespace cliquematch {

enum class Protocol { kTransform, kOcclusion, kFrameSeparation, kNoise, kKnnSweep, kPairwiseAll };

Protocol parse_protocol(const std::string& name);
std::string protocol_name(Protocol p);

enum class Aggregation { kMeanPerPair, kPooled };

/// One transform setting, written `rotation:20`, `reflection`, `scale:0.5`,
/// `shear:0.5` or `identity` in config files.
struct TransformSpec {
  TransformKind kind = TransformKind::kRotation;
  double amount = 20.0;
  bool identity = false;

  AffineTransform make() const;
  std::string label() const;
};

TransformSpec parse_transform_spec(const std::string& text);

struct ExperimentConfig {
  Protocol protocol = Protocol::kTransform;
  /// Landmark CSV; empty selects the synthetic sequence.
  std::filesystem::path dataset;
  int synthetic_frames = 30;
  int synthetic_points = 30;
  /// Rotation between consecutive synthetic frames.
  double synthetic_step_deg = 1.5;

  std::vector<TransformSpec> transforms = {TransformSpec{}};
  std::vector<double> impurities = {0.2, 0.4};
  std::vector<int> missing_counts = {2, 4, 6, 8, 10};
  double occluded_fraction = 0.4;
  std::vector<int> gaps = {10, 20};
  std::vector<NoiseModel> noise_models = {NoiseModel::kI, NoiseModel::kII};
  std::vector<double> noise_q = {0.0, 0.05, 0.1, 0.2};
  /// Model II edge-addition probability; negative means "same as q".
  double noise_r = -1.0;
  std::vector<int> noise_gaps = {10};
  double sweep_p = 0.6;
  std::vector<int> sweep_k = {3, 4, 5, 6, 7, 8, 9, 10};
  int sweep_gap = 10;

  /// Partner graph re-expressed from frame A's graph by point id instead of
  /// being built independently.
  bool shared_graph = true;
  /// Randomise frame B's point order before matching so vertex order carries
  /// no ground truth.
  bool shuffle_partner = true;
  Aggregation aggregation = Aggregation::kMeanPerPair;
  bool timing = false;
  int repetitions = 5;
  std::uint64_t seed = 0;
  MatchConfig match;
};

/// Flat `key = value` file; match keys are accepted too. Throws ConfigError.
ExperimentConfig parse_experiment_config(std::istream& in);
/// Returns false for an unknown key.
bool apply_experiment_key(ExperimentConfig& cfg, const std::string& key, const std::string& value);
/// Throws ConfigError when a parameter is out of range.
void validate(const ExperimentConfig& cfg);

/// Rigid-rotation sequence of `points` uniform points in [0, 100]^2, frame f
/// rotated by f * step_deg about the centroid.
LandmarkSequence synthetic_sequence(int frames, int points, double step_deg, std::uint64_t seed);

struct ReportRow {
  std::string cell;
  /// NaN when no pair had a defined error.
  double mean_error = 0.0;
  double std_error = 0.0;
  /// Present only when timing was requested.
  std::optional<double> mean_runtime_s;
};

struct ReportTable {
  std::vector<ReportRow> rows;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

inline bool operator==(const ReportRow& a, const ReportRow& b) {
  auto same = [](double x, double y) { return x == y || (x != x && y != y); };
  return a.cell == b.cell && same(a.mean_error, b.mean_error) && same(a.std_error, b.std_error) &&
         a.mean_runtime_s == b.mean_runtime_s;
}

/// One matched frame pair.
struct PairOutcome {
  std::optional<double> error;
  std::size_t truth_pairs = 0;
  std::size_t wrong = 0;
  double runtime_s = 0.0;
};

/// Matches `a` against `b` under the experiment's graph policy. Truth is the
/// point ids the frames share.
/// `noise`, when set, perturbs B's graph before matching.
PairOutcome evaluate_pair(const Frame& a, const Frame& b, const ExperimentConfig& cfg, std::uint64_t seed,
                          const std::optional<NoiseSpec>& noise = std::nullopt);

ReportTable run_transform_experiment(const ExperimentConfig& cfg);
ReportTable run_occlusion_experiment(const ExperimentConfig& cfg);
ReportTable run_frame_separation_experiment(const ExperimentConfig& cfg);
ReportTable run_noise_experiment(const ExperimentConfig& cfg);
ReportTable run_knn_sweep(const ExperimentConfig& cfg);
ReportTable run_pairwise_all(const ExperimentConfig& cfg);
ReportTable run_experiment(const ExperimentConfig& cfg);

std::vector<theory::ValidationRow> run_theory_suite(const std::vector<std::string>& selection,
                                                    std::uint64_t seed);

/// CSV `cell,mean_error,std_error,mean_runtime_s`; undefined values are
/// written as `NA`, an absent runtime as an empty field.
void write_report_csv(std::ostream& out, const ReportTable& table);
ReportTable parse_report_csv(std::istream& in);
void emit_plot_data(const ReportTable& table, const std::filesystem::path& path);

}  // namespace cliquematch
