#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/descriptors.hpp"
#include "cliquematch/geometry.hpp"
#include "cliquematch/graph.hpp"
#include "cliquematch/hungarian.hpp"

namespace cliquematch {

enum class ErrorMode { kStrict, kLenient };

struct MatchConfig {
  int h = 2;
  /// Same-dimension overlap l; 0 means l = k at each dimension.
  int l = 0;
  double p = 0.7;
  int k_nn = 7;
  double tau = 0.15;
  std::uint64_t seed_a = 1;
  std::uint64_t seed_b = 2;
  bool share_seed = false;
  bool vote = false;
  ErrorMode error_mode = ErrorMode::kStrict;
  std::size_t clique_cap = kDefaultCliqueCap;

  std::uint64_t graph_seed_b() const { return share_seed ? seed_a : seed_b; }
};

/// Parses `key = value` lines (`#` comments). Unknown keys throw ConfigError.
MatchConfig parse_match_config(std::istream& in);
/// Applies one key to `cfg`; returns false when the key is not a match key.
bool apply_match_key(MatchConfig& cfg, const std::string& key, const std::string& value);

/// Everything the matcher needs about one side: the frame it was built on,
/// the graph, its clique complex and the clique descriptors.
struct PreparedSide {
  Frame frame;
  RandomGraph graph;
  CliqueComplex complex;
  ComplexDescriptors descriptors;
};

PreparedSide prepare_side(Frame frame, RandomGraph graph, const MatchConfig& cfg);
/// Builds the k-NN + Bernoulli graph with `seed`, then the complex.
PreparedSide prepare_frame(const Frame& frame, const MatchConfig& cfg, std::uint64_t seed);

/// Cost of comparing two weight vectors: each is sorted descending and the
/// shorter one zero-padded before taking the Euclidean distance.
double weight_distance(std::span<const double> a, std::span<const double> b);

/// Cost assigned to any pair involving an undescribable clique.
inline constexpr double kUndescribableCost = 1.0e3;

CostMatrix build_cost_matrix(const std::vector<CliqueDescriptor>& a,
                             const std::vector<CliqueDescriptor>& b);

struct CliquePair {
  int a = 0;
  int b = 0;
  double cost = 0.0;
};

struct DimensionMatch {
  int dim = 0;
  std::vector<CliquePair> pairs;
  std::vector<int> unmatched_a;
  std::vector<int> unmatched_b;
  double total_cost = 0.0;
  /// |G X - X G'|_F^2 for the 0/1 matrix X of the kept pairs.
  double misalignment = 0.0;
};

struct MatchResult {
  /// Indexed by dimension (0..h).
  std::vector<DimensionMatch> dims;
  /// Point id in frame A -> point id in frame B.
  std::map<int, int> vertex_correspondence;
};

MatchResult match_complexes(const PreparedSide& a, const PreparedSide& b, const MatchConfig& cfg);

/// Convenience: graphs, complexes, descriptors and matching in one call.
MatchResult match_frames(const Frame& a, const Frame& b, const MatchConfig& cfg);

/// |G X - X G'|_F^2 where X is the partial assignment `pairs`.
double frobenius_misalignment(const SkeletonMatrix& ga, const SkeletonMatrix& gb,
                              const std::vector<CliquePair>& pairs);

/// Largest misalignment decrease achievable by exchanging the targets of two
/// matched pairs (0 when no swap helps). Diagnostic only.
double best_two_swap_gain(const SkeletonMatrix& ga, const SkeletonMatrix& gb,
                          const std::vector<CliquePair>& pairs);

/// Percentage of ground-truth pairs the matcher got wrong. Truth maps point
/// ids of A to point ids of B. Strict mode counts unmatched truth pairs as
/// errors; lenient mode leaves them out. Empty denominator gives nullopt.
std::optional<double> match_error(const MatchResult& result, const std::map<int, int>& truth,
                                  ErrorMode mode = ErrorMode::kStrict);

/// Identity truth over the ids present in both frames.
std::map<int, int> shared_id_truth(const Frame& a, const Frame& b);

/// CSV `dim,clique_a,clique_b,cost`, then one `dim,summary,<pairs>,<total>`
/// row per dimension.
void write_match_csv(std::ostream& out, const MatchResult& result);

}  // namespace cliquematch
