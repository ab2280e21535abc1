#include "cliquematch/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"
#include "cliquematch/parallel.hpp"
#include "cliquematch/random.hpp"

namespace cliquematch {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("bad boolean for '" + key + "': '" + v + "'");
}

template <typename T>
T parse_value(const std::string& key, const std::string& v) {
  T out{};
  if (!detail::parse_number(v, out)) throw ConfigError("bad value for '" + key + "': '" + v + "'");
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& v) {
  std::vector<T> out;
  for (const auto& item : detail::split_csv(v)) {
    if (!item.empty()) out.push_back(parse_value<T>(key, item));
  }
  return out;
}

std::string format_amount(double v) { return detail::format_double(v); }

struct Job {
  std::size_t cell = 0;
  std::size_t rep = 0;
  Frame a;
  Frame b;
  std::optional<NoiseSpec> noise;
  std::uint64_t seed = 0;
};

LandmarkSequence load_sequence(const ExperimentConfig& cfg) {
  if (!cfg.dataset.empty()) return load_landmarks(cfg.dataset);
  return synthetic_sequence(cfg.synthetic_frames, cfg.synthetic_points, cfg.synthetic_step_deg, cfg.seed);
}

std::uint64_t rep_seed(const ExperimentConfig& cfg, std::size_t rep) { return trial_seed(cfg.seed, rep + 1); }

/// Picks round(fraction * (n - 1)) distinct frame indices from 1..n-1.
std::vector<bool> sample_frames(std::size_t n, double fraction, std::uint64_t seed) {
  std::vector<bool> chosen(n, false);
  if (n < 2) return chosen;
  std::vector<std::size_t> pool(n - 1);
  std::iota(pool.begin(), pool.end(), 1);
  const auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n - 1)));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count && i < pool.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
    chosen[pool[i]] = true;
  }
  return chosen;
}

ReportTable aggregate(const std::vector<std::string>& cells, const std::vector<Job>& jobs,
                      const std::vector<PairOutcome>& outcomes, const ExperimentConfig& cfg) {
  const std::size_t reps = static_cast<std::size_t>(cfg.repetitions);
  struct Acc {
    double error_sum = 0.0;
    std::size_t defined = 0;
    std::size_t wrong = 0;
    std::size_t truth = 0;
  };
  std::vector<std::vector<Acc>> acc(cells.size(), std::vector<Acc>(reps));
  std::vector<double> runtime_sum(cells.size(), 0.0);
  std::vector<std::size_t> runtime_count(cells.size(), 0);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& a = acc[jobs[i].cell][jobs[i].rep];
    const auto& o = outcomes[i];
    if (o.error) {
      a.error_sum += *o.error;
      ++a.defined;
    }
    a.wrong += o.wrong;
    a.truth += o.truth_pairs;
    runtime_sum[jobs[i].cell] += o.runtime_s;
    ++runtime_count[jobs[i].cell];
  }

  ReportTable table;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<double> per_rep;
    for (const auto& a : acc[c]) {
      if (cfg.aggregation == Aggregation::kMeanPerPair) {
        if (a.defined) per_rep.push_back(a.error_sum / static_cast<double>(a.defined));
      } else if (a.truth) {
        per_rep.push_back(100.0 * static_cast<double>(a.wrong) / static_cast<double>(a.truth));
      }
    }
    ReportRow row;
    row.cell = cells[c];
    if (per_rep.empty()) {
      row.mean_error = kNaN;
      row.std_error = kNaN;
    } else {
      const double n = static_cast<double>(per_rep.size());
      row.mean_error = std::accumulate(per_rep.begin(), per_rep.end(), 0.0) / n;
      double ss = 0.0;
      for (const double e : per_rep) ss += (e - row.mean_error) * (e - row.mean_error);
      row.std_error = per_rep.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    }
    if (cfg.timing) {
      row.mean_runtime_s = runtime_count[c] ? runtime_sum[c] / static_cast<double>(runtime_count[c]) : 0.0;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ReportTable execute(const std::vector<std::string>& cells, const std::vector<Job>& jobs,
                    const ExperimentConfig& cfg) {
  const auto outcomes = parallel_map(jobs.size(), [&](std::size_t i) {
    return evaluate_pair(jobs[i].a, jobs[i].b, cfg, jobs[i].seed, jobs[i].noise);
  });
  return aggregate(cells, jobs, outcomes, cfg);
}

std::uint64_t job_seed(const ExperimentConfig& cfg, std::size_t rep, std::size_t index) {
  return trial_seed(rep_seed(cfg, rep), index);
}

}  // namespace

Protocol parse_protocol(const std::string& name) {
  if (name == "transform") return Protocol::kTransform;
  if (name == "occlusion") return Protocol::kOcclusion;
  if (name == "frame_separation") return Protocol::kFrameSeparation;
  if (name == "noise") return Protocol::kNoise;
  if (name == "knn_sweep") return Protocol::kKnnSweep;
  if (name == "pairwise_all") return Protocol::kPairwiseAll;
  throw ConfigError("unknown protocol '" + name + "'");
}

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::kTransform: return "transform";
    case Protocol::kOcclusion: return "occlusion";
    case Protocol::kFrameSeparation: return "frame_separation";
    case Protocol::kNoise: return "noise";
    case Protocol::kKnnSweep: return "knn_sweep";
    case Protocol::kPairwiseAll: return "pairwise_all";
  }
  return "unknown";
}

AffineTransform TransformSpec::make() const {
  if (identity) return AffineTransform::identity();
  switch (kind) {
    case TransformKind::kRotation: return AffineTransform::rotation(amount);
    case TransformKind::kReflection: return AffineTransform::reflection(Axis::kY);
    case TransformKind::kScale: return AffineTransform::scale(amount, amount);
    case TransformKind::kShear: return AffineTransform::shear(amount, Axis::kX);
    case TransformKind::kCustom: break;
  }
  throw ConfigError("transform kind has no parameterless form");
}

std::string TransformSpec::label() const {
  if (identity) return "identity";
  switch (kind) {
    case TransformKind::kRotation: return "rotation:" + format_amount(amount);
    case TransformKind::kReflection: return "reflection";
    case TransformKind::kScale: return "scale:" + format_amount(amount);
    case TransformKind::kShear: return "shear:" + format_amount(amount);
    case TransformKind::kCustom: break;
  }
  return "custom";
}

TransformSpec parse_transform_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  TransformSpec spec;
  if (name == "identity") {
    spec.identity = true;
    return spec;
  }
  if (name == "reflection") {
    spec.kind = TransformKind::kReflection;
    spec.amount = 0.0;
    return spec;
  }
  if (colon == std::string::npos) throw ConfigError("transform '" + text + "' needs a parameter");
  const double amount = parse_value<double>("transforms", text.substr(colon + 1));
  if (name == "rotation") {
    spec.kind = TransformKind::kRotation;
  } else if (name == "scale") {
    if (!(amount > 0.0)) throw ConfigError("scale factor must be positive");
    spec.kind = TransformKind::kScale;
  } else if (name == "shear") {
    spec.kind = TransformKind::kShear;
  } else {
    throw ConfigError("unknown transform '" + name + "'");
  }
  spec.amount = amount;
  return spec;
}

bool apply_experiment_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "protocol") {
    cfg.protocol = parse_protocol(value);
  } else if (key == "dataset") {
    cfg.dataset = value;
  } else if (key == "frames") {
    cfg.synthetic_frames = parse_value<int>(key, value);
  } else if (key == "points") {
    cfg.synthetic_points = parse_value<int>(key, value);
  } else if (key == "step_deg") {
    cfg.synthetic_step_deg = parse_value<double>(key, value);
  } else if (key == "transforms") {
    cfg.transforms.clear();
    for (const auto& item : detail::split_csv(value)) {
      if (!item.empty()) cfg.transforms.push_back(parse_transform_spec(item));
    }
  } else if (key == "impurities") {
    cfg.impurities = parse_list<double>(key, value);
  } else if (key == "missing_counts") {
    cfg.missing_counts = parse_list<int>(key, value);
  } else if (key == "occluded_fraction") {
    cfg.occluded_fraction = parse_value<double>(key, value);
  } else if (key == "gaps") {
    cfg.gaps = parse_list<int>(key, value);
  } else if (key == "noise_models") {
    cfg.noise_models.clear();
    for (const auto& item : detail::split_csv(value)) {
      if (item == "I") {
        cfg.noise_models.push_back(NoiseModel::kI);
      } else if (item == "II") {
        cfg.noise_models.push_back(NoiseModel::kII);
      } else if (!item.empty()) {
        throw ConfigError("noise model must be I or II, got '" + item + "'");
      }
    }
  } else if (key == "noise_q") {
    cfg.noise_q = parse_list<double>(key, value);
  } else if (key == "noise_r") {
    cfg.noise_r = value == "q" ? -1.0 : parse_value<double>(key, value);
  } else if (key == "noise_gaps") {
    cfg.noise_gaps = parse_list<int>(key, value);
  } else if (key == "sweep_p") {
    cfg.sweep_p = parse_value<double>(key, value);
  } else if (key == "sweep_k") {
    cfg.sweep_k = parse_list<int>(key, value);
  } else if (key == "sweep_gap") {
    cfg.sweep_gap = parse_value<int>(key, value);
  } else if (key == "shared_graph") {
    cfg.shared_graph = parse_bool(key, value);
  } else if (key == "shuffle_partner") {
    cfg.shuffle_partner = parse_bool(key, value);
  } else if (key == "aggregation") {
    if (value == "mean_per_pair") {
      cfg.aggregation = Aggregation::kMeanPerPair;
    } else if (value == "pooled") {
      cfg.aggregation = Aggregation::kPooled;
    } else {
      throw ConfigError("aggregation must be mean_per_pair or pooled");
    }
  } else if (key == "timing") {
    cfg.timing = parse_bool(key, value);
  } else if (key == "repetitions") {
    cfg.repetitions = parse_value<int>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_value<std::uint64_t>(key, value);
  } else {
    return apply_match_key(cfg.match, key, value);
  }
  return true;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key(detail::trim(body.substr(0, eq)));
    const std::string value(detail::trim(body.substr(eq + 1)));
    if (!apply_experiment_key(cfg, key, value)) {
      throw ConfigError("line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (cfg.dataset.empty()) {
    if (cfg.synthetic_frames < 1) throw ConfigError("frames must be >= 1");
    if (cfg.synthetic_points < 3) throw ConfigError("points must be >= 3");
  }
  for (const double f : cfg.impurities) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("impurities must lie in [0, 1]");
  }
  if (!(cfg.occluded_fraction >= 0.0 && cfg.occluded_fraction <= 1.0)) {
    throw ConfigError("occluded_fraction must lie in [0, 1]");
  }
  for (const int m : cfg.missing_counts) {
    if (m < 0) throw ConfigError("missing_counts must be >= 0");
  }
  for (const int g : cfg.gaps) {
    if (g < 0) throw ConfigError("gaps must be >= 0");
  }
  for (const int g : cfg.noise_gaps) {
    if (g < 0) throw ConfigError("noise_gaps must be >= 0");
  }
  for (const double q : cfg.noise_q) {
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("noise_q must lie in [0, 1]");
  }
  if (cfg.noise_r > 1.0) throw ConfigError("noise_r must lie in [0, 1]");
  if (!(cfg.sweep_p >= 0.0 && cfg.sweep_p <= 1.0)) throw ConfigError("sweep_p must lie in [0, 1]");
  for (const int k : cfg.sweep_k) {
    if (k < 1) throw ConfigError("sweep_k entries must be >= 1");
  }
  if (cfg.sweep_gap < 0) throw ConfigError("sweep_gap must be >= 0");
}

LandmarkSequence synthetic_sequence(int frames, int points, double step_deg, std::uint64_t seed) {
  if (frames < 1 || points < 1) throw ArgumentError("synthetic_sequence: frames and points must be >= 1");
  std::mt19937_64 rng(mix64(seed));
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  std::vector<LandmarkPoint> base;
  for (int i = 0; i < points; ++i) {
    const double x = coord(rng);
    base.push_back({i, {x, coord(rng)}});
  }
  const Frame first(base);
  LandmarkSequence seq;
  seq.name = "synthetic";
  for (int f = 0; f < frames; ++f) {
    seq.frames.push_back(apply_transform_about_centroid(first, AffineTransform::rotation(f * step_deg)));
  }
  return seq;
}

PairOutcome evaluate_pair(const Frame& a, const Frame& b, const ExperimentConfig& cfg, std::uint64_t seed,
                          const std::optional<NoiseSpec>& noise) {
  const auto start = std::chrono::steady_clock::now();
  const MatchConfig& mc = cfg.match;
  const std::uint64_t seed_a = trial_seed(seed, 1);
  const std::uint64_t seed_b = mc.share_seed ? seed_a : trial_seed(seed, 2);
  const Frame shuffled = cfg.shuffle_partner ? shuffle_points(b, trial_seed(seed, 3)) : b;

  const auto k_a = std::min(mc.k_nn, static_cast<int>(a.size()) - 1);
  const auto k_b = std::min(mc.k_nn, static_cast<int>(shuffled.size()) - 1);
  RandomGraph ga = knn_bernoulli_graph(a, k_a, mc.p, seed_a);
  RandomGraph gb = cfg.shared_graph ? transport_graph(ga, a, shuffled)
                                    : knn_bernoulli_graph(shuffled, k_b, mc.p, seed_b);
  if (noise) {
    NoiseSpec spec = *noise;
    spec.seed = trial_seed(seed, 4);
    gb = perturb(gb, spec);
  }
  const auto side_a = prepare_side(a, std::move(ga), mc);
  const auto side_b = prepare_side(shuffled, std::move(gb), mc);
  const auto result = match_complexes(side_a, side_b, mc);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  PairOutcome out;
  const auto truth = shared_id_truth(a, shuffled);
  out.error = match_error(result, truth, mc.error_mode);
  for (const auto& [ida, idb] : truth) {
    const auto it = result.vertex_correspondence.find(ida);
    if (it == result.vertex_correspondence.end()) {
      if (mc.error_mode == ErrorMode::kStrict) {
        ++out.truth_pairs;
        ++out.wrong;
      }
      continue;
    }
    ++out.truth_pairs;
    if (it->second != idb) ++out.wrong;
  }
  out.runtime_s = elapsed;
  return out;
}

ReportTable run_transform_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  std::vector<std::string> cells;
  std::vector<Job> jobs;
  for (const auto& t : cfg.transforms) {
    const auto transform = t.make();
    for (const double impurity : cfg.impurities) {
      const std::size_t cell = cells.size();
      cells.push_back(t.label() + "@impurity=" + format_amount(impurity));
      for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
        const auto chosen = sample_frames(n, impurity, trial_seed(rep_seed(cfg, rep), cell));
        for (std::size_t f = 1; f < n; ++f) {
          Frame b = chosen[f] ? apply_transform_about_centroid(seq.frames[f], transform) : seq.frames[f];
          jobs.push_back({cell, rep, seq.frames[0], std::move(b), std::nullopt, job_seed(cfg, rep, f)});
        }
      }
    }
  }
  return execute(cells, jobs, cfg);
}

ReportTable run_occlusion_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  std::vector<std::string> cells;
  std::vector<Job> jobs;
  for (const int missing : cfg.missing_counts) {
    const std::size_t cell = cells.size();
    cells.push_back("missing=" + std::to_string(missing));
    for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
      const auto chosen = sample_frames(n, cfg.occluded_fraction, trial_seed(rep_seed(cfg, rep), 7));
      for (std::size_t f = 1; f < n; ++f) {
        if (missing > 0 && static_cast<std::size_t>(missing) >= seq.frames[f].size()) {
          throw ConfigError("missing count " + std::to_string(missing) + " leaves no points");
        }
        Frame b = chosen[f] && missing > 0
                      ? occlude(seq.frames[f], static_cast<std::size_t>(missing), job_seed(cfg, rep, n + f)).frame
                      : seq.frames[f];
        jobs.push_back({cell, rep, seq.frames[0], std::move(b), std::nullopt, job_seed(cfg, rep, f)});
      }
    }
  }
  return execute(cells, jobs, cfg);
}

ReportTable run_frame_separation_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  std::vector<std::string> cells;
  std::vector<Job> jobs;
  for (const int gap : cfg.gaps) {
    const std::size_t cell = cells.size();
    cells.push_back("gap=" + std::to_string(gap));
    for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
      for (std::size_t i = 0; i + static_cast<std::size_t>(gap) < n; ++i) {
        jobs.push_back({cell, rep, seq.frames[i], seq.frames[i + gap], std::nullopt, job_seed(cfg, rep, i)});
      }
    }
  }
  return execute(cells, jobs, cfg);
}

ReportTable run_noise_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  std::vector<std::string> cells;
  std::vector<Job> jobs;
  for (const auto model : cfg.noise_models) {
    for (const double q : cfg.noise_q) {
      for (const int gap : cfg.noise_gaps) {
        const std::size_t cell = cells.size();
        const double r = cfg.noise_r < 0.0 ? q : cfg.noise_r;
        cells.push_back(std::string(model == NoiseModel::kI ? "model=I" : "model=II") +
                        ";q=" + format_amount(q) + ";gap=" + std::to_string(gap));
        const NoiseSpec spec{model, q, model == NoiseModel::kII ? r : 0.0, 0};
        for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
          for (std::size_t i = 0; i + static_cast<std::size_t>(gap) < n; ++i) {
            jobs.push_back({cell, rep, seq.frames[i], seq.frames[i + gap], spec, job_seed(cfg, rep, i)});
          }
        }
      }
    }
  }
  return execute(cells, jobs, cfg);
}

ReportTable run_knn_sweep(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  ReportTable table;
  for (const int k : cfg.sweep_k) {
    ExperimentConfig sub = cfg;
    sub.match.k_nn = k;
    sub.match.p = cfg.sweep_p;
    std::vector<std::string> cells = {"p=" + format_amount(cfg.sweep_p) + ";k=" + std::to_string(k)};
    std::vector<Job> jobs;
    for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
      for (std::size_t i = 0; i + static_cast<std::size_t>(cfg.sweep_gap) < n; ++i) {
        jobs.push_back({0, rep, seq.frames[i], seq.frames[i + cfg.sweep_gap], std::nullopt, job_seed(cfg, rep, i)});
      }
    }
    auto part = execute(cells, jobs, sub);
    table.rows.insert(table.rows.end(), part.rows.begin(), part.rows.end());
  }
  return table;
}

ReportTable run_pairwise_all(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto seq = load_sequence(cfg);
  const std::size_t n = seq.frames.size();
  std::vector<std::string> cells = {"all_pairs"};
  std::vector<Job> jobs;
  for (std::size_t rep = 0; rep < static_cast<std::size_t>(cfg.repetitions); ++rep) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        jobs.push_back({0, rep, seq.frames[i], seq.frames[j], std::nullopt, job_seed(cfg, rep, index++)});
      }
    }
  }
  return execute(cells, jobs, cfg);
}

ReportTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.protocol) {
    case Protocol::kTransform: return run_transform_experiment(cfg);
    case Protocol::kOcclusion: return run_occlusion_experiment(cfg);
    case Protocol::kFrameSeparation: return run_frame_separation_experiment(cfg);
    case Protocol::kNoise: return run_noise_experiment(cfg);
    case Protocol::kKnnSweep: return run_knn_sweep(cfg);
    case Protocol::kPairwiseAll: return run_pairwise_all(cfg);
  }
  throw ConfigError("unknown protocol");
}

std::vector<theory::ValidationRow> run_theory_suite(const std::vector<std::string>& selection,
                                                    std::uint64_t seed) {
  return theory::run_validators(selection, seed);
}

void write_report_csv(std::ostream& out, const ReportTable& table) {
  auto num = [](double v) { return std::isnan(v) ? std::string("NA") : detail::format_double(v); };
  out << "cell,mean_error,std_error,mean_runtime_s\n";
  for (const auto& r : table.rows) {
    out << r.cell << ',' << num(r.mean_error) << ',' << num(r.std_error) << ','
        << (r.mean_runtime_s ? num(*r.mean_runtime_s) : std::string()) << '\n';
  }
}

ReportTable parse_report_csv(std::istream& in) {
  auto num = [](const std::string& s, int line) {
    if (s == "NA") return kNaN;
    double v = 0.0;
    if (!detail::parse_number(s, v)) throw ParseError("bad number '" + s + "'", line);
    return v;
  };
  ReportTable table;
  std::string line;
  int number = 0;
  if (!std::getline(in, line) || detail::trim(line) != "cell,mean_error,std_error,mean_runtime_s") {
    throw ParseError("expected header cell,mean_error,std_error,mean_runtime_s", 1);
  }
  ++number;
  while (std::getline(in, line)) {
    ++number;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv(line);
    if (fields.size() != 4) throw ParseError("expected 4 fields", number);
    ReportRow row;
    row.cell = fields[0];
    row.mean_error = num(fields[1], number);
    row.std_error = num(fields[2], number);
    if (!fields[3].empty()) row.mean_runtime_s = num(fields[3], number);
    table.rows.push_back(std::move(row));
  }
  return table;
}

void emit_plot_data(const ReportTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_report_csv(out, table);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace cliquematch
