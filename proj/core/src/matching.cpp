#include "cliquematch/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <tuple>

#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"

namespace cliquematch {

namespace {

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean, got '" + v + "'");
}

template <typename T>
T parse_value(const std::string& key, const std::string& v) {
  T out{};
  if (!detail::parse_number(v, out)) throw ConfigError("bad value for '" + key + "': '" + v + "'");
  return out;
}

}  // namespace

bool apply_match_key(MatchConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "h") {
    cfg.h = parse_value<int>(key, value);
    if (cfg.h < 0) throw ConfigError("h must be >= 0");
  } else if (key == "l") {
    cfg.l = value == "k" ? 0 : parse_value<int>(key, value);
    if (cfg.l < 0) throw ConfigError("l must be >= 1 or 'k'");
  } else if (key == "p") {
    cfg.p = parse_value<double>(key, value);
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
  } else if (key == "k_nn") {
    cfg.k_nn = parse_value<int>(key, value);
    if (cfg.k_nn < 1) throw ConfigError("k_nn must be >= 1");
  } else if (key == "tau") {
    cfg.tau = value == "inf" ? std::numeric_limits<double>::infinity()
                             : parse_value<double>(key, value);
    if (!(cfg.tau >= 0.0)) throw ConfigError("tau must be >= 0");
  } else if (key == "seed_a") {
    cfg.seed_a = parse_value<std::uint64_t>(key, value);
  } else if (key == "seed_b") {
    cfg.seed_b = parse_value<std::uint64_t>(key, value);
  } else if (key == "share_seed") {
    cfg.share_seed = parse_bool(value);
  } else if (key == "vote") {
    cfg.vote = parse_bool(value);
  } else if (key == "error_mode") {
    if (value == "strict") {
      cfg.error_mode = ErrorMode::kStrict;
    } else if (value == "lenient") {
      cfg.error_mode = ErrorMode::kLenient;
    } else {
      throw ConfigError("error_mode must be strict or lenient");
    }
  } else if (key == "clique_cap") {
    cfg.clique_cap = parse_value<std::size_t>(key, value);
  } else {
    return false;
  }
  return true;
}

MatchConfig parse_match_config(std::istream& in) {
  MatchConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto t = detail::trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key = value: '" + line + "'");
    const std::string key(detail::trim(t.substr(0, eq)));
    const std::string value(detail::trim(t.substr(eq + 1)));
    if (!apply_match_key(cfg, key, value)) throw ConfigError("unknown config key '" + key + "'");
  }
  return cfg;
}

PreparedSide prepare_side(Frame frame, RandomGraph graph, const MatchConfig& cfg) {
  if (static_cast<std::size_t>(graph.vertex_count()) != frame.size()) {
    throw ConfigError("graph and frame disagree on vertex count");
  }
  auto complex = CliqueComplex::enumerate(graph, cfg.h, cfg.clique_cap);
  auto descriptors = describe_complex(complex, frame, cfg.l);
  return {std::move(frame), std::move(graph), std::move(complex), std::move(descriptors)};
}

PreparedSide prepare_frame(const Frame& frame, const MatchConfig& cfg, std::uint64_t seed) {
  return prepare_side(frame, knn_bernoulli_graph(frame, cfg.k_nn, cfg.p, seed), cfg);
}

double weight_distance(std::span<const double> a, std::span<const double> b) {
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  const std::size_t n = std::max(sa.size(), sb.size());
  sa.resize(n, 0.0);
  sb.resize(n, 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += (sa[i] - sb[i]) * (sa[i] - sb[i]);
  return std::sqrt(sum);
}

CostMatrix build_cost_matrix(const std::vector<CliqueDescriptor>& a,
                             const std::vector<CliqueDescriptor>& b) {
  CostMatrix cost(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      cost(i, j) = (a[i].describable() && b[j].describable())
                       ? weight_distance(a[i].weights, b[j].weights)
                       : kUndescribableCost;
    }
  }
  return cost;
}

double frobenius_misalignment(const SkeletonMatrix& ga, const SkeletonMatrix& gb,
                              const std::vector<CliquePair>& pairs) {
  std::vector<int> to_b(ga.order(), -1);
  std::vector<char> b_matched(gb.order(), 0);
  for (const auto& p : pairs) {
    to_b[p.a] = p.b;
    b_matched[p.b] = 1;
  }
  // |GX|^2 + |XG'|^2 - 2 <GX, XG'>, all entries 0/1.
  double first = 0.0, second = 0.0, both = 0.0;
  for (const auto& p : pairs) {
    first += static_cast<double>(ga.rows[p.a].size());
    second += static_cast<double>(gb.rows[p.b].size());
    for (const int nb : ga.rows[p.a]) {
      if (to_b[nb] >= 0 && gb.at(p.b, to_b[nb])) both += 1.0;
    }
  }
  return first + second - 2.0 * both;
}

double best_two_swap_gain(const SkeletonMatrix& ga, const SkeletonMatrix& gb,
                          const std::vector<CliquePair>& pairs) {
  if (pairs.size() > 200) return std::numeric_limits<double>::quiet_NaN();
  const double base = frobenius_misalignment(ga, gb, pairs);
  double best = 0.0;
  auto trial = pairs;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      std::swap(trial[x].b, trial[y].b);
      best = std::max(best, base - frobenius_misalignment(ga, gb, trial));
      std::swap(trial[x].b, trial[y].b);
    }
  }
  return best;
}

namespace {

std::map<int, int> vote_vertices(const PreparedSide& a, const PreparedSide& b,
                                 const std::vector<DimensionMatch>& dims,
                                 const std::map<int, int>& dim0) {
  std::map<std::pair<int, int>, int> votes;
  for (const auto& dm : dims) {
    for (const auto& p : dm.pairs) {
      for (const int va : a.complex.clique({dm.dim, p.a})) {
        for (const int vb : b.complex.clique({dm.dim, p.b})) {
          ++votes[{a.frame[va].id, b.frame[vb].id}];
        }
      }
    }
  }
  // Best candidate per A vertex: most votes, ties resolved toward dim-0.
  struct Candidate {
    int votes;
    bool agrees;
    int ida;
    int idb;
  };
  std::map<int, Candidate> best;
  for (const auto& [key, count] : votes) {
    const auto [ida, idb] = key;
    const auto it0 = dim0.find(ida);
    const bool agrees = it0 != dim0.end() && it0->second == idb;
    auto [it, inserted] = best.try_emplace(ida, Candidate{count, agrees, ida, idb});
    if (!inserted && std::tie(count, agrees) > std::tie(it->second.votes, it->second.agrees)) {
      it->second = {count, agrees, ida, idb};
    }
  }
  std::vector<Candidate> ranked;
  for (const auto& [ida, c] : best) ranked.push_back(c);
  std::sort(ranked.begin(), ranked.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(y.votes, y.agrees, x.ida) < std::tie(x.votes, x.agrees, y.ida);
  });
  std::map<int, int> out;
  std::set<int> taken;
  for (const auto& c : ranked) {
    if (taken.insert(c.idb).second) out[c.ida] = c.idb;
  }
  return out;
}

}  // namespace

MatchResult match_complexes(const PreparedSide& a, const PreparedSide& b, const MatchConfig& cfg) {
  if (a.complex.max_dim() != b.complex.max_dim() || a.complex.max_dim() != cfg.h) {
    throw ConfigError("complexes must share the configured dimension cap h");
  }
  if (a.descriptors.overlap != b.descriptors.overlap) {
    throw ConfigError("complexes were described with different overlap parameters");
  }
  MatchResult result;
  result.dims.resize(cfg.h + 1);
  for (int k = cfg.h; k >= 0; --k) {
    auto& dm = result.dims[k];
    dm.dim = k;
    const auto& da = a.descriptors.at(k);
    const auto& db = b.descriptors.at(k);
    const auto assignment = hungarian(build_cost_matrix(da, db));
    std::vector<char> used_a(da.size(), 0), used_b(db.size(), 0);
    for (const auto& [i, j] : assignment.pairs) {
      const bool describable = da[i].describable() && db[j].describable();
      const double c = describable ? weight_distance(da[i].weights, db[j].weights)
                                   : kUndescribableCost;
      if (!describable || c > cfg.tau) continue;
      dm.pairs.push_back({i, j, c});
      dm.total_cost += c;
      used_a[i] = used_b[j] = 1;
    }
    for (int i = 0; i < static_cast<int>(da.size()); ++i) {
      if (!used_a[i]) dm.unmatched_a.push_back(i);
    }
    for (int j = 0; j < static_cast<int>(db.size()); ++j) {
      if (!used_b[j]) dm.unmatched_b.push_back(j);
    }
    const int l = effective_overlap(k, cfg.l);
    dm.misalignment = frobenius_misalignment(peer_adjacency(a.complex, a.graph, k, l),
                                             peer_adjacency(b.complex, b.graph, k, l), dm.pairs);
  }
  std::map<int, int> dim0;
  for (const auto& p : result.dims[0].pairs) dim0[a.frame[p.a].id] = b.frame[p.b].id;
  result.vertex_correspondence = cfg.vote ? vote_vertices(a, b, result.dims, dim0) : dim0;
  return result;
}

MatchResult match_frames(const Frame& a, const Frame& b, const MatchConfig& cfg) {
  const auto side_a = prepare_frame(a, cfg, cfg.seed_a);
  const auto side_b = prepare_frame(b, cfg, cfg.graph_seed_b());
  return match_complexes(side_a, side_b, cfg);
}

std::optional<double> match_error(const MatchResult& result, const std::map<int, int>& truth,
                                  ErrorMode mode) {
  std::size_t denominator = 0;
  std::size_t wrong = 0;
  for (const auto& [ida, idb] : truth) {
    const auto it = result.vertex_correspondence.find(ida);
    if (it == result.vertex_correspondence.end()) {
      if (mode == ErrorMode::kStrict) {
        ++denominator;
        ++wrong;
      }
      continue;
    }
    ++denominator;
    if (it->second != idb) ++wrong;
  }
  if (denominator == 0) return std::nullopt;
  return 100.0 * static_cast<double>(wrong) / static_cast<double>(denominator);
}

std::map<int, int> shared_id_truth(const Frame& a, const Frame& b) {
  std::map<int, int> truth;
  for (const auto& p : a.points()) {
    if (b.contains(p.id)) truth[p.id] = p.id;
  }
  return truth;
}

void write_match_csv(std::ostream& out, const MatchResult& result) {
  out << "dim,clique_a,clique_b,cost\n";
  for (auto it = result.dims.rbegin(); it != result.dims.rend(); ++it) {
    for (const auto& p : it->pairs) {
      out << it->dim << ',' << p.a << ',' << p.b << ',' << detail::format_double(p.cost) << '\n';
    }
  }
  for (auto it = result.dims.rbegin(); it != result.dims.rend(); ++it) {
    out << it->dim << ",summary," << it->pairs.size() << ','
        << detail::format_double(it->total_cost) << '\n';
  }
}

}  // namespace cliquematch
