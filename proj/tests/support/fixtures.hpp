#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliquematch/clique_complex.hpp"
#include "cliquematch/descriptors.hpp"
#include "cliquematch/geometry.hpp"
#include "cliquematch/graph.hpp"
#include "cliquematch/matching.hpp"

namespace cmtest {

namespace cm = cliquematch;

// Worked example: vertices A..F are indices 0..5.
enum : int { A = 0, B, C, D, E, F };

inline cm::Frame appendix_frame() {
  return cm::Frame({{A, {0, 2}}, {B, {2, 3}}, {C, {0, 0}}, {D, {2, 1}}, {E, {4, 2}}, {F, {3, -1}}});
}

inline cm::RandomGraph appendix_g1() {
  return cm::RandomGraph(6, {{A, B}, {A, C}, {A, D}, {B, D}, {B, E}, {D, E}, {D, F}});
}

inline cm::RandomGraph appendix_g2() {
  return cm::RandomGraph(6, {{A, C}, {A, D}, {B, D}, {B, E}, {C, D}, {D, E}, {D, F}});
}

inline cm::MatchConfig appendix_config() {
  cm::MatchConfig cfg;
  cfg.l = 2;
  return cfg;
}

struct NeighbourRow {
  const char* clique;
  std::vector<const char*> neighbours;
};

// Neighbourhood table of the worked example, as printed.
inline const std::vector<NeighbourRow>& appendix_g1_neighbours() {
  static const std::vector<NeighbourRow> rows = {
      {"ABD", {"A", "B", "D", "AB", "AD", "BD", "BDE"}},
      {"BDE", {"B", "D", "E", "BD", "BE", "DE", "ABD"}},
      {"AB", {"A", "B", "ABD"}},
      {"AC", {"A", "C"}},
      {"AD", {"A", "D", "ABD"}},
      {"BD", {"B", "D", "ABD", "BDE"}},
      {"BE", {"B", "E", "BDE"}},
      {"DE", {"D", "E", "BDE"}},
      {"DF", {"D", "F"}},
      {"A", {"AB", "AC", "AD", "ABD"}},
      {"B", {"AB", "BD", "BE", "ABD", "BDE"}},
      {"C", {"AC"}},
      {"D", {"AD", "BD", "DE", "DF", "ABD", "BDE"}},
      {"E", {"BE", "DE", "BDE"}},
      {"F", {"DF"}},
  };
  return rows;
}

inline const std::vector<NeighbourRow>& appendix_g2_neighbours() {
  static const std::vector<NeighbourRow> rows = {
      {"ACD", {"A", "C", "D", "AC", "AD", "CD", "BDE"}},
      {"BDE", {"B", "D", "E", "BD", "BE", "DE", "ACD"}},
      {"AC", {"A", "C", "ACD"}},
      {"AD", {"A", "D", "ACD"}},
      {"BD", {"B", "D", "BDE"}},
      {"BE", {"B", "E", "BDE"}},
      {"CD", {"C", "D", "ACD"}},
      {"DE", {"D", "E", "BDE"}},
      {"DF", {"D", "F"}},
      {"A", {"AC", "AD", "ACD"}},
      {"B", {"BD", "BE", "BDE"}},
      {"C", {"AC", "CD", "ACD"}},
      {"D", {"AD", "BD", "CD", "DE", "DF", "ACD", "BDE"}},
      {"E", {"BE", "DE", "BDE"}},
      {"F", {"DF"}},
  };
  return rows;
}

inline std::string letters(const std::vector<int>& clique) {
  std::string s;
  for (const int v : clique) s += static_cast<char>('A' + v);
  return s;
}

inline std::vector<int> clique_of(const std::string& name) {
  std::vector<int> v;
  for (const char ch : name) v.push_back(ch - 'A');
  return v;
}

/// Rows whose computed neighbourhood differs from the table, as
/// "clique: got {...} want {...}".
inline std::vector<std::string> neighbourhood_mismatches(const cm::RandomGraph& g,
                                                         const std::vector<NeighbourRow>& rows, int overlap) {
  const auto c = cm::CliqueComplex::enumerate(g, 2);
  std::vector<std::string> out;
  for (const auto& row : rows) {
    const auto q = clique_of(row.clique);
    const int dim = static_cast<int>(q.size()) - 1;
    const int id = c.find(q);
    if (id < 0) {
      out.push_back(std::string(row.clique) + ": not a clique");
      continue;
    }
    std::set<std::string> got, want(row.neighbours.begin(), row.neighbours.end());
    for (const auto& ref : cm::clique_neighborhood(c, {dim, id}, overlap)) got.insert(letters(c.clique(ref)));
    if (got != want) {
      auto join = [](const std::set<std::string>& s) {
        std::string t;
        for (const auto& x : s) t += (t.empty() ? "" : ",") + x;
        return "{" + t + "}";
      };
      out.push_back(std::string(row.clique) + ": got " + join(got) + " want " + join(want));
    }
  }
  return out;
}

inline cm::Frame random_frame(int n, std::uint64_t seed, double extent = 100.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, extent);
  std::vector<cm::LandmarkPoint> pts;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng);
    pts.push_back({i, {x, u(rng)}});
  }
  return cm::Frame(std::move(pts));
}

}  // namespace cmtest
