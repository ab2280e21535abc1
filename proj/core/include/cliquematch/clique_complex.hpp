#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "cliquematch/graph.hpp"

namespace cliquematch {

/// A clique of dimension k has k + 1 vertices.
using Clique = std::vector<int>;

struct CliqueRef {
  int dim = 0;
  int id = 0;

  friend auto operator<=>(const CliqueRef&, const CliqueRef&) = default;
};

inline constexpr std::size_t kDefaultCliqueCap = 200'000;

/// Every clique of a graph up to dimension h, with per-dimension ids equal to
/// the lexicographic rank of the sorted vertex set.
class CliqueComplex {
 public:
  /// Enumerates all cliques with at most h + 1 vertices. Throws
  /// CapacityError when a dimension would exceed `cap` cliques.
  static CliqueComplex enumerate(const RandomGraph& g, int h, std::size_t cap = kDefaultCliqueCap);

  int max_dim() const noexcept { return h_; }
  int vertex_count() const noexcept { return n_; }
  std::size_t count(int dim) const;
  const std::vector<Clique>& cliques(int dim) const { return cliques_.at(dim); }
  const Clique& clique(CliqueRef ref) const { return cliques_.at(ref.dim).at(ref.id); }

  /// Id of the clique with the given sorted vertex set, or -1.
  int find(const Clique& vertices) const;

  /// Codimension-1 faces (ids at dim - 1), in the order obtained by dropping
  /// each vertex in turn.
  const std::vector<int>& faces(CliqueRef ref) const { return faces_.at(ref.dim).at(ref.id); }
  /// Dimension + 1 cliques containing this one, ascending.
  const std::vector<int>& cofaces(CliqueRef ref) const { return cofaces_.at(ref.dim).at(ref.id); }

  /// All proper faces, every dimension down to vertices; dimension-major.
  std::vector<CliqueRef> all_faces(CliqueRef ref) const;
  /// All cliques strictly containing this one, up to max_dim; dimension-major.
  std::vector<CliqueRef> all_cofaces(CliqueRef ref) const;

 private:
  int n_ = 0;
  int h_ = 0;
  std::vector<std::vector<Clique>> cliques_;
  std::vector<std::map<Clique, int>> index_;
  std::vector<std::vector<std::vector<int>>> faces_;
  std::vector<std::vector<std::vector<int>>> cofaces_;
};

/// Sparse symmetric 0/1 matrix over the dimension-k cliques: (i, j) set iff
/// the cliques are distinct and share at least l vertices.
struct SkeletonMatrix {
  int k = 0;
  int l = 0;
  std::vector<std::vector<int>> rows;

  std::size_t order() const noexcept { return rows.size(); }
  std::size_t nnz() const;
  bool at(int i, int j) const;
};

/// Requires 1 <= l <= k <= h.
SkeletonMatrix skeleton_adjacency(const CliqueComplex& c, int k, int l);

/// Same overlap rule without the l <= k restriction (l > k gives an empty
/// matrix, since distinct (k+1)-cliques share at most k vertices), and with
/// the vertex adjacency of the underlying graph at k = 0.
SkeletonMatrix peer_adjacency(const CliqueComplex& c, const RandomGraph& g, int k, int l);

/// Expected number of l-overlap relocations of a (k+1)-clique in G(n, p).
double nnz_estimate(int n, double p, int k, int l);

/// One line per clique, `dim: v0 v1 ...`, dimension-major and lexicographic.
void write_complex(std::ostream& out, const CliqueComplex& c);

double binomial(int n, int k);

}  // namespace cliquematch
