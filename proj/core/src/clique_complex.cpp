#include "cliquematch/clique_complex.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <string>

#include "cliquematch/error.hpp"

namespace cliquematch {

CliqueComplex CliqueComplex::enumerate(const RandomGraph& g, int h, std::size_t cap) {
  if (h < 0) throw ArgumentError("clique complex dimension cap must be >= 0");
  CliqueComplex c;
  c.n_ = g.vertex_count();
  c.h_ = h;
  c.cliques_.resize(h + 1);
  c.index_.resize(h + 1);
  c.faces_.resize(h + 1);
  c.cofaces_.resize(h + 1);

  if (static_cast<std::size_t>(c.n_) > cap) {
    throw CapacityError("vertex count exceeds clique cap");
  }
  for (int v = 0; v < c.n_; ++v) c.cliques_[0].push_back({v});

  // Extend each k-clique by every common neighbour above its largest vertex.
  // Walking k-cliques in lexicographic order keeps dimension k+1 sorted too.
  for (int k = 0; k < h; ++k) {
    auto& next = c.cliques_[k + 1];
    for (const auto& base : c.cliques_[k]) {
      const auto& first = g.neighbors(base.front());
      for (auto it = std::upper_bound(first.begin(), first.end(), base.back()); it != first.end();
           ++it) {
        const int w = *it;
        bool all = true;
        for (std::size_t i = 1; i < base.size() && all; ++i) all = g.has_edge(base[i], w);
        if (!all) continue;
        Clique grown = base;
        grown.push_back(w);
        next.push_back(std::move(grown));
        if (next.size() > cap) {
          throw CapacityError("more than " + std::to_string(cap) + " cliques of dimension " +
                              std::to_string(k + 1));
        }
      }
    }
    if (next.empty()) break;
  }

  for (int k = 0; k <= h; ++k) {
    const auto& list = c.cliques_[k];
    for (int id = 0; id < static_cast<int>(list.size()); ++id) c.index_[k].emplace(list[id], id);
    c.faces_[k].resize(list.size());
    c.cofaces_[k].resize(list.size());
  }
  for (int k = 1; k <= h; ++k) {
    const auto& list = c.cliques_[k];
    for (int id = 0; id < static_cast<int>(list.size()); ++id) {
      auto& faces = c.faces_[k][id];
      for (std::size_t drop = 0; drop < list[id].size(); ++drop) {
        Clique face;
        face.reserve(list[id].size() - 1);
        for (std::size_t i = 0; i < list[id].size(); ++i) {
          if (i != drop) face.push_back(list[id][i]);
        }
        const int fid = c.index_[k - 1].at(face);
        faces.push_back(fid);
        c.cofaces_[k - 1][fid].push_back(id);
      }
    }
  }
  return c;
}

std::size_t CliqueComplex::count(int dim) const {
  if (dim < 0 || dim > h_) return 0;
  return cliques_[dim].size();
}

int CliqueComplex::find(const Clique& vertices) const {
  const int dim = static_cast<int>(vertices.size()) - 1;
  if (dim < 0 || dim > h_) return -1;
  const auto it = index_[dim].find(vertices);
  return it == index_[dim].end() ? -1 : it->second;
}

std::vector<CliqueRef> CliqueComplex::all_faces(CliqueRef ref) const {
  std::vector<std::set<int>> per_dim(ref.dim);
  std::set<int> frontier{ref.id};
  for (int d = ref.dim; d > 0; --d) {
    std::set<int> below;
    for (const int id : frontier) {
      for (const int f : faces_[d][id]) below.insert(f);
    }
    per_dim[d - 1] = below;
    frontier = std::move(below);
  }
  std::vector<CliqueRef> out;
  for (int d = 0; d < ref.dim; ++d) {
    for (const int id : per_dim[d]) out.push_back({d, id});
  }
  return out;
}

std::vector<CliqueRef> CliqueComplex::all_cofaces(CliqueRef ref) const {
  std::vector<CliqueRef> out;
  std::set<int> frontier{ref.id};
  for (int d = ref.dim; d < h_; ++d) {
    std::set<int> above;
    for (const int id : frontier) {
      for (const int f : cofaces_[d][id]) above.insert(f);
    }
    for (const int id : above) out.push_back({d + 1, id});
    frontier = std::move(above);
    if (frontier.empty()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t SkeletonMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  return total;
}

bool SkeletonMatrix::at(int i, int j) const {
  const auto& r = rows.at(i);
  return std::binary_search(r.begin(), r.end(), j);
}

namespace {

// Cliques of dimension k sharing at least l vertices share an (l-1)-face.
SkeletonMatrix overlap_matrix(const CliqueComplex& c, int k, int l) {
  SkeletonMatrix m;
  m.k = k;
  m.l = l;
  m.rows.resize(c.count(k));
  if (l < 1 || l > k) return m;
  const int face_dim = l - 1;
  std::vector<std::vector<int>> containing(c.count(face_dim));
  for (int id = 0; id < static_cast<int>(c.count(k)); ++id) {
    for (const auto& f : c.all_faces({k, id})) {
      if (f.dim == face_dim) containing[f.id].push_back(id);
    }
  }
  for (const auto& group : containing) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        m.rows[group[a]].push_back(group[b]);
        m.rows[group[b]].push_back(group[a]);
      }
    }
  }
  for (auto& r : m.rows) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return m;
}

}  // namespace

SkeletonMatrix skeleton_adjacency(const CliqueComplex& c, int k, int l) {
  if (k < 1 || k > c.max_dim()) {
    throw ArgumentError("skeleton_adjacency: k=" + std::to_string(k) + " outside [1, h]");
  }
  if (l < 1 || l > k) {
    throw ArgumentError("skeleton_adjacency: l=" + std::to_string(l) + " outside [1, k]");
  }
  return overlap_matrix(c, k, l);
}

SkeletonMatrix peer_adjacency(const CliqueComplex& c, const RandomGraph& g, int k, int l) {
  if (k == 0) {
    SkeletonMatrix m;
    m.k = 0;
    m.l = l;
    m.rows.resize(c.count(0));
    for (int v = 0; v < static_cast<int>(m.rows.size()); ++v) m.rows[v] = g.neighbors(v);
    return m;
  }
  return overlap_matrix(c, k, l);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double nnz_estimate(int n, double p, int k, int l) {
  if (p == 0.0) return 0.0;
  const double moves = binomial(k + 1, l) - 1.0;
  const double targets = binomial(n, k + 1 - l);
  const double exponent = binomial(k + 1, 2) - binomial(l, 2);
  return moves * targets * std::pow(p, exponent);
}

void write_complex(std::ostream& out, const CliqueComplex& c) {
  for (int k = 0; k <= c.max_dim(); ++k) {
    for (const auto& cl : c.cliques(k)) {
      out << k << ':';
      for (const int v : cl) out << ' ' << v;
      out << '\n';
    }
  }
}

}  // namespace cliquematch
