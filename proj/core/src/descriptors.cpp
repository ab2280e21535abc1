#include "cliquematch/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "cliquematch/csv.hpp"
#include "cliquematch/error.hpp"

namespace cliquematch {

Vec2 barycenter(const Clique& clique, const Frame& frame) {
  if (clique.empty()) throw ArgumentError("barycenter of an empty clique");
  Vec2 sum;
  for (const int v : clique) {
    if (v < 0 || static_cast<std::size_t>(v) >= frame.size()) {
      throw ArgumentError("clique vertex " + std::to_string(v) + " not present in frame");
    }
    sum = sum + frame[v].pos;
  }
  return (1.0 / static_cast<double>(clique.size())) * sum;
}

namespace {

std::vector<int> same_dim_peers(const CliqueComplex& c, CliqueRef ref, int l) {
  if (ref.dim == 0 || l < 1 || l > ref.dim) return {};
  std::vector<int> peers;
  for (const auto& f : c.all_faces(ref)) {
    if (f.dim != l - 1) continue;
    // Every dim-k clique containing face f shares >= l vertices with ref.
    for (const auto& up : c.all_cofaces(f)) {
      if (up.dim == ref.dim && up.id != ref.id) peers.push_back(up.id);
    }
  }
  std::sort(peers.begin(), peers.end());
  peers.erase(std::unique(peers.begin(), peers.end()), peers.end());
  return peers;
}

}  // namespace

std::vector<CliqueRef> clique_neighborhood(const CliqueComplex& c, CliqueRef ref, int overlap) {
  std::vector<CliqueRef> out = c.all_faces(ref);
  for (const int id : same_dim_peers(c, ref, effective_overlap(ref.dim, overlap))) {
    out.push_back({ref.dim, id});
  }
  const auto up = c.all_cofaces(ref);
  out.insert(out.end(), up.begin(), up.end());
  return out;
}

AffineFit affine_weights(Vec2 center, std::span<const Vec2> neighbors) {
  const std::size_t m = neighbors.size();
  if (m == 0) throw ArgumentError("affine_weights needs at least one neighbour");

  // With w = 1/m + z, z orthogonal to the ones vector, the objective becomes
  // |mean - center + X_c^T z| for the centred neighbours X_c. The minimum-norm
  // minimiser is z = -X_c^T S^+ (mean - center) with scatter S = X_c X_c^T.
  Vec2 mean;
  for (const auto& x : neighbors) mean = mean + x;
  mean = (1.0 / static_cast<double>(m)) * mean;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& x : neighbors) {
    const Vec2 d = x - mean;
    sxx += d.x * d.x;
    sxy += d.x * d.y;
    syy += d.y * d.y;
  }

  // Pseudo-inverse of the symmetric 2x2 scatter via its eigendecomposition.
  const double tr = sxx + syy;
  const double gap = std::hypot(sxx - syy, 2.0 * sxy);
  const double lam1 = 0.5 * (tr + gap);
  const double lam2 = 0.5 * (tr - gap);
  double e1x = 1.0, e1y = 0.0;
  if (gap > 0.0) {
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    e1x = std::cos(theta);
    e1y = std::sin(theta);
  }
  const double e2x = -e1y;
  const double e2y = e1x;
  const double cutoff = 1e-12 * std::max(lam1, 0.0);
  double pxx = 0.0, pxy = 0.0, pyy = 0.0;
  if (lam1 > 0.0) {
    pxx += e1x * e1x / lam1;
    pxy += e1x * e1y / lam1;
    pyy += e1y * e1y / lam1;
  }
  if (lam2 > cutoff && lam2 > 0.0) {
    pxx += e2x * e2x / lam2;
    pxy += e2x * e2y / lam2;
    pyy += e2y * e2y / lam2;
  }

  const Vec2 offset = mean - center;
  const Vec2 g{pxx * offset.x + pxy * offset.y, pxy * offset.x + pyy * offset.y};

  AffineFit fit;
  fit.weights.resize(m);
  const double base = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 d = neighbors[i] - mean;
    fit.weights[i] = base - (d.x * g.x + d.y * g.y);
  }
  Vec2 recon;
  for (std::size_t i = 0; i < m; ++i) recon = recon + fit.weights[i] * neighbors[i];
  fit.residual = norm(recon - center);
  return fit;
}

ComplexDescriptors describe_complex(const CliqueComplex& c, const Frame& frame, int overlap) {
  if (static_cast<std::size_t>(c.vertex_count()) != frame.size()) {
    throw ArgumentError("complex built on " + std::to_string(c.vertex_count()) +
                        " vertices but frame has " + std::to_string(frame.size()) + " points");
  }
  ComplexDescriptors out;
  out.max_dim = c.max_dim();
  out.overlap = overlap;
  out.by_dim.resize(c.max_dim() + 1);

  std::vector<std::vector<Vec2>> centers(c.max_dim() + 1);
  for (int k = 0; k <= c.max_dim(); ++k) {
    centers[k].reserve(c.count(k));
    for (const auto& cl : c.cliques(k)) centers[k].push_back(barycenter(cl, frame));
  }

  std::vector<Vec2> xs;
  for (int k = 0; k <= c.max_dim(); ++k) {
    auto& list = out.by_dim[k];
    list.resize(c.count(k));
    for (int id = 0; id < static_cast<int>(c.count(k)); ++id) {
      auto& d = list[id];
      d.ref = {k, id};
      d.barycenter = centers[k][id];
      d.neighborhood = clique_neighborhood(c, d.ref, overlap);
      if (d.neighborhood.empty()) continue;
      xs.clear();
      for (const auto& nb : d.neighborhood) xs.push_back(centers[nb.dim][nb.id]);
      auto fit = affine_weights(d.barycenter, xs);
      d.weights = std::move(fit.weights);
      d.residual = fit.residual;
    }
  }
  return out;
}

void write_descriptors(std::ostream& out, const ComplexDescriptors& d) {
  out << "dim,clique_id,cx,cy,residual,alpha\n";
  for (const auto& list : d.by_dim) {
    for (const auto& desc : list) {
      out << desc.ref.dim << ',' << desc.ref.id << ',' << detail::format_double(desc.barycenter.x)
          << ',' << detail::format_double(desc.barycenter.y) << ','
          << detail::format_double(desc.residual);
      for (const double w : desc.weights) out << ',' << detail::format_double(w);
      out << '\n';
    }
  }
}

}  // namespace cliquematch
