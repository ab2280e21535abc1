#include "cliquematch/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cliquematch/error.hpp"
#include "cliquematch/csv.hpp"

namespace cliquematch {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double squared_distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Frame::Frame(std::vector<LandmarkPoint> points) : points_(std::move(points)) {
  std::set<int> seen;
  for (const auto& p : points_) {
    if (!std::isfinite(p.pos.x) || !std::isfinite(p.pos.y)) {
      throw StructuralError("point " + std::to_string(p.id) + " has non-finite coordinates");
    }
    if (!seen.insert(p.id).second) {
      throw StructuralError("duplicate point id " + std::to_string(p.id));
    }
  }
}

int Frame::index_of(int id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

Vec2 Frame::centroid() const {
  Vec2 c;
  if (points_.empty()) return c;
  for (const auto& p : points_) c = c + p.pos;
  return (1.0 / static_cast<double>(points_.size())) * c;
}

std::vector<int> Frame::ids() const {
  std::vector<int> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.id);
  return out;
}

// ---------------------------------------------------------------------------
// CSV I/O

LandmarkSequence parse_landmarks_csv(std::istream& in, std::string name) {
  struct Row {
    long frame;
    long point;
    double x;
    double y;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = detail::split_csv(line);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() == 4 && fields[0] == "frame" && fields[1] == "point" && fields[2] == "x" &&
          fields[3] == "y") {
        continue;
      }
      throw ParseError("expected header 'frame,point,x,y'", line_no);
    }
    if (fields.size() != 4) {
      throw ParseError("expected 4 fields, found " + std::to_string(fields.size()), line_no);
    }
    Row r{};
    r.line = line_no;
    if (!detail::parse_number(fields[0], r.frame) || !detail::parse_number(fields[1], r.point) ||
        !detail::parse_number(fields[2], r.x) || !detail::parse_number(fields[3], r.y)) {
      throw ParseError("malformed row '" + line + "'", line_no);
    }
    if (!std::isfinite(r.x) || !std::isfinite(r.y)) {
      throw ParseError("non-finite coordinate", line_no);
    }
    if (!rows.empty() && r.frame < rows.back().frame) {
      throw ParseError("frames must be sorted ascending", line_no);
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError("no landmark rows", line_no);

  std::map<long, int> point_index;
  for (const auto& r : rows) point_index.emplace(r.point, 0);
  int next = 0;
  for (auto& [id, idx] : point_index) idx = next++;

  LandmarkSequence seq;
  seq.name = std::move(name);
  std::vector<LandmarkPoint> current;
  long current_frame = rows.front().frame;
  auto flush = [&] {
    try {
      seq.frames.emplace_back(std::move(current));
    } catch (const StructuralError& e) {
      throw StructuralError("frame " + std::to_string(seq.frames.size()) + ": " + e.what());
    }
    current.clear();
  };
  for (const auto& r : rows) {
    if (r.frame != current_frame) {
      flush();
      current_frame = r.frame;
    }
    current.push_back({point_index.at(r.point), {r.x, r.y}});
  }
  flush();

  const auto reference = seq.frames.front().ids();
  const std::set<int> reference_set(reference.begin(), reference.end());
  for (std::size_t f = 1; f < seq.frames.size(); ++f) {
    const auto ids = seq.frames[f].ids();
    if (ids.size() != reference.size()) {
      throw StructuralError("frame " + std::to_string(f) + " has " + std::to_string(ids.size()) +
                            " points, expected " + std::to_string(reference.size()));
    }
    if (std::set<int>(ids.begin(), ids.end()) != reference_set) {
      throw StructuralError("frame " + std::to_string(f) + " uses a different point-id set");
    }
  }
  return seq;
}

LandmarkSequence load_landmarks(const std::filesystem::path& path, LandmarkFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  switch (format) {
    case LandmarkFormat::kCsv:
      break;
  }
  return parse_landmarks_csv(in, path.stem().string());
}

void write_landmarks_csv(std::ostream& out, const LandmarkSequence& seq) {
  out << "frame,point,x,y\n";
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    for (const auto& p : seq.frames[f].points()) {
      out << f << ',' << p.id << ',' << detail::format_double(p.pos.x) << ','
          << detail::format_double(p.pos.y) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Affine transforms

AffineTransform::AffineTransform(Matrix matrix, Vec2 translation, TransformKind kind)
    : m_(matrix), t_(translation), kind_(kind) {
  const double det = determinant();
  if (!std::isfinite(det) || det == 0.0 || !std::isfinite(t_.x) || !std::isfinite(t_.y)) {
    throw ArgumentError("affine transform must be finite and invertible");
  }
}

AffineTransform AffineTransform::identity() { return AffineTransform({{{1, 0}, {0, 1}}}); }

AffineTransform AffineTransform::rotation(double degrees) {
  const double r = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(r);
  const double s = std::sin(r);
  return AffineTransform({{{c, -s}, {s, c}}}, {}, TransformKind::kRotation);
}

AffineTransform AffineTransform::reflection(Axis axis) {
  if (axis == Axis::kY) return AffineTransform({{{-1, 0}, {0, 1}}}, {}, TransformKind::kReflection);
  return AffineTransform({{{1, 0}, {0, -1}}}, {}, TransformKind::kReflection);
}

AffineTransform AffineTransform::scale(double sx, double sy) {
  return AffineTransform({{{sx, 0}, {0, sy}}}, {}, TransformKind::kScale);
}

AffineTransform AffineTransform::shear(double factor, Axis axis) {
  if (axis == Axis::kX) return AffineTransform({{{1, factor}, {0, 1}}}, {}, TransformKind::kShear);
  return AffineTransform({{{1, 0}, {factor, 1}}}, {}, TransformKind::kShear);
}

AffineTransform AffineTransform::translation(Vec2 offset) {
  return AffineTransform({{{1, 0}, {0, 1}}}, offset);
}

double AffineTransform::determinant() const noexcept {
  return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
}

Vec2 AffineTransform::operator()(Vec2 p) const {
  return {m_[0][0] * p.x + m_[0][1] * p.y + t_.x, m_[1][0] * p.x + m_[1][1] * p.y + t_.y};
}

AffineTransform AffineTransform::inverse() const {
  const double det = determinant();
  const Matrix inv{{{m_[1][1] / det, -m_[0][1] / det}, {-m_[1][0] / det, m_[0][0] / det}}};
  const Vec2 t{-(inv[0][0] * t_.x + inv[0][1] * t_.y), -(inv[1][0] * t_.x + inv[1][1] * t_.y)};
  return AffineTransform(inv, t);
}

AffineTransform AffineTransform::then(const AffineTransform& next) const {
  const auto& b = next.m_;
  Matrix m{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = b[i][0] * m_[0][j] + b[i][1] * m_[1][j];
  }
  return AffineTransform(m, next(t_));
}

AffineTransform AffineTransform::about(Vec2 pivot) const {
  // pivot + M (x - pivot) + t
  const Vec2 moved{m_[0][0] * pivot.x + m_[0][1] * pivot.y, m_[1][0] * pivot.x + m_[1][1] * pivot.y};
  return AffineTransform(m_, pivot - moved + t_, kind_);
}

Frame apply_transform(const Frame& frame, const AffineTransform& t) {
  std::vector<LandmarkPoint> pts = frame.points();
  for (auto& p : pts) p.pos = t(p.pos);
  return Frame(std::move(pts));
}

Frame apply_transform_about_centroid(const Frame& frame, const AffineTransform& t) {
  return apply_transform(frame, t.about(frame.centroid()));
}

// ---------------------------------------------------------------------------

Occlusion occlude(const Frame& frame, std::size_t remove_count, std::uint64_t seed) {
  if (remove_count >= frame.size()) {
    throw ArgumentError("occlude: remove_count " + std::to_string(remove_count) +
                        " must be below point count " + std::to_string(frame.size()));
  }
  std::vector<std::size_t> order(frame.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first remove_count slots are the removed points.
  for (std::size_t i = 0; i < remove_count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<bool> removed(frame.size(), false);
  Occlusion out;
  for (std::size_t i = 0; i < remove_count; ++i) {
    removed[order[i]] = true;
    out.removed_ids.push_back(frame[order[i]].id);
  }
  std::sort(out.removed_ids.begin(), out.removed_ids.end());
  std::vector<LandmarkPoint> kept;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!removed[i]) kept.push_back(frame[i]);
  }
  out.frame = Frame(std::move(kept));
  return out;
}

Frame shuffle_points(const Frame& frame, std::uint64_t seed) {
  std::vector<LandmarkPoint> pts = frame.points();
  std::mt19937_64 rng(seed);
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(pts[i - 1], pts[pick(rng)]);
  }
  return Frame(std::move(pts));
}

}  // namespace cliquematch
