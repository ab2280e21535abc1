#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cliquematch {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

double norm(Vec2 v);
double squared_distance(Vec2 a, Vec2 b);

struct LandmarkPoint {
  int id = 0;
  Vec2 pos;
};

/// One image worth of labeled 2-D landmarks. The order of `points` defines
/// the vertex indices used by graphs built on the frame; ids carry identity.
class Frame {
 public:
  Frame() = default;
  /// Throws StructuralError on duplicate ids or non-finite coordinates.
  explicit Frame(std::vector<LandmarkPoint> points);

  const std::vector<LandmarkPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const LandmarkPoint& operator[](std::size_t i) const { return points_[i]; }

  /// Vertex index of `id`, or -1 when the id is absent.
  int index_of(int id) const;
  bool contains(int id) const { return index_of(id) >= 0; }
  Vec2 centroid() const;
  std::vector<int> ids() const;

 private:
  std::vector<LandmarkPoint> points_;
};

struct LandmarkSequence {
  std::string name;
  std::vector<Frame> frames;

  std::size_t points_per_frame() const { return frames.empty() ? 0 : frames.front().size(); }
};

enum class LandmarkFormat { kCsv };

/// Reads `frame,point,x,y` CSV. Frame and point ids are renumbered densely
/// from 0 in ascending order of the ids found in the file.
LandmarkSequence load_landmarks(const std::filesystem::path& path,
                                LandmarkFormat format = LandmarkFormat::kCsv);
LandmarkSequence parse_landmarks_csv(std::istream& in, std::string name = {});
void write_landmarks_csv(std::ostream& out, const LandmarkSequence& seq);

enum class TransformKind { kRotation, kReflection, kScale, kShear, kCustom };
enum class Axis { kX, kY };

/// x -> matrix * x + translation. Always invertible.
class AffineTransform {
 public:
  using Matrix = std::array<std::array<double, 2>, 2>;

  /// Throws ArgumentError when |det(matrix)| is zero or not finite.
  AffineTransform(Matrix matrix, Vec2 translation = {}, TransformKind kind = TransformKind::kCustom);

  static AffineTransform identity();
  static AffineTransform rotation(double degrees);
  /// Mirror across the given axis: kY maps (x, y) to (-x, y).
  static AffineTransform reflection(Axis axis);
  static AffineTransform scale(double sx, double sy);
  /// kX maps (x, y) to (x + factor * y, y).
  static AffineTransform shear(double factor, Axis axis);
  static AffineTransform translation(Vec2 offset);

  const Matrix& matrix() const noexcept { return m_; }
  Vec2 offset() const noexcept { return t_; }
  TransformKind kind() const noexcept { return kind_; }
  double determinant() const noexcept;

  Vec2 operator()(Vec2 p) const;
  AffineTransform inverse() const;
  /// (a.then(b))(x) == b(a(x)).
  AffineTransform then(const AffineTransform& next) const;
  /// Same linear part applied about `pivot` instead of the origin.
  AffineTransform about(Vec2 pivot) const;

 private:
  Matrix m_;
  Vec2 t_;
  TransformKind kind_;
};

Frame apply_transform(const Frame& frame, const AffineTransform& t);
/// Applies the linear part about the frame centroid, then the translation.
Frame apply_transform_about_centroid(const Frame& frame, const AffineTransform& t);

struct Occlusion {
  Frame frame;
  std::vector<int> removed_ids;
};

/// Drops `remove_count` uniformly chosen points. Requires remove_count < size.
Occlusion occlude(const Frame& frame, std::size_t remove_count, std::uint64_t seed);

/// Frame with its point list in a seeded random order (ids unchanged).
Frame shuffle_points(const Frame& frame, std::uint64_t seed);

}  // namespace cliquematch
