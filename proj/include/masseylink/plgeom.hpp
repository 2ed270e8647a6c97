#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace masseylink {

using Rational = mpq_class;

struct RPoint {
  Rational x, y, z;

  RPoint() = default;
  RPoint(Rational x_, Rational y_, Rational z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  RPoint operator+(const RPoint& o) const { return {x + o.x, y + o.y, z + o.z}; }
  RPoint operator-(const RPoint& o) const { return {x - o.x, y - o.y, z - o.z}; }
  RPoint operator*(const Rational& s) const { return {x * s, y * s, z * s}; }
  bool operator==(const RPoint& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const RPoint& o) const { return !(*this == o); }
  bool operator<(const RPoint& o) const;
};

Rational dot(const RPoint& a, const RPoint& b);
RPoint cross(const RPoint& a, const RPoint& b);
/// a + (b - a) * t
RPoint lerp(const RPoint& a, const RPoint& b, const Rational& t);

/// det(q-p, r-p, s-p)
Rational orient3_value(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s);
int orient3(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s);

using Triangle = std::array<RPoint, 3>;

enum class IntersectionKind { Empty, Point, Segment, Area };

/// Closed-set intersection. `points` holds nothing, the point, the two
/// segment endpoints, or the convex polygon for coplanar overlaps.
struct Intersection {
  IntersectionKind kind = IntersectionKind::Empty;
  std::vector<RPoint> points;
  /// Barycentric coordinates of a Point result in the triangle argument.
  std::array<Rational, 3> barycentric{};
};

bool point_in_triangle(const RPoint& p, const Triangle& t);
bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b);

Intersection segment_triangle(const RPoint& a, const RPoint& b, const Triangle& t);
Intersection triangle_triangle(const Triangle& t1, const Triangle& t2);

/// Does the closed set of the result contain p?
bool intersection_contains(const Intersection& r, const RPoint& p);

struct PLCurve {
  std::vector<RPoint> vertices;
  bool closed = true;

  int num_segments() const;
  std::pair<const RPoint&, const RPoint&> segment(int i) const;
  PLCurve reversed() const;
  /// Splits every segment into `parts` equal pieces.
  PLCurve subdivided(int parts) const;
  void check() const;
};

/// Oriented triangulated surface with shared vertices. A triangle (a,b,c)
/// has normal (b-a)x(c-a); its boundary edges run a->b->c.
struct PLSurface {
  std::vector<RPoint> vertices;
  std::vector<std::array<int, 3>> triangles;

  Triangle triangle(int i) const;
  int add_vertex(const RPoint& p);
  /// Checks the edge-manifold invariants; throws NotManifold.
  void check() const;
  /// Oriented boundary loops (each closed).
  std::vector<PLCurve> boundary() const;
  /// Midpoint 1-to-4 split of every triangle.
  PLSurface subdivided() const;
  int euler_characteristic() const;
};

/// One transversal crossing of a curve segment through a surface triangle.
struct Pierce {
  int segment = 0;
  Rational t;      // parameter along the segment
  int triangle = 0;
  RPoint point;
  int sign = 0;    // +1 from the negative to the positive side
};

/// All pierces of a curve through a surface, sorted along the curve.
/// Throws NotGeneric on any degenerate incidence.
std::vector<Pierce> pierce_list(const PLCurve& c, const PLSurface& s);

/// Signed intersection number of a curve (open or closed) with a surface.
int curve_surface_count(const PLCurve& c, const PLSurface& s);

}  // namespace masseylink
