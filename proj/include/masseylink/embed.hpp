#pragma once

#include <array>
#include <vector>

#include "masseylink/diagram.hpp"
#include "masseylink/plgeom.hpp"

namespace masseylink {

struct Point2 {
  Rational x, y;
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

/// Straight-line drawing of the diagram on an integer grid. Each strand is a
/// three-segment polyline from its tail crossing through two interior points
/// to its head crossing.
struct PlanarDrawing {
  std::vector<Point2> crossing_points;
  std::vector<std::array<Point2, 2>> strand_points;  // indexed by strand label
  /// Per component, the closed planar polygon in orientation order and, per
  /// vertex, the crossing it sits on (or -1).
  std::vector<std::vector<Point2>> polygons;
  std::vector<std::vector<int>> polygon_crossing;
};

PlanarDrawing planar_drawing(const LinkDiagram& d, int grid_scale = 1);

struct SeifertCircle {
  std::vector<int> strands;
  int depth = 0;
  int component = -1;  // -1 when the circle mixes components
};

struct SeifertBand {
  int crossing = 0;
  int sign = 0;
  int circle_a = 0, circle_b = 0;
};

/// Seifert smoothing of the whole diagram (every crossing) plus the
/// per-component smoothing (self-crossings only) that the surfaces use.
struct SeifertStructure {
  std::vector<SeifertCircle> circles;
  std::vector<SeifertBand> bands;
  std::vector<std::vector<SeifertCircle>> component_circles;
  std::vector<std::vector<SeifertBand>> component_bands;
  std::vector<int> euler_characteristic;  // per component, circles - bands
};

SeifertStructure seifert_circles(const LinkDiagram& d);

struct EmbedOptions {
  int grid_scale = 1;
  int seed = 0;
  Rational tube_radius = Rational(1, 8);
};

/// PL link with one spanning surface per component. Component i is drawn
/// flat at height base_height[i] and dips under every lower strand that
/// crosses over it; F_i is the graph of a height function over the disk
/// bounded by the i-th planar polygon, with boundary exactly K_i.
struct EmbeddedLink {
  std::vector<PLCurve> components;
  std::vector<PLSurface> surfaces;
  std::vector<Rational> base_height;
  Rational tube_radius;
  int seed = 0;
  int grid_scale = 1;
  PlanarDrawing drawing;
  /// Per component, clearance_squared at construction time.
  std::vector<Rational> clearance;
};

EmbeddedLink build_embedding(const LinkDiagram& d, const EmbedOptions& options = {});

/// Squared minimum distance from K_i to the other components and to its own
/// non-adjacent segments.
Rational clearance_squared(const EmbeddedLink& e, int i);
/// Throws TubeTooLarge unless the tube of e.tube_radius fits.
void check_tube(const EmbeddedLink& e, int i);
/// Offsets of the tube cross-section at vertex v of K_i (four directions).
std::array<RPoint, 4> tube_frame(const EmbeddedLink& e, int i, int v);
/// Triangulated torus around K_i, oriented as the boundary of the tube.
PLSurface boundary_torus(const EmbeddedLink& e, int i);
/// Cross-section loop of the tube at vertex v, oriented with lk(K_i, m) = +1.
PLCurve meridian(const EmbeddedLink& e, int i, int v = 0);

/// Exact squared distance between closed segments.
Rational segment_distance_squared(const RPoint& a, const RPoint& b, const RPoint& c, const RPoint& d);

}  // namespace masseylink
