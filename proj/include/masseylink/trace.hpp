#pragma once

#include <vector>

#include "masseylink/embed.hpp"
#include "masseylink/plgeom.hpp"

namespace masseylink {

/// Transversal crossing of K_a through F_b.
struct PiercePoint {
  RPoint location;
  int label = 0;      // +1 when K_a crosses F_b from its negative to positive side
  int component = 0;  // a
  int triangle = 0;   // triangle of F_b
  int segment = 0;    // segment of K_a
  Rational position;  // parameter along that segment
};

enum class CurveKind { Arc, Circle };

/// Which boundary an arc end sits on: 0 for K_a, 1 for K_b.
enum class Side { A = 0, B = 1 };

/// One connected component of F_a ∩ F_b, oriented along n_a × n_b.
struct IntersectionCurve {
  PLCurve geometry;  // open for arcs, closed for circles
  CurveKind kind = CurveKind::Arc;
  Side start_side = Side::A, end_side = Side::A;  // arcs only
  int surface_a = 0, surface_b = 1;
};

std::vector<PiercePoint> pierce_points(const PLCurve& k, const PLSurface& f, int component = 0);

/// Components of F_a ∩ F_b. Throws NotGeneric on degenerate contacts.
std::vector<IntersectionCurve> surface_intersection(const PLSurface& fa, const PLSurface& fb, int a = 0, int b = 1);

enum class PieceKind { InteriorArc, AlongComponent, Circle };

struct BoundaryPiece {
  PieceKind kind = PieceKind::InteriorArc;
  int curve = -1;      // index into DerivedBoundary::curves for arcs and circles
  Side side = Side::A;  // component followed, for along-component pieces
  PLCurve geometry;    // open polyline (closed for circles)
};

/// The 1-cycle ∂C_ab assembled from F_a ∩ F_b and portions of K_a, K_b.
struct DerivedBoundary {
  int a = 0, b = 1;
  std::vector<IntersectionCurve> curves;
  std::vector<PiercePoint> pierces_a;  // K_a through F_b
  std::vector<PiercePoint> pierces_b;  // K_b through F_a
  std::vector<PLCurve> loops;
  std::vector<std::vector<BoundaryPiece>> pieces;
};

DerivedBoundary trace_derived_boundary(const PLCurve& ka, const PLSurface& fa, const PLCurve& kb, const PLSurface& fb,
                                       int a = 0, int b = 1);
DerivedBoundary trace_derived_boundary(const EmbeddedLink& e, int a, int b);

/// Sub-arc of a closed curve from one point on it to another, following the
/// curve's orientation.
PLCurve along_curve(const PLCurve& k, int from_segment, const Rational& from_t, int to_segment, const Rational& to_t);

}  // namespace masseylink
