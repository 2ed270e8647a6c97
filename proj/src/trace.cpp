#include "masseylink/trace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "masseylink/error.hpp"

namespace masseylink {

namespace {

struct Box {
  RPoint lo, hi;
};

Box box_of(const Triangle& t) {
  Box b{t[0], t[0]};
  for (const auto& p : t) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y), std::min(b.lo.z, p.z)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y), std::max(b.hi.z, p.z)};
  }
  return b;
}

bool overlap(const Box& a, const Box& b) {
  return a.lo.x <= b.hi.x && b.lo.x <= a.hi.x && a.lo.y <= b.hi.y && b.lo.y <= a.hi.y && a.lo.z <= b.hi.z &&
         b.lo.z <= a.hi.z;
}

using Edge = std::pair<int, int>;

Edge edge_key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::set<Edge> boundary_edges(const PLSurface& s) {
  std::map<Edge, int> count;
  for (const auto& t : s.triangles)
    for (int k = 0; k < 3; ++k) ++count[edge_key(t[k], t[(k + 1) % 3])];
  std::set<Edge> out;
  for (const auto& [e, c] : count)
    if (c == 1) out.insert(e);
  return out;
}

RPoint normal_of(const Triangle& t) { return cross(t[1] - t[0], t[2] - t[0]); }

struct RawSegment {
  RPoint from, to;
};

// Where does an endpoint of a triangle-pair segment sit? Exactly one edge of
// the two triangles must hold it; reports whether that edge bounds its surface.
int endpoint_side(const RPoint& p, const PLSurface& fa, int ta, const std::set<Edge>& ba, const PLSurface& fb, int tb,
                  const std::set<Edge>& bb) {
  int hits = 0, side = -1;
  for (int k = 0; k < 3; ++k) {
    const int u = fa.triangles[ta][k], v = fa.triangles[ta][(k + 1) % 3];
    if (point_on_segment(p, fa.vertices[u], fa.vertices[v])) {
      ++hits;
      if (ba.count(edge_key(u, v))) side = 0;
    }
    const int x = fb.triangles[tb][k], y = fb.triangles[tb][(k + 1) % 3];
    if (point_on_segment(p, fb.vertices[x], fb.vertices[y])) {
      ++hits;
      if (bb.count(edge_key(x, y))) side = 1;
    }
  }
  if (hits != 1) fail(ErrorKind::NotGeneric, "surfaces meet along an edge or vertex");
  return side;
}

}  // namespace

std::vector<PiercePoint> pierce_points(const PLCurve& k, const PLSurface& f, int component) {
  std::vector<PiercePoint> out;
  for (const Pierce& p : pierce_list(k, f)) out.push_back({p.point, p.sign, component, p.triangle, p.segment, p.t});
  return out;
}

std::vector<IntersectionCurve> surface_intersection(const PLSurface& fa, const PLSurface& fb, int a, int b) {
  const std::set<Edge> ba = boundary_edges(fa), bb = boundary_edges(fb);
  std::vector<Box> boxes_b;
  for (int j = 0; j < static_cast<int>(fb.triangles.size()); ++j) boxes_b.push_back(box_of(fb.triangle(j)));
  std::vector<RawSegment> segs;
  std::map<RPoint, int> side_of;  // endpoints on a boundary: 0 K_a, 1 K_b
  for (int i = 0; i < static_cast<int>(fa.triangles.size()); ++i) {
    const Triangle ta = fa.triangle(i);
    const Box box = box_of(ta);
    for (int j = 0; j < static_cast<int>(fb.triangles.size()); ++j) {
      if (!overlap(box, boxes_b[j])) continue;
      const Triangle tb = fb.triangle(j);
      bool coplanar = true;
      for (const auto& p : tb) coplanar = coplanar && orient3(ta[0], ta[1], ta[2], p) == 0;
      const Intersection r = triangle_triangle(ta, tb);
      if (r.kind == IntersectionKind::Empty) continue;
      if (coplanar || r.kind != IntersectionKind::Segment)
        fail(ErrorKind::NotGeneric, "surfaces touch instead of crossing");
      RawSegment s{r.points[0], r.points[1]};
      const RPoint dir = cross(normal_of(ta), normal_of(tb));
      if (sgn(dot(s.to - s.from, dir)) < 0) std::swap(s.from, s.to);
      for (const RPoint* p : {&s.from, &s.to}) {
        const int side = endpoint_side(*p, fa, i, ba, fb, j, bb);
        if (side >= 0) side_of[*p] = side;
      }
      segs.push_back(std::move(s));
    }
  }

  std::map<RPoint, int> starting, ending;
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (!starting.emplace(segs[s].from, s).second || !ending.emplace(segs[s].to, s).second)
      fail(ErrorKind::NotGeneric, "intersection curves branch");
  }
  for (const auto& [p, s] : starting)
    if (!side_of.count(p) && !ending.count(p)) fail(ErrorKind::NotGeneric, "intersection curve ends in the interior");
  for (const auto& [p, s] : ending)
    if (!side_of.count(p) && !starting.count(p)) fail(ErrorKind::NotGeneric, "intersection curve ends in the interior");

  std::vector<IntersectionCurve> out;
  std::vector<char> used(segs.size(), 0);
  auto follow = [&](int s, IntersectionCurve& c) {
    c.geometry.vertices.push_back(segs[s].from);
    while (true) {
      used[s] = 1;
      const RPoint& end = segs[s].to;
      auto it = starting.find(end);
      if (side_of.count(end) || it == starting.end() || used[it->second]) {
        if (!(c.kind == CurveKind::Circle && it != starting.end() && used[it->second]))
          c.geometry.vertices.push_back(end);
        return end;
      }
      c.geometry.vertices.push_back(end);
      s = it->second;
    }
  };
  for (const auto& [p, s] : starting) {
    if (!side_of.count(p)) continue;
    IntersectionCurve c;
    c.surface_a = a;
    c.surface_b = b;
    c.geometry.closed = false;
    c.start_side = static_cast<Side>(side_of.at(p));
    const RPoint end = follow(s, c);
    if (!side_of.count(end)) fail(ErrorKind::NotGeneric, "open intersection curve");
    c.end_side = static_cast<Side>(side_of.at(end));
    out.push_back(std::move(c));
  }
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    if (used[s]) continue;
    IntersectionCurve c;
    c.surface_a = a;
    c.surface_b = b;
    c.kind = CurveKind::Circle;
    c.geometry.closed = true;
    follow(s, c);
    out.push_back(std::move(c));
  }
  return out;
}

PLCurve along_curve(const PLCurve& k, int from_segment, const Rational& from_t, int to_segment, const Rational& to_t) {
  const int n = k.num_segments();
  PLCurve out;
  out.closed = false;
  out.vertices.push_back(lerp(k.vertices[from_segment], k.vertices[(from_segment + 1) % n], from_t));
  int s = from_segment;
  if (!(to_segment == from_segment && to_t > from_t)) {
    do {
      s = (s + 1) % n;
      out.vertices.push_back(k.vertices[s]);
    } while (s != to_segment);
  }
  const RPoint last = lerp(k.vertices[to_segment], k.vertices[(to_segment + 1) % n], to_t);
  if (out.vertices.back() != last) out.vertices.push_back(last);
  return out;
}

DerivedBoundary trace_derived_boundary(const PLCurve& ka, const PLSurface& fa, const PLCurve& kb, const PLSurface& fb,
                                       int a, int b) {
  DerivedBoundary out;
  out.a = a;
  out.b = b;
  out.pierces_a = pierce_points(ka, fb, a);
  out.pierces_b = pierce_points(kb, fa, b);
  int lk = 0;
  for (const auto& p : out.pierces_a) lk += p.label;
  if (lk != 0) fail(ErrorKind::NonzeroLinking, "components " + std::to_string(a) + " and " + std::to_string(b) +
                                                   " have linking number " + std::to_string(lk));
  out.curves = surface_intersection(fa, fb, a, b);

  // attach arc ends to pierce points
  const std::vector<PiercePoint>* pierces[2] = {&out.pierces_a, &out.pierces_b};
  const PLCurve* curves[2] = {&ka, &kb};
  std::map<RPoint, std::pair<int, int>> pierce_at;  // point -> (side, index)
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < static_cast<int>(pierces[side]->size()); ++i) pierce_at[(*pierces[side])[i].location] = {side, i};
  std::vector<int> departing[2], arriving[2];  // per pierce, the arc index or -1
  for (int side = 0; side < 2; ++side) {
    departing[side].assign(pierces[side]->size(), -1);
    arriving[side].assign(pierces[side]->size(), -1);
  }
  std::vector<std::pair<int, int>> arc_end(out.curves.size(), {-1, -1});
  for (int c = 0; c < static_cast<int>(out.curves.size()); ++c) {
    const auto& curve = out.curves[c];
    if (curve.kind != CurveKind::Arc) continue;
    auto start = pierce_at.find(curve.geometry.vertices.front());
    auto end = pierce_at.find(curve.geometry.vertices.back());
    if (start == pierce_at.end() || end == pierce_at.end() || start->second.first != static_cast<int>(curve.start_side) ||
        end->second.first != static_cast<int>(curve.end_side))
      fail(ErrorKind::StuckTrace, "arc end does not sit on a pierce point");
    auto [ss, si] = start->second;
    auto [es, ei] = end->second;
    if (departing[ss][si] >= 0 || arriving[ss][si] >= 0 || departing[es][ei] >= 0 || arriving[es][ei] >= 0)
      fail(ErrorKind::StuckTrace, "pierce point shared by two arcs");
    departing[ss][si] = c;
    arriving[es][ei] = c;
    arc_end[c] = end->second;
  }
  for (int side = 0; side < 2; ++side)
    for (size_t i = 0; i < pierces[side]->size(); ++i)
      if (departing[side][i] < 0 && arriving[side][i] < 0) fail(ErrorKind::StuckTrace, "pierce point without an arc");

  std::vector<char> departure_used[2], arrival_used[2];
  for (int side = 0; side < 2; ++side) {
    departure_used[side].assign(pierces[side]->size(), 0);
    arrival_used[side].assign(pierces[side]->size(), 0);
  }
  auto append = [](PLCurve& loop, const PLCurve& piece) {
    for (const auto& p : piece.vertices)
      if (loop.vertices.empty() || loop.vertices.back() != p) loop.vertices.push_back(p);
  };
  // loops start at arrivals on K_a, then at the remaining arrivals on K_b
  for (int start_side = 0; start_side < 2; ++start_side)
    for (int start = 0; start < static_cast<int>(pierces[start_side]->size()); ++start) {
      if (arriving[start_side][start] < 0 || arrival_used[start_side][start]) continue;
      PLCurve loop;
      std::vector<BoundaryPiece> pieces;
      int side = start_side, at = start;
      arrival_used[side][at] = 1;
      while (true) {
        // forward along the component to the next free departure
        const auto& list = *pierces[side];
        const int n = static_cast<int>(list.size());
        int next = -1;
        for (int step = 1; step <= n; ++step) {
          const int q = (at + step) % n;
          if (departing[side][q] >= 0 && !departure_used[side][q]) {
            next = q;
            break;
          }
        }
        if (next < 0) fail(ErrorKind::StuckTrace, "no departure left along the component");
        departure_used[side][next] = 1;
        BoundaryPiece along;
        along.kind = PieceKind::AlongComponent;
        along.side = static_cast<Side>(side);
        along.geometry = along_curve(*curves[side], list[at].segment, list[at].position, list[next].segment,
                                     list[next].position);
        append(loop, along.geometry);
        pieces.push_back(std::move(along));
        const int c = departing[side][next];
        BoundaryPiece arc;
        arc.kind = PieceKind::InteriorArc;
        arc.curve = c;
        arc.geometry = out.curves[c].geometry;
        append(loop, arc.geometry);
        pieces.push_back(std::move(arc));
        std::tie(side, at) = arc_end[c];
        if (side == start_side && at == start) break;
        if (arrival_used[side][at]) fail(ErrorKind::StuckTrace, "arrival reached twice");
        arrival_used[side][at] = 1;
      }
      if (loop.vertices.size() > 1 && loop.vertices.front() == loop.vertices.back()) loop.vertices.pop_back();
      loop.closed = true;
      out.loops.push_back(std::move(loop));
      out.pieces.push_back(std::move(pieces));
    }
  for (int side = 0; side < 2; ++side)
    for (size_t i = 0; i < pierces[side]->size(); ++i)
      if (departing[side][i] >= 0 && !departure_used[side][i]) fail(ErrorKind::StuckTrace, "departure never used");
  for (int c = 0; c < static_cast<int>(out.curves.size()); ++c) {
    if (out.curves[c].kind != CurveKind::Circle) continue;
    BoundaryPiece piece;
    piece.kind = PieceKind::Circle;
    piece.curve = c;
    piece.geometry = out.curves[c].geometry;
    out.loops.push_back(piece.geometry);
    out.pieces.push_back({piece});
  }
  return out;
}

DerivedBoundary trace_derived_boundary(const EmbeddedLink& e, int a, int b) {
  const int n = static_cast<int>(e.components.size());
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) fail(ErrorKind::UnknownComponent, "bad component pair");
  return trace_derived_boundary(e.components[a], e.surfaces[a], e.components[b], e.surfaces[b], a, b);
}

}  // namespace masseylink
