#include "masseylink/plgeom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "masseylink/error.hpp"

namespace masseylink {

bool RPoint::operator<(const RPoint& o) const {
  if (x != o.x) return x < o.x;
  if (y != o.y) return y < o.y;
  return z < o.z;
}

Rational dot(const RPoint& a, const RPoint& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

RPoint cross(const RPoint& a, const RPoint& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

RPoint lerp(const RPoint& a, const RPoint& b, const Rational& t) { return a + (b - a) * t; }

Rational orient3_value(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s) {
  return dot(cross(q - p, r - p), s - p);
}

int orient3(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s) {
  return sgn(orient3_value(p, q, r, s));
}

namespace {

struct P2 {
  Rational u, v;
  bool operator==(const P2& o) const { return u == o.u && v == o.v; }
};

// Drops the coordinate along which the normal is largest.
int drop_axis(const RPoint& n) {
  Rational ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  if (az >= ax && az >= ay) return 2;
  if (ay >= ax) return 1;
  return 0;
}

P2 project(const RPoint& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.z, p.x};
    default: return {p.x, p.y};
  }
}

Rational orient2(const P2& a, const P2& b, const P2& c) {
  return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u);
}

RPoint normal(const Triangle& t) { return cross(t[1] - t[0], t[2] - t[0]); }

bool is_zero(const RPoint& p) { return sgn(p.x) == 0 && sgn(p.y) == 0 && sgn(p.z) == 0; }

// Clips the parameter interval [lo,hi] of a(t) = a + (b-a)t against the
// closed triangle lying in a common plane.
bool clip_coplanar(const RPoint& a, const RPoint& b, const Triangle& t, int axis, Rational& lo, Rational& hi) {
  P2 pa = project(a, axis), pb = project(b, axis);
  P2 q[3] = {project(t[0], axis), project(t[1], axis), project(t[2], axis)};
  const int o = sgn(orient2(q[0], q[1], q[2]));
  for (int i = 0; i < 3; ++i) {
    const P2& e0 = q[i];
    const P2& e1 = q[(i + 1) % 3];
    // f(t) = o * orient2(e0, e1, pa + (pb - pa) t) >= 0
    Rational f0 = orient2(e0, e1, pa) * o;
    Rational f1 = orient2(e0, e1, pb) * o;
    Rational slope = f1 - f0;
    if (sgn(slope) == 0) {
      if (sgn(f0) < 0) return false;
      continue;
    }
    Rational root = -f0 / slope;
    if (sgn(slope) > 0) lo = std::max(lo, root);
    else hi = std::min(hi, root);
    if (lo > hi) return false;
  }
  return true;
}

Intersection make_segment_result(const RPoint& p, const RPoint& q) {
  Intersection r;
  if (p == q) {
    r.kind = IntersectionKind::Point;
    r.points = {p};
  } else {
    r.kind = IntersectionKind::Segment;
    r.points = {p, q};
  }
  return r;
}

std::array<Rational, 3> barycentric(const RPoint& p, const Triangle& t) {
  const int axis = drop_axis(normal(t));
  P2 q0 = project(t[0], axis), q1 = project(t[1], axis), q2 = project(t[2], axis), pp = project(p, axis);
  Rational area = orient2(q0, q1, q2);
  return {orient2(pp, q1, q2) / area, orient2(q0, pp, q2) / area, orient2(q0, q1, pp) / area};
}

}  // namespace

bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b) {
  const RPoint d = b - a;
  if (!is_zero(cross(d, p - a))) return false;
  Rational s = dot(p - a, d);
  return sgn(s) >= 0 && s <= dot(d, d);
}

bool point_in_triangle(const RPoint& p, const Triangle& t) {
  const RPoint n = normal(t);
  if (is_zero(n))
    return point_on_segment(p, t[0], t[1]) || point_on_segment(p, t[1], t[2]) ||
           point_on_segment(p, t[2], t[0]);
  if (sgn(dot(n, p - t[0])) != 0) return false;
  const int axis = drop_axis(n);
  P2 q0 = project(t[0], axis), q1 = project(t[1], axis), q2 = project(t[2], axis), pp = project(p, axis);
  const int o = sgn(orient2(q0, q1, q2));
  return sgn(orient2(q0, q1, pp)) * o >= 0 && sgn(orient2(q1, q2, pp)) * o >= 0 &&
         sgn(orient2(q2, q0, pp)) * o >= 0;
}

Intersection segment_triangle(const RPoint& a, const RPoint& b, const Triangle& t) {
  const RPoint n = normal(t);
  if (is_zero(n)) fail(ErrorKind::InvalidArgument, "degenerate triangle");
  Rational da = dot(n, a - t[0]);
  Rational db = dot(n, b - t[0]);
  const int sa = sgn(da), sb = sgn(db);
  if (sa * sb > 0) return {};
  if (sa == 0 && sb == 0) {
    Rational lo = 0, hi = 1;
    if (!clip_coplanar(a, b, t, drop_axis(n), lo, hi)) return {};
    Intersection r = make_segment_result(lerp(a, b, lo), lerp(a, b, hi));
    if (r.kind == IntersectionKind::Point) r.barycentric = barycentric(r.points[0], t);
    return r;
  }
  RPoint p = lerp(a, b, da / (da - db));
  if (!point_in_triangle(p, t)) return {};
  Intersection r;
  r.kind = IntersectionKind::Point;
  r.points = {p};
  r.barycentric = barycentric(p, t);
  return r;
}

namespace {

// Points of t on the plane (n, origin): vertices on it and edge crossings.
std::vector<RPoint> plane_cut(const Triangle& t, const RPoint& n, const RPoint& origin) {
  Rational d[3];
  for (int i = 0; i < 3; ++i) d[i] = dot(n, t[i] - origin);
  std::vector<RPoint> pts;
  for (int i = 0; i < 3; ++i) {
    if (sgn(d[i]) == 0) pts.push_back(t[i]);
    const int j = (i + 1) % 3;
    if (sgn(d[i]) * sgn(d[j]) < 0) pts.push_back(lerp(t[i], t[j], d[i] / (d[i] - d[j])));
  }
  return pts;
}

std::vector<RPoint> clip_polygon(std::vector<RPoint> poly, const Triangle& t, int axis) {
  P2 q[3] = {project(t[0], axis), project(t[1], axis), project(t[2], axis)};
  const int o = sgn(orient2(q[0], q[1], q[2]));
  for (int i = 0; i < 3 && !poly.empty(); ++i) {
    const P2& e0 = q[i];
    const P2& e1 = q[(i + 1) % 3];
    std::vector<RPoint> out;
    const size_t m = poly.size();
    for (size_t k = 0; k < m; ++k) {
      const RPoint& cur = poly[k];
      const RPoint& nxt = poly[(k + 1) % m];
      Rational fc = orient2(e0, e1, project(cur, axis)) * o;
      Rational fn = orient2(e0, e1, project(nxt, axis)) * o;
      if (sgn(fc) >= 0) out.push_back(cur);
      if (sgn(fc) * sgn(fn) < 0) out.push_back(lerp(cur, nxt, fc / (fc - fn)));
    }
    poly.clear();
    for (const auto& p : out)
      if (poly.empty() || poly.back() != p) poly.push_back(p);
    while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
  }
  return poly;
}

}  // namespace

Intersection triangle_triangle(const Triangle& t1, const Triangle& t2) {
  const RPoint n1 = normal(t1), n2 = normal(t2);
  if (is_zero(n1) || is_zero(n2)) fail(ErrorKind::InvalidArgument, "degenerate triangle");
  int s[3];
  for (int i = 0; i < 3; ++i) s[i] = sgn(dot(n1, t2[i] - t1[0]));
  if (s[0] == 0 && s[1] == 0 && s[2] == 0) {
    const int axis = drop_axis(n1);
    std::vector<RPoint> poly = clip_polygon({t1[0], t1[1], t1[2]}, t2, axis);
    if (poly.empty()) return {};
    // collapse collinear results to their extreme points
    std::sort(poly.begin(), poly.end());
    poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
    if (poly.size() == 1) return make_segment_result(poly[0], poly[0]);
    bool collinear = true;
    for (size_t k = 2; k < poly.size(); ++k)
      if (!is_zero(cross(poly[1] - poly[0], poly[k] - poly[0]))) collinear = false;
    if (collinear) return make_segment_result(poly.front(), poly.back());
    Intersection r;
    r.kind = IntersectionKind::Area;
    r.points = clip_polygon({t1[0], t1[1], t1[2]}, t2, axis);
    return r;
  }
  if ((s[0] > 0 && s[1] > 0 && s[2] > 0) || (s[0] < 0 && s[1] < 0 && s[2] < 0)) return {};
  std::vector<RPoint> c1 = plane_cut(t1, n2, t2[0]);
  std::vector<RPoint> c2 = plane_cut(t2, n1, t1[0]);
  if (c1.empty() || c2.empty()) return {};
  const RPoint dir = cross(n1, n2);
  auto extent = [&](const std::vector<RPoint>& pts) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [&](const RPoint& a, const RPoint& b) {
      return dot(dir, a) < dot(dir, b);
    });
    return std::pair<RPoint, RPoint>{*lo, *hi};
  };
  auto [a1, b1] = extent(c1);
  auto [a2, b2] = extent(c2);
  const RPoint& lo = dot(dir, a1) >= dot(dir, a2) ? a1 : a2;
  const RPoint& hi = dot(dir, b1) <= dot(dir, b2) ? b1 : b2;
  if (dot(dir, lo) > dot(dir, hi)) return {};
  return make_segment_result(lo, hi);
}

bool intersection_contains(const Intersection& r, const RPoint& p) {
  switch (r.kind) {
    case IntersectionKind::Empty: return false;
    case IntersectionKind::Point: return r.points[0] == p;
    case IntersectionKind::Segment: return point_on_segment(p, r.points[0], r.points[1]);
    case IntersectionKind::Area:
      for (size_t k = 1; k + 1 < r.points.size(); ++k)
        if (point_in_triangle(p, {r.points[0], r.points[k], r.points[k + 1]})) return true;
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Curves and surfaces

int PLCurve::num_segments() const {
  const int n = static_cast<int>(vertices.size());
  return closed ? n : std::max(0, n - 1);
}

std::pair<const RPoint&, const RPoint&> PLCurve::segment(int i) const {
  return {vertices[i], vertices[(i + 1) % vertices.size()]};
}

PLCurve PLCurve::reversed() const {
  PLCurve r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  if (closed && !r.vertices.empty()) std::rotate(r.vertices.rbegin(), r.vertices.rbegin() + 1, r.vertices.rend());
  return r;
}

PLCurve PLCurve::subdivided(int parts) const {
  PLCurve r;
  r.closed = closed;
  for (int i = 0; i < num_segments(); ++i) {
    auto [a, b] = segment(i);
    for (int k = 0; k < parts; ++k) r.vertices.push_back(lerp(a, b, Rational(k, parts)));
  }
  if (!closed && !vertices.empty()) r.vertices.push_back(vertices.back());
  return r;
}

void PLCurve::check() const {
  if (closed && vertices.size() < 3) fail(ErrorKind::InvalidArgument, "closed curve needs 3 vertices");
  for (int i = 0; i < num_segments(); ++i) {
    auto [a, b] = segment(i);
    if (a == b) fail(ErrorKind::InvalidArgument, "curve has repeated consecutive vertices");
  }
}

Triangle PLSurface::triangle(int i) const {
  const auto& t = triangles[i];
  return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
}

int PLSurface::add_vertex(const RPoint& p) {
  vertices.push_back(p);
  return static_cast<int>(vertices.size()) - 1;
}

void PLSurface::check() const {
  std::map<std::pair<int, int>, int> directed;
  for (size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    if (is_zero(normal(triangle(static_cast<int>(i)))))
      fail(ErrorKind::NotManifold, "degenerate triangle " + std::to_string(i));
    for (int k = 0; k < 3; ++k) {
      if (++directed[{t[k], t[(k + 1) % 3]}] > 1)
        fail(ErrorKind::NotManifold, "edge used twice with the same orientation");
    }
  }
}

std::vector<PLCurve> PLSurface::boundary() const {
  std::set<std::pair<int, int>> directed;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) directed.insert({t[k], t[(k + 1) % 3]});
  std::multimap<int, int> next;
  for (const auto& [a, b] : directed)
    if (!directed.count({b, a})) next.emplace(a, b);
  std::vector<PLCurve> loops;
  while (!next.empty()) {
    auto it = next.begin();
    const int start = it->first;
    PLCurve c;
    int cur = start;
    for (;;) {
      auto e = next.find(cur);
      if (e == next.end()) fail(ErrorKind::NotManifold, "boundary does not close");
      c.vertices.push_back(vertices[cur]);
      cur = e->second;
      next.erase(e);
      if (cur == start) break;
    }
    loops.push_back(std::move(c));
  }
  return loops;
}

PLSurface PLSurface::subdivided() const {
  PLSurface out;
  out.vertices = vertices;
  std::map<std::pair<int, int>, int> mid;
  auto midpoint = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = mid.find(key);
    if (it != mid.end()) return it->second;
    const int id = out.add_vertex(lerp(vertices[a], vertices[b], Rational(1, 2)));
    mid.emplace(key, id);
    return id;
  };
  for (const auto& t : triangles) {
    const int ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({ab, t[1], bc});
    out.triangles.push_back({ca, bc, t[2]});
    out.triangles.push_back({ab, bc, ca});
  }
  return out;
}

int PLSurface::euler_characteristic() const {
  std::set<int> used;
  std::set<std::pair<int, int>> edges;
  for (const auto& t : triangles)
    for (int k = 0; k < 3; ++k) {
      used.insert(t[k]);
      edges.insert(std::minmax(t[k], t[(k + 1) % 3]));
    }
  return static_cast<int>(used.size()) - static_cast<int>(edges.size()) + static_cast<int>(triangles.size());
}

// ---------------------------------------------------------------------------
// Pierces

namespace {

struct Box {
  Rational lo[3], hi[3];
};

Box box_of(std::initializer_list<const RPoint*> pts) {
  Box b;
  bool first = true;
  for (const RPoint* p : pts) {
    const Rational* c[3] = {&p->x, &p->y, &p->z};
    for (int k = 0; k < 3; ++k) {
      if (first || *c[k] < b.lo[k]) b.lo[k] = *c[k];
      if (first || *c[k] > b.hi[k]) b.hi[k] = *c[k];
    }
    first = false;
  }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (int k = 0; k < 3; ++k)
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
  return true;
}

}  // namespace

std::vector<Pierce> pierce_list(const PLCurve& c, const PLSurface& s) {
  std::vector<Box> tri_boxes;
  tri_boxes.reserve(s.triangles.size());
  for (const auto& t : s.triangles)
    tri_boxes.push_back(box_of({&s.vertices[t[0]], &s.vertices[t[1]], &s.vertices[t[2]]}));
  std::vector<Pierce> out;
  for (int i = 0; i < c.num_segments(); ++i) {
    auto [a, b] = c.segment(i);
    const Box sb = box_of({&a, &b});
    for (size_t ti = 0; ti < s.triangles.size(); ++ti) {
      if (!boxes_meet(sb, tri_boxes[ti])) continue;
      const Triangle t = s.triangle(static_cast<int>(ti));
      Rational da = orient3_value(t[0], t[1], t[2], a);
      Rational db = orient3_value(t[0], t[1], t[2], b);
      const int sa = sgn(da), sb2 = sgn(db);
      if (sa * sb2 > 0) continue;
      if (sa == 0 || sb2 == 0) {
        if (segment_triangle(a, b, t).kind != IntersectionKind::Empty)
          fail(ErrorKind::NotGeneric, "curve vertex or segment lies on a surface triangle");
        continue;
      }
      int o[3];
      for (int k = 0; k < 3; ++k) o[k] = orient3(a, b, t[k], t[(k + 1) % 3]);
      const bool pos = o[0] >= 0 && o[1] >= 0 && o[2] >= 0;
      const bool neg = o[0] <= 0 && o[1] <= 0 && o[2] <= 0;
      if (!pos && !neg) continue;
      if (o[0] == 0 || o[1] == 0 || o[2] == 0)
        fail(ErrorKind::NotGeneric, "curve meets a surface edge");
      Pierce p;
      p.segment = i;
      p.t = da / (da - db);
      p.triangle = static_cast<int>(ti);
      p.point = lerp(a, b, p.t);
      p.sign = sa < 0 ? 1 : -1;
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const Pierce& x, const Pierce& y) {
    if (x.segment != y.segment) return x.segment < y.segment;
    return x.t < y.t;
  });
  return out;
}

int curve_surface_count(const PLCurve& c, const PLSurface& s) {
  int total = 0;
  for (const auto& p : pierce_list(c, s)) total += p.sign;
  return total;
}

}  // namespace masseylink
