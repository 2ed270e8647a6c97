#include <algorithm>
#include <random>

#include "masseylink/embed.hpp"
#include "masseylink/error.hpp"

namespace masseylink {

namespace {

// Vertical spacing between the planes of consecutive components.
const Rational kLayer = 4;
// Perturbations are multiples of this unit, at most kJitter units per axis.
const Rational kJitterUnit = Rational(1, mpz_class(1) << 40);
const int kJitter = 1024;
const int kSeedAttempts = 16;

Rational orient2(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Point2 lerp2(const Point2& a, const Point2& b, const Rational& t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

bool on_segment2(const Point2& p, const Point2& a, const Point2& b) {
  return sgn(orient2(a, b, p)) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet2(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int d1 = sgn(orient2(a, b, c)), d2 = sgn(orient2(a, b, d));
  const int d3 = sgn(orient2(c, d, a)), d4 = sgn(orient2(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment2(c, a, b) || on_segment2(d, a, b) || on_segment2(a, c, d) || on_segment2(b, c, d);
}

// Closed triangle against closed segment, in the plane.
bool triangle_meets_segment2(const std::array<Point2, 3>& t, const Point2& a, const Point2& b) {
  for (int k = 0; k < 3; ++k)
    if (segments_meet2(t[k], t[(k + 1) % 3], a, b)) return true;
  const int s0 = sgn(orient2(t[0], t[1], a)), s1 = sgn(orient2(t[1], t[2], a)), s2 = sgn(orient2(t[2], t[0], a));
  return s0 == s1 && s1 == s2;
}

Rational abs_q(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

bool polygon_simple(const std::vector<Point2>& p) {
  const size_t n = p.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        if (p[i] == p[j]) return false;
        continue;
      }
      if (segments_meet2(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n])) return false;
    }
  return true;
}

// Ear clipping; triangles keep the polygon's orientation.
std::vector<std::array<int, 3>> ear_clip(const std::vector<Point2>& pts, std::vector<int> ring, int orientation) {
  std::vector<std::array<int, 3>> out;
  while (ring.size() > 3) {
    bool clipped = false;
    for (size_t k = 0; k < ring.size() && !clipped; ++k) {
      const int a = ring[(k + ring.size() - 1) % ring.size()], b = ring[k], c = ring[(k + 1) % ring.size()];
      if (sgn(orient2(pts[a], pts[b], pts[c])) != orientation) continue;
      bool empty = true;
      for (int v : ring) {
        if (v == a || v == b || v == c) continue;
        const Point2& p = pts[v];
        if (sgn(orient2(pts[a], pts[b], p)) * orientation >= 0 && sgn(orient2(pts[b], pts[c], p)) * orientation >= 0 &&
            sgn(orient2(pts[c], pts[a], p)) * orientation >= 0) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.push_back({a, b, c});
      ring.erase(ring.begin() + static_cast<long>(k));
      clipped = true;
    }
    if (!clipped) fail(ErrorKind::EmbeddingDegenerate, "polygon has no ear");
  }
  if (sgn(orient2(pts[ring[0]], pts[ring[1]], pts[ring[2]])) != orientation)
    fail(ErrorKind::EmbeddingDegenerate, "degenerate final ear");
  out.push_back({ring[0], ring[1], ring[2]});
  return out;
}

struct Segment2 {
  Point2 a, b;
};

struct FlatSurface {
  std::vector<Point2> points;
  std::vector<Rational> heights;
  std::vector<int> boundary;  // the component, in orientation order
  std::vector<std::array<int, 3>> triangles;
  int orientation = 1;
};

FlatSurface flat_surface(const LinkDiagram& d, const PlanarDrawing& p, const std::vector<Rational>& base, int i,
                         const std::vector<Segment2>& obstacles) {
  const auto& poly = p.polygons[i];
  const auto& at = p.polygon_crossing[i];
  const size_t n = poly.size();
  Rational area = 0;
  for (size_t k = 0; k < n; ++k) area += poly[k].x * poly[(k + 1) % n].y - poly[(k + 1) % n].x * poly[k].y;
  FlatSurface f;
  f.orientation = sgn(area);
  if (f.orientation == 0) fail(ErrorKind::EmbeddingDegenerate, "component polygon has zero area");
  auto add = [&](const Point2& q, const Rational& z) {
    f.points.push_back(q);
    f.heights.push_back(z);
    return static_cast<int>(f.points.size()) - 1;
  };
  std::vector<int> main_ring;
  for (size_t k = 0; k < n; ++k) {
    const int x = at[k];
    const Crossing* c = x >= 0 ? &d.crossings()[x] : nullptr;
    const bool dent = c && c->under_component == i && c->over_component != i && base[c->over_component] < base[i];
    if (!dent) {
      const int v = add(poly[k], base[i]);
      f.boundary.push_back(v);
      main_ring.push_back(v);
      continue;
    }
    // dip under the over-strand inside a small notch of the disk
    const Point2& here = poly[k];
    const Point2 before = lerp2(here, poly[(k + n - 1) % n], Rational(1, 8));
    const Point2 after = lerp2(here, poly[(k + 1) % n], Rational(1, 8));
    const Point2 e1{here.x - before.x, here.y - before.y}, e2{after.x - here.x, after.y - here.y};
    const Point2 dir{Rational(-(e1.y + e2.y) * f.orientation), Rational((e1.x + e2.x) * f.orientation)};
    const Rational len = std::min(abs_q(e1.x) + abs_q(e1.y), abs_q(e2.x) + abs_q(e2.y));
    Rational s = len / (2 * (abs_q(dir.x) + abs_q(dir.y)));
    Point2 m;
    bool placed = false;
    for (int attempt = 0; attempt < 40 && !placed; ++attempt, s /= 2) {
      m = {here.x + dir.x * s, here.y + dir.y * s};
      if (sgn(orient2(before, here, m)) != f.orientation || sgn(orient2(here, after, m)) != f.orientation) continue;
      const std::array<Point2, 3> t1{before, here, m}, t2{here, after, m};
      placed = true;
      for (const auto& o : obstacles) {
        if (o.a == here || o.b == here) continue;
        if (triangle_meets_segment2(t1, o.a, o.b) || triangle_meets_segment2(t2, o.a, o.b)) {
          placed = false;
          break;
        }
      }
    }
    if (!placed) fail(ErrorKind::EmbeddingDegenerate, "no room for an undercrossing notch");
    const int vb = add(before, base[i]);
    const int vc = add(here, base[c->over_component] - kLayer / 2);
    const int va = add(after, base[i]);
    const int vm = add(m, base[i]);
    f.boundary.insert(f.boundary.end(), {vb, vc, va});
    main_ring.insert(main_ring.end(), {vb, vm, va});
    f.triangles.push_back({vb, vc, vm});
    f.triangles.push_back({vc, va, vm});
  }
  std::vector<Point2> ring_points;
  for (int v : main_ring) ring_points.push_back(f.points[v]);
  if (!polygon_simple(ring_points)) fail(ErrorKind::EmbeddingDegenerate, "notched polygon is not simple");
  const auto ears = ear_clip(f.points, main_ring, f.orientation);
  f.triangles.insert(f.triangles.end(), ears.begin(), ears.end());
  return f;
}

// Random perturbation; returns false if a projected triangle flipped.
bool realize(const FlatSurface& f, std::mt19937_64& rng, PLSurface& surface, PLCurve& curve) {
  std::uniform_int_distribution<int> jitter(-kJitter, kJitter);
  surface = {};
  for (size_t v = 0; v < f.points.size(); ++v) {
    const Rational dx = kJitterUnit * jitter(rng), dy = kJitterUnit * jitter(rng), dz = kJitterUnit * jitter(rng);
    surface.vertices.push_back({f.points[v].x + dx, f.points[v].y + dy, f.heights[v] + dz});
  }
  surface.triangles = f.triangles;
  for (const auto& t : f.triangles) {
    const RPoint &a = surface.vertices[t[0]], &b = surface.vertices[t[1]], &c = surface.vertices[t[2]];
    if (sgn(orient2({a.x, a.y}, {b.x, b.y}, {c.x, c.y})) != f.orientation) return false;
  }
  curve = {};
  for (int v : f.boundary) curve.vertices.push_back(surface.vertices[v]);
  return true;
}

bool generic(const EmbeddedLink& e) {
  try {
    for (size_t a = 0; a < e.components.size(); ++a)
      for (size_t b = 0; b < e.surfaces.size(); ++b)
        if (a != b) pierce_list(e.components[a], e.surfaces[b]);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotGeneric) return false;
    throw;
  }
  return true;
}

RPoint linf_normalized(const RPoint& p) {
  const Rational m = std::max({abs_q(p.x), abs_q(p.y), abs_q(p.z)});
  if (sgn(m) == 0) fail(ErrorKind::EmbeddingDegenerate, "zero direction");
  return p * (1 / m);
}

}  // namespace

EmbeddedLink build_embedding(const LinkDiagram& d, const EmbedOptions& options) {
  for (int i = 0; i < d.num_components(); ++i)
    if (!d.self_crossings(i).empty())
      fail(ErrorKind::EmbeddingDegenerate, "component " + std::to_string(i + 1) +
                                               " crosses itself; only diagrams without self-crossings are embedded");
  EmbeddedLink e;
  e.grid_scale = options.grid_scale;
  e.tube_radius = options.tube_radius;
  e.drawing = planar_drawing(d, options.grid_scale);
  for (int i = 0; i < d.num_components(); ++i) e.base_height.push_back(kLayer * i);

  std::vector<Segment2> obstacles;
  for (const auto& poly : e.drawing.polygons)
    for (size_t k = 0; k < poly.size(); ++k) obstacles.push_back({poly[k], poly[(k + 1) % poly.size()]});
  std::vector<FlatSurface> flats;
  for (int i = 0; i < d.num_components(); ++i) flats.push_back(flat_surface(d, e.drawing, e.base_height, i, obstacles));

  for (int attempt = 0; attempt < kSeedAttempts; ++attempt) {
    e.seed = options.seed + attempt;
    std::mt19937_64 rng(static_cast<unsigned long long>(e.seed));
    e.components.assign(flats.size(), {});
    e.surfaces.assign(flats.size(), {});
    bool ok = true;
    for (size_t i = 0; i < flats.size() && ok; ++i) ok = realize(flats[i], rng, e.surfaces[i], e.components[i]);
    if (ok && generic(e)) {
      for (int i = 0; i < d.num_components(); ++i) e.clearance.push_back(clearance_squared(e, i));
      return e;
    }
  }
  fail(ErrorKind::EmbeddingDegenerate, "perturbation budget exhausted");
}

Rational segment_distance_squared(const RPoint& a, const RPoint& b, const RPoint& c, const RPoint& d) {
  auto point_segment = [](const RPoint& p, const RPoint& s, const RPoint& t) {
    const RPoint u = t - s;
    const Rational len2 = dot(u, u);
    Rational k = len2 == 0 ? Rational(0) : dot(p - s, u) / len2;
    if (k < 0) k = 0;
    if (k > 1) k = 1;
    const RPoint diff = s + u * k - p;
    return Rational(dot(diff, diff));
  };
  Rational best = std::min({point_segment(a, c, d), point_segment(b, c, d), point_segment(c, a, b), point_segment(d, a, b)});
  // interior critical point of the convex quadratic, if any
  const RPoint u = b - a, v = d - c, w = a - c;
  const Rational uu = dot(u, u), uv = dot(u, v), vv = dot(v, v), uw = dot(u, w), vw = dot(v, w);
  const Rational den = uu * vv - uv * uv;
  if (sgn(den) != 0) {
    const Rational s = (uv * vw - vv * uw) / den, t = (uu * vw - uv * uw) / den;
    if (s > 0 && s < 1 && t > 0 && t < 1) {
      const RPoint diff = (a + u * s) - (c + v * t);
      best = std::min(best, Rational(dot(diff, diff)));
    }
  }
  return best;
}

Rational clearance_squared(const EmbeddedLink& e, int i) {
  if (i < 0 || i >= static_cast<int>(e.components.size())) fail(ErrorKind::UnknownComponent, "no such component");
  const PLCurve& k = e.components[i];
  const int n = k.num_segments();
  std::optional<Rational> best;
  auto take = [&](const Rational& q) {
    if (!best || q < *best) best = q;
  };
  for (int s = 0; s < n; ++s) {
    auto [a, b] = k.segment(s);
    for (int t = s + 1; t < n; ++t) {
      if (t == s + 1 || (s == 0 && t == n - 1)) continue;
      auto [c, dd] = k.segment(t);
      take(segment_distance_squared(a, b, c, dd));
    }
    for (size_t j = 0; j < e.components.size(); ++j) {
      if (static_cast<int>(j) == i) continue;
      const PLCurve& o = e.components[j];
      for (int t = 0; t < o.num_segments(); ++t) {
        auto [c, dd] = o.segment(t);
        take(segment_distance_squared(a, b, c, dd));
      }
    }
  }
  return best.value_or(Rational(1) << 20);
}

void check_tube(const EmbeddedLink& e, int i) {
  // the cross-section reaches sqrt(3) radii from the core
  if (sgn(e.tube_radius) <= 0) fail(ErrorKind::InvalidArgument, "tube radius must be positive");
  const Rational limit = i >= 0 && i < static_cast<int>(e.clearance.size()) ? e.clearance[i] : clearance_squared(e, i);
  if (12 * e.tube_radius * e.tube_radius >= limit)
    fail(ErrorKind::TubeTooLarge, "tube of radius " + e.tube_radius.get_str() + " does not fit around component " +
                                      std::to_string(i));
}

std::array<RPoint, 4> tube_frame(const EmbeddedLink& e, int i, int v) {
  const PLCurve& k = e.components.at(i);
  const int n = static_cast<int>(k.vertices.size());
  const RPoint& here = k.vertices[((v % n) + n) % n];
  const RPoint& prev = k.vertices[((v - 1) % n + n) % n];
  const RPoint& next = k.vertices[((v + 1) % n + n) % n];
  auto flat = [](const RPoint& p) { return RPoint(p.x, p.y, 0); };
  const RPoint tangent = linf_normalized(flat(here - prev)) + linf_normalized(flat(next - here));
  const RPoint side = linf_normalized(RPoint(-tangent.y, tangent.x, 0));
  const RPoint up(0, 0, 1);
  const Rational& r = e.tube_radius;
  return {(side + up) * r, (up - side) * r, (RPoint(0, 0, 0) - side - up) * r, (side - up) * r};
}

PLSurface boundary_torus(const EmbeddedLink& e, int i) {
  check_tube(e, i);
  const PLCurve& k = e.components[i];
  const int n = static_cast<int>(k.vertices.size());
  PLSurface t;
  for (int v = 0; v < n; ++v) {
    const auto frame = tube_frame(e, i, v);
    for (const auto& off : frame) t.vertices.push_back(k.vertices[v] + off);
  }
  for (int v = 0; v < n; ++v) {
    const int w = (v + 1) % n;
    for (int q = 0; q < 4; ++q) {
      const int a = 4 * v + q, b = 4 * v + (q + 1) % 4, c = 4 * w + q, dd = 4 * w + (q + 1) % 4;
      t.triangles.push_back({a, c, b});
      t.triangles.push_back({b, c, dd});
    }
  }
  // orient outward: the first triangle's normal points away from the core
  const Triangle first = t.triangle(0);
  const RPoint normal = cross(first[1] - first[0], first[2] - first[0]);
  if (sgn(dot(normal, first[0] - k.vertices[0])) < 0)
    for (auto& tri : t.triangles) std::swap(tri[1], tri[2]);
  return t;
}

PLCurve meridian(const EmbeddedLink& e, int i, int v) {
  check_tube(e, i);
  const PLCurve& k = e.components[i];
  const int n = static_cast<int>(k.vertices.size());
  const RPoint& core = k.vertices[((v % n) + n) % n];
  PLCurve m;
  for (const auto& off : tube_frame(e, i, v)) m.vertices.push_back(core + off);
  if (curve_surface_count(m, e.surfaces[i]) < 0) m = m.reversed();
  return m;
}

}  // namespace masseylink
