#include <doctest.h>

#include <map>

#include "fixture_path.hpp"
#include "masseylink/error.hpp"
#include "masseylink/trace.hpp"

using namespace masseylink;
using testing_support::fixture;

namespace {

PLSurface square(const RPoint& origin, const RPoint& u, const RPoint& v) {
  PLSurface s;
  s.vertices = {origin, origin + u, origin + u + v, origin + v, origin + (u + v) * Rational(1, 2)};
  s.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return s;
}

// Boundary of a 1-chain made of closed loops: every vertex balanced.
bool closed_chain(const std::vector<PLCurve>& loops) {
  std::map<RPoint, int> degree;
  for (const auto& l : loops) {
    const int n = l.num_segments();
    for (int s = 0; s < n; ++s) {
      auto [p, q] = l.segment(s);
      --degree[p];
      ++degree[q];
    }
  }
  for (const auto& [p, d] : degree)
    if (d != 0) return false;
  return true;
}

const char* kZeroLinkingFixtures[] = {"borromean", "borromean_mirror", "brunn_1", "brunn_2", "brunn_3",
                                      "split3", "unlink3"};

}  // namespace

TEST_CASE("disjoint and crossing squares") {
  const PLSurface a = square({0, 0, 0}, {4, 0, 0}, {0, 4, 0});
  CHECK(surface_intersection(a, square({0, 0, 5}, {4, 0, 0}, {0, 4, 0})).empty());
  const PLSurface b = square({Rational(3, 7), Rational(13, 7), Rational(-11, 5)}, {3, 0, 0}, {0, 0, 4});
  const auto curves = surface_intersection(a, b);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].kind == CurveKind::Arc);
  CHECK(curves[0].start_side == Side::B);
  CHECK(curves[0].end_side == Side::B);
  // orientation along n_a x n_b
  const RPoint dir = curves[0].geometry.vertices.back() - curves[0].geometry.vertices.front();
  CHECK(sgn(dot(dir, cross({0, 0, 1}, {0, -1, 0}))) > 0);
  const auto reversed = surface_intersection(b, a);
  REQUIRE(reversed.size() == 1);
  CHECK(reversed[0].geometry.vertices.front() == curves[0].geometry.vertices.back());
}

TEST_CASE("touching surfaces are not generic") {
  const PLSurface a = square({0, 0, 0}, {4, 0, 0}, {0, 4, 0});
  CHECK_THROWS_AS(surface_intersection(a, square({1, 1, 0}, {1, 0, 0}, {0, 1, 0})), Error);
  CHECK_THROWS_AS(surface_intersection(a, square({1, 1, 0}, {1, 0, 0}, {0, 0, 1})), Error);
}

TEST_CASE("clasp arcs of the hopf link") {
  const EmbeddedLink e = build_embedding(fixture("hopf_pos"));
  const auto p01 = pierce_points(e.components[0], e.surfaces[1], 0);
  REQUIRE(p01.size() == 1);
  CHECK(p01[0].label == 1);
  const auto p10 = pierce_points(e.components[1], e.surfaces[0], 1);
  REQUIRE(p10.size() == 1);
  CHECK(p10[0].label == 1);
  const auto curves = surface_intersection(e.surfaces[0], e.surfaces[1]);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].start_side != curves[0].end_side);
  CHECK_THROWS_AS(trace_derived_boundary(e, 0, 1), Error);
}

TEST_CASE("pierce points of split components") {
  const EmbeddedLink e = build_embedding(fixture("split3"));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) {
        int sum = 0;
        for (const auto& p : pierce_points(e.components[a], e.surfaces[b], a)) sum += p.label;
        CHECK(sum == 0);
      }
  const EmbeddedLink u = build_embedding(fixture("unlink3"));
  CHECK(pierce_points(u.components[0], u.surfaces[1]).empty());
  CHECK(trace_derived_boundary(u, 0, 1).loops.empty());
}

TEST_CASE("arc ends follow the pierce labels") {
  for (const char* name : kZeroLinkingFixtures) {
    CAPTURE(std::string(name));
    const EmbeddedLink e = build_embedding(fixture(name));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        CAPTURE(a);
        CAPTURE(b);
        const DerivedBoundary db = trace_derived_boundary(e, a, b);
        std::map<RPoint, int> label_a, label_b;
        for (const auto& p : db.pierces_a) label_a[p.location] = p.label;
        for (const auto& p : db.pierces_b) label_b[p.location] = p.label;
        CHECK(db.pierces_a.size() % 2 == 0);
        for (const auto& c : db.curves) {
          if (c.kind != CurveKind::Arc) continue;
          const RPoint& s = c.geometry.vertices.front();
          const RPoint& t = c.geometry.vertices.back();
          // +1 on K_a departs, -1 on K_a arrives; on K_b the roles swap
          if (c.start_side == Side::A) CHECK(label_a.at(s) == 1);
          if (c.start_side == Side::B) CHECK(label_b.at(s) == -1);
          if (c.end_side == Side::A) CHECK(label_a.at(t) == -1);
          if (c.end_side == Side::B) CHECK(label_b.at(t) == 1);
        }
      }
  }
}

TEST_CASE("derived boundaries are closed and use every arc once") {
  for (const char* name : kZeroLinkingFixtures) {
    CAPTURE(std::string(name));
    const EmbeddedLink e = build_embedding(fixture(name));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        CAPTURE(a);
        CAPTURE(b);
        const DerivedBoundary db = trace_derived_boundary(e, a, b);
        CHECK(closed_chain(db.loops));
        std::vector<int> uses(db.curves.size(), 0);
        for (const auto& loop : db.pieces)
          for (const auto& piece : loop)
            if (piece.kind != PieceKind::AlongComponent) ++uses[piece.curve];
        for (int u : uses) CHECK(u == 1);
        for (const auto& loop : db.loops) CHECK_NOTHROW(loop.check());
        // antisymmetry: the reversed pair carries the same arcs backwards
        const auto swapped = surface_intersection(e.surfaces[b], e.surfaces[a], b, a);
        REQUIRE(swapped.size() == db.curves.size());
        for (const auto& c : db.curves) {
          bool found = false;
          for (const auto& s : swapped) {
            std::vector<RPoint> rev(s.geometry.vertices.rbegin(), s.geometry.vertices.rend());
            if (c.kind == CurveKind::Arc && rev == c.geometry.vertices) found = true;
            if (c.kind == CurveKind::Circle && s.kind == CurveKind::Circle) found = true;
          }
          CHECK(found);
        }
      }
  }
}

TEST_CASE("arc between two points of one component closes along it") {
  const PLSurface fa = square({0, 0, 0}, {8, 0, 0}, {0, 8, 0});
  PLCurve ka;
  for (int k = 0; k < 4; ++k) ka.vertices.push_back(fa.vertices[k]);
  const PLSurface fb = square({Rational(29, 7), -2, -3}, {0, 12, 0}, {0, 0, Rational(13, 2)});
  PLCurve kb;
  for (int k = 0; k < 4; ++k) kb.vertices.push_back(fb.vertices[k]);
  const auto pierces = pierce_points(ka, fb);
  REQUIRE(pierces.size() == 2);
  CHECK(pierces[0].label + pierces[1].label == 0);
  const DerivedBoundary db = trace_derived_boundary(ka, fa, kb, fb);
  REQUIRE(db.loops.size() == 1);
  REQUIRE(db.pieces[0].size() == 2);
  CHECK(db.pieces[0][0].kind == PieceKind::AlongComponent);
  CHECK(db.pieces[0][0].side == Side::A);
  CHECK(db.pieces[0][1].kind == PieceKind::InteriorArc);
  CHECK(closed_chain(db.loops));
}

TEST_CASE("intersection circles become standalone loops") {
  // K_a bounds a flat square; F_b dips through it as a closed tent.
  const PLSurface fa = square({0, 0, 0}, {8, 0, 0}, {0, 8, 0});
  PLCurve ka;
  for (int k = 0; k < 4; ++k) ka.vertices.push_back(fa.vertices[k]);
  PLSurface fb;
  fb.vertices = {{1, Rational(7, 3), 1}, {7, Rational(7, 3), 1}, {7, Rational(17, 3), 1}, {1, Rational(17, 3), 1},
                 {Rational(9, 2), 4, -2}};
  fb.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  PLCurve kb;
  for (int k = 0; k < 4; ++k) kb.vertices.push_back(fb.vertices[k]);
  const auto curves = surface_intersection(fa, fb);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].kind == CurveKind::Circle);
  const DerivedBoundary db = trace_derived_boundary(ka, fa, kb, fb);
  CHECK(db.loops.size() == 1);
  CHECK(db.pieces[0][0].kind == PieceKind::Circle);
}

TEST_CASE("along_curve wraps forward") {
  PLCurve k;
  k.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const PLCurve fwd = along_curve(k, 0, Rational(1, 2), 2, Rational(1, 2));
  CHECK(fwd.vertices.size() == 4);
  const PLCurve wrap = along_curve(k, 2, Rational(1, 2), 0, Rational(1, 2));
  CHECK(wrap.vertices.size() == 4);
  const PLCurve same = along_curve(k, 1, Rational(3, 4), 1, Rational(1, 4));
  CHECK(same.vertices.size() == 6);
}

#include "masseylink/geometry_json.hpp"

TEST_CASE("geometry dumps round trip") {
  const EmbeddedLink e = build_embedding(fixture("borromean"));
  const auto j = to_json(e);
  CHECK(j["type"] == "embedded_link");
  for (size_t i = 0; i < e.components.size(); ++i) {
    CHECK(curve_from_json(j["components"][i]).vertices == e.components[i].vertices);
    const PLSurface s = surface_from_json(j["surfaces"][i]);
    CHECK(s.vertices == e.surfaces[i].vertices);
    CHECK(s.triangles == e.surfaces[i].triangles);
  }
  const DerivedBoundary db = trace_derived_boundary(e, 1, 2);
  const auto jb = to_json(db);
  CHECK(jb["pair"] == nlohmann::json::array({2, 3}));
  CHECK(jb["loops"].size() == db.loops.size());
  CHECK(jb["pierce_points"].size() == db.pierces_a.size() + db.pierces_b.size());
  CHECK_THROWS_AS(point_from_json(nlohmann::json::array({"1", "x", "2"})), Error);
  CHECK_THROWS_AS(point_from_json(nlohmann::json::array({"1", "2"})), Error);
}
