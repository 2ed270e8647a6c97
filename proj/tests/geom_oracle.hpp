#pragma once

// Brute-force references for the exact kernel: 4x4 cofactor determinants and
// cross-product containment tests written independently of the library.

#include <random>

#include "masseylink/plgeom.hpp"

namespace testing_support {

using masseylink::Rational;
using masseylink::RPoint;
using masseylink::Triangle;

inline Rational random_rational(std::mt19937_64& rng, int num_range, int max_den) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline RPoint random_point(std::mt19937_64& rng, int num_range = 8, int max_den = 4) {
  return {random_rational(rng, num_range, max_den), random_rational(rng, num_range, max_den),
          random_rational(rng, num_range, max_den)};
}

inline Rational det3(const Rational m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Determinant of the rows (p,1),(q,1),(r,1),(s,1) by cofactor expansion
/// along the first row.
inline Rational det4_homogeneous(const RPoint& p, const RPoint& q, const RPoint& r, const RPoint& s) {
  const Rational rows[4][4] = {{p.x, p.y, p.z, 1}, {q.x, q.y, q.z, 1}, {r.x, r.y, r.z, 1}, {s.x, s.y, s.z, 1}};
  Rational total = 0;
  for (int col = 0; col < 4; ++col) {
    Rational minor[3][3];
    for (int i = 1; i < 4; ++i) {
      int cc = 0;
      for (int j = 0; j < 4; ++j)
        if (j != col) minor[i - 1][cc++] = rows[i][j];
    }
    const Rational term = rows[0][col] * det3(minor);
    total += (col % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline RPoint xprod(const RPoint& a, const RPoint& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational dprod(const RPoint& a, const RPoint& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Closed containment in a non-degenerate triangle via edge cross products.
inline bool in_triangle(const RPoint& p, const Triangle& t) {
  const RPoint n = xprod(t[1] - t[0], t[2] - t[0]);
  if (dprod(n, p - t[0]) != 0) return false;
  for (int k = 0; k < 3; ++k)
    if (sgn(dprod(xprod(t[(k + 1) % 3] - t[k], p - t[k]), n)) < 0) return false;
  return true;
}

/// Point on both planes (Cramer's rule on the planes plus a gauge plane).
inline RPoint plane_meet_point(const Triangle& a, const Triangle& b, const RPoint& dir) {
  const RPoint na = xprod(a[1] - a[0], a[2] - a[0]);
  const RPoint nb = xprod(b[1] - b[0], b[2] - b[0]);
  const Rational rhs[3] = {dprod(na, a[0]), dprod(nb, b[0]), 0};
  const RPoint rows[3] = {na, nb, dir};
  Rational m[3][3];
  for (int i = 0; i < 3; ++i) m[i][0] = rows[i].x, m[i][1] = rows[i].y, m[i][2] = rows[i].z;
  const Rational d = det3(m);
  Rational sol[3];
  for (int c = 0; c < 3; ++c) {
    Rational mc[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mc[i][j] = j == c ? rhs[i] : m[i][j];
    sol[c] = det3(mc) / d;
  }
  return {sol[0], sol[1], sol[2]};
}

inline Triangle random_triangle(std::mt19937_64& rng, bool flat) {
  for (;;) {
    Triangle t{random_point(rng, 6, 3), random_point(rng, 6, 3), random_point(rng, 6, 3)};
    if (flat)
      for (auto& v : t) v.z = 0;
    const RPoint n = xprod(t[1] - t[0], t[2] - t[0]);
    if (n.x != 0 || n.y != 0 || n.z != 0) return t;
  }
}

/// Samples points where the intersection can live and compares exact
/// membership in both triangles with membership in the reported result.
/// Returns the number of disagreements.
inline int triangle_pair_disagreements(std::mt19937_64& rng, const Triangle& a, const Triangle& b, int samples) {
  const auto r_ab = masseylink::triangle_triangle(a, b);
  const auto r_ba = masseylink::triangle_triangle(b, a);
  const RPoint na = xprod(a[1] - a[0], a[2] - a[0]);
  const RPoint nb = xprod(b[1] - b[0], b[2] - b[0]);
  const RPoint dir = xprod(na, nb);
  std::uniform_int_distribution<int> unit(0, 1000);
  auto random_in = [&](const Triangle& t) {
    Rational u(unit(rng), 1000), v(unit(rng), 1000);
    if (u + v > 1) u = 1 - u, v = 1 - v;
    return t[0] + (t[1] - t[0]) * u + (t[2] - t[0]) * v;
  };
  std::vector<RPoint> pts;
  if (dir.x != 0 || dir.y != 0 || dir.z != 0) {
    const RPoint base = plane_meet_point(a, b, dir);
    const Rational dd = dprod(dir, dir);
    Rational lo, hi;
    bool first = true;
    for (const Triangle* t : {&a, &b})
      for (const auto& v : *t) {
        Rational s = dprod(dir, v - base) / dd;
        if (first || s < lo) lo = s;
        if (first || s > hi) hi = s;
        first = false;
      }
    for (int k = 0; k < samples; ++k) {
      Rational s = lo + (hi - lo) * Rational(unit(rng), 1000);
      pts.push_back(base + dir * s);
    }
  } else {
    for (int k = 0; k < samples; ++k) pts.push_back(random_in(k % 2 ? a : b));
  }
  for (const auto& p : r_ab.points) pts.push_back(p);
  int bad = 0;
  for (const auto& p : pts) {
    const bool truth = in_triangle(p, a) && in_triangle(p, b);
    if (truth != masseylink::intersection_contains(r_ab, p)) ++bad;
    if (truth != masseylink::intersection_contains(r_ba, p)) ++bad;
  }
  return bad;
}

}  // namespace testing_support
