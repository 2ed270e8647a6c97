#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <numeric>

#include <Eigen/Sparse>

#include "masseylink/embed.hpp"
#include "masseylink/error.hpp"

namespace masseylink {

namespace {

struct HalfEdge {
  int crossing;
  int slot;
};

bool outgoing_at(const Crossing& x, int slot) { return slot == 2 || slot == x.over_out_slot; }

struct Graph {
  int num_crossings = 0;
  std::vector<int> labels;              // used strand labels
  std::map<int, int> label_index;
  int sub(int label, int end) const { return num_crossings + 2 * label_index.at(label) + end; }
  int num_vertices() const { return num_crossings + 2 * static_cast<int>(labels.size()); }
};

// Vertices met walking from crossing x out through slot k, up to and
// including the crossing at the far end; also returns the arrival half-edge.
std::pair<std::vector<int>, HalfEdge> walk(const LinkDiagram& d, const Graph& g, HalfEdge h) {
  const Crossing& x = d.crossings()[h.crossing];
  const int s = x.slots[h.slot];
  std::vector<int> path;
  int far;
  if (outgoing_at(x, h.slot)) {
    path = {g.sub(s, 0), g.sub(s, 1)};
    far = d.strand_head_crossing(s);
  } else {
    path = {g.sub(s, 1), g.sub(s, 0)};
    far = d.strand_tail_crossing(s);
  }
  const Crossing& y = d.crossings()[far];
  int j = -1;
  for (int k = 0; k < 4; ++k) {
    if (y.slots[k] != s) continue;
    if (far == h.crossing && k == h.slot) continue;
    if (outgoing_at(x, h.slot) == outgoing_at(y, k)) continue;
    j = k;
  }
  path.push_back(far);
  return {path, {far, j}};
}

int half(const Rational& x, const Rational& y) { return (sgn(y) < 0 || (sgn(y) == 0 && sgn(x) < 0)) ? 1 : 0; }

// Exact angular comparison of direction vectors.
bool angle_less(const Point2& a, const Point2& b) {
  const int ha = half(a.x, a.y), hb = half(b.x, b.y);
  if (ha != hb) return ha < hb;
  return sgn(a.x * b.y - a.y * b.x) > 0;
}

bool ccw_cyclic(const std::array<Point2, 4>& dirs) {
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return angle_less(dirs[i], dirs[j]); });
  for (int r = 0; r < 4; ++r) {
    bool ok = true;
    for (int k = 0; k < 4; ++k)
      if (order[(r + k) % 4] != k) ok = false;
    if (ok) return true;
  }
  return false;
}

Rational cross2(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  return sgn(cross2(a, b, p)) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int d1 = sgn(cross2(a, b, c)), d2 = sgn(cross2(a, b, d));
  const int d3 = sgn(cross2(c, d, a)), d4 = sgn(cross2(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

Rational point_segment_distance2(const Point2& p, const Point2& a, const Point2& b) {
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const Rational len2 = dx * dx + dy * dy;
  Rational t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  const Rational ex = a.x + t * dx - p.x, ey = a.y + t * dy - p.y;
  return ex * ex + ey * ey;
}

// Strands keep at least this squared separation in grid units, leaving room
// for dents and tubes.
const Rational kMinSeparation2 = 4096;

struct Piece {
  std::vector<int> crossings;
  std::vector<std::vector<int>> faces;  // vertex cycles
  std::vector<char> coherent;           // boundary runs along one orientation
};

}  // namespace

PlanarDrawing planar_drawing(const LinkDiagram& d, int grid_scale) {
  if (grid_scale < 1) fail(ErrorKind::InvalidArgument, "grid scale must be a positive integer");
  if (!d.is_planar()) fail(ErrorKind::NonRealizable, "diagram admits no planar realization");
  Graph g;
  g.num_crossings = d.num_crossings();
  for (int c = 0; c < d.num_components(); ++c)
    for (int s : d.strands_of(c)) {
      g.label_index[s] = static_cast<int>(g.labels.size());
      g.labels.push_back(s);
    }
  const int nv = g.num_vertices();

  // connected pieces of the crossing graph
  std::vector<int> piece_of(d.num_crossings());
  std::iota(piece_of.begin(), piece_of.end(), 0);
  std::function<int(int)> find = [&](int x) { return piece_of[x] == x ? x : piece_of[x] = find(piece_of[x]); };
  for (int s : g.labels) piece_of[find(d.strand_tail_crossing(s))] = find(d.strand_head_crossing(s));
  std::map<int, Piece> pieces;
  for (int x = 0; x < d.num_crossings(); ++x) pieces[find(x)].crossings.push_back(x);

  // faces: leave along a half-edge, arrive, turn to the next slot counterclockwise
  std::set<std::pair<int, int>> seen;
  for (int x = 0; x < d.num_crossings(); ++x)
    for (int k = 0; k < 4; ++k) {
      if (seen.count({x, k})) continue;
      std::vector<int> cycle;
      std::set<bool> directions;
      HalfEdge h{x, k};
      while (!seen.count({h.crossing, h.slot})) {
        seen.insert({h.crossing, h.slot});
        directions.insert(outgoing_at(d.crossings()[h.crossing], h.slot));
        cycle.push_back(h.crossing);
        auto [path, arrive] = walk(d, g, h);
        cycle.insert(cycle.end(), path.begin(), path.end() - 1);
        h = {arrive.crossing, (arrive.slot + 1) % 4};
      }
      std::vector<int> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::EmbeddingDegenerate,
             "diagram has a nugatory crossing or kink (a face touches itself); reduce it first");
      pieces[find(x)].faces.push_back(cycle);
      pieces[find(x)].coherent.push_back(directions.size() == 1);
    }

  std::vector<Point2> pos(nv);
  Rational offset_x = 0;
  const Rational gap = 64;
  for (auto& [root, piece] : pieces) {
    // stellate every face, pin one triangle, barycentric placement
    std::vector<std::vector<int>> adj(nv);
    auto link = [&](int a, int b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    };
    std::vector<int> local;
    for (int x : piece.crossings) local.push_back(x);
    std::set<int> seen_labels;
    for (int x : piece.crossings)
      for (int s : d.crossings()[x].slots) {
        if (!seen_labels.insert(s).second) continue;
        local.push_back(g.sub(s, 0));
        local.push_back(g.sub(s, 1));
        link(d.strand_tail_crossing(s), g.sub(s, 0));
        link(g.sub(s, 0), g.sub(s, 1));
        link(g.sub(s, 1), d.strand_head_crossing(s));
      }
    const int base_centers = static_cast<int>(adj.size());
    size_t outer = 0;
    for (size_t f = 0; f < piece.faces.size(); ++f) {
      // prefer a face bounded by a single Seifert circle, then the largest
      if (std::pair(piece.coherent[f], piece.faces[f].size()) > std::pair(piece.coherent[outer], piece.faces[outer].size()))
        outer = f;
      adj.emplace_back();
      const int c = static_cast<int>(adj.size()) - 1;
      for (int v : piece.faces[f]) link(c, v);
      local.push_back(c);
    }
    const int total = static_cast<int>(adj.size());
    std::vector<double> px(total, 0), py(total, 0);
    std::vector<char> pinned(total, 0);
    const int t0 = base_centers + static_cast<int>(outer), t1 = piece.faces[outer][1], t2 = piece.faces[outer][2];
    px[t0] = 0, py[t0] = 0, pinned[t0] = 1;
    px[t1] = 1, py[t1] = 0, pinned[t1] = 1;
    px[t2] = 0.5, py[t2] = 0.8660254037844386, pinned[t2] = 1;
    std::map<int, int> unknown;
    for (int v : local)
      if (!pinned[v]) unknown.emplace(v, static_cast<int>(unknown.size()));
    const int m = static_cast<int>(unknown.size());
    if (m > 0) {
      Eigen::SparseMatrix<double> lap(m, m);
      std::vector<Eigen::Triplet<double>> trip;
      Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
      for (auto [v, i] : unknown) {
        trip.emplace_back(i, i, static_cast<double>(adj[v].size()));
        for (int w : adj[v]) {
          if (pinned[w]) {
            bx[i] += px[w];
            by[i] += py[w];
          } else {
            trip.emplace_back(i, unknown.at(w), -1.0);
          }
        }
      }
      lap.setFromTriplets(trip.begin(), trip.end());
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
      if (solver.info() != Eigen::Success) fail(ErrorKind::EmbeddingDegenerate, "barycentric system is singular");
      Eigen::VectorXd sx = solver.solve(bx), sy = solver.solve(by);
      for (auto [v, i] : unknown) px[v] = sx[i], py[v] = sy[i];
    }
    // the drawing must reproduce the counterclockwise slot order
    auto dirs_at = [&](int x, auto&& coord) {
      std::array<Point2, 4> dirs;
      for (int k = 0; k < 4; ++k) {
        const int first = walk(d, g, {x, k}).first.front();
        dirs[k] = {coord(first).x - coord(x).x, coord(first).y - coord(x).y};
      }
      return dirs;
    };
    bool mirrored = false;
    std::vector<int> drawn;
    for (int v : local)
      if (v < base_centers) drawn.push_back(v);
    bool placed = false;
    for (double scale = 1024; scale <= 1e15 && !placed; scale *= 2) {
      for (int v : drawn)
        pos[v] = {Rational(static_cast<long>(std::llround(px[v] * scale * (mirrored ? -1 : 1)))), Rational(static_cast<long>(std::llround(py[v] * scale)))};
      auto coord = [&](int v) -> const Point2& { return pos[v]; };
      if (!mirrored && !ccw_cyclic(dirs_at(piece.crossings[0], coord))) {
        mirrored = true;
        scale /= 2;
        continue;
      }
      bool ok = true;
      std::set<std::pair<Rational, Rational>> distinct;
      for (int v : drawn) ok &= distinct.insert({pos[v].x, pos[v].y}).second;
      for (int x : piece.crossings) ok = ok && ccw_cyclic(dirs_at(x, coord));
      for (int v : drawn)
        for (int w : adj[v])
          if (w < base_centers)
            ok = ok && (pos[v].x - pos[w].x) * (pos[v].x - pos[w].x) + (pos[v].y - pos[w].y) * (pos[v].y - pos[w].y) >=
                           kMinSeparation2;
      std::vector<std::pair<int, int>> segs;
      for (int v : drawn)
        for (int w : adj[v])
          if (w < base_centers && v < w) segs.push_back({v, w});
      for (size_t i = 0; ok && i < segs.size(); ++i)
        for (size_t j = i + 1; ok && j < segs.size(); ++j) {
          auto [a, b] = segs[i];
          auto [c, e] = segs[j];
          const bool share = a == c || a == e || b == c || b == e;
          if (!share) {
            ok = !segments_meet(pos[a], pos[b], pos[c], pos[e]) &&
                 std::min({point_segment_distance2(pos[a], pos[c], pos[e]), point_segment_distance2(pos[b], pos[c], pos[e]),
                           point_segment_distance2(pos[c], pos[a], pos[b]), point_segment_distance2(pos[e], pos[a], pos[b])}) >=
                     kMinSeparation2;
          } else {
            const int common = (a == c || a == e) ? a : b;
            const int p = a == common ? b : a, q = c == common ? e : c;
            // sharing an endpoint: must not fold back onto each other
            ok = !(sgn(cross2(pos[common], pos[p], pos[q])) == 0 &&
                   sgn((pos[p].x - pos[common].x) * (pos[q].x - pos[common].x) +
                       (pos[p].y - pos[common].y) * (pos[q].y - pos[common].y)) > 0);
          }
        }
      placed = ok;
    }
    if (!placed) fail(ErrorKind::EmbeddingDegenerate, "could not snap the drawing to a grid");
    Rational minx = pos[drawn[0]].x, miny = pos[drawn[0]].y, maxx = minx;
    for (int v : drawn) {
      minx = std::min(minx, pos[v].x);
      maxx = std::max(maxx, pos[v].x);
      miny = std::min(miny, pos[v].y);
    }
    for (int v : drawn) pos[v] = {pos[v].x - minx + offset_x, pos[v].y - miny};
    offset_x += maxx - minx + gap;
  }

  PlanarDrawing out;
  const Rational gs = grid_scale;
  auto scaled = [&](const Point2& p) { return Point2{p.x * gs, p.y * gs}; };
  for (int x = 0; x < d.num_crossings(); ++x) out.crossing_points.push_back(scaled(pos[x]));
  int max_label = 0;
  for (int s : g.labels) max_label = std::max(max_label, s);
  out.strand_points.resize(max_label + 1);
  for (int s : g.labels) out.strand_points[s] = {scaled(pos[g.sub(s, 0)]), scaled(pos[g.sub(s, 1)])};
  const Rational side = 256;
  for (int c = 0; c < d.num_components(); ++c) {
    std::vector<Point2> poly;
    std::vector<int> at;
    const auto& strands = d.strands_of(c);
    if (strands.empty()) {
      // crossingless: a square to the right of everything drawn so far
      for (auto [dx, dy] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
        poly.push_back(scaled({offset_x + side * dx, side * dy}));
        at.push_back(-1);
      }
      offset_x += side + gap;
    } else {
      for (int s : strands) {
        const int x = d.strand_tail_crossing(s);
        poly.push_back(out.crossing_points[x]);
        at.push_back(x);
        poly.push_back(out.strand_points[s][0]);
        at.push_back(-1);
        poly.push_back(out.strand_points[s][1]);
        at.push_back(-1);
      }
    }
    out.polygons.push_back(std::move(poly));
    out.polygon_crossing.push_back(std::move(at));
  }
  return out;
}

}  // namespace masseylink
