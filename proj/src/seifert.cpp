#include <map>

#include "masseylink/embed.hpp"

namespace masseylink {

namespace {

// Strand that continues s after smoothing the crossing at its head.
int smoothed_successor(const LinkDiagram& d, int s) {
  const Crossing& x = d.crossings()[d.strand_head_crossing(s)];
  return s == x.under_in() ? x.over_out() : x.under_out();
}

bool contains(const std::vector<Point2>& poly, const Point2& p) {
  bool inside = false;
  for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point2& a = poly[i];
    const Point2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

template <class Next>
std::vector<SeifertCircle> trace_circles(const LinkDiagram& d, const std::vector<int>& strands, Next next) {
  std::vector<SeifertCircle> out;
  std::map<int, bool> used;
  for (int s : strands) {
    if (used[s]) continue;
    SeifertCircle c;
    c.component = d.component_of_strand(s);
    for (int t = s; !used[t]; t = next(t)) {
      used[t] = true;
      c.strands.push_back(t);
      if (d.component_of_strand(t) != c.component) c.component = -1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

void assign_depths(std::vector<SeifertCircle>& circles, const PlanarDrawing& p,
                   const std::vector<std::vector<Point2>>& polys) {
  for (size_t i = 0; i < circles.size(); ++i) {
    const Point2 probe = polys[i].size() >= 2
                             ? Point2{(polys[i][0].x + polys[i][1].x) / 2, (polys[i][0].y + polys[i][1].y) / 2}
                             : polys[i][0];
    circles[i].depth = 0;
    for (size_t j = 0; j < circles.size(); ++j)
      if (j != i && contains(polys[j], probe)) ++circles[i].depth;
  }
  (void)p;
}

std::vector<std::vector<Point2>> circle_polygons(const LinkDiagram& d, const PlanarDrawing& p,
                                                 const std::vector<SeifertCircle>& circles) {
  std::vector<std::vector<Point2>> out;
  for (const auto& c : circles) {
    std::vector<Point2> poly;
    if (c.strands.empty()) {
      poly = p.polygons[c.component];
    } else {
      for (int s : c.strands) {
        poly.push_back(p.strand_points[s][0]);
        poly.push_back(p.strand_points[s][1]);
      }
    }
    out.push_back(std::move(poly));
  }
  (void)d;
  return out;
}

int circle_of(const std::vector<SeifertCircle>& circles, int strand) {
  for (size_t i = 0; i < circles.size(); ++i)
    for (int s : circles[i].strands)
      if (s == strand) return static_cast<int>(i);
  return -1;
}

}  // namespace

SeifertStructure seifert_circles(const LinkDiagram& d) {
  const PlanarDrawing p = planar_drawing(d);
  SeifertStructure out;
  std::vector<int> all;
  for (int c = 0; c < d.num_components(); ++c)
    for (int s : d.strands_of(c)) all.push_back(s);
  out.circles = trace_circles(d, all, [&](int s) { return smoothed_successor(d, s); });
  for (int c = 0; c < d.num_components(); ++c)
    if (d.strands_of(c).empty()) out.circles.push_back({{}, 0, c});
  assign_depths(out.circles, p, circle_polygons(d, p, out.circles));
  for (int x = 0; x < d.num_crossings(); ++x) {
    const Crossing& c = d.crossings()[x];
    out.bands.push_back({x, c.sign, circle_of(out.circles, c.under_in()), circle_of(out.circles, c.over_in())});
  }

  for (int comp = 0; comp < d.num_components(); ++comp) {
    const auto& strands = d.strands_of(comp);
    std::vector<SeifertCircle> circles;
    if (strands.empty()) {
      circles.push_back({{}, 0, comp});
    } else {
      circles = trace_circles(d, strands, [&](int s) {
        const Crossing& x = d.crossings()[d.strand_head_crossing(s)];
        return x.over_component == x.under_component ? smoothed_successor(d, s) : d.next_strand(s);
      });
    }
    assign_depths(circles, p, circle_polygons(d, p, circles));
    std::vector<SeifertBand> bands;
    for (int x : d.self_crossings(comp)) {
      const Crossing& c = d.crossings()[x];
      bands.push_back({x, c.sign, circle_of(circles, c.under_in()), circle_of(circles, c.over_in())});
    }
    out.euler_characteristic.push_back(static_cast<int>(circles.size()) - static_cast<int>(bands.size()));
    out.component_circles.push_back(std::move(circles));
    out.component_bands.push_back(std::move(bands));
  }
  return out;
}

}  // namespace masseylink
