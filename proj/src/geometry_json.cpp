#include "masseylink/geometry_json.hpp"

#include "masseylink/error.hpp"

namespace masseylink {

using nlohmann::json;

namespace {

std::string piece_kind(PieceKind k) {
  switch (k) {
    case PieceKind::InteriorArc:
      return "interior_arc";
    case PieceKind::AlongComponent:
      return "along_component";
    case PieceKind::Circle:
      return "circle";
  }
  return "";
}

json pierce_json(const PiercePoint& p) {
  return {{"component", p.component + 1}, {"label", p.label}, {"point", to_json(p.location)},
          {"segment", p.segment}, {"triangle", p.triangle}};
}

}  // namespace

json to_json(const RPoint& p) { return json::array({p.x.get_str(), p.y.get_str(), p.z.get_str()}); }

json to_json(const PLCurve& c) {
  json v = json::array();
  for (const auto& p : c.vertices) v.push_back(to_json(p));
  return {{"type", "curve"}, {"closed", c.closed}, {"vertices", v}};
}

json to_json(const PLSurface& s) {
  json v = json::array();
  for (const auto& p : s.vertices) v.push_back(to_json(p));
  return {{"type", "surface"}, {"vertices", v}, {"triangles", s.triangles}};
}

json to_json(const DerivedBoundary& b) {
  const int comps[2] = {b.a, b.b};
  json loops = json::array();
  for (size_t l = 0; l < b.loops.size(); ++l) {
    json pieces = json::array();
    for (const auto& piece : b.pieces[l]) {
      json entry = {{"kind", piece_kind(piece.kind)}, {"curve", to_json(piece.geometry)},
                    {"provenance", {b.a + 1, b.b + 1}}};
      if (piece.kind == PieceKind::AlongComponent) entry["component"] = comps[static_cast<int>(piece.side)] + 1;
      if (piece.curve >= 0) entry["intersection_curve"] = piece.curve;
      pieces.push_back(entry);
    }
    loops.push_back({{"curve", to_json(b.loops[l])}, {"pieces", pieces}});
  }
  json pierces = json::array();
  for (const auto& p : b.pierces_a) pierces.push_back(pierce_json(p));
  for (const auto& p : b.pierces_b) pierces.push_back(pierce_json(p));
  json curves = json::array();
  for (const auto& c : b.curves) {
    json entry = {{"kind", c.kind == CurveKind::Arc ? "arc" : "circle"}, {"curve", to_json(c.geometry)}};
    if (c.kind == CurveKind::Arc) {
      entry["start_component"] = comps[static_cast<int>(c.start_side)] + 1;
      entry["end_component"] = comps[static_cast<int>(c.end_side)] + 1;
    }
    curves.push_back(entry);
  }
  return {{"type", "derived_boundary"}, {"pair", {b.a + 1, b.b + 1}}, {"pierce_points", pierces},
          {"intersection_curves", curves}, {"loops", loops}};
}

json to_json(const EmbeddedLink& e) {
  json comps = json::array(), surfs = json::array(), heights = json::array();
  for (const auto& c : e.components) comps.push_back(to_json(c));
  for (const auto& s : e.surfaces) surfs.push_back(to_json(s));
  for (const auto& h : e.base_height) heights.push_back(h.get_str());
  return {{"type", "embedded_link"}, {"components", comps}, {"surfaces", surfs}, {"base_height", heights},
          {"tube_radius", e.tube_radius.get_str()}, {"seed", e.seed}, {"grid_scale", e.grid_scale}};
}

RPoint point_from_json(const json& j) {
  try {
    if (!j.is_array() || j.size() != 3) fail(ErrorKind::MalformedCode, "a point needs three coordinates");
    Rational c[3];
    for (int k = 0; k < 3; ++k) {
      c[k] = Rational(j[k].get<std::string>());
      c[k].canonicalize();
    }
    return {c[0], c[1], c[2]};
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::MalformedCode, "bad rational coordinate");
  } catch (const json::exception& err) {
    fail(ErrorKind::MalformedCode, err.what());
  }
}

PLCurve curve_from_json(const json& j) {
  PLCurve c;
  c.closed = j.value("closed", true);
  for (const auto& p : j.at("vertices")) c.vertices.push_back(point_from_json(p));
  return c;
}

PLSurface surface_from_json(const json& j) {
  PLSurface s;
  for (const auto& p : j.at("vertices")) s.vertices.push_back(point_from_json(p));
  s.triangles = j.at("triangles").get<std::vector<std::array<int, 3>>>();
  return s;
}

}  // namespace masseylink
