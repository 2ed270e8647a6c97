#pragma once

#include <json.hpp>

#include "masseylink/embed.hpp"
#include "masseylink/plgeom.hpp"
#include "masseylink/trace.hpp"

namespace masseylink {

/// Geometry dump format. Coordinates are exact rationals written as strings
/// ("p" or "p/q"); component numbers are 1-based.
///   curve:    {"type":"curve","closed":b,"vertices":[[x,y,z],...]}
///   surface:  {"type":"surface","vertices":[...],"triangles":[[a,b,c],...]}
///   boundary: {"type":"derived_boundary","pair":[a,b],"pierce_points":[...],
///              "loops":[{"curve":curve,"pieces":[{"kind":...,"curve":curve,...}]}]}
///   link:     {"type":"embedded_link","components":[curve],"surfaces":[surface],...}
nlohmann::json to_json(const RPoint& p);
nlohmann::json to_json(const PLCurve& c);
nlohmann::json to_json(const PLSurface& s);
nlohmann::json to_json(const DerivedBoundary& b);
nlohmann::json to_json(const EmbeddedLink& e);

RPoint point_from_json(const nlohmann::json& j);
PLCurve curve_from_json(const nlohmann::json& j);
PLSurface surface_from_json(const nlohmann::json& j);

}  // namespace masseylink
