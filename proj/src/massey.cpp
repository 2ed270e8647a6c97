#include "masseylink/massey.hpp"

#include <set>

#include "masseylink/error.hpp"

namespace masseylink {

namespace {

void check_indices(const EmbeddedLink& e, const std::vector<int>& idx) {
  const int n = static_cast<int>(e.components.size());
  std::set<int> seen;
  for (int i : idx) {
    if (i < 0 || i >= n) fail(ErrorKind::UnknownComponent, "component " + std::to_string(i + 1) + " does not exist");
    if (!seen.insert(i).second) fail(ErrorKind::InvalidArgument, "ordering repeats a component");
  }
}

void require_unlinked(const EmbeddedLink& e, const std::vector<int>& idx) {
  for (int a : idx)
    for (int b : idx)
      if (a < b) {
        const int lk = curve_surface_count(e.components[a], e.surfaces[b]);
        if (lk != 0)
          fail(ErrorKind::MasseyUndefined, "lk(K_" + std::to_string(a + 1) + ", K_" + std::to_string(b + 1) +
                                               ") = " + std::to_string(lk) + " is not zero");
      }
}

std::string name_of(std::initializer_list<int> comps) {
  std::string s = "C_";
  for (int c : comps) s += std::to_string(c + 1);
  return s;
}

// Normal directions around K_i at a vertex: up, -side, down, side.
std::array<RPoint, 4> axes(const EmbeddedLink& e, int i, int v) {
  const auto d = tube_frame(e, i, v);
  const Rational half(1, 2);
  return {(d[0] + d[1]) * half, (d[1] + d[2]) * half, (d[2] + d[3]) * half, (d[3] + d[0]) * half};
}

RPoint offset_at(const EmbeddedLink& e, int i, int segment, const Rational& t, int rotation) {
  const int n = e.components[i].num_segments();
  const int r = ((rotation % 4) + 4) % 4;
  return lerp(axes(e, i, segment)[r], axes(e, i, (segment + 1) % n)[r], t);
}

// Locates a point of K_i: segment and parameter.
std::pair<int, Rational> locate(const PLCurve& k, const RPoint& p) {
  for (int s = 0; s < k.num_segments(); ++s) {
    auto [a, b] = k.segment(s);
    if (!point_on_segment(p, a, b)) continue;
    const RPoint d = b - a;
    return {s, dot(p - a, d) / dot(d, d)};
  }
  fail(ErrorKind::StuckTrace, "pushoff point is not on the component");
}

PLCurve push_piece(const EmbeddedLink& e, int i, const PLCurve& piece, const PushoffFraming& framing, int twists) {
  const PLCurve& k = e.components[i];
  PLCurve out;
  out.closed = false;
  const RPoint& first = piece.vertices.front();
  out.vertices.push_back(first);
  auto [s0, t0] = locate(k, first);
  out.vertices.push_back(first + offset_at(e, i, s0, t0, framing.rotation));
  for (int w = 0; w < std::abs(twists); ++w)
    for (int q = 1; q <= 4; ++q)
      out.vertices.push_back(first + offset_at(e, i, s0, t0, framing.rotation + (twists > 0 ? q : -q)));
  for (size_t v = 1; v + 1 < piece.vertices.size(); ++v) {
    // interior vertices of an along-component piece are vertices of K_i
    auto [s, t] = locate(k, piece.vertices[v]);
    out.vertices.push_back(piece.vertices[v] + offset_at(e, i, s, t, framing.rotation));
  }
  const RPoint& last = piece.vertices.back();
  auto [s1, t1] = locate(k, last);
  out.vertices.push_back(last + offset_at(e, i, s1, t1, framing.rotation));
  out.vertices.push_back(last);
  return out;
}

}  // namespace

long long first_term(const DerivedBoundary& boundary_jk, const PLSurface& fi) {
  long long sum = 0;
  for (const auto& loop : boundary_jk.loops) sum += curve_surface_count(loop, fi);
  return sum;
}

std::vector<PLCurve> tube_pushoffs(const EmbeddedLink& e, const DerivedBoundary& boundary, int i,
                                   const PushoffFraming& framing) {
  check_tube(e, i);
  const Side side = boundary.a == i ? Side::A : Side::B;
  if (boundary.a != i && boundary.b != i) fail(ErrorKind::InvalidArgument, "boundary does not involve the component");
  std::vector<PLCurve> out;
  bool twisted = false;
  for (const auto& loop : boundary.pieces)
    for (const auto& piece : loop) {
      if (piece.kind != PieceKind::AlongComponent || piece.side != side) continue;
      out.push_back(push_piece(e, i, piece.geometry, framing, twisted ? 0 : framing.meridian_twists));
      twisted = true;
    }
  const PLCurve& k = e.components[i];
  for (int c = 0; c < std::abs(framing.longitude_copies); ++c) {
    PLCurve copy;
    for (int v = 0; v < static_cast<int>(k.vertices.size()); ++v)
      copy.vertices.push_back(k.vertices[v] + offset_at(e, i, v, 0, framing.rotation));
    out.push_back(framing.longitude_copies > 0 ? copy : copy.reversed());
  }
  return out;
}

long long second_term(const EmbeddedLink& e, const DerivedBoundary& boundary_ij, int i, const PLSurface& fk,
                      const PushoffFraming& framing) {
  long long sum = 0;
  for (const auto& arc : tube_pushoffs(e, boundary_ij, i, framing)) sum += curve_surface_count(arc, fk);
  return sum;
}

MasseyResult massey3(const EmbeddedLink& e, const std::array<int, 3>& ordering, const PushoffFraming& framing) {
  const auto [i, j, k] = ordering;
  check_indices(e, {i, j, k});
  require_unlinked(e, {i, j, k});
  MasseyResult r;
  r.ordering = ordering;
  r.seed = e.seed;
  r.boundary_jk = trace_derived_boundary(e, j, k);
  r.boundary_ij = trace_derived_boundary(e, i, j);
  r.term_first = first_term(r.boundary_jk, e.surfaces[i]);
  r.term_second = second_term(e, r.boundary_ij, i, e.surfaces[k], framing);
  r.value = r.term_first + r.term_second;
  return r;
}

MasseyResult massey3(const LinkDiagram& d, const std::array<int, 3>& ordering, const EmbedOptions& options) {
  for (int c : ordering)
    if (c < 0 || c >= d.num_components())
      fail(ErrorKind::UnknownComponent, "component " + std::to_string(c + 1) + " does not exist");
  for (int a : ordering)
    for (int b : ordering)
      if (a < b && linking_number(d, a, b) != 0)
        fail(ErrorKind::MasseyUndefined, "lk(K_" + std::to_string(a + 1) + ", K_" + std::to_string(b + 1) + ") = " +
                                             std::to_string(linking_number(d, a, b)) + " is not zero");
  EmbedOptions opts = options;
  for (int attempt = 0;; ++attempt) {
    try {
      const EmbeddedLink e = build_embedding(d, opts);
      return massey3(e, ordering);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotGeneric || attempt >= 1) throw;
      opts.seed = opts.seed + 1;
    }
  }
}

FourthOrderPlan massey4(const EmbeddedLink& e, const std::array<int, 4>& ordering, const SurfaceProvider& provider) {
  const auto [i, j, k, l] = ordering;
  check_indices(e, {i, j, k, l});
  require_unlinked(e, {i, j, k, l});
  for (const auto& triple : {std::array{i, j, k}, std::array{i, j, l}, std::array{i, k, l}, std::array{j, k, l}}) {
    const MasseyResult m = massey3(e, triple);
    if (m.value != 0)
      fail(ErrorKind::MasseyUndefined, "third-order linking of (" + std::to_string(triple[0] + 1) + "," +
                                           std::to_string(triple[1] + 1) + "," + std::to_string(triple[2] + 1) +
                                           ") is " + std::to_string(m.value));
  }
  FourthOrderPlan plan;
  plan.ordering = ordering;
  const std::string c_ij = name_of({i, j}), c_jk = name_of({j, k}), c_kl = name_of({k, l});
  const std::string c_ijk = name_of({i, j, k}), c_jkl = name_of({j, k, l});
  plan.required_boundaries = {c_ij, c_jk, c_kl, c_ijk, c_jkl};
  const std::string ti = "T_" + std::to_string(i + 1);
  plan.terms[0] = {"#(" + ti + " ∩ F_" + std::to_string(i + 1) + " ∩ " + c_jkl + ")", {c_jkl}, std::nullopt};
  plan.terms[1] = {"#(" + ti + " ∩ " + c_ij + " ∩ " + c_kl + ")", {c_ij, c_kl}, std::nullopt};
  plan.terms[2] = {"#(" + ti + " ∩ " + c_ijk + " ∩ F_" + std::to_string(l + 1) + ")", {c_ijk}, std::nullopt};

  const DerivedBoundary b_ij = trace_derived_boundary(e, i, j);
  const DerivedBoundary b_jk = trace_derived_boundary(e, j, k);
  const DerivedBoundary b_kl = trace_derived_boundary(e, k, l);
  // an empty derived boundary is spanned by the empty surface
  const bool empty_ij = b_ij.loops.empty(), empty_jk = b_jk.loops.empty(), empty_kl = b_kl.loops.empty();
  const bool empty_ijk = empty_ij && empty_jk, empty_jkl = empty_jk && empty_kl;
  std::vector<std::string> missing;
  auto fetch = [&](const std::string& name) -> std::optional<PLSurface> {
    std::optional<PLSurface> s = provider ? provider(name) : std::nullopt;
    if (!s) missing.push_back(name + " spanning surface required");
    return s;
  };
  check_tube(e, i);

  if (empty_jkl) {
    plan.terms[0].value = 0;
  } else if (auto s = fetch(c_jkl)) {
    PushoffFraming none;
    DerivedBoundary whole;  // T_i ∩ F_i is a parallel copy of K_i
    none.longitude_copies = 1;
    whole.a = i;
    whole.b = i;
    long long sum = 0;
    for (const auto& c : tube_pushoffs(e, whole, i, none)) sum += curve_surface_count(c, *s);
    plan.terms[0].value = sum;
  }
  if (empty_ij || empty_kl) {
    plan.terms[1].value = 0;
  } else if (auto s = fetch(c_kl)) {
    plan.terms[1].value = second_term(e, b_ij, i, *s);
  }
  if (empty_ijk) {
    plan.terms[2].value = 0;
  } else if (auto s = fetch(c_ijk)) {
    // pieces of its boundary running along K_i, pushed onto T_i
    DerivedBoundary along;
    along.a = i;
    along.b = -1;
    for (const PLCurve& loop : s->boundary()) {
      PLCurve run;
      run.closed = false;
      std::vector<BoundaryPiece> pieces;
      auto flush = [&]() {
        if (run.vertices.size() >= 2) {
          BoundaryPiece piece;
          piece.kind = PieceKind::AlongComponent;
          piece.side = Side::A;
          piece.geometry = run;
          pieces.push_back(piece);
        }
        run.vertices.clear();
      };
      const int n = loop.num_segments();
      for (int q = 0; q < n; ++q) {
        auto [p0, p1] = loop.segment(q);
        bool on = false;
        for (int t = 0; t < e.components[i].num_segments() && !on; ++t) {
          auto [a, b] = e.components[i].segment(t);
          on = point_on_segment(p0, a, b) && point_on_segment(p1, a, b);
        }
        if (!on) {
          flush();
          continue;
        }
        if (run.vertices.empty()) run.vertices.push_back(p0);
        run.vertices.push_back(p1);
      }
      flush();
      along.pieces.push_back(std::move(pieces));
    }
    plan.terms[2].value = second_term(e, along, i, e.surfaces[l]);
  }

  if (missing.empty()) {
    plan.status = PlanStatus::Computed;
    plan.value = *plan.terms[0].value + *plan.terms[1].value + *plan.terms[2].value;
  } else {
    plan.status = PlanStatus::Unsupported;
    for (size_t m = 0; m < missing.size(); ++m) plan.reason += (m ? "; " : "") + missing[m];
  }
  return plan;
}

}  // namespace masseylink
