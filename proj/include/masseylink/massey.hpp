#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "masseylink/diagram.hpp"
#include "masseylink/embed.hpp"
#include "masseylink/trace.hpp"

namespace masseylink {

/// Normal direction used to push arcs of K_i onto its tube.
struct PushoffFraming {
  int rotation = 0;         // quarter turns from the vertical (blackboard) direction
  int meridian_twists = 0;  // extra turns around K_i at the first pushed arc
  int longitude_copies = 0; // extra closed parallel copies of K_i
};

struct MasseyResult {
  std::array<int, 3> ordering{};
  long long term_first = 0;
  long long term_second = 0;
  long long value = 0;
  DerivedBoundary boundary_jk;
  DerivedBoundary boundary_ij;
  int seed = 0;
};

/// Third-order linking number of (K_i, K_j, K_k), 0-based indices.
MasseyResult massey3(const EmbeddedLink& e, const std::array<int, 3>& ordering, const PushoffFraming& framing = {});
/// Builds the embedding and retries once with the next perturbation seed on NotGeneric.
MasseyResult massey3(const LinkDiagram& d, const std::array<int, 3>& ordering, const EmbedOptions& options = {});

/// Count of loops against a surface (lk with its boundary).
long long first_term(const DerivedBoundary& boundary_jk, const PLSurface& fi);

/// Pushoffs onto T_i of the pieces of a derived boundary that run along K_i.
std::vector<PLCurve> tube_pushoffs(const EmbeddedLink& e, const DerivedBoundary& boundary, int i,
                                   const PushoffFraming& framing = {});
/// Signed count of the pushed arcs against F_k.
long long second_term(const EmbeddedLink& e, const DerivedBoundary& boundary_ij, int i, const PLSurface& fk,
                      const PushoffFraming& framing = {});

/// Surfaces the fourth-order formula needs beyond the F_i. Keys are names
/// like "C_12" or "C_234" built from 1-based component numbers.
using SurfaceProvider = std::function<std::optional<PLSurface>(const std::string& name)>;

enum class PlanStatus { Computed, Unsupported };

struct FourthOrderTerm {
  std::string formula;   // e.g. "#(T_1 ∩ F_1 ∩ C_234)"
  std::vector<std::string> surfaces;  // derived surfaces involved
  std::optional<long long> value;
};

struct FourthOrderPlan {
  std::array<int, 4> ordering{};
  std::vector<std::string> required_boundaries;  // C_12, C_23, C_34, C_123, C_234 in component numbers
  std::array<FourthOrderTerm, 3> terms;
  PlanStatus status = PlanStatus::Unsupported;
  std::string reason;
  std::optional<long long> value;
};

FourthOrderPlan massey4(const EmbeddedLink& e, const std::array<int, 4>& ordering, const SurfaceProvider& provider = {});

}  // namespace masseylink
