#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "masseylink/chains.hpp"
#include "masseylink/diagram.hpp"
#include "masseylink/embed.hpp"
#include "masseylink/error.hpp"
#include "masseylink/geometry_json.hpp"
#include "masseylink/magnus.hpp"
#include "masseylink/massey.hpp"
#include "masseylink/trace.hpp"

using namespace masseylink;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string input_path, code, fixture;
  int grid_scale = 1;
  int seed = 0;
  bool dump_trace = false;
  bool geometry = false;
  std::vector<int> pair, order, indices;
  std::string complex_name;
  unsigned long long chain_seed = 1;
  int cases = 200;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCode:
    case ErrorKind::InconsistentDiagram:
    case ErrorKind::NonRealizable:
    case ErrorKind::UnknownComponent:
    case ErrorKind::InvalidArgument:
      return 1;
    case ErrorKind::MasseyUndefined:
    case ErrorKind::PairwiseLinkingNonzero:
    case ErrorKind::NonzeroLinking:
      return 2;
    default:
      return 3;
  }
}

std::string fixture_root() {
  const char* root = std::getenv("MASSEYLINK_FIXTURES");
  return root ? root : MASSEYLINK_FIXTURE_DIR;
}

LinkDiagram load(const RunConfig& c) {
  const int sources = !c.input_path.empty() + !c.code.empty() + !c.fixture.empty();
  if (sources != 1) fail(ErrorKind::InvalidArgument, "give exactly one of --input, --code, --fixture");
  if (!c.input_path.empty()) return read_diagram_file(c.input_path);
  if (!c.fixture.empty()) return read_diagram_file(fixture_root() + "/" + c.fixture + ".json");
  const auto first = c.code.find_first_not_of(" \t\r\n");
  const char lead = first == std::string::npos ? ' ' : c.code[first];
  if (lead == '{' || lead == 'X' || lead == 'P') return parse_pd(c.code);
  return parse_gauss(c.code);
}

std::vector<int> zero_based(const std::vector<int>& one_based, size_t expected, const LinkDiagram& d,
                            const std::string& flag) {
  if (one_based.size() != expected)
    fail(ErrorKind::InvalidArgument, flag + " needs " + std::to_string(expected) + " comma-separated components");
  std::vector<int> out;
  for (int v : one_based) {
    if (v < 1 || v > d.num_components())
      fail(ErrorKind::UnknownComponent, "component " + std::to_string(v) + " does not exist");
    if (std::find(out.begin(), out.end(), v - 1) != out.end())
      fail(ErrorKind::InvalidArgument, flag + " repeats a component");
    out.push_back(v - 1);
  }
  return out;
}

EmbedOptions embed_options(const RunConfig& c) {
  EmbedOptions o;
  o.grid_scale = c.grid_scale;
  o.seed = c.seed;
  return o;
}

json seifert_json(const SeifertStructure& s) {
  auto circles = [](const std::vector<SeifertCircle>& cs) {
    json out = json::array();
    for (const auto& c : cs)
      out.push_back({{"strands", c.strands},
                     {"depth", c.depth},
                     {"component", c.component >= 0 ? json(c.component + 1) : json(nullptr)}});
    return out;
  };
  auto bands = [](const std::vector<SeifertBand>& bs) {
    json out = json::array();
    for (const auto& b : bs)
      out.push_back({{"crossing", b.crossing}, {"sign", b.sign}, {"circles", {b.circle_a, b.circle_b}}});
    return out;
  };
  json per = json::array();
  for (size_t i = 0; i < s.component_circles.size(); ++i)
    per.push_back({{"component", i + 1},
                   {"circles", circles(s.component_circles[i])},
                   {"bands", bands(s.component_bands[i])},
                   {"euler_characteristic", s.euler_characteristic[i]}});
  return {{"circles", circles(s.circles)}, {"bands", bands(s.bands)}, {"components", per}};
}

json trace_summary(const DerivedBoundary& b) {
  int arcs = 0, circles = 0;
  for (const auto& c : b.curves) (c.kind == CurveKind::Arc ? arcs : circles)++;
  auto labels = [](const std::vector<PiercePoint>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p.label);
    return out;
  };
  return {{"pair", {b.a + 1, b.b + 1}}, {"pierce_labels", {labels(b.pierces_a), labels(b.pierces_b)}},
          {"arcs", arcs}, {"circles", circles}, {"loops", b.loops.size()}};
}

json run(const std::string& command, const RunConfig& c) {
  json out = {{"schema_version", kSchemaVersion}, {"command", command}};
  if (command == "chains-verify") {
    std::vector<std::string> names = c.complex_name.empty() ? chains::complex_names() : std::vector{c.complex_name};
    json reports = json::array();
    bool pass = true;
    for (const auto& name : names) {
      json ids = json::array();
      for (const auto& r : chains::run_identity_suite(name, c.chain_seed, c.cases)) {
        ids.push_back({{"identity", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.failures == 0}});
        pass = pass && r.failures == 0;
      }
      reports.push_back({{"complex", name}, {"identities", ids}});
    }
    out["complexes"] = reports;
    out["pass"] = pass;
    return out;
  }
  const LinkDiagram d = load(c);
  out["components"] = d.num_components();
  if (command == "lk") {
    out["lk"] = linking_matrix(d);
  } else if (command == "seifert") {
    out["seifert"] = seifert_json(seifert_circles(d));
  } else if (command == "milnor") {
    const auto idx = zero_based(c.indices, 3, d, "--indices");
    out["indices"] = c.indices;
    out["mu"] = milnor_mu(d, {idx[0], idx[1], idx[2]});
  } else if (command == "trace") {
    const auto p = zero_based(c.pair, 2, d, "--pair");
    const EmbeddedLink e = build_embedding(d, embed_options(c));
    const DerivedBoundary b = trace_derived_boundary(e, p[0], p[1]);
    out["trace"] = trace_summary(b);
    out["seed"] = e.seed;
    if (c.dump_trace) out["trace_dump"] = to_json(b);
    if (c.geometry) out["geometry"] = to_json(e);
  } else if (command == "massey3") {
    const auto o = zero_based(c.order, 3, d, "--order");
    const MasseyResult r = massey3(d, {o[0], o[1], o[2]}, embed_options(c));
    out["ordering"] = c.order;
    out["term_first"] = r.term_first;
    out["term_second"] = r.term_second;
    out["value"] = r.value;
    out["seed"] = r.seed;
    if (c.dump_trace) out["trace_dump"] = {to_json(r.boundary_jk), to_json(r.boundary_ij)};
    if (c.geometry) {
      EmbedOptions opts = embed_options(c);
      opts.seed = r.seed;
      out["geometry"] = to_json(build_embedding(d, opts));
    }
  } else if (command == "massey4") {
    const auto o = zero_based(c.order, 4, d, "--order");
    const EmbeddedLink e = build_embedding(d, embed_options(c));
    const FourthOrderPlan plan = massey4(e, {o[0], o[1], o[2], o[3]});
    out["ordering"] = c.order;
    out["required_boundaries"] = plan.required_boundaries;
    json terms = json::array();
    for (const auto& t : plan.terms)
      terms.push_back({{"formula", t.formula}, {"surfaces", t.surfaces},
                       {"value", t.value ? json(*t.value) : json(nullptr)}});
    out["terms"] = terms;
    out["status"] = plan.status == PlanStatus::Computed ? "computed" : "unsupported";
    if (plan.status == PlanStatus::Unsupported) out["reason"] = plan.reason;
    out["value"] = plan.value ? json(*plan.value) : json(nullptr);
    out["seed"] = e.seed;
    if (c.geometry) out["geometry"] = to_json(e);
  }
  return out;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"schema_version", kSchemaVersion}, {"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Massey higher-order linking numbers of link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--input", c.input_path, "Diagram file (PD JSON, PD text or Gauss code)");
  app.add_option("--code", c.code, "Inline PD or Gauss code");
  app.add_option("--fixture", c.fixture, "Bundled fixture name (root overridable by MASSEYLINK_FIXTURES)");
  app.add_option("--grid-scale", c.grid_scale, "Positive integer scale of all coordinates")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Perturbation seed index")->check(CLI::NonNegativeNumber);
  app.add_flag("--dump-trace", c.dump_trace, "Include derived boundaries as geometry JSON");
  app.add_flag("--geometry", c.geometry, "Include the embedded link as geometry JSON");

  app.add_subcommand("lk", "Linking matrix");
  app.add_subcommand("seifert", "Seifert circles and bands");
  app.add_subcommand("trace", "Derived boundary of a component pair")
      ->add_option("--pair", c.pair, "a,b")
      ->delimiter(',')
      ->required();
  app.add_subcommand("massey3", "Third-order linking number")
      ->add_option("--order", c.order, "i,j,k")
      ->delimiter(',')
      ->required();
  app.add_subcommand("massey4", "Fourth-order linking number plan")
      ->add_option("--order", c.order, "i,j,k,l")
      ->delimiter(',')
      ->required();
  app.add_subcommand("milnor", "Milnor invariant from the Magnus expansion")
      ->add_option("--indices", c.indices, "i,j,k")
      ->delimiter(',')
      ->required();
  auto* chains_cmd = app.add_subcommand("chains-verify", "Run the chain-cochain identity suite");
  chains_cmd->add_option("--complex", c.complex_name, "Complex name");
  chains_cmd->add_option("--seed", c.chain_seed, "Random seed");
  chains_cmd->add_option("--cases", c.cases, "Random cases per identity")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const json out = run(command, c);
    std::cout << out.dump(2) << "\n";
    if (command == "chains-verify" && !out["pass"].get<bool>()) return 3;
    return 0;
  } catch (const Error& e) {
    print_error(std::string(to_string(e.kind())), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 3;
  }
}
