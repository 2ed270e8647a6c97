#include <doctest.h>

#include "fixture_path.hpp"
#include "masseylink/diagram.hpp"
#include "masseylink/error.hpp"

using namespace masseylink;
using testing_support::fixture;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("hopf fixture has two positive crossings") {
  auto d = fixture("hopf_pos");
  CHECK(d.num_components() == 2);
  REQUIRE(d.num_crossings() == 2);
  for (const auto& x : d.crossings()) CHECK(x.sign == 1);
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(d.is_planar());
}

TEST_CASE("standard right-handed crossing tuple") {
  // X(1,4,2,3) in a two-component diagram X(4,1,3,2), X(1,4,2,3) style.
  auto d = parse_pd("X[4,1,3,2], X[1,4,2,3]");
  CHECK(d.num_components() == 2);
  CHECK(linking_number(d, 0, 1) == 1);
  auto m = parse_pd("X[4,2,3,1], X[1,3,2,4]");
  CHECK(linking_number(m, 0, 1) == -1);
}

TEST_CASE("fixtures parse with expected linking matrices") {
  struct Case {
    const char* name;
    int comps;
    int l12, l13, l23;
  };
  const Case cases[] = {
      {"borromean", 3, 0, 0, 0}, {"borromean_mirror", 3, 0, 0, 0}, {"split3", 3, 0, 0, 0},
      {"brunn_1", 3, 0, 0, 0},   {"brunn_2", 3, 0, 0, 0},          {"brunn_3", 3, 0, 0, 0},
      {"hopf_unknot", 3, 1, 0, 0}, {"unlink3", 3, 0, 0, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto d = fixture(c.name);
    CHECK(d.num_components() == c.comps);
    CHECK(d.is_planar());
    auto m = linking_matrix(d);
    CHECK(m[0][1] == c.l12);
    CHECK(m[0][2] == c.l13);
    CHECK(m[1][2] == c.l23);
  }
  CHECK(fixture("unknot0").num_components() == 1);
}

TEST_CASE("under-crossing count agrees with the half sum") {
  for (const char* name : {"hopf_pos", "borromean", "brunn_2", "hopf_unknot"}) {
    auto d = fixture(name);
    for (int a = 0; a < d.num_components(); ++a)
      for (int b = 0; b < d.num_components(); ++b) {
        if (a == b) continue;
        CAPTURE(name);
        CHECK(under_crossing_count(d, a, b) == linking_number(d, a, b));
        CHECK(linking_number(d, a, b) == linking_number(d, b, a));
      }
  }
}

TEST_CASE("gauss and pd round trips") {
  for (const char* name : {"hopf_pos", "borromean", "brunn_1", "hopf_unknot", "unlink3"}) {
    const std::string label = name;
    CAPTURE(label);
    auto d = fixture(name);
    auto g = parse_gauss(to_gauss(d));
    CHECK(g.num_components() == d.num_components());
    CHECK(linking_matrix(g) == linking_matrix(d));
    const bool all_crossed = d.num_crossings() > 0 && !d.strands_of(d.num_components() - 1).empty();
    if (all_crossed) CHECK(parse_pd(to_pd_text(d)) == d);
  }
}

TEST_CASE("gauss code of a kinked unknot") {
  auto d = parse_gauss("O1+ U1+");
  CHECK(d.num_components() == 1);
  REQUIRE(d.num_crossings() == 1);
  CHECK(d.crossings()[0].sign == 1);
  CHECK(d.self_crossings(0).size() == 1);
}

TEST_CASE("gauss code of the hopf link") {
  auto d = parse_gauss("O1+ U2+; U1+ O2+");
  CHECK(d.num_components() == 2);
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(under_crossing_count(d, 0, 1) == 1);
}

TEST_CASE("malformed and inconsistent input") {
  CHECK(kind_of([] { parse_pd(""); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd("X(1,2,3"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd("X(0,1,1,2)"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd("X(1,2,3,4)"); }) == ErrorKind::InconsistentDiagram);
  CHECK(kind_of([] { parse_gauss(""); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_gauss("O1+ O1+"); }) == ErrorKind::InconsistentDiagram);
  CHECK(kind_of([] { parse_gauss("O1+ U1-"); }) == ErrorKind::InconsistentDiagram);
  CHECK(kind_of([] { parse_gauss("O1* U1+"); }) == ErrorKind::MalformedCode);
  CHECK(kind_of([] { parse_pd(R"({"components": 1, "crossings": [[4,1,3,2],[1,4,2,3]]})"); }) ==
        ErrorKind::InconsistentDiagram);
  auto d = fixture("hopf_pos");
  CHECK(kind_of([&] { linking_number(d, 0, 2); }) == ErrorKind::UnknownComponent);
}

TEST_CASE("non-planar gauss code is flagged") {
  // Two crossings met in the order 1 2 1 2 cannot be drawn in the plane.
  auto d = parse_gauss("O1+ U2+ U1+ O2+");
  CHECK_FALSE(d.is_planar());
}

TEST_CASE("reversal and mirror act on linking numbers") {
  auto d = fixture("hopf_pos");
  CHECK(linking_number(reverse_components(d, {0}), 0, 1) == -1);
  CHECK(linking_number(reverse_components(d), 0, 1) == 1);
  CHECK(linking_number(mirror(d), 0, 1) == -1);
  CHECK(mirror(mirror(d)) == d);
  auto b = fixture("borromean");
  CHECK(mirror(b).num_crossings() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(mirror(b).crossings()[i].sign == -b.crossings()[i].sign);
}
