#include <doctest.h>

#include "fixture_path.hpp"
#include "masseylink/error.hpp"
#include "masseylink/magnus.hpp"

using namespace masseylink;
using testing_support::fixture;

TEST_CASE("series arithmetic") {
  auto x = TruncatedSeries::generator(2, 3, 0, 1);
  auto xi = TruncatedSeries::generator(2, 3, 0, -1);
  CHECK(x * xi == TruncatedSeries::one(2, 3));
  CHECK(xi.coefficient({}) == 1);
  CHECK(xi.coefficient({0}) == -1);
  CHECK(xi.coefficient({0, 0}) == 1);
  CHECK(xi.coefficient({0, 0, 0}) == -1);
  auto y = TruncatedSeries::generator(2, 3, 1, 1);
  // commutator x y x^-1 y^-1 = 1 + (XY - YX) + ...
  auto c = x * y * xi * y.inverse();
  CHECK(c.coefficient({0}) == 0);
  CHECK(c.coefficient({0, 1}) == 1);
  CHECK(c.coefficient({1, 0}) == -1);
  CHECK((x.power(3) * x.power(-3)) == TruncatedSeries::one(2, 3));
}

TEST_CASE("wirtinger generator and relation counts") {
  auto u = fixture("unknot0");
  CHECK(wirtinger(u).num_generators == 1);
  CHECK(wirtinger(u).relations.empty());
  auto h = wirtinger(fixture("hopf_pos"));
  CHECK(h.num_generators == 2);  // each component passes under once
  CHECK(h.relations.size() == 2);
  auto b = wirtinger(fixture("borromean"));
  CHECK(b.num_generators == 6);
  CHECK(b.relations.size() == 6);
  auto k = wirtinger(parse_gauss("O1+ U1+"));
  CHECK(k.num_generators == 1);
}

TEST_CASE("longitude words") {
  CHECK(longitude_word(fixture("unknot0"), 0).empty());
  auto h = fixture("hopf_pos");
  auto w = wirtinger(h);
  auto l = longitude_word(h, 0);
  REQUIRE(l.size() == 1);
  CHECK(w.component_of[l[0].generator] == 1);
  CHECK(l[0].exponent == 1);
  auto b = fixture("borromean");
  auto wb = wirtinger(b);
  for (int c = 0; c < 3; ++c) {
    std::vector<int> sums(3, 0);
    for (const auto& letter : longitude_word(b, c)) sums[wb.component_of[letter.generator]] += letter.exponent;
    for (int o = 0; o < 3; ++o) CHECK(sums[o] == 0);
  }
  // a kink's longitude is untwisted: exponent sum on its own meridian is zero
  auto k = parse_gauss("O1+ U1+");
  int sum = 0;
  for (const auto& letter : longitude_word(k, 0)) sum += letter.exponent;
  CHECK(sum == 0);
}

TEST_CASE("first-degree coefficients are linking numbers") {
  for (const char* name : {"hopf_pos", "hopf_unknot", "borromean", "brunn_2"}) {
    auto d = fixture(name);
    for (int i = 0; i < d.num_components(); ++i) {
      auto m = longitude_expansion(d, i);
      for (int j = 0; j < d.num_components(); ++j)
        if (j != i) CHECK(m.coefficient({j}) == linking_number(d, i, j));
    }
  }
}

TEST_CASE("triple invariants") {
  CHECK(milnor_mu(fixture("unlink3"), {0, 1, 2}) == 0);
  CHECK(milnor_mu(fixture("split3"), {0, 1, 2}) == 0);
  const long long b = milnor_mu(fixture("borromean"), {0, 1, 2});
  CHECK((b == 1 || b == -1));
  // length-three invariants survive the mirror: (-1)^(3-1)
  CHECK(milnor_mu(fixture("borromean_mirror"), {0, 1, 2}) == b);
  CHECK(milnor_mu(mirror(fixture("borromean")), {0, 1, 2}) == b);
  CHECK(milnor_mu(reverse_components(fixture("borromean"), {0}), {0, 1, 2}) == -b);
  long long brunn1 = 0;
  for (int k = 1; k <= 3; ++k) {
    auto d = fixture("brunn_" + std::to_string(k));
    const long long mu = milnor_mu(d, {0, 1, 2});
    CHECK(std::llabs(mu) == k);
    if (k == 1) brunn1 = mu;
    CHECK(mu == k * brunn1);
  }
}

TEST_CASE("symmetries of the triple invariant") {
  for (const char* name : {"borromean", "borromean_mirror", "brunn_1", "brunn_2", "brunn_3"}) {
    CAPTURE(std::string(name));
    auto d = fixture(name);
    const long long m123 = milnor_mu(d, {0, 1, 2});
    CHECK(milnor_mu(d, {1, 2, 0}) == m123);
    CHECK(milnor_mu(d, {2, 0, 1}) == m123);
    CHECK(milnor_mu(d, {1, 0, 2}) == -m123);
    CHECK(milnor_mu(d, {0, 1, 2}, 4) == m123);
  }
}

TEST_CASE("linked pairs are rejected") {
  auto d = fixture("hopf_unknot");
  CHECK_THROWS_AS(milnor_mu(d, {0, 1, 2}), Error);
  try {
    milnor_mu(d, {0, 1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PairwiseLinkingNonzero);
  }
}
