#pragma once

#include <array>
#include <map>
#include <vector>

#include "masseylink/diagram.hpp"

namespace masseylink {

/// One letter g^exp of a group word.
struct Letter {
  int generator = 0;
  int exponent = 1;
};
using Word = std::vector<Letter>;

/// Relation at a crossing: out = over^{-s} in over^{s}, s the crossing sign.
struct WirtingerRelation {
  int crossing = 0;
  int incoming = 0;
  int outgoing = 0;
  int over = 0;
  int sign = 1;
};

struct WirtingerPresentation {
  int num_generators = 0;
  std::vector<int> component_of;        // generator -> component
  std::vector<int> first_generator;     // component -> generator of its first arc
  std::vector<int> generator_of_strand; // PD label -> generator, -1 if unused
  std::vector<WirtingerRelation> relations;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

/// Longitude of component i read from its first arc: the over generators met
/// at each undercrossing, raised to the crossing sign, followed by the
/// component's own first generator to the minus its self-writhe.
Word longitude_word(const LinkDiagram& d, int component);

/// Element of Z<<X_1..X_m>> truncated above a fixed degree.
class TruncatedSeries {
 public:
  using Key = std::vector<int>;

  TruncatedSeries(int num_symbols, int degree);

  static TruncatedSeries one(int num_symbols, int degree);
  /// Image of a generator: 1 + X_s, or its inverse for exponent -1.
  static TruncatedSeries generator(int num_symbols, int degree, int symbol, int exponent);

  int degree() const { return degree_; }
  int num_symbols() const { return symbols_; }
  long long coefficient(const Key& word) const;
  const std::map<Key, long long>& terms() const { return terms_; }

  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries inverse() const;
  TruncatedSeries power(int exponent) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  int symbols_;
  int degree_;
  std::map<Key, long long> terms_;

  void add(const Key& k, long long c);
};

/// Magnus expansions of every generator in terms of the component meridians
/// X_0..X_{n-1}, correct through `degree`.
std::vector<TruncatedSeries> generator_expansions(const LinkDiagram& d, int degree = 3);

TruncatedSeries longitude_expansion(const LinkDiagram& d, int component, int degree = 3);

/// Milnor invariant of distinct 0-based components (i,j,k): coefficient of
/// X_i X_j in the expansion of the longitude of k.
long long milnor_mu(const LinkDiagram& d, std::array<int, 3> indices, int degree = 3);

}  // namespace masseylink
