#include "masseylink/magnus.hpp"

#include <algorithm>
#include <cstdlib>

#include "masseylink/error.hpp"

namespace masseylink {

namespace {

bool under_begins(const LinkDiagram& d, int strand) {
  return d.crossings()[d.strand_tail_crossing(strand)].under_out() == strand;
}

}  // namespace

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  WirtingerPresentation w;
  int max_label = 0;
  for (const auto& x : d.crossings())
    for (int s : x.slots) max_label = std::max(max_label, s);
  w.generator_of_strand.assign(max_label + 1, -1);
  w.first_generator.assign(d.num_components(), -1);

  for (int c = 0; c < d.num_components(); ++c) {
    const auto& strands = d.strands_of(c);
    const int m = static_cast<int>(strands.size());
    int start = 0;
    while (start < m && !under_begins(d, strands[start])) ++start;
    if (start == m) start = 0;  // no undercrossing: a single arc
    int gen = -1;
    for (int step = 0; step < std::max(m, 1); ++step) {
      if (m == 0 || step == 0 || under_begins(d, strands[(start + step) % m])) {
        gen = w.num_generators++;
        w.component_of.push_back(c);
      }
      if (m > 0) w.generator_of_strand[strands[(start + step) % m]] = gen;
    }
    w.first_generator[c] = m == 0 ? gen : w.generator_of_strand[strands[0]];
  }
  for (int i = 0; i < d.num_crossings(); ++i) {
    const Crossing& x = d.crossings()[i];
    w.relations.push_back({i, w.generator_of_strand[x.under_in()], w.generator_of_strand[x.under_out()],
                           w.generator_of_strand[x.over_in()], x.sign});
  }
  return w;
}

namespace {

Word longitude_with(const LinkDiagram& d, const WirtingerPresentation& w, int component) {
  Word word;
  int writhe = 0;
  for (int s : d.strands_of(component)) {
    const Crossing& x = d.crossings()[d.strand_head_crossing(s)];
    if (x.under_in() != s) continue;
    word.push_back({w.generator_of_strand[x.over_in()], x.sign});
    if (x.over_component == component) writhe += x.sign;
  }
  if (writhe != 0) word.push_back({w.first_generator[component], -writhe});
  return word;
}

void check_component(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.num_components())
    fail(ErrorKind::UnknownComponent, "component " + std::to_string(c + 1));
}

}  // namespace

Word longitude_word(const LinkDiagram& d, int component) {
  check_component(d, component);
  return longitude_with(d, wirtinger(d), component);
}

// ---------------------------------------------------------------------------
// Truncated series

TruncatedSeries::TruncatedSeries(int num_symbols, int degree) : symbols_(num_symbols), degree_(degree) {}

TruncatedSeries TruncatedSeries::one(int num_symbols, int degree) {
  TruncatedSeries s(num_symbols, degree);
  s.terms_[{}] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(int num_symbols, int degree, int symbol, int exponent) {
  TruncatedSeries x(num_symbols, degree);
  x.terms_[{}] = 1;
  if (degree >= 1) x.terms_[{symbol}] = 1;
  return x.power(exponent);
}

long long TruncatedSeries::coefficient(const Key& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0 : it->second;
}

void TruncatedSeries::add(const Key& k, long long c) {
  if (c == 0 || static_cast<int>(k.size()) > degree_) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  TruncatedSeries out(symbols_, std::min(degree_, rhs.degree_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      if (static_cast<int>(a.size() + b.size()) > out.degree_) continue;
      Key k = a;
      k.insert(k.end(), b.begin(), b.end());
      out.add(k, ca * cb);
    }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add(k, c);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add(k, -c);
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coefficient({}) != 1) fail(ErrorKind::InvalidArgument, "series inverse needs constant term 1");
  // (1 + T)^{-1} = sum_n (-T)^n, finite after truncation
  const TruncatedSeries neg_t = one(symbols_, degree_) - *this;
  TruncatedSeries result = one(symbols_, degree_);
  TruncatedSeries term = one(symbols_, degree_);
  for (int n = 1; n <= degree_; ++n) {
    term = term * neg_t;
    result = result + term;
  }
  return result;
}

TruncatedSeries TruncatedSeries::power(int exponent) const {
  TruncatedSeries base = exponent < 0 ? inverse() : *this;
  TruncatedSeries result = one(symbols_, degree_);
  for (int n = 0; n < std::abs(exponent); ++n) result = result * base;
  return result;
}

// ---------------------------------------------------------------------------
// Expansions

std::vector<TruncatedSeries> generator_expansions(const LinkDiagram& d, int degree) {
  const WirtingerPresentation w = wirtinger(d);
  const int n = d.num_components();
  std::vector<TruncatedSeries> cur;
  for (int g = 0; g < w.num_generators; ++g)
    cur.push_back(TruncatedSeries::generator(n, degree, w.component_of[g], 1));
  // Each arc is v^{-1} x v with x the component's first arc and v the word of
  // overpasses met since; every round fixes one more degree.
  for (int round = 0; round < degree; ++round) {
    std::vector<TruncatedSeries> next = cur;
    for (int c = 0; c < n; ++c) {
      const auto& strands = d.strands_of(c);
      if (strands.empty()) continue;
      const TruncatedSeries x = TruncatedSeries::generator(n, degree, c, 1);
      TruncatedSeries v = TruncatedSeries::one(n, degree);
      for (int s : strands) {
        const int g = w.generator_of_strand[s];
        if (g != w.first_generator[c]) next[g] = v.inverse() * x * v;
        const Crossing& cr = d.crossings()[d.strand_head_crossing(s)];
        if (cr.under_in() == s) v = v * cur[w.generator_of_strand[cr.over_in()]].power(cr.sign);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TruncatedSeries longitude_expansion(const LinkDiagram& d, int component, int degree) {
  check_component(d, component);
  const WirtingerPresentation w = wirtinger(d);
  const auto gens = generator_expansions(d, degree);
  TruncatedSeries out = TruncatedSeries::one(d.num_components(), degree);
  for (const Letter& l : longitude_with(d, w, component)) out = out * gens[l.generator].power(l.exponent);
  return out;
}

long long milnor_mu(const LinkDiagram& d, std::array<int, 3> idx, int degree) {
  for (int c : idx) check_component(d, c);
  if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
    fail(ErrorKind::InvalidArgument, "Milnor invariant needs three distinct components");
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (linking_number(d, idx[a], idx[b]) != 0)
        fail(ErrorKind::PairwiseLinkingNonzero,
             "lk(" + std::to_string(idx[a] + 1) + "," + std::to_string(idx[b] + 1) + ") != 0");
  if (degree < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  return longitude_expansion(d, idx[2], degree).coefficient({idx[0], idx[1]});
}

}  // namespace masseylink
