#include "masseylink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "masseylink/error.hpp"

namespace masseylink {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::InconsistentDiagram: return "InconsistentDiagram";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::EmbeddingDegenerate: return "EmbeddingDegenerate";
    case ErrorKind::TubeTooLarge: return "TubeTooLarge";
    case ErrorKind::NonzeroLinking: return "NonzeroLinking";
    case ErrorKind::StuckTrace: return "StuckTrace";
    case ErrorKind::MasseyUndefined: return "MasseyUndefined";
    case ErrorKind::PairwiseLinkingNonzero: return "PairwiseLinkingNonzero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotManifold: return "NotManifold";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& tuples,
                                 int declared_components) {
  LinkDiagram d;
  int max_label = 0;
  for (const auto& t : tuples) {
    for (int s : t) {
      if (s <= 0) fail(ErrorKind::MalformedCode, "strand labels must be positive integers");
      max_label = std::max(max_label, s);
    }
  }
  std::vector<int> uses(max_label + 1, 0);
  for (const auto& t : tuples)
    for (int s : t) ++uses[s];
  for (int s = 1; s <= max_label; ++s) {
    if (uses[s] != 0 && uses[s] != 2)
      fail(ErrorKind::InconsistentDiagram,
           "strand " + std::to_string(s) + " used " + std::to_string(uses[s]) + " times");
  }

  // Components are the classes of labels joined through crossings.
  UnionFind uf(max_label + 1);
  for (const auto& t : tuples) {
    uf.unite(t[0], t[2]);
    uf.unite(t[1], t[3]);
  }
  std::map<int, std::vector<int>> classes;
  for (int s = 1; s <= max_label; ++s)
    if (uses[s] == 2) classes[uf.find(s)].push_back(s);
  std::vector<std::vector<int>> comps;
  for (auto& [root, labels] : classes) comps.push_back(labels);
  std::sort(comps.begin(), comps.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  d.strand_component_.assign(max_label + 1, -1);
  d.strand_next_.assign(max_label + 1, -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const auto& labels = comps[c];
    for (size_t i = 0; i < labels.size(); ++i) {
      d.strand_component_[labels[i]] = c;
      d.strand_next_[labels[i]] = labels[(i + 1) % labels.size()];
    }
  }
  d.component_strands_ = comps;
  d.num_components_ = std::max<int>(static_cast<int>(comps.size()), declared_components);
  d.component_strands_.resize(d.num_components_);

  // Resolve which over slot is outgoing. `start_at[s]` records the crossing
  // where strand s begins; every strand must begin exactly once.
  const int n = static_cast<int>(tuples.size());
  std::vector<int> starts(max_label + 1, 0), ends(max_label + 1, 0);
  std::vector<int> out_slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& t = tuples[i];
    if (d.strand_next_[t[0]] != t[2])
      fail(ErrorKind::InconsistentDiagram,
           "under-strand " + std::to_string(t[0]) + " does not continue as " + std::to_string(t[2]));
    ++ends[t[0]];
    ++starts[t[2]];
    const bool b_to_d = d.strand_next_[t[1]] == t[3];
    const bool d_to_b = d.strand_next_[t[3]] == t[1];
    if (!b_to_d && !d_to_b)
      fail(ErrorKind::InconsistentDiagram, "over-strands " + std::to_string(t[1]) + "," +
                                               std::to_string(t[3]) + " are not consecutive");
    if (b_to_d != d_to_b) {
      out_slot[i] = b_to_d ? 3 : 1;
      ++starts[t[out_slot[i]]];
      ++ends[t[4 - out_slot[i]]];
    }
  }
  auto assign = [&](int i, int slot) {
    out_slot[i] = slot;
    ++starts[tuples[i][slot]];
    ++ends[tuples[i][4 - slot]];
  };
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < n; ++i) {
        if (out_slot[i] != -1) continue;
        const int b = tuples[i][1], dd = tuples[i][3];
        if (b == dd) {
          assign(i, 3);
          progress = true;
        } else if (starts[b] > 0 || ends[dd] > 0) {
          assign(i, 3);
          progress = true;
        } else if (starts[dd] > 0 || ends[b] > 0) {
          assign(i, 1);
          progress = true;
        }
      }
    }
    auto open = std::find(out_slot.begin(), out_slot.end(), -1);
    if (open == out_slot.end()) break;
    // Genuinely ambiguous (a two-strand component that only passes over):
    // orient the first open crossing from slot 1 to slot 3 and propagate.
    assign(static_cast<int>(open - out_slot.begin()), 3);
  }
  for (int s = 1; s <= max_label; ++s) {
    if (uses[s] == 2 && (starts[s] != 1 || ends[s] != 1))
      fail(ErrorKind::InconsistentDiagram, "strand " + std::to_string(s) + " has no consistent direction");
  }

  d.strand_tail_.assign(max_label + 1, -1);
  d.strand_head_.assign(max_label + 1, -1);
  d.crossings_.resize(n);
  for (int i = 0; i < n; ++i) {
    Crossing& x = d.crossings_[i];
    x.slots = tuples[i];
    x.over_out_slot = out_slot[i];
    x.over_in_slot = 4 - out_slot[i];
    x.sign = out_slot[i] == 1 ? 1 : -1;
    x.under_component = d.strand_component_[x.slots[0]];
    x.over_component = d.strand_component_[x.slots[1]];
    d.strand_head_[x.under_in()] = i;
    d.strand_tail_[x.under_out()] = i;
    d.strand_head_[x.over_in()] = i;
    d.strand_tail_[x.over_out()] = i;
  }

  // Planarity: on each connected piece of the 4-valent map, V - E + F = 2
  // with E = 2V. Half-edges are (crossing, slot); faces turn counterclockwise.
  if (n > 0) {
    std::vector<std::array<int, 2>> other_end(4 * n, {-1, -1});
    std::vector<std::vector<int>> where(max_label + 1);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 4; ++k) where[tuples[i][k]].push_back(4 * i + k);
    for (int s = 1; s <= max_label; ++s) {
      if (where[s].size() != 2) continue;
      other_end[where[s][0]] = {where[s][1] / 4, where[s][1] % 4};
      other_end[where[s][1]] = {where[s][0] / 4, where[s][0] % 4};
    }
    UnionFind pieces(n);
    for (int h = 0; h < 4 * n; ++h) pieces.unite(h / 4, other_end[h][0]);
    std::vector<char> seen(4 * n, 0);
    std::map<int, int> faces, verts;
    for (int i = 0; i < n; ++i) ++verts[pieces.find(i)];
    for (int h = 0; h < 4 * n; ++h) {
      if (seen[h]) continue;
      ++faces[pieces.find(h / 4)];
      int cur = h;
      while (!seen[cur]) {
        seen[cur] = 1;
        auto [x, k] = other_end[cur];
        cur = 4 * x + (k + 1) % 4;
      }
    }
    for (auto& [piece, v] : verts)
      if (faces[piece] != v + 2) d.planar_ = false;
  }
  return d;
}

void LinkDiagram::check_strand(int strand) const {
  if (strand <= 0 || strand >= static_cast<int>(strand_component_.size()) ||
      strand_component_[strand] < 0)
    fail(ErrorKind::InvalidArgument, "unknown strand " + std::to_string(strand));
}

const std::vector<int>& LinkDiagram::strands_of(int component) const {
  if (component < 0 || component >= num_components_)
    fail(ErrorKind::UnknownComponent, "component " + std::to_string(component + 1));
  return component_strands_[component];
}

int LinkDiagram::component_of_strand(int strand) const {
  check_strand(strand);
  return strand_component_[strand];
}

int LinkDiagram::next_strand(int strand) const {
  check_strand(strand);
  return strand_next_[strand];
}

int LinkDiagram::strand_tail_crossing(int strand) const {
  check_strand(strand);
  return strand_tail_[strand];
}

int LinkDiagram::strand_head_crossing(int strand) const {
  check_strand(strand);
  return strand_head_[strand];
}

std::vector<std::array<int, 4>> LinkDiagram::pd_tuples() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) out.push_back(x.slots);
  return out;
}

std::vector<int> LinkDiagram::crossings_between(int a, int b) const {
  std::vector<int> out;
  for (int i = 0; i < num_crossings(); ++i) {
    const auto& x = crossings_[i];
    if ((x.over_component == a && x.under_component == b) ||
        (x.over_component == b && x.under_component == a))
      out.push_back(i);
  }
  return out;
}

std::vector<int> LinkDiagram::self_crossings(int component) const {
  std::vector<int> out;
  for (int i = 0; i < num_crossings(); ++i)
    if (crossings_[i].over_component == component && crossings_[i].under_component == component)
      out.push_back(i);
  return out;
}

bool operator==(const LinkDiagram& lhs, const LinkDiagram& rhs) {
  if (lhs.num_components_ != rhs.num_components_ || lhs.crossings_.size() != rhs.crossings_.size())
    return false;
  for (size_t i = 0; i < lhs.crossings_.size(); ++i) {
    if (lhs.crossings_[i].slots != rhs.crossings_[i].slots) return false;
    if (lhs.crossings_[i].sign != rhs.crossings_[i].sign) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsers

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    skip_separators();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_separators();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::MalformedCode, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

LinkDiagram parse_pd_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::MalformedCode, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array())
    fail(ErrorKind::MalformedCode, "JSON diagram needs a \"crossings\" array");
  std::vector<std::array<int, 4>> tuples;
  for (const auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4)
      fail(ErrorKind::MalformedCode, "each crossing must be a 4-tuple");
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      if (!t[k].is_number_integer()) fail(ErrorKind::MalformedCode, "strand labels must be integers");
      tuple[k] = t[k].get<int>();
    }
    tuples.push_back(tuple);
  }
  int components = 0;
  if (j.contains("components")) {
    if (!j["components"].is_number_integer() || j["components"].get<int>() < 0)
      fail(ErrorKind::MalformedCode, "\"components\" must be a non-negative integer");
    components = j["components"].get<int>();
  }
  if (tuples.empty() && components == 0)
    fail(ErrorKind::MalformedCode, "empty diagram declares no components");
  LinkDiagram d = LinkDiagram::from_pd(tuples, components);
  if (components != 0 && d.num_components() != components)
    fail(ErrorKind::InconsistentDiagram, "declared " + std::to_string(components) +
                                             " components but crossings use " +
                                             std::to_string(d.num_components()));
  return d;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) fail(ErrorKind::MalformedCode, "empty PD code");
  if (text[first] == '{') return parse_pd_json(text);

  Cursor cur(text.substr(first));
  bool wrapped = false;
  cur.skip_separators();
  if (cur.peek() == 'P') {
    cur.expect('P');
    cur.expect('D');
    if (!cur.accept('[')) cur.expect('(');
    wrapped = true;
  }
  std::vector<std::array<int, 4>> tuples;
  for (;;) {
    cur.skip_separators();
    if (cur.done() || cur.peek() == ']' || cur.peek() == ')') break;
    cur.expect('X');
    char close = ')';
    if (cur.accept('[')) close = ']';
    else cur.expect('(');
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) t[k] = cur.integer();
    cur.expect(close);
    tuples.push_back(t);
  }
  if (wrapped && !cur.accept(']')) cur.expect(')');
  cur.skip_separators();
  if (!cur.done()) cur.error("trailing characters");
  if (tuples.empty()) fail(ErrorKind::MalformedCode, "PD code contains no crossings");
  return LinkDiagram::from_pd(tuples);
}

LinkDiagram parse_gauss(std::string_view text) {
  struct Visit {
    bool over;
    int label;
    int sign;
  };
  std::vector<std::vector<Visit>> comps;
  std::vector<Visit> current;
  bool have_current = false;
  auto flush = [&] {
    if (have_current) comps.push_back(current);
    current.clear();
    have_current = false;
  };
  for (size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == ';' || c == '|' || c == '\n') {
      flush();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(' && i + 1 < text.size() && text[i + 1] == ')') {
      have_current = true;  // explicit crossingless component
      i += 2;
    } else if (c == 'O' || c == 'U' || c == 'o' || c == 'u') {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1 || j >= text.size() || (text[j] != '+' && text[j] != '-'))
        fail(ErrorKind::MalformedCode, "bad Gauss token at offset " + std::to_string(i));
      current.push_back({c == 'O' || c == 'o', std::stoi(std::string(text.substr(i + 1, j - i - 1))),
                         text[j] == '+' ? 1 : -1});
      have_current = true;
      i = j + 1;
    } else {
      fail(ErrorKind::MalformedCode, std::string("unexpected character '") + c + "' in Gauss code");
    }
  }
  flush();
  if (comps.empty()) fail(ErrorKind::MalformedCode, "Gauss code lists no components");

  struct Ends {
    int under_in = -1, under_out = -1, over_in = -1, over_out = -1;
    int sign = 0, overs = 0, unders = 0;
  };
  std::map<int, Ends> xs;
  int base = 1;
  for (const auto& comp : comps) {
    const int m = static_cast<int>(comp.size());
    if (m == 0) continue;
    for (int j = 0; j < m; ++j) {
      const Visit& v = comp[j];
      Ends& e = xs[v.label];
      if (e.sign != 0 && e.sign != v.sign)
        fail(ErrorKind::InconsistentDiagram, "crossing " + std::to_string(v.label) + " has two signs");
      e.sign = v.sign;
      const int in = base + (j + m - 1) % m;
      const int out = base + j;
      if (v.over) {
        ++e.overs;
        e.over_in = in;
        e.over_out = out;
      } else {
        ++e.unders;
        e.under_in = in;
        e.under_out = out;
      }
    }
    base += m;
  }
  std::vector<std::array<int, 4>> tuples;
  for (auto& [label, e] : xs) {
    if (e.overs != 1 || e.unders != 1)
      fail(ErrorKind::InconsistentDiagram,
           "crossing " + std::to_string(label) + " must be visited once over and once under");
    if (e.sign > 0) tuples.push_back({e.under_in, e.over_out, e.under_out, e.over_in});
    else tuples.push_back({e.under_in, e.over_in, e.under_out, e.over_out});
  }
  const int declared = static_cast<int>(comps.size());
  if (tuples.empty()) {
    LinkDiagram d = LinkDiagram::from_pd({}, declared);
    return d;
  }
  return LinkDiagram::from_pd(tuples, declared);
}

LinkDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(ErrorKind::MalformedCode, path + " is empty");
  const char c = text[first];
  if (c == '{' || c == 'X' || c == 'P') return parse_pd(text);
  return parse_gauss(text);
}

std::string to_gauss(const LinkDiagram& d) {
  std::ostringstream os;
  for (int c = 0; c < d.num_components(); ++c) {
    if (c) os << "; ";
    const auto& strands = d.strands_of(c);
    if (strands.empty()) {
      os << "()";
      continue;
    }
    for (size_t j = 0; j < strands.size(); ++j) {
      const int x = d.strand_tail_crossing(strands[j]);
      const Crossing& cr = d.crossings()[x];
      const bool under = cr.under_out() == strands[j];
      if (j) os << ' ';
      os << (under ? 'U' : 'O') << (x + 1) << (cr.sign > 0 ? '+' : '-');
    }
  }
  return os.str();
}

std::string to_pd_text(const LinkDiagram& d) {
  std::ostringstream os;
  for (int i = 0; i < d.num_crossings(); ++i) {
    const auto& s = d.crossings()[i].slots;
    if (i) os << ", ";
    os << "X(" << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Linking numbers

namespace {
void check_pair(const LinkDiagram& d, int a, int b) {
  if (a < 0 || a >= d.num_components())
    fail(ErrorKind::UnknownComponent, "component " + std::to_string(a + 1));
  if (b < 0 || b >= d.num_components())
    fail(ErrorKind::UnknownComponent, "component " + std::to_string(b + 1));
  if (a == b) fail(ErrorKind::InvalidArgument, "linking number needs two distinct components");
}
}  // namespace

int linking_number(const LinkDiagram& d, int a, int b) {
  check_pair(d, a, b);
  int total = 0;
  for (int x : d.crossings_between(a, b)) total += d.crossings()[x].sign;
  return total / 2;
}

int under_crossing_count(const LinkDiagram& d, int a, int b) {
  check_pair(d, a, b);
  int total = 0;
  for (const auto& x : d.crossings())
    if (x.under_component == a && x.over_component == b) total += x.sign;
  return total;
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  const int n = d.num_components();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m[a][b] = m[b][a] = linking_number(d, a, b);
  return m;
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& which) {
  std::vector<char> flip(d.num_components(), which.empty() ? 1 : 0);
  for (int c : which) {
    if (c < 0 || c >= d.num_components())
      fail(ErrorKind::UnknownComponent, "component " + std::to_string(c + 1));
    flip[c] = 1;
  }
  // New labels: reversed components renumber their strands backwards so that
  // labels still increase along the (new) orientation.
  std::map<int, int> relabel;
  for (int c = 0; c < d.num_components(); ++c) {
    const auto& s = d.strands_of(c);
    const int m = static_cast<int>(s.size());
    for (int j = 0; j < m; ++j) relabel[s[j]] = flip[c] ? s[m - 1 - j] : s[j];
  }
  std::vector<std::array<int, 4>> tuples;
  for (const auto& x : d.crossings()) {
    std::array<int, 4> t = x.slots;
    if (flip[x.under_component]) t = {t[2], t[3], t[0], t[1]};
    for (int& s : t) s = relabel.at(s);
    tuples.push_back(t);
  }
  return LinkDiagram::from_pd(tuples, d.num_components());
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> tuples;
  for (const auto& x : d.crossings()) {
    const auto& s = x.slots;
    if (x.over_in_slot == 1) tuples.push_back({s[1], s[2], s[3], s[0]});
    else tuples.push_back({s[3], s[0], s[1], s[2]});
  }
  return LinkDiagram::from_pd(tuples, d.num_components());
}

}  // namespace masseylink
