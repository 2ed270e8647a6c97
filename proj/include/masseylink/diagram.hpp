#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace masseylink {

// PD slot convention: slot 0 is the incoming under-strand, the remaining slots
// follow counterclockwise. Strand labels increase along the orientation of
// their component and wrap at the component's largest label.
struct Crossing {
  std::array<int, 4> slots{};
  int sign = 0;             // +1 right-handed, -1 left-handed
  int over_component = -1;  // 0-based component ids
  int under_component = -1;
  int over_in_slot = -1;    // 1 or 3
  int over_out_slot = -1;   // 3 or 1

  int under_in() const { return slots[0]; }
  int under_out() const { return slots[2]; }
  int over_in() const { return slots[over_in_slot]; }
  int over_out() const { return slots[over_out_slot]; }
};

/// An oriented link diagram on the 2-sphere. Immutable once constructed by
/// one of the parsers; all queries are const.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  /// Builds and validates a diagram from PD tuples. `declared_components`
  /// may exceed the number of components visible in the crossings; the
  /// surplus components are crossingless circles.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& tuples,
                             int declared_components = 0);

  int num_components() const { return num_components_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  /// Strand labels of a component in orientation order. Empty for a
  /// crossingless component.
  const std::vector<int>& strands_of(int component) const;
  int component_of_strand(int strand) const;
  int next_strand(int strand) const;

  /// Crossing index where the strand begins (its tail) and ends (its head).
  int strand_tail_crossing(int strand) const;
  int strand_head_crossing(int strand) const;

  bool is_planar() const { return planar_; }
  std::vector<std::array<int, 4>> pd_tuples() const;

  /// Crossings between two distinct components (either over).
  std::vector<int> crossings_between(int a, int b) const;
  /// Crossings of a component with itself.
  std::vector<int> self_crossings(int component) const;

  friend bool operator==(const LinkDiagram& lhs, const LinkDiagram& rhs);

 private:
  int num_components_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> component_strands_;
  std::vector<int> strand_component_;  // indexed by label, -1 if unused
  std::vector<int> strand_next_;
  std::vector<int> strand_tail_;
  std::vector<int> strand_head_;
  bool planar_ = true;

  void check_strand(int strand) const;
};

/// Parses `X(a,b,c,d), X[...]...` text (optionally wrapped in `PD[...]`) or the
/// JSON form `{"components": n, "crossings": [[a,b,c,d], ...]}`.
LinkDiagram parse_pd(std::string_view text);

/// Parses oriented Gauss code: one token sequence per component, tokens like
/// `O1+` / `U12-`, components separated by `;`, `|` or newlines.
LinkDiagram parse_gauss(std::string_view text);

/// Reads a diagram from a file. JSON and `X(...)`/`PD[...]` contents are read
/// as PD codes, anything else as Gauss code.
LinkDiagram read_diagram_file(const std::string& path);

std::string to_gauss(const LinkDiagram& d);
std::string to_pd_text(const LinkDiagram& d);

/// Half the signed count of crossings between components a and b.
int linking_number(const LinkDiagram& d, int a, int b);
/// Signed count of crossings where a passes under b.
int under_crossing_count(const LinkDiagram& d, int a, int b);
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

/// Diagram with every component's orientation reversed (`which` empty) or
/// only the listed components reversed.
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& which = {});
/// Mirror image: every crossing switches over and under.
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace masseylink
