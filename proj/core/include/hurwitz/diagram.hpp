#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// Bond label m(i,j). Finite labels are >= 2; 0 encodes the infinite label
/// (0 is otherwise invalid, so the encoding is unambiguous and matches the
/// JSON convention).
using Label = long;
inline constexpr Label kInfiniteBond = 0;

/// A Coxeter diagram: rank n and the symmetric label matrix m(i,j) with
/// m(i,i) = 1 and m(i,j) >= 2 for i != j. Immutable after construction and
/// safe to share across threads.
class CoxeterDiagram {
public:
  /// All off-diagonal labels default to 2 (commuting generators).
  explicit CoxeterDiagram(int rank);

  int rank() const { return rank_; }

  /// 1-based; label(i,i) = 1, label(i,j) = label(j,i).
  Label label(int i, int j) const;

  /// Sets m(i,j) = m(j,i). Rejects i == j, out-of-range indices, labels < 2
  /// (other than kInfiniteBond) and conflicting redefinition.
  void set_label(int i, int j, Label m);

  /// The finite off-diagonal labels (input for the field context).
  std::set<Label> finite_labels() const;

private:
  void check_index(int i) const;

  int rank_;
  std::vector<Label> labels_;  // row-major rank x rank
  std::vector<bool> assigned_;
};

/// Conjugacy classes of the simple reflections: two simples share a class id
/// iff they are joined by a path of odd-labeled edges (an edge exists when
/// m(i,j) >= 3). Ids are 1..k, ordered by smallest member index.
struct ClassLabeling {
  std::vector<int> class_of_simple;  // index 0 unused; [1..n]
  int class_count = 0;

  int of(int simple) const { return class_of_simple.at(simple); }
};

ClassLabeling odd_components(const CoxeterDiagram& d);

/// A choice of Coxeter element: the word s_{pi(1)} ... s_{pi(n)}.
struct CoxeterWord {
  std::vector<int> permutation;  // pi(1..n) as 1-based values
  std::vector<int> letters;      // equal to permutation; kept for clarity
};

CoxeterWord coxeter_word(const CoxeterDiagram& d, const std::vector<int>& permutation);

/// Parses the diagram DSL:
///
///   rank <n>
///   m <i> <j> <label>     # label an integer >= 2, or `inf`
///
/// Line-oriented, `#` starts a comment, unmentioned off-diagonal labels
/// default to 2. Errors carry a "line L, column C" location.
CoxeterDiagram parse_diagram(std::string_view text);

}  // namespace hurwitz
