#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/rootspace.hpp"

namespace hurwitz {

/// A braid word acting on factorizations: entry +i applies sigma_i, entry -i
/// applies sigma_i^-1, left to right. Positions are 1-based, so i ranges over
/// 1..len-1 at the point of application.
using BraidWord = std::vector<int>;

/// Reverses the word and negates each entry.
BraidWord inverse(const BraidWord& b);

/// A tuple of reflections with a fixed target product. The product invariant
/// (left-to-right product of the factor matrices equals the target) is
/// checked at construction and after every replay; Hurwitz moves preserve it
/// by construction.
class Factorization {
public:
  /// Target is taken to be the product of the factors.
  Factorization(const RootSpace& space, std::vector<Reflection> factors);

  /// Verifies product(factors) == target, else ProductMismatch.
  Factorization(const RootSpace& space, Matrix target, std::vector<Reflection> factors);

  const RootSpace& space() const { return *space_; }
  const Matrix& target() const { return target_; }
  int size() const { return static_cast<int>(factors_.size()); }
  const Reflection& factor(int i) const;  // 1-based
  const std::vector<Reflection>& factors() const { return factors_; }

  Matrix product() const;

  /// Exact deduplication key: concatenated canonical root coefficients.
  std::string key() const;

  bool operator==(const Factorization& other) const {
    return factors_ == other.factors_;
  }
  bool operator!=(const Factorization& other) const { return !(*this == other); }

private:
  struct Unchecked {};
  Factorization(Unchecked, const RootSpace& space, Matrix target,
                std::vector<Reflection> factors);

  friend Factorization apply_generator(const Factorization&, int, int);

  const RootSpace* space_;
  Matrix target_;
  std::vector<Reflection> factors_;
};

/// One Hurwitz move: sign +1 sends (..., t_i, t_{i+1}, ...) to
/// (..., t_i t_{i+1} t_i, t_i, ...); sign -1 to (..., t_{i+1}, t_{i+1} t_i t_{i+1}, ...).
/// The product is preserved. Requires 1 <= i <= len-1 and sign in {-1, +1}.
Factorization apply_generator(const Factorization& f, int i, int sign);

/// Folds apply_generator over the braid word and re-checks the product
/// invariant. Out-of-range moves report their position in the braid.
Factorization replay(const Factorization& f, const BraidWord& b);

/// Multiset of reflection conjugacy classes of the factors: the complete
/// Hurwitz invariant for factorizations of a Coxeter element.
struct ClassMultiset {
  std::map<int, int> counts;

  int total() const;
  bool operator==(const ClassMultiset& other) const { return counts == other.counts; }
  bool operator!=(const ClassMultiset& other) const { return !(*this == other); }
};

ClassMultiset class_multiset(const Factorization& f, const ClassLabeling& labeling);

/// Moves the equal pair at (i, i+1) one slot right past the factor at i+2,
/// which lands at position i unchanged; realized by the braid [i+1, i].
std::pair<Factorization, BraidWord> shift_pair_right(const Factorization& f, int i);

struct OrbitResult {
  std::vector<Factorization> states;  // discovery order, starting at the seed
  bool truncated = false;
};

/// Breadth-first closure under all Hurwitz moves, deduplicated by exact
/// tuple keys. `cap` bounds the number of visited states; hitting it sets
/// `truncated` instead of failing. Deterministic output for any thread count.
OrbitResult orbit_bfs(const Factorization& f, std::size_t cap, int threads = 1);

/// Bidirectional breadth-first search for a braid b with replay(f, b) == g.
/// Terminates whenever f and g lie in the same Hurwitz orbit (the witness is
/// at finite distance even in infinite groups). If a cap is supplied and
/// exhausted, or both orbit sides are exhausted without meeting, reports
/// NotConnected.
BraidWord connect_bfs(const Factorization& f, const Factorization& g,
                      std::optional<std::size_t> cap = std::nullopt);

}  // namespace hurwitz
