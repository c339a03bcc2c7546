#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

/// Exhaustive desk-scale ground truth. Deliberately naive: only the field and
/// matrix layer is shared with the main code path, so agreement between the
/// oracle and the library is a meaningful check.
struct FiniteGroupTable {
  const RootSpace* space = nullptr;
  std::vector<Matrix> elements;  // BFS discovery order, identity first
  std::unordered_map<std::string, int> index_of;
  std::vector<Reflection> reflections;  // all w s w^-1, deduplicated

  int index(const Matrix& m) const;
};

/// Word-graph BFS closure of the group. CapExceeded once more than `cap`
/// elements are discovered (the group is presumed infinite).
FiniteGroupTable enumerate_group(const RootSpace& space, std::size_t cap);

/// All reflection tuples of the given length whose product is the target,
/// in lexicographic order of reflection indices.
std::vector<Factorization> all_factorizations(const FiniteGroupTable& table,
                                              const Matrix& target, int length);

/// Union-find closure under single Hurwitz moves; every move image must stay
/// inside the input set. Orbits are listed by smallest member index.
std::vector<std::vector<int>> orbit_partition(
    const std::vector<Factorization>& factorizations);

/// Conjugacy classes of the reflections by exhaustive g t g^-1, listed by
/// first appearance in the table's reflection order.
std::vector<std::vector<Reflection>> brute_conjugacy(const FiniteGroupTable& table);

}  // namespace hurwitz
