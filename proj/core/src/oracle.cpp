#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

int FiniteGroupTable::index(const Matrix& m) const {
  auto it = index_of.find(m.key());
  require_internal(it != index_of.end(), "element missing from the group table");
  return it->second;
}

FiniteGroupTable enumerate_group(const RootSpace& space, std::size_t cap) {
  FiniteGroupTable table;
  table.space = &space;
  table.elements.push_back(space.identity());
  table.index_of.emplace(table.elements[0].key(), 0);
  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (int i = 1; i <= space.rank(); ++i) {
      Matrix next = table.elements[head] * space.simple_reflection(i);
      std::string key = next.key();
      if (table.index_of.count(key)) continue;
      if (table.elements.size() >= cap)
        fail(ErrorCode::CapExceeded,
             "group has more than " + std::to_string(cap) +
                 " elements; presumed infinite");
      table.index_of.emplace(std::move(key), static_cast<int>(table.elements.size()));
      table.elements.push_back(std::move(next));
    }
  }

  std::unordered_set<std::string> seen;
  for (const auto& g : table.elements) {
    for (int i = 1; i <= space.rank(); ++i) {
      Reflection t = space.conjugate(space.simple(i), g);
      if (seen.insert(t.key()).second) table.reflections.push_back(t);
    }
  }
  return table;
}

namespace {

void search(const FiniteGroupTable& table, const Matrix& remaining, int length,
            std::vector<Reflection>& chosen, std::vector<Factorization>& out) {
  const RootSpace& space = *table.space;
  if (length == 0) {
    if (remaining.is_identity())
      out.emplace_back(space, std::vector<Reflection>(chosen));
    return;
  }
  for (const auto& t : table.reflections) {
    chosen.push_back(t);
    // t * (rest) = remaining  =>  rest = t * remaining
    search(table, space.matrix_of(t) * remaining, length - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Factorization> all_factorizations(const FiniteGroupTable& table,
                                              const Matrix& target, int length) {
  std::vector<Factorization> out;
  std::vector<Reflection> chosen;
  if (length < 0) return out;
  search(table, target, length, chosen, out);
  return out;
}

std::vector<std::vector<int>> orbit_partition(
    const std::vector<Factorization>& factorizations) {
  std::size_t n = factorizations.size();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(factorizations[i].key(), static_cast<int>(i));

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Factorization& f = factorizations[i];
    for (int pos = 1; pos < f.size(); ++pos) {
      for (int sign : {1, -1}) {
        Factorization image = apply_generator(f, pos, sign);
        auto it = index.find(image.key());
        require_internal(it != index.end(),
                         "Hurwitz move left the factorization set");
        int a = find(static_cast<int>(i)), b = find(it->second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::unordered_map<int, std::size_t> orbit_slot;
  std::vector<std::vector<int>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    int root = find(static_cast<int>(i));
    auto [it, fresh] = orbit_slot.emplace(root, orbits.size());
    if (fresh) orbits.emplace_back();
    orbits[it->second].push_back(static_cast<int>(i));
  }
  return orbits;
}

std::vector<std::vector<Reflection>> brute_conjugacy(const FiniteGroupTable& table) {
  const RootSpace& space = *table.space;
  std::unordered_set<std::string> assigned;
  std::vector<std::vector<Reflection>> classes;
  for (const auto& t : table.reflections) {
    if (assigned.count(t.key())) continue;
    std::vector<Reflection> cls;
    std::unordered_set<std::string> members;
    for (const auto& g : table.elements) {
      Reflection image = space.conjugate(t, g);
      if (members.insert(image.key()).second) cls.push_back(image);
    }
    for (const auto& member : cls) assigned.insert(member.key());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hurwitz
