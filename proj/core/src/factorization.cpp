#include "hurwitz/factorization.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

BraidWord inverse(const BraidWord& b) {
  BraidWord out(b.rbegin(), b.rend());
  for (int& m : out) m = -m;
  return out;
}

Factorization::Factorization(Unchecked, const RootSpace& space, Matrix target,
                             std::vector<Reflection> factors)
    : space_(&space), target_(std::move(target)), factors_(std::move(factors)) {}

Factorization::Factorization(const RootSpace& space, std::vector<Reflection> factors)
    : space_(&space), factors_(std::move(factors)) {
  Matrix prod = space.identity();
  for (const auto& t : factors_) prod = prod * space.matrix_of(t);
  target_ = std::move(prod);
}

Factorization::Factorization(const RootSpace& space, Matrix target,
                             std::vector<Reflection> factors)
    : space_(&space), target_(std::move(target)), factors_(std::move(factors)) {
  if (product() != target_)
    fail(ErrorCode::ProductMismatch,
         "product of the factors does not equal the target");
}

const Reflection& Factorization::factor(int i) const {
  if (i < 1 || i > size())
    fail(ErrorCode::InvalidArgument,
         "factor position " + std::to_string(i) + " out of range 1.." +
             std::to_string(size()));
  return factors_[i - 1];
}

Matrix Factorization::product() const {
  Matrix prod = space_->identity();
  for (const auto& t : factors_) prod = prod * space_->matrix_of(t);
  return prod;
}

std::string Factorization::key() const {
  std::string out;
  for (const auto& t : factors_) {
    out += t.key();
    out += ';';
  }
  return out;
}

Factorization apply_generator(const Factorization& f, int i, int sign) {
  if (i < 1 || i >= f.size())
    fail(ErrorCode::InvalidArgument,
         "move index " + std::to_string(i) + " out of range 1.." +
             std::to_string(f.size() - 1));
  if (sign != 1 && sign != -1)
    fail(ErrorCode::InvalidArgument, "move sign must be +1 or -1");
  std::vector<Reflection> factors = f.factors();
  const RootSpace& space = f.space();
  Reflection& a = factors[i - 1];
  Reflection& b = factors[i];
  if (sign > 0) {
    Reflection conj = space.conjugate_by_reflection(b, a);
    b = a;
    a = std::move(conj);
  } else {
    Reflection conj = space.conjugate_by_reflection(a, b);
    a = b;
    b = std::move(conj);
  }
  return Factorization(Factorization::Unchecked{}, space, f.target(),
                       std::move(factors));
}

Factorization replay(const Factorization& f, const BraidWord& b) {
  Factorization cur = f;
  for (std::size_t k = 0; k < b.size(); ++k) {
    int move = b[k];
    if (move == 0)
      fail(ErrorCode::InvalidArgument,
           "braid entry at position " + std::to_string(k + 1) + " is zero");
    int i = move > 0 ? move : -move;
    if (i < 1 || i >= cur.size())
      fail(ErrorCode::InvalidArgument,
           "braid entry at position " + std::to_string(k + 1) +
               " is out of range for length " + std::to_string(cur.size()));
    cur = apply_generator(cur, i, move > 0 ? 1 : -1);
  }
  require_internal(cur.product() == f.target(),
                   "replay broke the product invariant");
  return cur;
}

int ClassMultiset::total() const {
  int sum = 0;
  for (const auto& [cls, count] : counts) sum += count;
  return sum;
}

ClassMultiset class_multiset(const Factorization& f, const ClassLabeling& labeling) {
  ClassMultiset out;
  for (const auto& t : f.factors()) ++out.counts[f.space().class_of(t, labeling)];
  return out;
}

std::pair<Factorization, BraidWord> shift_pair_right(const Factorization& f, int i) {
  if (i < 1 || i + 2 > f.size())
    fail(ErrorCode::InvalidArgument,
         "pair at position " + std::to_string(i) + " has nothing to its right");
  if (f.factor(i) != f.factor(i + 1))
    fail(ErrorCode::InvalidArgument,
         "factors at positions " + std::to_string(i) + ", " +
             std::to_string(i + 1) + " are not equal");
  BraidWord braid{i + 1, i};
  Factorization out = apply_generator(apply_generator(f, i + 1, 1), i, 1);
  return {std::move(out), std::move(braid)};
}

namespace {

// successors in deterministic order: i ascending, +1 before -1
template <typename Fn>
void for_each_move(int size, Fn&& fn) {
  for (int i = 1; i < size; ++i) {
    fn(i, 1);
    fn(i, -1);
  }
}

}  // namespace

OrbitResult orbit_bfs(const Factorization& f, std::size_t cap, int threads) {
  OrbitResult result;
  std::unordered_set<std::string> seen;
  if (cap == 0) {
    result.truncated = true;
    return result;
  }
  seen.insert(f.key());
  result.states.push_back(f);
  std::size_t level_begin = 0;
  while (level_begin < result.states.size()) {
    std::size_t level_end = result.states.size();
    // Expand the whole level first; merging in (parent, move) order keeps the
    // discovery order identical for every thread count.
    std::vector<std::vector<Factorization>> children(level_end - level_begin);
    auto expand = [&](std::size_t from, std::size_t to) {
      for (std::size_t s = from; s < to; ++s) {
        const Factorization& parent = result.states[s];
        for_each_move(parent.size(), [&](int i, int sign) {
          children[s - level_begin].push_back(apply_generator(parent, i, sign));
        });
      }
    };
    int workers = std::max(1, threads);
    if (workers == 1 || level_end - level_begin < 2) {
      expand(level_begin, level_end);
    } else {
      std::vector<std::thread> pool;
      std::size_t count = level_end - level_begin;
      std::size_t chunk = (count + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t from = level_begin + w * chunk;
        std::size_t to = std::min(level_end, from + chunk);
        if (from >= to) break;
        pool.emplace_back(expand, from, to);
      }
      for (auto& t : pool) t.join();
    }
    for (auto& bucket : children) {
      for (auto& child : bucket) {
        std::string key = child.key();
        if (seen.count(key)) continue;
        if (result.states.size() >= cap) {
          result.truncated = true;
          return result;
        }
        seen.insert(std::move(key));
        result.states.push_back(std::move(child));
      }
    }
    level_begin = level_end;
  }
  return result;
}

namespace {

struct SearchNode {
  Factorization state;
  std::string parent_key;
  int move = 0;  // signed generator applied to the parent to reach this node
};

using SearchMap = std::unordered_map<std::string, SearchNode>;

// Braid from the seed of `side` to the node with the given key.
BraidWord path_from_seed(const SearchMap& side, std::string key) {
  BraidWord out;
  while (true) {
    const SearchNode& node = side.at(key);
    if (node.move == 0) break;
    out.push_back(node.move);
    key = node.parent_key;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

BraidWord connect_bfs(const Factorization& f, const Factorization& g,
                      std::optional<std::size_t> cap) {
  if (f.size() != g.size())
    fail(ErrorCode::LengthMismatch, "factorizations have different lengths");
  std::string fkey = f.key(), gkey = g.key();
  if (fkey == gkey) return {};

  SearchMap from_f, from_g;
  std::deque<std::string> frontier_f{fkey}, frontier_g{gkey};
  from_f.emplace(fkey, SearchNode{f, {}, 0});
  from_g.emplace(gkey, SearchNode{g, {}, 0});

  // meeting key and the braids reconstructed on each side
  auto stitch = [&](const std::string& meet) {
    BraidWord fb = path_from_seed(from_f, meet);
    BraidWord gb = path_from_seed(from_g, meet);
    BraidWord back = inverse(gb);
    fb.insert(fb.end(), back.begin(), back.end());
    return fb;
  };

  // Once either frontier empties, that side's whole orbit has been explored
  // without meeting the other seed, so the orbits are disjoint.
  while (!frontier_f.empty() && !frontier_g.empty()) {
    bool expand_f = frontier_f.size() <= frontier_g.size();
    auto& frontier = expand_f ? frontier_f : frontier_g;
    auto& own = expand_f ? from_f : from_g;
    auto& other = expand_f ? from_g : from_f;

    std::size_t count = frontier.size();
    for (std::size_t n = 0; n < count; ++n) {
      std::string key = std::move(frontier.front());
      frontier.pop_front();
      const Factorization parent = own.at(key).state;
      std::optional<BraidWord> found;
      for_each_move(parent.size(), [&](int i, int sign) {
        if (found) return;
        Factorization child = apply_generator(parent, i, sign);
        std::string child_key = child.key();
        if (own.count(child_key)) return;
        own.emplace(child_key, SearchNode{child, key, sign * i});
        if (other.count(child_key)) {
          found = stitch(child_key);
          return;
        }
        frontier.push_back(std::move(child_key));
      });
      if (found) return *found;
      if (cap && from_f.size() + from_g.size() > *cap)
        fail(ErrorCode::NotConnected,
             "search cap exhausted before the factorizations met");
    }
  }
  fail(ErrorCode::NotConnected,
       "factorizations lie in different Hurwitz orbits");
}

}  // namespace hurwitz
