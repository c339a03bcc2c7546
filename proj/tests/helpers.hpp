#pragma once

#include <memory>
#include <random>
#include <vector>

#include "hurwitz/connect.hpp"
#include "hurwitz/oracle.hpp"

namespace testutil {

using namespace hurwitz;

inline constexpr const char* kA2 = "rank 2\nm 1 2 3";
inline constexpr const char* kB2 = "rank 2\nm 1 2 4";
inline constexpr const char* kA1xA1 = "rank 2\nm 1 2 2";
inline constexpr const char* kI25 = "rank 2\nm 1 2 5";
inline constexpr const char* kI26 = "rank 2\nm 1 2 6";
inline constexpr const char* kI2inf = "rank 2\nm 1 2 inf";
inline constexpr const char* kA3 = "rank 3\nm 1 2 3\nm 2 3 3";

inline std::unique_ptr<RootSpace> make_space(const char* dsl) {
  return std::make_unique<RootSpace>(parse_diagram(dsl));
}

using Rng = std::mt19937_64;

/// Random reflection as an odd palindrome u s_p u^-1 with |u| <= max_depth.
inline Reflection random_reflection(const RootSpace& space, Rng& rng,
                                    int max_depth) {
  int n = space.rank();
  std::uniform_int_distribution<int> simple(1, n);
  std::uniform_int_distribution<int> depth(0, max_depth);
  Word w;
  int d = depth(rng);
  for (int i = 0; i < d; ++i) w.push_back(simple(rng));
  Word word = w;
  word.push_back(simple(rng));
  for (auto it = w.rbegin(); it != w.rend(); ++it) word.push_back(*it);
  return space.reflection_of_word(word);
}

inline Factorization random_factorization(const RootSpace& space, Rng& rng,
                                          int len, int max_depth) {
  std::vector<Reflection> factors;
  factors.reserve(len);
  for (int i = 0; i < len; ++i)
    factors.push_back(random_reflection(space, rng, max_depth));
  return Factorization(space, std::move(factors));
}

/// The canonical factorization (s_1, ..., s_n, p_1, p_1, ..., p_k, p_k) for
/// the identity Coxeter word, with pair representatives given by simple index.
inline Factorization canonical_factorization(const RootSpace& space,
                                             const std::vector<int>& pair_simples) {
  std::vector<Reflection> factors;
  for (int i = 1; i <= space.rank(); ++i) factors.push_back(space.simple(i));
  for (int q : pair_simples) {
    factors.push_back(space.simple(q));
    factors.push_back(space.simple(q));
  }
  return Factorization(space, std::move(factors));
}

inline Factorization random_walk(const Factorization& f, Rng& rng, int moves) {
  Factorization cur = f;
  if (cur.size() < 2) return cur;
  std::uniform_int_distribution<int> pos(1, cur.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < moves; ++i)
    cur = apply_generator(cur, pos(rng), coin(rng) ? 1 : -1);
  return cur;
}

inline int max_factor_word_length(const Factorization& f) {
  int best = 0;
  for (const auto& t : f.factors())
    best = std::max(best, static_cast<int>(f.space().word_of(t).size()));
  return best;
}

inline CoxeterWord identity_coxeter_word(const RootSpace& space) {
  std::vector<int> perm(space.rank());
  for (int i = 0; i < space.rank(); ++i) perm[i] = i + 1;
  return coxeter_word(space.diagram(), perm);
}

}  // namespace testutil
