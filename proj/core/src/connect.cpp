#include "hurwitz/connect.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

void validate_coxeter_target(const RootSpace& space, const CoxeterWord& cw,
                             const Factorization& f) {
  int n = space.rank();
  if (f.size() < n)
    fail(ErrorCode::ParityError,
         "factorization of a Coxeter element needs at least " +
             std::to_string(n) + " factors, got " + std::to_string(f.size()));
  if ((f.size() - n) % 2 != 0)
    fail(ErrorCode::ParityError,
         "no factorization of a Coxeter element can have length " +
             std::to_string(f.size()) + " in rank " + std::to_string(n));
  if (f.product() != space.element_of_word(cw.letters))
    fail(ErrorCode::ProductMismatch,
         "factorization product is not the chosen Coxeter element");
}

Decision decide(const Factorization& f, const Factorization& g,
                const ClassLabeling& labeling) {
  if (f.size() != g.size())
    fail(ErrorCode::LengthMismatch, "factorizations have different lengths");
  Decision d;
  d.certificate_f = class_multiset(f, labeling);
  d.certificate_g = class_multiset(g, labeling);
  d.equivalent = d.certificate_f == d.certificate_g;
  return d;
}

std::pair<Factorization, BraidWord> conjugate_pair_by_prefix_entry(
    const Factorization& f, int pair_pos, int i) {
  int q = pair_pos;
  if (q < 1 || q + 1 > f.size())
    fail(ErrorCode::InvalidArgument, "pair position out of range");
  if (f.factor(q) != f.factor(q + 1))
    fail(ErrorCode::InvalidArgument,
         "factors at the pair position are not equal");
  if (i < 1 || i >= q)
    fail(ErrorCode::InvalidArgument,
         "prefix index must lie strictly before the pair");

  BraidWord braid;
  for (int j = i; j <= q; ++j) braid.push_back(j);      // cycle t_i out
  braid.push_back(q);                                   // pair passes back
  braid.push_back(q - 1);
  for (int j = q - 2; j >= i; --j) braid.push_back(-j); // walk t_i home

  Factorization out = replay(f, braid);

  // everything but the pair is restored; the pair is conjugated by t_i
  Reflection expected =
      f.space().conjugate_by_reflection(f.factor(q), f.factor(i));
  for (int p = 1; p <= f.size(); ++p) {
    if (p == q || p == q + 1) {
      require_internal(out.factor(p) == expected,
                       "pair conjugation produced the wrong reflection");
    } else {
      require_internal(out.factor(p) == f.factor(p),
                       "pair conjugation disturbed another factor");
    }
  }
  return {std::move(out), std::move(braid)};
}

std::pair<Factorization, BraidWord> conjugate_pair_by_word(const Factorization& f,
                                                           int pair_pos,
                                                           const Word& u) {
  const RootSpace& space = f.space();
  int n = space.rank();
  if (pair_pos <= n)
    fail(ErrorCode::InvalidArgument, "pair must lie after the core prefix");

  std::vector<int> position_of(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const Reflection& t = f.factor(p);
    for (int s = 1; s <= n; ++s) {
      if (t == space.simple(s)) {
        position_of[s] = p;
        break;
      }
    }
  }
  for (int s = 1; s <= n; ++s)
    if (position_of[s] == 0)
      fail(ErrorCode::InvalidArgument,
           "core prefix is missing simple reflection " + std::to_string(s));

  Factorization cur = f;
  BraidWord braid;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    int letter = *it;
    if (letter < 1 || letter > n)
      fail(ErrorCode::InvalidArgument, "conjugating word letter out of range");
    auto [next, b] = conjugate_pair_by_prefix_entry(cur, pair_pos,
                                                    position_of[letter]);
    cur = std::move(next);
    braid.insert(braid.end(), b.begin(), b.end());
  }

  Reflection expected = f.space().conjugate(
      f.factor(pair_pos), space.element_of_word(u));
  require_internal(cur.factor(pair_pos) == expected,
                   "word conjugation produced the wrong reflection");
  return {std::move(cur), std::move(braid)};
}

Word class_representative_conjugator(const RootSpace& space, const Reflection& t,
                                     const ClassLabeling& labeling) {
  int n = space.rank();
  auto [p, base] = space.class_witness(t);
  int cls = labeling.of(p);
  int q = 0;
  for (int s = 1; s <= n; ++s) {
    if (labeling.of(s) == cls) {
      q = s;
      break;
    }
  }
  require_internal(q > 0, "class has no simple representative");

  Word u = base;
  if (p != q) {
    // shortest odd-labeled diagram path p -> q (exists: same class)
    std::vector<int> prev(n + 1, 0);
    std::vector<int> queue{p};
    prev[p] = p;
    for (std::size_t head = 0; head < queue.size() && prev[q] == 0; ++head) {
      int a = queue[head];
      for (int b = 1; b <= n; ++b) {
        if (b == a || prev[b] != 0) continue;
        Label m = space.diagram().label(a, b);
        if (m != kInfiniteBond && m >= 3 && m % 2 == 1) {
          prev[b] = a;
          queue.push_back(b);
        }
      }
    }
    require_internal(prev[q] != 0, "no odd-labeled path between class members");
    Word path{q};
    for (int v = q; v != p; v = prev[v]) path.push_back(prev[v]);
    std::reverse(path.begin(), path.end());  // p = path[0], ..., q = path.back()

    // per edge a--b with label 2r+1, v = (s_a s_b)^r satisfies v s_a v^-1 = s_b;
    // appending reverse(v) rewrites the witness base point from a to b
    for (std::size_t e = 0; e + 1 < path.size(); ++e) {
      int a = path[e], b = path[e + 1];
      long r = (space.diagram().label(a, b) - 1) / 2;
      Word v;
      for (long k = 0; k < r; ++k) {
        v.push_back(a);
        v.push_back(b);
      }
      Word back = reversed(std::move(v));
      u.insert(u.end(), back.begin(), back.end());
    }
  }

  Matrix conj = space.element_of_word(u);
  Matrix check = conj * space.matrix_of(space.simple(q)) *
                 space.element_of_word(reversed(u));
  require_internal(check == space.matrix_of(t),
                   "representative conjugator reconstruction failed");
  return u;
}

namespace {

// (t,t,r,r) -> (r,r,t,t) at pos via four shift moves
std::pair<Factorization, BraidWord> swap_pair_blocks(const Factorization& f,
                                                     int pos) {
  auto [once, b1] = shift_pair_right(f, pos);
  auto [twice, b2] = shift_pair_right(once, pos + 1);
  BraidWord braid = b1;
  braid.insert(braid.end(), b2.begin(), b2.end());
  return {std::move(twice), std::move(braid)};
}

}  // namespace

std::pair<Factorization, BraidWord> canonicalize(const Factorization& f,
                                                 const CoxeterWord& cw,
                                                 const ClassLabeling& labeling) {
  const RootSpace& space = f.space();
  int n = space.rank();

  NormalForm nf = normalize(f);
  require_internal(nf.core.size() == n,
                   "core of a Coxeter-element factorization must have rank length");

  std::vector<Reflection> canonical_core;
  canonical_core.reserve(n);
  for (int letter : cw.letters) canonical_core.push_back(space.simple(letter));
  Factorization target_core(space, f.target(), std::move(canonical_core));

  BraidWord braid = nf.braid;
  BraidWord core_braid = connect_bfs(nf.core, target_core);
  braid.insert(braid.end(), core_braid.begin(), core_braid.end());
  Factorization cur = replay(nf.flat, core_braid);

  // conjugate each pair to its class representative
  int k = static_cast<int>(nf.pairs.size());
  std::vector<int> pair_class(k, 0);
  for (int j = 0; j < k; ++j) {
    int pos = n + 2 * j + 1;
    Word u = class_representative_conjugator(space, cur.factor(pos), labeling);
    pair_class[j] = space.class_of(cur.factor(pos), labeling);
    // the returned u conjugates s_q up to t; the pair needs the inverse
    auto [next, b] = conjugate_pair_by_word(cur, pos, reversed(u));
    cur = std::move(next);
    braid.insert(braid.end(), b.begin(), b.end());
  }

  // sort the representative pairs by class id with adjacent block swaps
  for (int pass = 0; pass + 1 < k; ++pass) {
    for (int j = 0; j + 1 < k; ++j) {
      if (pair_class[j] <= pair_class[j + 1]) continue;
      auto [next, b] = swap_pair_blocks(cur, n + 2 * j + 1);
      cur = std::move(next);
      braid.insert(braid.end(), b.begin(), b.end());
      std::swap(pair_class[j], pair_class[j + 1]);
    }
  }

  return {std::move(cur), std::move(braid)};
}

Decision connect(const Factorization& f, const Factorization& g,
                 const CoxeterWord& cw, const ClassLabeling& labeling) {
  if (f.target() != g.target())
    fail(ErrorCode::InvalidArgument, "factorizations have different targets");
  Decision d = decide(f, g, labeling);
  if (!d.equivalent) return d;

  auto [canon_f, braid_f] = canonicalize(f, cw, labeling);
  auto [canon_g, braid_g] = canonicalize(g, cw, labeling);
  require_internal(canon_f == canon_g,
                   "equal multisets must canonicalize identically");

  BraidWord witness = braid_f;
  BraidWord back = inverse(braid_g);
  witness.insert(witness.end(), back.begin(), back.end());
  require_internal(replay(f, witness) == g, "witness failed to replay f onto g");
  d.witness = std::move(witness);
  return d;
}

}  // namespace hurwitz
