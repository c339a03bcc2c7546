#include "hurwitz/normalize.hpp"

#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

bool PathProfile::all_up() const {
  for (EdgeDir d : directions)
    if (d == EdgeDir::Down) return false;
  return true;
}

PathProfile profile_prefix(const Factorization& f, int prefix_len) {
  if (prefix_len < 0 || prefix_len > f.size())
    fail(ErrorCode::InvalidArgument, "profile prefix length out of range");
  const RootSpace& space = f.space();
  PathProfile p;
  p.vertex_lengths.reserve(prefix_len + 1);
  Matrix cur = space.identity();
  p.vertex_lengths.push_back(0);
  for (int i = 1; i <= prefix_len; ++i) {
    cur = cur * space.matrix_of(f.factor(i));
    p.vertex_lengths.push_back(space.length(cur));
    int prev = p.vertex_lengths[i - 1], next = p.vertex_lengths[i];
    require_internal(prev != next, "adjacent path vertices with equal length");
    p.directions.push_back(next > prev ? EdgeDir::Up : EdgeDir::Down);
  }
  return p;
}

PathProfile profile(const Factorization& f) { return profile_prefix(f, f.size()); }

std::optional<int> find_peak(const PathProfile& p) {
  for (std::size_t i = 0; i + 1 < p.directions.size(); ++i)
    if (p.directions[i] == EdgeDir::Up && p.directions[i + 1] == EdgeDir::Down)
      return static_cast<int>(i) + 1;
  return std::nullopt;
}

namespace {

// sigma^k on a 2-tuple, one step at a time
void step_pair(const RootSpace& space, Reflection& a, Reflection& b, int sign) {
  if (sign > 0) {
    Reflection conj = space.conjugate_by_reflection(b, a);
    b = a;
    a = std::move(conj);
  } else {
    Reflection conj = space.conjugate_by_reflection(a, b);
    a = b;
    b = std::move(conj);
  }
}

}  // namespace

std::pair<Factorization, BraidWord> resolve_peak(const Factorization& f, int i,
                                                 const NormalizeOptions& opts) {
  if (i < 1 || i + 1 > f.size())
    fail(ErrorCode::InvalidArgument, "peak index out of range");
  if (f.factor(i) == f.factor(i + 1))
    fail(ErrorCode::InvalidArgument,
         "peak factors are equal; extract the pair instead");

  const RootSpace& space = f.space();
  Matrix before = space.identity();
  for (int k = 1; k < i; ++k) before = before * space.matrix_of(f.factor(k));
  int len_before = space.length(before);
  Matrix old_mid = before * space.matrix_of(f.factor(i));
  int len_mid = space.length(old_mid);
  Matrix after = old_mid * space.matrix_of(f.factor(i + 1));
  int len_after = space.length(after);
  if (!(len_mid > len_before && len_mid > len_after))
    fail(ErrorCode::InvalidArgument, "edges do not form a peak");

  long bound = static_cast<long>(opts.peak_search_factor) *
               (static_cast<long>(f.size()) + len_mid);
  Reflection pos_a = f.factor(i), pos_b = f.factor(i + 1);
  Reflection neg_a = pos_a, neg_b = pos_b;
  for (long k = 1; k <= bound; ++k) {
    for (int sign : {1, -1}) {
      Reflection& a = sign > 0 ? pos_a : neg_a;
      Reflection& b = sign > 0 ? pos_b : neg_b;
      step_pair(space, a, b, sign);
      Matrix mid = before * space.matrix_of(a);
      int len_new = space.length(mid);
      if (len_new > len_before && len_new > len_after) continue;
      // non-peak shape found; the middle strictly dropped
      require_internal(len_new < len_mid,
                       "peak resolution did not lower the middle vertex");
      BraidWord braid(static_cast<std::size_t>(k), sign > 0 ? i : -i);
      return {replay(f, braid), std::move(braid)};
    }
  }
  internal_error("peak resolution search exceeded its bound");
}

NormalForm normalize(const Factorization& f, const NormalizeOptions& opts,
                     NormalizeStats* stats) {
  const RootSpace& space = f.space();
  Factorization cur = f;
  BraidWord braid;
  int active = cur.size();

  auto record = [&](const BraidWord& b) {
    braid.insert(braid.end(), b.begin(), b.end());
  };

  while (active > 0) {
    // 1. extract the rightmost adjacent equal pair of the active region
    int pair_at = 0;
    for (int j = active - 1; j >= 1; --j) {
      if (cur.factor(j) == cur.factor(j + 1)) {
        pair_at = j;
        break;
      }
    }
    if (pair_at > 0) {
      while (pair_at + 1 < active) {
        auto [shifted, b] = shift_pair_right(cur, pair_at);
        cur = std::move(shifted);
        record(b);
        ++pair_at;
      }
      active -= 2;
      if (stats) ++stats->pair_extractions;
      continue;
    }

    // 2. profile of the active path
    PathProfile p = profile_prefix(cur, active);
    auto peak = find_peak(p);
    if (!peak) break;

    // 3. resolve the first peak
    long sum_before =
        std::accumulate(p.vertex_lengths.begin(), p.vertex_lengths.end(), 0L);
    auto [resolved, b] = resolve_peak(cur, *peak, opts);
    cur = std::move(resolved);
    record(b);
    if (stats) {
      PathProfile q = profile_prefix(cur, active);
      long sum_after =
          std::accumulate(q.vertex_lengths.begin(), q.vertex_lengths.end(), 0L);
      stats->peak_resolution_sums.emplace_back(sum_before, sum_after);
      ++stats->peak_resolutions;
      require_internal(sum_after < sum_before,
                       "vertex-length sum failed to decrease");
    }
  }

  // assemble and check the postconditions
  std::vector<Reflection> core_factors(cur.factors().begin(),
                                       cur.factors().begin() + active);
  std::vector<Reflection> pairs;
  for (int j = active + 1; j <= cur.size(); j += 2) {
    require_internal(cur.factor(j) == cur.factor(j + 1),
                     "extracted pairs are not adjacent-equal");
    pairs.push_back(cur.factor(j));
  }

  Factorization core(space, f.target(), std::move(core_factors));
  PathProfile core_profile = profile(core);
  require_internal(core_profile.all_up(), "core profile is not all-Up");
  require_internal(core.size() <= space.length(f.target()),
                   "strictly increasing path longer than the target length");
  require_internal(replay(f, braid) == cur, "braid does not replay to the result");

  return NormalForm{std::move(core), std::move(pairs), std::move(braid),
                    std::move(cur)};
}

}  // namespace hurwitz
