#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

enum class EdgeDir { Up, Down };

/// S-lengths of the prefix products e, t_1, t_1 t_2, ..., together with the
/// direction of each edge in the Bruhat graph. Adjacent vertex lengths always
/// differ (reflections have odd length), and the first edge from e is Up.
struct PathProfile {
  std::vector<int> vertex_lengths;  // size len + 1
  std::vector<EdgeDir> directions;  // size len

  bool all_up() const;
};

PathProfile profile(const Factorization& f);
PathProfile profile_prefix(const Factorization& f, int prefix_len);

/// Smallest edge index i with Up at i and Down at i+1 (1-based), if any.
std::optional<int> find_peak(const PathProfile& p);

struct NormalizeOptions {
  /// resolve_peak tries sigma_i^k for |k| up to
  /// factor * (path length + length of the peak vertex).
  int peak_search_factor = 10;
};

/// Instrumentation for the normalization loop.
struct NormalizeStats {
  /// (before, after) vertex-length sums of the active path around each peak
  /// resolution; `after` is strictly smaller.
  std::vector<std::pair<long, long>> peak_resolution_sums;
  int pair_extractions = 0;
  int peak_resolutions = 0;
};

/// Replaces the peak at edges (i, i+1) by a non-peak configuration within the
/// dihedral subgroup generated by the two factors, searching k = +1, -1, +2,
/// -2, ... and accepting the first power of sigma_i whose middle vertex stops
/// being a local maximum. Requires distinct factors at i, i+1.
std::pair<Factorization, BraidWord> resolve_peak(const Factorization& f, int i,
                                                 const NormalizeOptions& opts = {});

/// Result of normalization: a strictly increasing core followed by trailing
/// equal pairs. replay(input, braid) equals core ++ (p_1, p_1, ..., p_k, p_k)
/// with the pairs listed in their final tuple order.
struct NormalForm {
  Factorization core;
  std::vector<Reflection> pairs;
  BraidWord braid;
  Factorization flat;  // core followed by the doubled pairs
};

/// Rewrites f into core-plus-pairs shape: extracts adjacent equal pairs to
/// the end of the active region (rightmost pair first), resolves peaks of the
/// remaining path until its profile is all-Up. Already-normal inputs come
/// back unchanged with an empty braid.
NormalForm normalize(const Factorization& f, const NormalizeOptions& opts = {},
                     NormalizeStats* stats = nullptr);

}  // namespace hurwitz
