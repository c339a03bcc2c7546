#pragma once

#include <optional>
#include <utility>

#include "hurwitz/normalize.hpp"

namespace hurwitz {

/// Outcome of the equivalence decision. Two reflection factorizations of a
/// Coxeter element lie in the same Hurwitz orbit iff their class multisets
/// agree; a witness braid is attached when one was constructed.
struct Decision {
  bool equivalent = false;
  ClassMultiset certificate_f;
  ClassMultiset certificate_g;
  std::optional<BraidWord> witness;
};

/// Checks that f is a plausible reflection factorization of the Coxeter
/// element c = s_{pi(1)} ... s_{pi(n)}: length at least n with the right
/// parity (ParityError), and product equal to c (ProductMismatch).
void validate_coxeter_target(const RootSpace& space, const CoxeterWord& cw,
                             const Factorization& f);

/// Class-multiset certificate comparison; no witness. Requires equal lengths.
Decision decide(const Factorization& f, const Factorization& g,
                const ClassLabeling& labeling);

/// Replaces the equal pair (t, t) at pair_pos with (t^a, t^a) where a is the
/// factor at prefix position i < pair_pos, restoring every other factor: a is
/// cycled out past the pair, the conjugated pair passes back over it, and a
/// walks home undoing the conjugations it left behind.
std::pair<Factorization, BraidWord> conjugate_pair_by_prefix_entry(
    const Factorization& f, int pair_pos, int i);

/// Conjugates the pair at pair_pos by the word u (rightmost letter first),
/// locating each letter among the first n positions, which must hold every
/// simple reflection exactly once. The pair becomes (t^w, t^w) with
/// w = element_of_word(u).
std::pair<Factorization, BraidWord> conjugate_pair_by_word(const Factorization& f,
                                                           int pair_pos,
                                                           const Word& u);

/// A word u with element_of_word(u) * s_q * element_of_word(u)^-1 == t, where
/// q is the smallest simple index in t's class. Built from the depth-reduction
/// witness composed with alternating-word conjugators along an odd-labeled
/// diagram path, then verified by exact reconstruction.
Word class_representative_conjugator(const RootSpace& space, const Reflection& t,
                                     const ClassLabeling& labeling);

/// Full rewriting of f into the canonical factorization determined by
/// (cw, class multiset): normalized core connected to (s_{pi(1)},...,s_{pi(n)}),
/// pairs conjugated to their class representatives and sorted by class id.
std::pair<Factorization, BraidWord> canonicalize(const Factorization& f,
                                                 const CoxeterWord& cw,
                                                 const ClassLabeling& labeling);

/// The decision-plus-witness procedure: certificates always attached; when the
/// multisets agree the witness braid replays f exactly onto g.
Decision connect(const Factorization& f, const Factorization& g,
                 const CoxeterWord& cw, const ClassLabeling& labeling);

}  // namespace hurwitz
