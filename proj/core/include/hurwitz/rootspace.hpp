#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/cyclofield.hpp"
#include "hurwitz/diagram.hpp"

namespace hurwitz {

/// A word in the simple generators; letters are 1-based simple indices.
using Word = std::vector<int>;

Word reversed(Word w);

/// Square matrix over the cyclotomic field; group elements act on the root
/// space in the simple-root basis, so equality of group elements is exact
/// matrix equality.
class Matrix {
public:
  Matrix() = default;
  Matrix(int n, const FieldElement& fill);

  int size() const { return n_; }
  const FieldElement& at(int r, int c) const { return a_[r * n_ + c]; }
  FieldElement& at(int r, int c) { return a_[r * n_ + c]; }

  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const { return a_ == other.a_; }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_identity() const;
  std::string key() const;

private:
  int n_ = 0;
  std::vector<FieldElement> a_;  // row-major
};

using GroupElement = Matrix;

/// Vector in the root space (coordinates in the simple-root basis).
struct Root {
  std::vector<FieldElement> coords;

  bool operator==(const Root& other) const { return coords == other.coords; }
  bool operator!=(const Root& other) const { return !(*this == other); }
  std::string key() const;
};

/// A reflection t in T, represented canonically by its positive root scaled
/// so that the first nonzero coordinate is 1. Two reflections are equal iff
/// their canonical roots are equal.
class Reflection {
public:
  Reflection() = default;
  explicit Reflection(Root root) : root_(std::move(root)) {}

  const Root& root() const { return root_; }
  bool operator==(const Reflection& other) const { return root_ == other.root_; }
  bool operator!=(const Reflection& other) const { return !(*this == other); }
  std::string key() const { return root_.key(); }

private:
  Root root_;
};

/// The geometric engine for one Coxeter system: bilinear form, simple
/// reflection matrices, words, lengths, conjugation and class witnesses.
/// Immutable after construction; all operations are pure.
class RootSpace {
public:
  explicit RootSpace(CoxeterDiagram diagram);

  // Factorizations and reflections refer to the engine by address, so it must
  // stay where it was constructed.
  RootSpace(const RootSpace&) = delete;
  RootSpace& operator=(const RootSpace&) = delete;

  const CoxeterDiagram& diagram() const { return diagram_; }
  const FieldContextPtr& context() const { return ctx_; }
  int rank() const { return diagram_.rank(); }

  const Matrix& form() const { return form_; }
  FieldElement form_value(const Root& x, const Root& y) const;  // B(x, y)

  Matrix identity() const;
  const Matrix& simple_reflection(int i) const;  // 1-based
  Root simple_root(int i) const;
  Reflection simple(int i) const;

  /// Matrix action on a root-space vector; result is not canonicalized.
  Root apply(const Matrix& g, const Root& v) const;

  /// Reflects x in the hyperplane of v: x - (2 B(v,x) / B(v,v)) v.
  Root reflect(const Root& v, Root x) const;

  /// Left-to-right product of simple reflection matrices.
  Matrix element_of_word(const Word& w) const;

  /// S-length by greedy descent (smallest descent index first) and the
  /// reduced word it produces.
  int length(const Matrix& g) const;
  Word word_of(const Matrix& g) const;

  /// Decides whether the word's element is a reflection by reconstructing it
  /// from a nonzero column of (I - M); throws NotAReflection otherwise.
  Reflection reflection_of_word(const Word& w) const;
  Reflection reflection_of_matrix(const Matrix& m) const;
  Matrix matrix_of(const Reflection& t) const;

  Reflection conjugate(const Reflection& t, const Matrix& g) const;
  Reflection conjugate_by_reflection(const Reflection& t, const Reflection& by) const;

  /// Canonical positive representative: first nonzero coordinate scaled to 1.
  /// Checks the uniform-sign root property and reports an internal error on
  /// failure, so it must only be fed (multiples of) genuine roots.
  Root canonical_root(Root v) const;

  /// Depth reduction to a simple root alpha_p: returns (p, u) with
  /// element_of_word(u) * s_p * element_of_word(u)^-1 == t, verified by exact
  /// reconstruction before returning.
  std::pair<int, Word> class_witness(const Reflection& t) const;
  int class_of(const Reflection& t, const ClassLabeling& labeling) const;

  /// Odd palindrome u + [p] + reverse(u) spelling t as a word.
  Word word_of(const Reflection& t) const;

private:
  Root scale_first_nonzero(Root v) const;
  bool uniformly_nonnegative(const Root& v) const;
  std::pair<int, Word> depth_reduce(const Reflection& t) const;

  CoxeterDiagram diagram_;
  FieldContextPtr ctx_;
  Matrix form_;
  std::vector<Matrix> simples_;  // index 0 unused
};

}  // namespace hurwitz
