#include "hurwitz/rootspace.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {
constexpr int kDepthReductionCap = 1 << 20;
constexpr int kDescentCap = 1 << 20;
}  // namespace

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int n, const FieldElement& fill) : n_(n) {
  a_.assign(static_cast<std::size_t>(n) * n, fill);
}

Matrix Matrix::operator*(const Matrix& other) const {
  require_internal(n_ == other.n_, "matrix size mismatch");
  Matrix out(n_, a_[0].context()->zero());
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const FieldElement& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < n_; ++c) {
        if (other.at(k, c).is_zero()) continue;
        out.at(r, c) = out.at(r, c) + v * other.at(k, c);
      }
    }
  return out;
}

bool Matrix::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

std::string Matrix::key() const {
  std::string out;
  for (const auto& e : a_) {
    out += e.key();
    out += '|';
  }
  return out;
}

std::string Root::key() const {
  std::string out;
  for (const auto& e : coords) {
    out += e.key();
    out += '|';
  }
  return out;
}

// ---------------------------------------------------------------------------
// RootSpace

RootSpace::RootSpace(CoxeterDiagram diagram) : diagram_(std::move(diagram)) {
  std::set<long> labels = diagram_.finite_labels();
  ctx_ = context_for(labels);
  int n = rank();

  form_ = Matrix(n, ctx_->zero());
  for (int i = 0; i < n; ++i) {
    form_.at(i, i) = ctx_->one();
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      form_.at(i, j) = ctx_->bond_value(diagram_.label(i + 1, j + 1));
    }
  }

  simples_.resize(n + 1);
  FieldElement two = ctx_->integer(2);
  for (int i = 1; i <= n; ++i) {
    Matrix s(n, ctx_->zero());
    for (int r = 0; r < n; ++r) s.at(r, r) = ctx_->one();
    for (int c = 0; c < n; ++c)
      s.at(i - 1, c) = s.at(i - 1, c) - two * form_.at(i - 1, c);
    simples_[i] = std::move(s);
  }
}

FieldElement RootSpace::form_value(const Root& x, const Root& y) const {
  int n = rank();
  FieldElement acc = ctx_->zero();
  for (int i = 0; i < n; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coords[j].is_zero()) continue;
      acc = acc + x.coords[i] * form_.at(i, j) * y.coords[j];
    }
  }
  return acc;
}

Matrix RootSpace::identity() const {
  Matrix m(rank(), ctx_->zero());
  for (int i = 0; i < rank(); ++i) m.at(i, i) = ctx_->one();
  return m;
}

const Matrix& RootSpace::simple_reflection(int i) const {
  if (i < 1 || i > rank())
    fail(ErrorCode::InvalidArgument, "simple index " + std::to_string(i) + " out of range");
  return simples_[i];
}

Root RootSpace::simple_root(int i) const {
  if (i < 1 || i > rank())
    fail(ErrorCode::InvalidArgument, "simple index " + std::to_string(i) + " out of range");
  Root r;
  r.coords.assign(rank(), ctx_->zero());
  r.coords[i - 1] = ctx_->one();
  return r;
}

Reflection RootSpace::simple(int i) const { return Reflection(simple_root(i)); }

Root RootSpace::apply(const Matrix& g, const Root& v) const {
  int n = rank();
  Root out;
  out.coords.assign(n, ctx_->zero());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (g.at(r, c).is_zero() || v.coords[c].is_zero()) continue;
      out.coords[r] = out.coords[r] + g.at(r, c) * v.coords[c];
    }
  return out;
}

Root RootSpace::reflect(const Root& v, Root x) const {
  FieldElement vv = form_value(v, v);
  require_internal(!vv.is_zero(), "reflecting in an isotropic vector");
  FieldElement scale = (ctx_->integer(2) * form_value(v, x)) * vv.inv();
  for (int i = 0; i < rank(); ++i)
    x.coords[i] = x.coords[i] - scale * v.coords[i];
  return x;
}

Matrix RootSpace::element_of_word(const Word& w) const {
  Matrix out = identity();
  for (int letter : w) out = out * simple_reflection(letter);
  return out;
}

Root RootSpace::scale_first_nonzero(Root v) const {
  int first = -1;
  for (int i = 0; i < rank(); ++i) {
    if (!v.coords[i].is_zero()) {
      first = i;
      break;
    }
  }
  require_internal(first >= 0, "cannot canonicalize the zero vector");
  const FieldElement pivot = v.coords[first];
  if (!pivot.is_one()) {
    FieldElement inv = pivot.inv();
    for (auto& c : v.coords) c = c * inv;
  }
  return v;
}

bool RootSpace::uniformly_nonnegative(const Root& v) const {
  return std::all_of(v.coords.begin(), v.coords.end(),
                     [](const FieldElement& c) { return c.sign() >= 0; });
}

Root RootSpace::canonical_root(Root v) const {
  Root out = scale_first_nonzero(std::move(v));
  require_internal(uniformly_nonnegative(out),
                   "root coordinates are not uniformly signed");
  return out;
}

namespace {

// Smallest i with g(alpha_i) negative, or 0 for the identity. g(alpha_i) is
// column i-1; by the uniform-sign property its first nonzero coordinate
// decides positivity.
int find_descent(const Matrix& g) {
  for (int i = 0; i < g.size(); ++i) {
    for (int r = 0; r < g.size(); ++r) {
      const FieldElement& e = g.at(r, i);
      if (e.is_zero()) continue;
      if (e.sign() < 0) return i + 1;
      break;
    }
  }
  return 0;
}

}  // namespace

int RootSpace::length(const Matrix& g) const {
  Matrix cur = g;
  int steps = 0;
  while (!cur.is_identity()) {
    int descent = find_descent(cur);
    require_internal(descent > 0, "no descent for a non-identity element");
    cur = cur * simples_[descent];
    require_internal(++steps < kDescentCap, "descent loop exceeded its bound");
  }
  return steps;
}

Word RootSpace::word_of(const Matrix& g) const {
  Matrix cur = g;
  Word recorded;
  while (!cur.is_identity()) {
    int descent = find_descent(cur);
    require_internal(descent > 0, "no descent for a non-identity element");
    cur = cur * simples_[descent];
    recorded.push_back(descent);
    require_internal(static_cast<int>(recorded.size()) < kDescentCap,
                     "descent loop exceeded its bound");
  }
  return reversed(std::move(recorded));
}

Reflection RootSpace::reflection_of_matrix(const Matrix& m) const {
  int n = rank();
  // Any nonzero column of (I - M) spans the root line when M is a reflection.
  Root v;
  v.coords.assign(n, ctx_->zero());
  bool nonzero = false;
  for (int c = 0; c < n && !nonzero; ++c) {
    for (int r = 0; r < n; ++r) {
      FieldElement e = (r == c ? ctx_->one() : ctx_->zero()) - m.at(r, c);
      v.coords[r] = e;
      if (!e.is_zero()) nonzero = true;
    }
  }
  if (!nonzero)
    fail(ErrorCode::NotAReflection, "element is the identity");
  v = scale_first_nonzero(std::move(v));
  if (form_value(v, v).is_zero())
    fail(ErrorCode::NotAReflection, "candidate root is isotropic");
  Reflection t{v};
  if (matrix_of(t) != m)
    fail(ErrorCode::NotAReflection, "element is not a reflection");
  if (!uniformly_nonnegative(v))
    fail(ErrorCode::NotAReflection, "candidate root is not uniformly signed");
  return t;
}

Reflection RootSpace::reflection_of_word(const Word& w) const {
  if (w.empty())
    fail(ErrorCode::InvalidArgument, "reflection word must be nonempty");
  return reflection_of_matrix(element_of_word(w));
}

Matrix RootSpace::matrix_of(const Reflection& t) const {
  int n = rank();
  const Root& v = t.root();
  FieldElement vv = form_value(v, v);
  require_internal(!vv.is_zero(), "reflection root is isotropic");
  FieldElement scale = ctx_->integer(2) * vv.inv();
  // B v as a row vector
  std::vector<FieldElement> bv(n, ctx_->zero());
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < n; ++j) {
      if (v.coords[j].is_zero() || form_.at(j, c).is_zero()) continue;
      bv[c] = bv[c] + v.coords[j] * form_.at(j, c);
    }
  Matrix m(n, ctx_->zero());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      FieldElement e = r == c ? ctx_->one() : ctx_->zero();
      if (!v.coords[r].is_zero() && !bv[c].is_zero())
        e = e - scale * v.coords[r] * bv[c];
      m.at(r, c) = e;
    }
  }
  return m;
}

Reflection RootSpace::conjugate(const Reflection& t, const Matrix& g) const {
  return Reflection(canonical_root(apply(g, t.root())));
}

Reflection RootSpace::conjugate_by_reflection(const Reflection& t,
                                              const Reflection& by) const {
  return Reflection(canonical_root(reflect(by.root(), t.root())));
}

std::pair<int, Word> RootSpace::depth_reduce(const Reflection& t) const {
  int n = rank();
  Root beta = t.root();
  Word u;
  int iterations = 0;
  while (true) {
    int simple_index = 0;
    for (int i = 0; i < n; ++i) {
      if (beta.coords[i].is_one()) {
        bool rest_zero = true;
        for (int j = 0; j < n && rest_zero; ++j)
          if (j != i && !beta.coords[j].is_zero()) rest_zero = false;
        if (rest_zero) {
          simple_index = i + 1;
          break;
        }
      }
    }
    if (simple_index > 0) return {simple_index, u};

    int pick = -1;
    for (int i = 1; i <= n; ++i) {
      Root alpha = simple_root(i);
      if (form_value(alpha, beta).sign() > 0) {
        // beta is not simple, so s_i(beta) stays positive
        pick = i;
        break;
      }
    }
    require_internal(pick > 0, "no depth-reducing simple reflection");
    beta = canonical_root(apply(simples_[pick], beta));
    u.push_back(pick);
    require_internal(++iterations < kDepthReductionCap,
                     "depth reduction exceeded its bound");
  }
}

std::pair<int, Word> RootSpace::class_witness(const Reflection& t) const {
  auto [p, u] = depth_reduce(t);
  Matrix conj = element_of_word(u);
  Matrix check = conj * matrix_of(simple(p)) * element_of_word(reversed(u));
  require_internal(check == matrix_of(t), "class witness reconstruction failed");
  return {p, u};
}

int RootSpace::class_of(const Reflection& t, const ClassLabeling& labeling) const {
  return labeling.of(depth_reduce(t).first);
}

Word RootSpace::word_of(const Reflection& t) const {
  auto [p, u] = class_witness(t);
  Word out = u;
  out.push_back(p);
  Word back = reversed(std::move(u));
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

}  // namespace hurwitz
