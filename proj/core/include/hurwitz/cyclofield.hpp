#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace hurwitz {

using Rational = mpq_class;

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// An element of the real cyclotomic field Q(theta), theta = 2cos(pi/L),
/// stored as a polynomial in theta reduced mod the minimal polynomial Psi.
/// Elements are canonical: equal iff their coefficient vectors are equal.
class FieldElement {
public:
  FieldElement() = default;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const FieldContext* context() const { return ctx_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inv() const;  // DivisionByZero on 0

  /// Exact sign: 0 iff the element is 0, otherwise +/-1 determined by
  /// rational interval evaluation over the isolating interval of theta,
  /// bisecting until the value interval excludes 0.
  int sign() const;

  /// Canonical serialization, usable as an exact hash/dedup key.
  std::string key() const;

  /// 64-bit float approximation (Horner at a double approximation of theta).
  double to_double() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

private:
  friend class FieldContext;
  FieldElement(const FieldContext* ctx, std::vector<Rational> coeffs);

  const FieldContext* ctx_ = nullptr;
  std::vector<Rational> coeffs_;  // degree < deg(Psi), little-endian
};

/// Shared arithmetic context for Q(2cos(pi/L)).
///
/// L is the lcm of the diagram's finite bond labels (L = 1 when there are
/// none, making the field the rationals with theta = -2). Psi is obtained by
/// building the cyclotomic polynomial Phi_{2L} and folding it through the
/// substitution x = z + 1/z; the isolating interval is bootstrapped from a
/// float approximation of theta and certified by exact Sturm root counting.
class FieldContext {
public:
  static FieldContextPtr create(const std::set<long>& finite_labels);

  long level() const { return level_; }  // the integer L
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  std::pair<Rational, Rational> isolating_interval() const;
  double theta_approx() const { return theta_approx_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement integer(long v) const;
  FieldElement rational(const Rational& v) const;
  FieldElement theta() const;
  FieldElement element(std::vector<Rational> coeffs) const;  // reduces mod Psi

  /// p_k(theta) = 2cos(k*pi/L) via p_0 = 2, p_1 = x, p_{k+1} = x p_k - p_{k-1}.
  /// Requires 0 <= k <= L.
  FieldElement chebyshev_value(long k) const;

  /// The bilinear form entry -cos(pi/m); m = 0 encodes the infinite label
  /// and yields -1. Finite m must divide L.
  FieldElement bond_value(long m) const;

private:
  friend class FieldElement;
  FieldContext() = default;

  std::vector<Rational> reduce(std::vector<Rational> poly) const;
  int sign_of_reduced(const std::vector<Rational>& coeffs) const;

  long level_ = 1;
  std::vector<Rational> min_poly_;  // monic, integer coefficients
  Rational iso_lo_, iso_hi_;        // isolating interval for theta
  double theta_approx_ = 0.0;

  // Read-mostly cache of the best refinement seen by sign(); sign() works on
  // a local copy and publishes narrower intervals back here.
  mutable std::mutex cache_mutex_;
  mutable Rational cached_lo_, cached_hi_;
};

/// Builds the field context for a diagram's label set. Labels must be finite
/// (the infinite label is excluded by the caller); L = lcm(labels), or 1 for
/// the empty set.
FieldContextPtr context_for(const std::set<long>& finite_labels);

}  // namespace hurwitz
