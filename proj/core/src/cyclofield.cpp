#include "hurwitz/cyclofield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {
namespace {

using ZPoly = std::vector<mpz_class>;  // little-endian, no trailing zeros
using QPoly = std::vector<Rational>;

void strip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void strip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must vanish.
ZPoly divexact(ZPoly num, const ZPoly& den) {
  require_internal(!den.empty(), "cyclotomic division by zero polynomial");
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class lead = num.back() / den.back();
    require_internal(lead * den.back() == num.back(),
                     "cyclotomic division is not exact");
    std::size_t shift = num.size() - den.size();
    quot[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= lead * den[i];
    strip(num);
  }
  require_internal(num.empty(), "cyclotomic division left a remainder");
  return quot;
}

// Phi_n via (z^n - 1) / prod of the lower-order cyclotomics.
ZPoly cyclotomic(long n) {
  require_internal(n >= 1, "cyclotomic index must be positive");
  ZPoly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divexact(std::move(num), cyclotomic(d));
  }
  return num;
}

// Folds a palindromic polynomial q of even degree 2h into Psi of degree h
// with q(z) = z^h * Psi(z + 1/z). Exact over the integers.
ZPoly fold_palindromic(const ZPoly& q) {
  require_internal(!q.empty() && (q.size() - 1) % 2 == 0,
                   "fold requires even degree");
  std::size_t h = (q.size() - 1) / 2;
  ZPoly work = q;
  ZPoly psi(h + 1, 0);
  // binomial row for (z^2 + 1)^k, rebuilt per k
  for (std::size_t k = h + 1; k-- > 0;) {
    mpz_class c = work.size() > h + k ? work[h + k] : mpz_class(0);
    psi[k] = c;
    if (c == 0) continue;
    // subtract c * z^(h-k) * (z^2 + 1)^k
    mpz_class binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      work[h - k + 2 * j] -= c * binom;
      binom = binom * static_cast<unsigned long>(k - j) /
              static_cast<unsigned long>(j + 1);
    }
  }
  for (const auto& coeff : work)
    require_internal(coeff == 0, "fold left a nonzero remainder");
  require_internal(psi.back() == 1, "folded minimal polynomial is not monic");
  return psi;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
  return d;
}

// Remainder of a by b over Q[x].
QPoly poly_rem(QPoly a, const QPoly& b) {
  strip(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational lead = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a.pop_back();
    strip(a);
  }
  return a;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  seq.push_back(p);
  QPoly d = derivative(p);
  strip(d);
  if (!d.empty()) seq.push_back(d);
  while (seq.back().size() > 1) {
    QPoly r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Number of real roots of p in (a, b]; p squarefree, p(a) != 0, p(b) != 0.
int count_roots(const std::vector<QPoly>& sturm, const Rational& a,
                const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

struct Interval {
  Rational lo, hi;
};

Interval interval_mul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval eval_interval(const QPoly& p, const Interval& x) {
  Interval acc{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = interval_mul(acc, x);
    acc.lo += p[i];
    acc.hi += p[i];
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldContext* ctx, std::vector<Rational> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

namespace {
const FieldContext* common_context(const FieldElement& a, const FieldElement& b) {
  require_internal(a.context() && a.context() == b.context(),
                   "field elements from different contexts");
  return a.context();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldContext* ctx = common_context(a, b);
  std::vector<Rational> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs()[i];
  return FieldElement(ctx, std::move(out));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldContext* ctx = common_context(a, b);
  std::vector<Rational> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs()[i];
  return FieldElement(ctx, std::move(out));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return FieldElement(ctx_, std::move(out));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldContext* ctx = common_context(a, b);
  std::size_t n = a.coeffs().size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs()[j] == 0) continue;
      prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return ctx->element(std::move(prod));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  common_context(a, b);
  return a.coeffs() == b.coeffs();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
  // Extended Euclid over Q[x]: u * this + v * Psi = gcd (a nonzero constant,
  // Psi being irreducible), so u / gcd is the inverse mod Psi.
  QPoly r0 = ctx_->min_poly();
  QPoly r1 = coeffs_;
  strip(r1);
  QPoly u0{}, u1{Rational(1)};  // coefficients of `this` in r0, r1
  while (true) {
    require_internal(!r1.empty(), "gcd with the minimal polynomial vanished");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r, replace (r0,u0) <- (r1,u1), (r1,u1) <- (r, u0 - q*u1)
    QPoly q(r0.size() - r1.size() + 1, Rational(0));
    QPoly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational lead = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = lead;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
      rem.pop_back();
      strip(rem);
    }
    QPoly u2(std::max(u0.size(), q.size() + u1.size()), Rational(0));
    for (std::size_t i = 0; i < u0.size(); ++i) u2[i] += u0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
    strip(u2);
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(rem);
    u1 = std::move(u2);
  }
  Rational g = r1[0];
  QPoly out = u1;
  for (auto& c : out) c /= g;
  return ctx_->element(std::move(out));
}

int FieldElement::sign() const {
  require_internal(ctx_ != nullptr, "sign of an uninitialized field element");
  if (is_zero()) return 0;
  return ctx_->sign_of_reduced(coeffs_);
}

std::string FieldElement::key() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

double FieldElement::to_double() const {
  double x = ctx_ ? ctx_->theta_approx() : 0.0;
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + coeffs_[i].get_d();
  return acc;
}

// ---------------------------------------------------------------------------
// FieldContext

FieldContextPtr FieldContext::create(const std::set<long>& finite_labels) {
  for (long m : finite_labels)
    require_internal(m >= 2, "field labels must be >= 2");
  long level = 1;
  for (long m : finite_labels) level = std::lcm(level, m);

  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->level_ = level;

  if (level == 1) {
    // theta = 2cos(pi) = -2; the field is Q.
    ctx->min_poly_ = {Rational(2), Rational(1)};
  } else {
    ZPoly psi = fold_palindromic(cyclotomic(2 * level));
    ctx->min_poly_.reserve(psi.size());
    for (const auto& c : psi) ctx->min_poly_.emplace_back(c);
  }
  ctx->theta_approx_ = 2.0 * std::cos(M_PI / static_cast<double>(level));

  if (ctx->degree() == 1) {
    // theta is the rational root itself; no interval refinement needed.
    ctx->iso_lo_ = ctx->iso_hi_ = -ctx->min_poly_[0];
  } else {
    // Bootstrap from the float approximation, certify with Sturm counts.
    // Psi is irreducible of degree >= 2, so rational endpoints are never roots.
    auto sturm = sturm_sequence(ctx->min_poly_);
    Rational center(std::lround(ctx->theta_approx_ * 1048576.0), 1048576);
    center.canonicalize();
    Rational width(1, 16);
    for (int attempt = 0;; ++attempt) {
      require_internal(attempt < 128, "failed to isolate theta");
      Rational lo = center - width, hi = center + width;
      int roots = count_roots(sturm, lo, hi);
      if (roots == 1 && sgn(eval(ctx->min_poly_, lo)) !=
                            sgn(eval(ctx->min_poly_, hi))) {
        ctx->iso_lo_ = lo;
        ctx->iso_hi_ = hi;
        break;
      }
      if (roots == 0)
        width *= 2;
      else
        width /= 2;
    }
  }
  ctx->cached_lo_ = ctx->iso_lo_;
  ctx->cached_hi_ = ctx->iso_hi_;
  return ctx;
}

FieldContextPtr context_for(const std::set<long>& finite_labels) {
  return FieldContext::create(finite_labels);
}

std::pair<Rational, Rational> FieldContext::isolating_interval() const {
  return {iso_lo_, iso_hi_};
}

std::vector<Rational> FieldContext::reduce(std::vector<Rational> poly) const {
  std::size_t deg = static_cast<std::size_t>(degree());
  for (std::size_t i = poly.size(); i-- > deg;) {
    Rational c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (std::size_t j = 0; j < deg; ++j)
      poly[i - deg + j] -= c * min_poly_[j];
  }
  poly.resize(deg, Rational(0));
  for (auto& c : poly) c.canonicalize();
  return poly;
}

FieldElement FieldContext::zero() const {
  return FieldElement(this, std::vector<Rational>(degree(), Rational(0)));
}

FieldElement FieldContext::one() const { return integer(1); }

FieldElement FieldContext::integer(long v) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = v;
  return FieldElement(this, std::move(c));
}

FieldElement FieldContext::rational(const Rational& v) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = v;
  return FieldElement(this, std::move(c));
}

FieldElement FieldContext::theta() const {
  if (degree() == 1) return rational(-min_poly_[0]);
  std::vector<Rational> c(degree(), Rational(0));
  c[1] = 1;
  return FieldElement(this, std::move(c));
}

FieldElement FieldContext::element(std::vector<Rational> coeffs) const {
  if (coeffs.size() < static_cast<std::size_t>(degree()))
    coeffs.resize(degree(), Rational(0));
  return FieldElement(this, reduce(std::move(coeffs)));
}

FieldElement FieldContext::chebyshev_value(long k) const {
  if (k < 0 || k > level_)
    fail(ErrorCode::InvalidArgument,
         "chebyshev index must lie in [0, L], got " + std::to_string(k));
  FieldElement prev = integer(2);
  if (k == 0) return prev;
  FieldElement cur = theta();
  for (long i = 1; i < k; ++i) {
    FieldElement next = theta() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElement FieldContext::bond_value(long m) const {
  if (m == 0) return integer(-1);  // infinite label convention
  if (m < 2) fail(ErrorCode::InvalidArgument, "bond label must be >= 2 or 0");
  if (level_ % m != 0)
    fail(ErrorCode::InvalidArgument,
         "label " + std::to_string(m) + " does not divide the field level " +
             std::to_string(level_));
  return rational(Rational(-1, 2)) * chebyshev_value(level_ / m);
}

int FieldContext::sign_of_reduced(const std::vector<Rational>& coeffs) const {
  QPoly p = coeffs;
  strip(p);
  require_internal(!p.empty(), "sign refinement called on zero");
  if (degree() == 1) {
    // theta is rational; evaluate exactly.
    return sgn(eval(p, -min_poly_[0]));
  }
  Rational lo, hi;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    lo = cached_lo_;
    hi = cached_hi_;
  }
  int psi_lo_sign = sgn(eval(min_poly_, lo));
  for (int step = 0;; ++step) {
    require_internal(step < 4096, "sign refinement failed to converge");
    Interval value = eval_interval(p, Interval{lo, hi});
    if (sgn(value.lo) > 0) break;
    if (sgn(value.hi) < 0) break;
    // Bisect toward theta: Psi changes sign across its single root in [lo,hi].
    Rational mid = (lo + hi) / 2;
    int psi_mid_sign = sgn(eval(min_poly_, mid));
    require_internal(psi_mid_sign != 0, "rational midpoint cannot be a root");
    if (psi_mid_sign == psi_lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  {
    // Both intervals contain theta, so their intersection does too.
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cached_lo_ = std::max(cached_lo_, lo);
    cached_hi_ = std::min(cached_hi_, hi);
  }
  Interval value = eval_interval(p, Interval{lo, hi});
  return sgn(value.lo) > 0 ? 1 : -1;
}

}  // namespace hurwitz
