#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktf/error.hpp"

namespace ktf {

// Canonical (reduced, positive denominator) after every public construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& q);
// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational& q);

Rational factorial(long n);
// (base, count) = base (base+1) ... (base+count-1)
Rational rising_factorial(const Rational& base, long count);
// base (base-1) ... (base-count+1)
Rational falling_factorial(const Rational& base, long count);
// top(top-1)...(top-m+1)/m! for m >= 1, 1 for m = 0, 0 for m < 0.
Rational gen_binomial(const Rational& top, long m);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
size_t bit_size(const Rational& q);

class Gauss {
 public:
  Gauss() = default;
  Gauss(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  Gauss(long re) : re_(re) {}

  static Gauss i() { return Gauss(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  Gauss conj() const { return Gauss(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gauss inverse() const;

  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Gauss& g) { return is_zero(g.re()) && is_zero(g.im()); }
size_t bit_size(const Gauss& g);
std::string to_string(const Gauss& g);
inline Gauss conj(const Gauss& g) { return g.conj(); }
inline Rational conj(const Rational& q) { return q; }

// Lowest common multiple of all denominators appearing in x.
void accumulate_denominator(const Rational& x, Integer& lcm);
void accumulate_denominator(const Gauss& x, Integer& lcm);

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree kZeroDegree.
template <class S>
class Poly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
  static Poly monomial(const S& v, int k) {
    std::vector<S> c(static_cast<size_t>(k) + 1, S(0));
    c[k] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(S(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : S(0); }
  S lead() const { return c_.empty() ? S(0) : c_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<S> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * S(static_cast<long>(k)));
    return Poly(std::move(d));
  }

  // p(lambda x)
  Poly scale_argument(const S& lambda) const {
    std::vector<S> d = c_;
    S pw(1);
    for (auto& v : d) {
      v = v * pw;
      pw = pw * lambda;
    }
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const S& v) {
    for (auto& c : c_) c = c * v;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const S& v) { return a *= v; }
  friend Poly operator*(const S& v, Poly a) { return a *= v; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ktf::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<S> r = a.c_;
    std::vector<S> q(a.c_.size() - b.c_.size() + 1, S(0));
    const S inv_lead = S(1) / b.lead();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      S f = r[k + b.c_.size() - 1] * inv_lead;
      q[k] = f;
      if (ktf::is_zero(f)) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (S(1) / lead());
  }

 private:
  void trim() {
    while (!c_.empty() && ktf::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

using QPoly = Poly<Rational>;
using GPoly = Poly<Gauss>;

template <class S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    auto r = Poly<S>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class S>
S poly_eval(const Poly<S>& p, const S& x) {
  return p(x);
}

GPoly to_gauss(const QPoly& p);
// Real part, requiring every imaginary part to vanish.
std::optional<QPoly> to_rational(const GPoly& p);
std::vector<std::string> serialize(const QPoly& p);

// Exact interpolation through (xs[i], ys[i]) with distinct xs (Newton form).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Dense row-major matrix.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, S(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  S& operator()(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const S& operator()(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<S>& entries() const { return e_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const S& v = a(i, k);
        if (ktf::is_zero(v)) continue;
        for (size_t j = 0; j < b.cols_; ++j) m(i, j) = m(i, j) + v * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] = a.e_[k] + b.e_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] = a.e_[k] - b.e_[k];
    return a;
  }
  friend Matrix operator*(const S& v, Matrix a) {
    for (auto& x : a.e_) x = v * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(rows_, S(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!ktf::is_zero(v[j])) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const S& x) { return ktf::is_zero(x); });
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<S> e_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gauss>;

GMatrix to_gauss(const QMatrix& m);

namespace detail {

// Upper echelon form by fraction-free elimination. Rows are first scaled to
// integral entries; the pivot in each column is the entry of smallest bit size.
template <class S>
struct Echelon {
  Matrix<S> m;
  std::vector<size_t> pivot_cols;
};

template <class S>
Echelon<S> bareiss_echelon(Matrix<S> a) {
  const size_t rows = a.rows(), cols = a.cols();
  for (size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (size_t j = 0; j < cols; ++j) accumulate_denominator(a(i, j), l);
    if (l != 1) {
      const S f{Rational(l)};
      for (size_t j = 0; j < cols; ++j) a(i, j) = a(i, j) * f;
    }
  }
  std::vector<size_t> pivots;
  S prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t best = rows;
    size_t best_size = 0;
    for (size_t i = r; i < rows; ++i) {
      if (ktf::is_zero(a(i, c))) continue;
      const size_t sz = bit_size(a(i, c));
      if (best == rows || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(r, j));
    const S piv = a(r, c);
    for (size_t i = r + 1; i < rows; ++i) {
      const S lead = a(i, c);
      for (size_t j = c + 1; j < cols; ++j) a(i, j) = (piv * a(i, j) - lead * a(r, j)) / prev;
      a(i, c) = S(0);
    }
    // Rows above the pivot row keep their values; columns left of c in rows
    // below r are already zero.
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

template <class S>
size_t rank(const Matrix<S>& a) {
  return detail::bareiss_echelon(a).pivot_cols.size();
}

// Basis of the right nullspace; each vector scaled so that its lowest-index
// nonzero coordinate is 1.
template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& a) {
  auto ech = detail::bareiss_echelon(a);
  const size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(cols, S(0));
    v[f] = S(1);
    for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
      const size_t pc = ech.pivot_cols[k];
      S acc(0);
      for (size_t j = pc + 1; j < cols; ++j)
        if (!ktf::is_zero(v[j])) acc = acc + ech.m(k, j) * v[j];
      v[pc] = -acc / ech.m(k, pc);
    }
    for (const auto& x : v) {
      if (ktf::is_zero(x)) continue;
      const S inv = S(1) / x;
      for (auto& y : v) y = y * inv;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of a x = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
  Matrix<S> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto ech = detail::bareiss_echelon(aug);
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<S> x(a.cols(), S(0));
  for (size_t k = ech.pivot_cols.size(); k-- > 0;) {
    const size_t pc = ech.pivot_cols[k];
    S acc = ech.m(k, a.cols());
    for (size_t j = pc + 1; j < a.cols(); ++j)
      if (!ktf::is_zero(x[j])) acc = acc - ech.m(k, j) * x[j];
    x[pc] = acc / ech.m(k, pc);
  }
  return x;
}

// det(x I - a) by the division-free Berkowitz recurrence.
template <class S>
Poly<S> charpoly(const Matrix<S>& a) {
  const size_t n = a.rows();
  std::vector<S> c{S(1)};  // descending coefficients of the leading-block charpoly
  for (size_t k = 0; k < n; ++k) {
    // Block split of the leading (k+1)x(k+1) submatrix: [[A_k, col], [row, a_kk]].
    std::vector<S> t(k + 2, S(0));
    t[0] = S(1);
    t[1] = -a(k, k);
    std::vector<S> w(k);  // A_k^j col, starting at j = 0
    for (size_t i = 0; i < k; ++i) w[i] = a(i, k);
    for (size_t j = 2; j < k + 2; ++j) {
      S dot(0);
      for (size_t i = 0; i < k; ++i) dot = dot + a(k, i) * w[i];
      t[j] = -dot;
      std::vector<S> nw(k, S(0));
      for (size_t i = 0; i < k; ++i)
        for (size_t l = 0; l < k; ++l)
          if (!ktf::is_zero(w[l])) nw[i] = nw[i] + a(i, l) * w[l];
      w = std::move(nw);
    }
    std::vector<S> nc(k + 2, S(0));
    for (size_t i = 0; i < k + 2; ++i)
      for (size_t j = 0; j <= std::min(i, k); ++j) nc[i] = nc[i] + t[i - j] * c[j];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return Poly<S>(std::move(c));
}

struct RationalRoots {
  // Distinct roots in increasing order with multiplicities.
  std::vector<std::pair<Rational, int>> roots;
  int remainder_degree = 0;

  std::vector<Rational> multiset() const;
};

// All rational roots of a nonzero polynomial. Throws ZeroPolynomial for p = 0.
RationalRoots rational_roots(const QPoly& p);

}  // namespace ktf
