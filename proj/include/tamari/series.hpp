#pragma once

// Power series truncated in one main variable t, with coefficients in a
// polynomial ring (ZPolynomial for Q[z], MultiPoly for several variables),
// and series in several variables truncated by total degree.
//
// A series of order N is known modulo t^(N+1). Binary operations keep the
// smaller order, d/dt lowers it by one.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamari/multipoly.hpp"
#include "tamari/zpolynomial.hpp"

namespace tamari {

class NonUnitDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverse of a unit of the coefficient ring: a nonzero constant.
inline ZPolynomial unit_inverse(const ZPolynomial& c) {
  if (c.degree() != 0) throw NonUnitDivision("constant term is not a unit: " + c.to_string());
  return ZPolynomial(Rational(1) / c[0]);
}

inline MultiPoly unit_inverse(const MultiPoly& c) {
  if (c.is_zero() || !c.is_constant()) throw NonUnitDivision("constant term is not a unit");
  return MultiPoly(Rational(1) / c.constant_term());
}

template <class C>
class TruncatedSeries {
 public:
  /// The zero series known to order `order` (>= -1; -1 means nothing is known).
  explicit TruncatedSeries(int order = 0) : order_(order), c_(order + 1) {
    if (order < -1) throw std::invalid_argument("TruncatedSeries: order below -1");
  }
  TruncatedSeries(int order, std::vector<C> coefficients) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < c_.size(); ++i) c_[i] = std::move(coefficients[i]);
  }

  /// The series t.
  static TruncatedSeries variable(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }
  static TruncatedSeries constant(const C& c, int order) {
    TruncatedSeries s(order);
    if (order >= 0) s.c_[0] = c;
    return s;
  }

  int order() const noexcept { return order_; }
  const std::vector<C>& coefficients() const noexcept { return c_; }
  const C& operator[](int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries: coefficient beyond the known order");
    return c_[n];
  }
  void set(int n, C value) {
    if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries: coefficient beyond the known order");
    c_[n] = std::move(value);
  }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(std::min(order, order_));
    std::copy(c_.begin(), c_.begin() + (s.order_ + 1), s.c_.begin());
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(a.order_) - a; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order_, b.order_));
    for (int i = 0; i <= s.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= s.order_; ++j) {
        if (!b.c_[j].is_zero()) s.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return s;
  }
  friend TruncatedSeries operator*(const C& c, const TruncatedSeries& a) {
    TruncatedSeries s(a.order_);
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = c * a.c_[i];
    return s;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const C& c) { return c * a; }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; the constant term must be a unit.
  TruncatedSeries inverse() const {
    if (order_ < 0) return *this;
    const C inv0 = unit_inverse(c_[0]);
    TruncatedSeries s(order_);
    s.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      C acc;
      for (int i = 1; i <= n; ++i) {
        if (!c_[i].is_zero()) acc += c_[i] * s.c_[n - i];
      }
      s.c_[n] = -(inv0 * acc);
    }
    return s;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

  TruncatedSeries pow(unsigned k) const {
    TruncatedSeries result = constant(C(1), order_);
    for (unsigned i = 0; i < k; ++i) result *= *this;
    return result;
  }

  /// d/dt; the order drops by one.
  TruncatedSeries derivative() const {
    TruncatedSeries s(order_ - 1);
    for (int i = 1; i <= order_; ++i) s.c_[i - 1] = C(static_cast<long long>(i)) * c_[i];
    return s;
  }

  /// self(g(t)) for a series g without constant term.
  TruncatedSeries compose(const TruncatedSeries& g) const {
    if (g.order_ >= 0 && !g.c_[0].is_zero()) throw std::invalid_argument("compose: inner series has a constant term");
    const int order = std::min(order_, g.order_);
    TruncatedSeries acc(order);
    for (int i = order; i >= 0; --i) acc = acc * g + constant(c_[i], order);
    return acc;
  }

  /// Apply a map to every coefficient, keeping the order.
  template <class F>
  TruncatedSeries mapped(F&& f) const {
    TruncatedSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = f(c_[i]);
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const C& c) { return c.is_zero(); });
  }
  /// Smallest n with a nonzero coefficient, or -1.
  int first_nonzero() const {
    for (int i = 0; i <= order_; ++i) {
      if (!c_[i].is_zero()) return i;
    }
    return -1;
  }

  /// Equality of the coefficients up to the smaller order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return (a - b).is_zero(); }

 private:
  int order_;
  std::vector<C> c_;
};

using ZSeries = TruncatedSeries<ZPolynomial>;
using MultiSeries = TruncatedSeries<MultiPoly>;

/// Replace z by z + c in every coefficient.
ZSeries substitute_z_shift(const ZSeries& s, const Rational& c);
/// d/dz, keeping the order.
ZSeries derivative_z(const ZSeries& s);
/// Evaluate every coefficient at z = value.
ZSeries evaluate_z(const ZSeries& s, const Rational& value);
/// A polynomial in t (variable 0) and z (variable 1) as a series of the given order.
ZSeries series_from_poly(const MultiPoly& p, int order);
/// Coefficients [t^n] as a vector of n = 0..order rows, each row [z^k].
std::vector<std::vector<Rational>> coefficient_rows(const ZSeries& s);
/// "13 * t^3 + 18 * t^3 * z + ..." listing of the nonzero coefficients.
std::string to_string(const ZSeries& s);
/// [[c_{0,0}, c_{0,1}, ...], [c_{1,0}, ...], ...] with decimal-string rationals.
std::string to_json(const ZSeries& s);

/// A series in several variables known up to a total degree.
class GradedSeries {
 public:
  explicit GradedSeries(int order = 0, MultiPoly p = {}) : order_(order), p_(p.truncated_total(order)) {}
  static GradedSeries var(std::size_t index, int order) { return GradedSeries(order, MultiPoly::var(index)); }

  int order() const noexcept { return order_; }
  const MultiPoly& polynomial() const noexcept { return p_; }

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return GradedSeries(order, a.p_.truncated_total(order) + b.p_.truncated_total(order));
  }
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return GradedSeries(order, a.p_.truncated_total(order) - b.p_.truncated_total(order));
  }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return GradedSeries(order, MultiPoly::multiply_total(a.p_, b.p_, order));
  }
  friend GradedSeries operator+(const GradedSeries& a, long long c) { return a + GradedSeries(a.order_, MultiPoly(c)); }
  friend GradedSeries operator+(long long c, const GradedSeries& a) { return a + c; }

  /// Multiplicative inverse; the constant term must be nonzero.
  GradedSeries inverse() const;

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    return a.p_.truncated_total(order) == b.p_.truncated_total(order);
  }

 private:
  int order_;
  MultiPoly p_;
};

}  // namespace tamari
