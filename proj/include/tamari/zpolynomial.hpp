#pragma once

// Dense univariate polynomials in z with exact rational coefficients.

#include <string>
#include <vector>

#include "tamari/exact.hpp"

namespace tamari {

class ZPolynomial {
 public:
  ZPolynomial() = default;
  ZPolynomial(const Rational& constant);  // NOLINT: implicit by design
  ZPolynomial(long long constant) : ZPolynomial(Rational(constant)) {}  // NOLINT
  explicit ZPolynomial(std::vector<Rational> coefficients);

  static ZPolynomial z();
  static ZPolynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of z^k, zero beyond the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const ZPolynomial& o);
  ZPolynomial& operator*=(const Rational& c);

  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(ZPolynomial a, const ZPolynomial& b) { return a *= b; }
  friend ZPolynomial operator-(ZPolynomial a) { return a *= Rational(-1); }
  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

  Rational evaluate(const Rational& x) const;
  /// p(z + c).
  ZPolynomial shift(const Rational& c) const;
  ZPolynomial derivative() const;
  /// Drop the coefficients of z^k for k > degree.
  ZPolynomial truncated(std::size_t degree) const;

  /// "13 + 18*z + 6*z^2"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace tamari
