#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
// Variables are numbered 0, 1, 2, ...; an exponent vector never ends in a
// zero, so polynomials in different numbers of variables mix freely.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tamari/exact.hpp"
#include "tamari/zpolynomial.hpp"

namespace tamari {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT: implicit by design
  MultiPoly(long long constant) : MultiPoly(Rational(constant)) {}  // NOLINT

  static MultiPoly var(std::size_t index);
  static MultiPoly monomial(Exponents e, const Rational& c);
  /// Embed a polynomial in z as a polynomial in variable `index`.
  static MultiPoly from_univariate(const ZPolynomial& p, std::size_t index);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const noexcept;
  Rational constant_term() const { return coeff({}); }
  Rational coeff(Exponents e) const;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned k) const;
  /// Terms with exponent of `var` at most `degree`.
  MultiPoly truncated_in(std::size_t var, int degree) const;
  /// Terms of total degree at most `degree`.
  MultiPoly truncated_total(int degree) const;
  /// Product, keeping only terms of total degree at most `degree`.
  static MultiPoly multiply_total(const MultiPoly& a, const MultiPoly& b, int degree);

  /// Coefficient of var^k, as a polynomial in the other variables.
  MultiPoly coefficient_of(std::size_t var, int k) const;
  MultiPoly substitute(std::size_t var, const Rational& value) const;
  /// Replace `var` by an arbitrary polynomial.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly derivative(std::size_t var) const;
  /// Requires that only `var` occurs.
  ZPolynomial to_univariate(std::size_t var) const;

  /// Sparse listing such as "3*t^2*z - 1"; `names` gives the variable
  /// names in order.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  static void trim(Exponents& e);
  void add_term(Exponents e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

}  // namespace tamari
