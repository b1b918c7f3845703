#pragma once

// Solving and checking the functional equations satisfied by the interval
// generating function A(t, z) = sum a_{n,k} t^n z^k and by B(t, z) = A(t, z+1).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/enumeration.hpp"
#include "tamari/multipoly.hpp"
#include "tamari/report.hpp"
#include "tamari/series.hpp"

namespace tamari {

std::uint64_t fnv1a64(std::string_view bytes);

/// Polynomial P(t, z, X) with variables t = 0, z = 1, X = 2.
struct PolynomialEquation {
  MultiPoly p;

  /// Lines "deg_t deg_z deg_X coefficient"; '#' starts a comment. A comment
  /// "# fnv1a64 <hex>" is checked against the hash of the term lines.
  static PolynomialEquation parse(const std::string& text);
  /// The quartic equation of A, read from the data file compiled into the library.
  static const PolynomialEquation& quartic();

  /// P(t, z + c, X).
  PolynomialEquation shifted_z(const Rational& c) const;
  /// P(t, value, X).
  PolynomialEquation specialized_z(const Rational& value) const;

  /// Coefficients of X^0, X^1, ... as series in t of the given order.
  std::vector<ZSeries> x_coefficients(int order) const;
  /// P(t, z, x).
  ZSeries evaluate(const ZSeries& x) const;
  /// dP/dX (t, z, x).
  ZSeries evaluate_dx(const ZSeries& x) const;
  /// P(t(s), z, x(s)) for series t(s), x(s) in another variable s, t(0) = 0.
  ZSeries evaluate_at(const ZSeries& t, const ZSeries& x) const;
};

/// The text of the data file the quartic is read from.
const char* quartic_p_text();

/// The root X with X(0, z) = 0 of P(t, z, X), modulo t^(order+1), by Newton
/// iteration with doubling precision. Requires P(0, z, 0) = 0 and dP/dX at
/// the origin a nonzero constant; the result is checked by back-substitution.
ZSeries newton_solve(const PolynomialEquation& eq, int order);

/// The solution of S = t phi(S, z), phi a polynomial in s (variable 0) and
/// z (variable 1), by fixed-point iteration. phi(0, z) must be nonzero.
ZSeries lagrange_solve(const MultiPoly& phi, int order);
/// [t^n z^k] S^r = (r/n) [s^(n-r) z^k] phi(s, z)^n for n, r >= 1.
Rational lagrange_coeff(const MultiPoly& phi, int n, int k, int r);

/// sum a_formula(n, k) t^n z^k and sum b_formula(n, k) t^n z^k.
ZSeries a_series_from_formula(int order);
ZSeries b_series_from_formula(int order);
/// The same series with coefficients taken from the interval histograms.
ZSeries a_series_from_enumeration(int order, Budget& budget);

/// Newton root of P equals the closed formula; P(t, z, A) = 0 mod t^(order+1).
CheckReport verify_polynomial_equation(int order);
/// Root of P(t, z+1, X) = A(t, z+1) = closed formula for B.
CheckReport verify_b_equation(int order);
/// t = s / ((s+1)(sz+1)^3), X = s - z s^2 - z s^3 annihilates P mod s^(order+1),
/// also at z = 1 and z = 0; A = S - z S^2 - z S^3 for the Lagrange solution S.
CheckReport verify_parametrization(int order);
/// (u-1) A_u = t (u-1 + u(u+z-1) A_u - z A_1)(1 + u z A_u) mod t^(order+1),
/// with A_u built from enumerated intervals, and its two ingredients through
/// the indecomposable intervals.
CheckReport catalytic_equation_check(int order, Budget& budget);

/// Apply the differential operator p_1, p_2 or p_3 (which = 1, 2, 3).
ZSeries apply_pde_operator(int which, const ZSeries& f);
/// p_1, p_2, p_3 annihilate A mod t^(order-1); p_1 does not annihilate A + t^3.
CheckReport verify_pde(int order);

/// The canopy generating function F(u, v, w) from enumerated intervals of
/// size up to degree + 1.
GradedSeries canopy_series_from_enumeration(int degree, Budget& budget);
/// The system for U, V and the identity for u v F to total degree `degree`
/// of F; A = t F(tz, tz, t) to t-order degree + 1; the specialization
/// S = t(z+S)(1+S)^3 and the two expressions of A through S; Lagrange
/// coefficients of S and S^2 for n <= min(8, degree + 1).
CheckReport fusy_humbert_check(int degree, Budget& budget);

}  // namespace tamari
