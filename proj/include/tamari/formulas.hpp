#pragma once

// Closed formulas for the interval statistics, and checkers for the
// identities and recurrences they satisfy. Every division is exact.

#include <cstdint>
#include <vector>

#include "tamari/exact.hpp"
#include "tamari/report.hpp"
#include "tamari/zpolynomial.hpp"

namespace tamari {

/// Number of intervals S <= T of Tam(n) with des(S) + asc(T) = k:
/// 2 / (n(n+1)) C(n+1, k+2) C(3n, k). Zero unless 0 <= k < n.
/// Throws std::invalid_argument for n <= 0.
ExactInt a_formula(std::int64_t n, std::int64_t k);

/// Number of faces of dimension k of the diagonal of the (n-1)-dimensional
/// associahedron: 2 / ((3n+1)(3n+2)) C(n-1, k) C(4n+1-k, n+1).
ExactInt b_formula(std::int64_t n, std::int64_t k);

/// sum_l a_formula(n, l) C(l, k).
ExactInt b_by_binomial_transform(std::int64_t n, std::int64_t k);

/// Row n of a_formula / b_formula, k = 0..n-1.
std::vector<ExactInt> a_row(std::int64_t n);
std::vector<ExactInt> b_row(std::int64_t n);

/// a_n(z) = sum_k a_formula(n, k) z^k, and the zero polynomial for n <= 0.
ZPolynomial a_polynomial(std::int64_t n);
/// b_n(z) = sum_k b_formula(n, k) z^k.
ZPolynomial b_polynomial(std::int64_t n);

/// Intervals S <= T of Tam(n) with ell(S) = ell:
/// (i-1)(4n-2i+1)! / ((3n-i+2)!(n-i+1)!) C(2i, i) at i = ell + 2.
/// Zero outside 0 <= ell < n.
ExactInt refined_formula(std::int64_t n, std::int64_t ell);

/// Intervals S <= T of Tam(n) with des(S) = p and asc(T) = n-1-p:
/// (n+q-1)!(2n-q)! / (q!(n+1-q)!(2q-1)!(2n-2q+1)!) at q = p + 1.
/// Zero outside 0 <= p < n.
ExactInt separated_formula(std::int64_t n, std::int64_t p);

/// Intervals of Tam(m, n): (m+1) / (n(mn+1)) C((m+1)^2 n + m, n-1).
ExactInt m_tamari_interval_formula(std::int64_t m, std::int64_t n);

/// The three product forms of the number of synchronized intervals of
/// Tam(n): 2/(n(n+1)) C(3n, n-1), 2/((n+1)(2n+1)) C(3n, n) and
/// 2/((3n+1)(3n+2)) C(3n+2, n+1).
std::vector<ExactInt> synchronized_count_forms(std::int64_t n);
ExactInt synchronized_count(std::int64_t n);

/// Boundary values of a_{n,k} and the synchronized and total counts.
CheckReport specialization_suite(std::int64_t n);

/// sum_{l=k}^{n-1} C(n+1, l+2) C(r, l) C(l, k)
///   = n(n+1) / ((r+1)(r+2)) C(n-1, k) C(r+n+1-k, n+1), by direct summation.
bool chu_vandermonde_check(std::int64_t n, std::int64_t k, std::int64_t r);

/// k(k+2) x_{n,k} = (3n+1-k)(n-k) x_{n,k-1} and
/// (3n-k-2)(3n-k-1)(3n-k)(n-k-1) x_{n,k} = 3n(n-1)(3n-1)(3n-2) x_{n-1,k},
/// with x = a_formula extended by zero, for 1 <= k <= n-1 and n in [n_lo, n_hi].
CheckReport two_term_recurrence_check(std::int64_t n_lo, std::int64_t n_hi);

/// Coefficients eta_0, eta_1, eta_2 of the order-2 recurrence
/// eta_0 a_n(z) + eta_1 a_{n+1}(z) + eta_2 a_{n+2}(z) = 0, at a given n.
std::vector<ZPolynomial> telescoped_etas(std::int64_t n);
/// The same with z replaced by z + 1, annihilating b_n(z).
std::vector<ZPolynomial> telescoped_etas_shifted(std::int64_t n);
/// The b-side eta_2 as printed, with its quartic factor in z.
ZPolynomial printed_b_eta2(std::int64_t n);

/// Checks both recurrences as polynomial identities in z for n in
/// [n_lo, n_hi], and that the shifted eta_2 matches the printed one.
CheckReport telescoped_recurrence_check(std::int64_t n_lo, std::int64_t n_hi);

}  // namespace tamari
