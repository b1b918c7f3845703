#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tamari {

using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a formula that must divide exactly leaves a remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive computation would exceed its element budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient with the vanishing convention: C(p, q) = 0 unless
/// 0 <= q <= p. Negative p is treated as out of range.
ExactInt binomial(std::int64_t p, std::int64_t q);

ExactInt factorial(std::int64_t n);

/// num / den, throwing InexactDivision when den does not divide num.
ExactInt exact_div(const ExactInt& num, const ExactInt& den,
                   const std::string& context = {});

std::string to_decimal(const ExactInt& value);
std::string to_decimal(const Rational& value);

inline Rational make_rational(const ExactInt& num, const ExactInt& den = 1) {
  return Rational(num, den);
}

}  // namespace tamari
