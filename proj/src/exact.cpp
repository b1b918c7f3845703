#include "tamari/exact.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace tamari {

ExactInt binomial(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0 || q > p) return 0;
  if (q > p - q) q = p - q;
  ExactInt result = 1;
  // After step i the accumulator equals C(p - q + i, i), so each division is exact.
  for (std::int64_t i = 1; i <= q; ++i) {
    result *= (p - q + i);
    result /= i;
  }
  return result;
}

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  static std::mutex mutex;
  static std::vector<ExactInt> memo{1};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<std::int64_t>(memo.size()) <= n) {
    memo.push_back(memo.back() * static_cast<std::int64_t>(memo.size()));
  }
  return memo[static_cast<std::size_t>(n)];
}

ExactInt exact_div(const ExactInt& num, const ExactInt& den,
                   const std::string& context) {
  if (den == 0) throw InexactDivision("division by zero" + (context.empty() ? "" : " in " + context));
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InexactDivision("non-exact division " + num.str() + " / " + den.str() +
                          (context.empty() ? "" : " in " + context));
  }
  return q;
}

std::string to_decimal(const ExactInt& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  const ExactInt num = boost::multiprecision::numerator(value);
  const ExactInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace tamari
