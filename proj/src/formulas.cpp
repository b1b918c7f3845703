#include "tamari/formulas.hpp"

#include <stdexcept>
#include <string>

namespace tamari {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) throw std::invalid_argument(std::string(what) + ": n must be positive, got " + std::to_string(n));
}

std::string at(std::int64_t n, std::int64_t k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

// a_formula extended by zero to every n.
ExactInt x_value(std::int64_t n, std::int64_t k) { return n <= 0 ? ExactInt(0) : a_formula(n, k); }

}  // namespace

ExactInt a_formula(std::int64_t n, std::int64_t k) {
  require_positive(n, "a_formula");
  if (k < 0 || k >= n) return 0;
  return exact_div(2 * binomial(n + 1, k + 2) * binomial(3 * n, k), ExactInt(n) * (n + 1), "a_formula");
}

ExactInt b_formula(std::int64_t n, std::int64_t k) {
  require_positive(n, "b_formula");
  if (k < 0 || k >= n) return 0;
  return exact_div(2 * binomial(n - 1, k) * binomial(4 * n + 1 - k, n + 1), ExactInt(3 * n + 1) * (3 * n + 2),
                   "b_formula");
}

ExactInt b_by_binomial_transform(std::int64_t n, std::int64_t k) {
  require_positive(n, "b_by_binomial_transform");
  ExactInt sum = 0;
  for (std::int64_t l = std::max<std::int64_t>(k, 0); l < n; ++l) sum += a_formula(n, l) * binomial(l, k);
  return sum;
}

std::vector<ExactInt> a_row(std::int64_t n) {
  std::vector<ExactInt> row;
  for (std::int64_t k = 0; k < n; ++k) row.push_back(a_formula(n, k));
  return row;
}

std::vector<ExactInt> b_row(std::int64_t n) {
  std::vector<ExactInt> row;
  for (std::int64_t k = 0; k < n; ++k) row.push_back(b_formula(n, k));
  return row;
}

ZPolynomial a_polynomial(std::int64_t n) {
  if (n <= 0) return {};
  std::vector<Rational> c;
  for (const auto& v : a_row(n)) c.emplace_back(v);
  return ZPolynomial(std::move(c));
}

ZPolynomial b_polynomial(std::int64_t n) {
  if (n <= 0) return {};
  std::vector<Rational> c;
  for (const auto& v : b_row(n)) c.emplace_back(v);
  return ZPolynomial(std::move(c));
}

ExactInt refined_formula(std::int64_t n, std::int64_t ell) {
  require_positive(n, "refined_formula");
  if (ell < 0 || ell >= n) return 0;
  const std::int64_t i = ell + 2;
  return exact_div((i - 1) * factorial(4 * n - 2 * i + 1) * binomial(2 * i, i),
                   factorial(3 * n - i + 2) * factorial(n - i + 1), "refined_formula");
}

ExactInt separated_formula(std::int64_t n, std::int64_t p) {
  require_positive(n, "separated_formula");
  if (p < 0 || p >= n) return 0;
  const std::int64_t q = p + 1;
  return exact_div(factorial(n + q - 1) * factorial(2 * n - q),
                   factorial(q) * factorial(n + 1 - q) * factorial(2 * q - 1) * factorial(2 * n - 2 * q + 1),
                   "separated_formula");
}

ExactInt m_tamari_interval_formula(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("m_tamari_interval_formula: m must be positive");
  require_positive(n, "m_tamari_interval_formula");
  return exact_div((m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1), ExactInt(n) * (m * n + 1),
                   "m_tamari_interval_formula");
}

std::vector<ExactInt> synchronized_count_forms(std::int64_t n) {
  require_positive(n, "synchronized_count_forms");
  return {
      exact_div(2 * binomial(3 * n, n - 1), ExactInt(n) * (n + 1), "synchronized form 1"),
      exact_div(2 * binomial(3 * n, n), ExactInt(n + 1) * (2 * n + 1), "synchronized form 2"),
      exact_div(2 * binomial(3 * n + 2, n + 1), ExactInt(3 * n + 1) * (3 * n + 2), "synchronized form 3"),
  };
}

ExactInt synchronized_count(std::int64_t n) { return synchronized_count_forms(n).front(); }

CheckReport specialization_suite(std::int64_t n) {
  require_positive(n, "specialization_suite");
  CheckReport r{"specializations n=" + std::to_string(n)};
  auto eq = [&](const ExactInt& lhs, const ExactInt& rhs, const std::string& what) {
    r.expect(lhs == rhs, [&] { return what + ": " + to_decimal(lhs) + " != " + to_decimal(rhs); });
  };
  eq(a_formula(n, 0), 1, "a_{n,0} = 1");
  eq(a_formula(n, 1), ExactInt(n) * (n - 1), "a_{n,1} = n(n-1)");
  eq(a_formula(n, n - 3), binomial(3 * n, n - 3), "a_{n,n-3} = C(3n,n-3)");
  eq(ExactInt(n) * a_formula(n, n - 2), 2 * binomial(3 * n, n - 2), "n a_{n,n-2} = 2 C(3n,n-2)");
  const auto forms = synchronized_count_forms(n);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    eq(forms[i], a_formula(n, n - 1), "synchronized form " + std::to_string(i + 1) + " = a_{n,n-1}");
  }
  eq(b_formula(n, n - 1), a_formula(n, n - 1), "b_{n,n-1} = a_{n,n-1}");
  ExactInt total = 0;
  for (const auto& v : a_row(n)) total += v;
  eq(total, b_formula(n, 0), "sum_l a_{n,l} = b_{n,0}");
  return r;
}

bool chu_vandermonde_check(std::int64_t n, std::int64_t k, std::int64_t r) {
  ExactInt lhs = 0;
  for (std::int64_t l = k; l <= n - 1; ++l) lhs += binomial(n + 1, l + 2) * binomial(r, l) * binomial(l, k);
  // Compare with the denominator cleared so that divisibility is not assumed.
  const ExactInt rhs = ExactInt(n) * (n + 1) * binomial(n - 1, k) * binomial(r + n + 1 - k, n + 1);
  return lhs * (r + 1) * (r + 2) == rhs;
}

CheckReport two_term_recurrence_check(std::int64_t n_lo, std::int64_t n_hi) {
  CheckReport r{"two-term recurrences"};
  for (std::int64_t n = std::max<std::int64_t>(n_lo, 1); n <= n_hi; ++n) {
    for (std::int64_t k = 1; k <= n - 1; ++k) {
      const ExactInt x = x_value(n, k);
      const ExactInt lhs1 = k * (k + 2) * x;
      const ExactInt rhs1 = (3 * n + 1 - k) * (n - k) * x_value(n, k - 1);
      r.expect(lhs1 == rhs1, [&] { return "k-relation at " + at(n, k) + ": " + to_decimal(lhs1) + " != " + to_decimal(rhs1); });
      const ExactInt lhs2 = ExactInt(3 * n - k - 2) * (3 * n - k - 1) * (3 * n - k) * (n - k - 1) * x;
      const ExactInt rhs2 = ExactInt(3 * n) * (n - 1) * (3 * n - 1) * (3 * n - 2) * x_value(n - 1, k);
      r.expect(lhs2 == rhs2, [&] { return "n-relation at " + at(n, k) + ": " + to_decimal(lhs2) + " != " + to_decimal(rhs2); });
    }
  }
  return r;
}

std::vector<ZPolynomial> telescoped_etas(std::int64_t n_value) {
  const ZPolynomial n{Rational(n_value)};
  const ZPolynomial z = ZPolynomial::z();
  const ZPolynomial n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  const ZPolynomial z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z;

  const ZPolynomial eta2 = 3 * (3 * n + 7) * (n + 3) * (3 * n + 8) *
                           (n2 * z2 - 6 * n2 * z + 2 * n * z2 - 27 * n2 - 12 * n * z - 54 * n - 30);
  const ZPolynomial eta1 =
      -(2 * n + 3) *
      (2 * n4 * z5 - 21 * n4 * z4 + 12 * n3 * z5 + 108 * n4 * z3 - 126 * n3 * z4 + 22 * n2 * z5 -
       378 * n4 * z2 + 648 * n3 * z3 - 231 * n2 * z4 + 12 * n * z5 - 3078 * n4 * z - 2268 * n3 * z2 +
       1188 * n2 * z3 - 126 * n * z4 - 729 * n4 - 18468 * n3 * z - 4188 * n2 * z2 + 648 * n * z3 -
       4374 * n3 - 39078 * n2 * z - 2358 * n * z2 - 10449 * n2 - 34128 * n * z - 11664 * n - 10080 * z - 5040);
  const ZPolynomial zm1 = z - 1;
  const ZPolynomial eta0 = 3 * n * (zm1 * zm1 * zm1 * zm1) * (3 * n + 2) * (3 * n + 1) *
                           (n2 * z2 - 6 * n2 * z + 4 * n * z2 - 27 * n2 - 24 * n * z + 3 * z2 - 108 * n - 18 * z - 111);
  return {eta0, eta1, eta2};
}

std::vector<ZPolynomial> telescoped_etas_shifted(std::int64_t n) {
  auto etas = telescoped_etas(n);
  for (auto& e : etas) e = e.shift(1);
  return etas;
}

ZPolynomial printed_b_eta2(std::int64_t n_value) {
  const ZPolynomial n{Rational(n_value)};
  const ZPolynomial z = ZPolynomial::z();
  const ZPolynomial n2 = n * n, z2 = z * z;
  return 3 * (3 * n + 7) * (n + 3) * (3 * n + 8) *
         (n2 * z2 - 4 * n2 * z + 2 * n * z2 - 32 * n2 - 8 * n * z - 64 * n - 30);
}

CheckReport telescoped_recurrence_check(std::int64_t n_lo, std::int64_t n_hi) {
  CheckReport r{"telescoped recurrence"};
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const auto etas = telescoped_etas(n);
    const auto shifted = telescoped_etas_shifted(n);
    ZPolynomial a_side, b_side;
    for (int i = 0; i < 3; ++i) {
      const ZPolynomial term = etas[i] * a_polynomial(n + i);
      r.expect(term.degree() <= n + 6, [&] {
        return "degree of eta_" + std::to_string(i) + " a_{n+" + std::to_string(i) + "} at n=" + std::to_string(n) +
               " is " + std::to_string(term.degree());
      });
      a_side += term;
      b_side += shifted[i] * b_polynomial(n + i);
    }
    r.expect(a_side.is_zero(), [&] { return "a-side residual at n=" + std::to_string(n) + ": " + a_side.to_string(); });
    r.expect(b_side.is_zero(), [&] { return "b-side residual at n=" + std::to_string(n) + ": " + b_side.to_string(); });
    r.expect(shifted[2] == printed_b_eta2(n), [&] {
      return "shifted eta_2 at n=" + std::to_string(n) + " is " + shifted[2].to_string() + ", printed " +
             printed_b_eta2(n).to_string();
    });
  }
  return r;
}

}  // namespace tamari
