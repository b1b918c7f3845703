#include "tamari/series.hpp"

#include "json.hpp"

namespace tamari {

ZSeries substitute_z_shift(const ZSeries& s, const Rational& c) {
  return s.mapped([&](const ZPolynomial& p) { return p.shift(c); });
}

ZSeries derivative_z(const ZSeries& s) {
  return s.mapped([](const ZPolynomial& p) { return p.derivative(); });
}

ZSeries evaluate_z(const ZSeries& s, const Rational& value) {
  return s.mapped([&](const ZPolynomial& p) { return ZPolynomial(p.evaluate(value)); });
}

ZSeries series_from_poly(const MultiPoly& p, int order) {
  ZSeries s(order);
  for (int n = 0; n <= order && n <= p.degree_in(0); ++n) s.set(n, p.coefficient_of(0, n).to_univariate(1));
  return s;
}

std::vector<std::vector<Rational>> coefficient_rows(const ZSeries& s) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : s.coefficients()) rows.push_back(c.coefficients());
  return rows;
}

std::string to_string(const ZSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    const auto& c = s[n].coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      std::string coef = to_decimal(c[k]);
      const bool negative = coef.front() == '-';
      if (negative) coef.erase(0, 1);
      out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
      out += coef;
      if (n > 0) out += " * t^" + std::to_string(n);
      if (k > 0) out += " * z^" + std::to_string(k);
    }
  }
  out += out.empty() ? "O(t^" : " + O(t^";
  return out + std::to_string(s.order() + 1) + ")";
}

std::string to_json(const ZSeries& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : coefficient_rows(s)) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(to_decimal(c));
    rows.push_back(std::move(r));
  }
  return rows.dump();
}

GradedSeries GradedSeries::inverse() const {
  const Rational c0 = p_.constant_term();
  if (c0 == 0) throw NonUnitDivision("GradedSeries::inverse: zero constant term");
  // 1 / (c0 (1 + r)) = (1 / c0) sum_k (-r)^k, where r has no constant term.
  const GradedSeries minus_r(order_, MultiPoly(Rational(-1 / c0)) * (p_ - MultiPoly(c0)));
  GradedSeries sum(order_, MultiPoly(1)), power(order_, MultiPoly(1));
  for (int k = 1; k <= order_; ++k) {
    power = power * minus_r;
    sum = sum + power;
  }
  return GradedSeries(order_, MultiPoly(Rational(1 / c0)) * sum.p_);
}

}  // namespace tamari
