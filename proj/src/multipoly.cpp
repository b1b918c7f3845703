#include "tamari/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tamari {

namespace {

int exponent(const MultiPoly::Exponents& e, std::size_t var) { return var < e.size() ? e[var] : 0; }

int total(const MultiPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

void MultiPoly::trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void MultiPoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::var(std::size_t index) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents e, const Rational& c) {
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
  }
  MultiPoly p;
  p.add_term(std::move(e), c);
  return p;
}

MultiPoly MultiPoly::from_univariate(const ZPolynomial& p, std::size_t index) {
  MultiPoly out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    Exponents e(index + 1, 0);
    e[index] = static_cast<int>(k);
    out.add_term(std::move(e), p.coefficients()[k]);
  }
  return out;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::coeff(Exponents e) const {
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent(e, var));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::multiply_total(a, b, -1);
}

MultiPoly MultiPoly::multiply_total(const MultiPoly& a, const MultiPoly& b, int degree) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total(ea);
    if (degree >= 0 && da > degree) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (degree >= 0 && da + total(eb) > degree) continue;
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::truncated_in(std::size_t var, int degree) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (exponent(e, var) <= degree) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::truncated_total(int degree) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (total(e) <= degree) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient_of(std::size_t var, int k) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (exponent(e, var) != k) continue;
    Exponents rest = e;
    if (var < rest.size()) rest[var] = 0;
    out.add_term(std::move(rest), c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = exponent(e, var);
    Exponents rest = e;
    if (var < rest.size()) rest[var] = 0;
    Rational factor = 1;
    for (int i = 0; i < k; ++i) factor *= value;
    out.add_term(std::move(rest), c * factor);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  // Horner in `var` over the coefficients in the other variables.
  const int d = degree_in(var);
  MultiPoly acc;
  for (int k = d; k >= 0; --k) acc = acc * value + coefficient_of(var, k);
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    const int k = exponent(e, var);
    if (k == 0) continue;
    Exponents lowered = e;
    --lowered[var];
    out.add_term(std::move(lowered), c * k);
  }
  return out;
}

ZPolynomial MultiPoly::to_univariate(std::size_t var) const {
  std::vector<Rational> c(std::max(degree_in(var) + 1, 0), 0);
  for (const auto& [e, value] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw std::invalid_argument("MultiPoly::to_univariate: other variables occur");
    }
    c[exponent(e, var)] = value;
  }
  return ZPolynomial(std::move(c));
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coef = to_decimal(c);
    const bool negative = coef.front() == '-';
    if (negative) coef.erase(0, 1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += coef;
    else if (coef == "1") out += mono;
    else out += coef + "*" + mono;
  }
  return out;
}

}  // namespace tamari
