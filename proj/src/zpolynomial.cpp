#include "tamari/zpolynomial.hpp"

#include <algorithm>

namespace tamari {

ZPolynomial::ZPolynomial(const Rational& constant) : c_{constant} { normalize(); }

ZPolynomial::ZPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { normalize(); }

ZPolynomial ZPolynomial::z() { return monomial(1, 1); }

ZPolynomial ZPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, 0);
  v[degree] = c;
  return ZPolynomial(std::move(v));
}

void ZPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const ZPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  normalize();
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  normalize();
  return *this;
}

Rational ZPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPolynomial ZPolynomial::shift(const Rational& c) const {
  // Horner's scheme with (z + c) in place of z.
  const ZPolynomial step(std::vector<Rational>{c, 1});
  ZPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= step;
    acc += ZPolynomial(*it);
  }
  return acc;
}

ZPolynomial ZPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long long>(i);
  return ZPolynomial(std::move(out));
}

ZPolynomial ZPolynomial::truncated(std::size_t degree) const {
  if (c_.size() <= degree + 1) return *this;
  return ZPolynomial(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(degree) + 1));
}

std::string ZPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    std::string coef = to_decimal(c_[k]);
    const bool negative = coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace tamari
