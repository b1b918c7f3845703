#include "tamari/equations.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "tamari/formulas.hpp"

namespace tamari {

namespace detail {
extern const char* const quartic_p_text;
}

namespace {

constexpr std::size_t kT = 0, kZ = 1, kX = 2;

std::string order_note(const char* what, int n) { return std::string(what) + " at t^" + std::to_string(n); }

ZSeries padded(const ZSeries& s, int order) { return ZSeries(order, s.coefficients()); }

// A series of polynomials in (u, z) from a table keyed by (n, ell, k).
MultiSeries series_in_u_z(const std::vector<StatTable>& by_size, int order) {
  MultiSeries s(order);
  for (int n = 1; n <= order && n < static_cast<int>(by_size.size()); ++n) {
    MultiPoly c;
    for (const auto& [key, count] : by_size[n].cells()) {
      c += MultiPoly::monomial({key[0], key[1]}, Rational(count));
    }
    s.set(n, c);
  }
  return s;
}

std::string first_nonzero_note(const ZSeries& residual) {
  const int n = residual.first_nonzero();
  return n < 0 ? "zero" : "nonzero coefficient of t^" + std::to_string(n) + ": " + residual[n].to_string();
}

}  // namespace

const char* quartic_p_text() { return detail::quartic_p_text; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

PolynomialEquation PolynomialEquation::parse(const std::string& text) {
  PolynomialEquation eq;
  std::istringstream in(text);
  std::string line, body, declared;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream comment(line.substr(1));
      std::string key;
      if (comment >> key && key == "fnv1a64") comment >> declared;
      continue;
    }
    body += line + "\n";
    std::istringstream fields(line);
    int dt, dz, dx;
    std::string coef;
    if (!(fields >> dt >> dz >> dx >> coef) || dt < 0 || dz < 0 || dx < 0) {
      throw std::invalid_argument("PolynomialEquation::parse: bad term line: " + line);
    }
    eq.p += MultiPoly::monomial({dt, dz, dx}, Rational(ExactInt(coef)));
  }
  if (!declared.empty()) {
    std::ostringstream actual;
    actual << std::hex;
    actual.width(16);
    actual.fill('0');
    actual << fnv1a64(body);
    if (actual.str() != declared) {
      throw std::invalid_argument("PolynomialEquation::parse: checksum mismatch, expected " + declared + ", got " +
                                  actual.str());
    }
  }
  return eq;
}

const PolynomialEquation& PolynomialEquation::quartic() {
  static const PolynomialEquation eq = parse(quartic_p_text());
  return eq;
}

PolynomialEquation PolynomialEquation::shifted_z(const Rational& c) const {
  return {p.substitute(kZ, MultiPoly::var(kZ) + MultiPoly(c))};
}

PolynomialEquation PolynomialEquation::specialized_z(const Rational& value) const { return {p.substitute(kZ, value)}; }

std::vector<ZSeries> PolynomialEquation::x_coefficients(int order) const {
  std::vector<ZSeries> out;
  for (int j = 0; j <= p.degree_in(kX); ++j) out.push_back(series_from_poly(p.coefficient_of(kX, j), order));
  return out;
}

ZSeries PolynomialEquation::evaluate(const ZSeries& x) const {
  const auto c = x_coefficients(x.order());
  ZSeries acc(x.order());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZSeries PolynomialEquation::evaluate_dx(const ZSeries& x) const {
  return PolynomialEquation{p.derivative(kX)}.evaluate(x);
}

ZSeries PolynomialEquation::evaluate_at(const ZSeries& t, const ZSeries& x) const {
  const int order = std::min(t.order(), x.order());
  std::vector<ZSeries> t_pow{ZSeries::constant(1, order)}, x_pow{ZSeries::constant(1, order)};
  ZSeries acc(order);
  for (const auto& [e, c] : p.terms()) {
    const int dt = e.size() > kT ? e[kT] : 0, dz = e.size() > kZ ? e[kZ] : 0, dx = e.size() > kX ? e[kX] : 0;
    while (static_cast<int>(t_pow.size()) <= dt) t_pow.push_back(t_pow.back() * t);
    while (static_cast<int>(x_pow.size()) <= dx) x_pow.push_back(x_pow.back() * x);
    acc += ZPolynomial::monomial(c, dz) * (t_pow[dt] * x_pow[dx]);
  }
  return acc;
}

ZSeries newton_solve(const PolynomialEquation& eq, int order) {
  if (order < 0) throw std::invalid_argument("newton_solve: negative order");
  const auto c = eq.x_coefficients(0);
  if (!c.empty() && !c[0][0].is_zero()) throw std::invalid_argument("newton_solve: P(0, z, 0) is not zero");
  if (c.size() < 2 || c[1][0].degree() != 0) {
    throw std::invalid_argument("newton_solve: dP/dX is not a unit at the origin");
  }
  ZSeries x(order);
  int known = 1;  // x is correct modulo t^known
  while (known < order + 1) {
    known = std::min(2 * known, order + 1);
    const ZSeries xk = x.truncated(known - 1);
    x = padded(xk - eq.evaluate(xk) / eq.evaluate_dx(xk), order);
  }
  const ZSeries residual = eq.evaluate(x);
  if (!residual.is_zero()) throw std::logic_error("newton_solve: residual " + first_nonzero_note(residual));
  return x;
}

ZSeries lagrange_solve(const MultiPoly& phi, int order) {
  if (phi.coefficient_of(0, 0).is_zero()) throw NonUnitDivision("lagrange_solve: phi(0, z) is zero");
  std::vector<ZPolynomial> coeffs;
  for (int a = 0; a <= phi.degree_in(0); ++a) {
    // Coefficients of s^a; z is variable 1 in phi, moved to variable 0.
    coeffs.push_back(phi.coefficient_of(0, a).to_univariate(1));
  }
  const ZSeries t = ZSeries::variable(order);
  ZSeries s(order);
  for (int iteration = 0; iteration < order; ++iteration) {
    ZSeries value(order);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * s + ZSeries::constant(*it, order);
    s = t * value;
  }
  return s;
}

Rational lagrange_coeff(const MultiPoly& phi, int n, int k, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("lagrange_coeff: need n >= 1 and r >= 1");
  if (n - r < 0) return 0;
  const MultiPoly base = phi.truncated_in(0, n - r);
  MultiPoly power(1);
  for (int i = 0; i < n; ++i) power = (power * base).truncated_in(0, n - r);
  return Rational(r, n) * power.coeff({n - r, k});
}

ZSeries a_series_from_formula(int order) {
  ZSeries s(order);
  for (int n = 1; n <= order; ++n) s.set(n, a_polynomial(n));
  return s;
}

ZSeries b_series_from_formula(int order) {
  ZSeries s(order);
  for (int n = 1; n <= order; ++n) s.set(n, b_polynomial(n));
  return s;
}

ZSeries a_series_from_enumeration(int order, Budget& budget) {
  ZSeries s(order);
  for (int n = 1; n <= order; ++n) {
    std::vector<Rational> c;
    for (const auto& v : interval_histogram(n, budget)) c.emplace_back(v);
    s.set(n, ZPolynomial(std::move(c)));
  }
  return s;
}

CheckReport verify_polynomial_equation(int order) {
  CheckReport r("polynomial equation");
  const auto& eq = PolynomialEquation::quartic();
  const ZSeries formula = a_series_from_formula(order);
  const ZSeries residual = eq.evaluate(formula);
  r.expect(residual.is_zero(), [&] { return "P(t, z, A) has " + first_nonzero_note(residual); });
  const ZSeries root = newton_solve(eq, order);
  for (int n = 0; n <= order; ++n) {
    r.expect(root[n] == formula[n], [&] {
      return order_note("Newton root differs from the formula", n) + ": " + root[n].to_string();
    });
  }
  return r;
}

CheckReport verify_b_equation(int order) {
  CheckReport r("B equation");
  const auto b_eq = PolynomialEquation::quartic().shifted_z(1);
  const ZSeries b_root = newton_solve(b_eq, order);
  const ZSeries shifted = substitute_z_shift(newton_solve(PolynomialEquation::quartic(), order), 1);
  const ZSeries formula = b_series_from_formula(order);
  for (int n = 0; n <= order; ++n) {
    r.expect(b_root[n] == shifted[n], [&] { return order_note("root of P(t,z+1,X) differs from A(t,z+1)", n); });
    r.expect(b_root[n] == formula[n], [&] { return order_note("root of P(t,z+1,X) differs from b_formula", n); });
  }
  return r;
}

CheckReport verify_parametrization(int order) {
  CheckReport r("parametrization");
  const auto& eq = PolynomialEquation::quartic();
  const ZSeries s = ZSeries::variable(order);
  const ZPolynomial z = ZPolynomial::z();
  const ZSeries one = ZSeries::constant(1, order);
  const ZSeries sz1 = one + z * s;
  const ZSeries t_of_s = s / ((one + s) * sz1 * sz1 * sz1);
  const ZSeries x_of_s = s - z * (s * s) - z * (s * s * s);
  const ZSeries residual = eq.evaluate_at(t_of_s, x_of_s);
  r.expect(residual.is_zero(), [&] { return "P(t(s), z, X(s)) has " + first_nonzero_note(residual); });

  for (const Rational& value : {Rational(1), Rational(0)}) {
    const ZSeries res = eq.specialized_z(value).evaluate_at(evaluate_z(t_of_s, value), evaluate_z(x_of_s, value));
    r.expect(res.is_zero(), [&] { return "specialization z=" + to_decimal(value) + " has " + first_nonzero_note(res); });
  }
  // At z = 0: t = s / (1 + s) and X = s, so X (1 - t) = t, as for A(t, 0) = t / (1 - t).
  const ZSeries t0 = evaluate_z(t_of_s, 0), x0 = evaluate_z(x_of_s, 0);
  r.expect(x0 * (one - t0) == t0, [] { return std::string("z=0 specialization is not t/(1-t)"); });

  // A = S - z S^2 - z S^3 where S = t phi(S), phi = (1 + s)(1 + s z)^3.
  const MultiPoly sv = MultiPoly::var(0), zv = MultiPoly::var(1);
  const MultiPoly sz = MultiPoly(1) + sv * zv;
  const ZSeries big_s = lagrange_solve((MultiPoly(1) + sv) * sz * sz * sz, order);
  const ZSeries a = big_s - z * (big_s * big_s) - z * (big_s * big_s * big_s);
  const ZSeries formula = a_series_from_formula(order);
  for (int n = 0; n <= order; ++n) {
    r.expect(a[n] == formula[n], [&] { return order_note("S - zS^2 - zS^3 differs from A", n); });
  }
  return r;
}

CheckReport catalytic_equation_check(int order, Budget& budget) {
  CheckReport r("catalytic equation");
  std::vector<StatTable> by_ell(order + 1), indecomposable(order + 1);
  for (int n = 1; n <= order; ++n) {
    auto stats = interval_stats_refined(n, budget);
    by_ell[n] = std::move(stats.by_ell_k);
    indecomposable[n] = std::move(stats.indecomposable);
  }
  const MultiSeries a_u = series_in_u_z(by_ell, order);
  const MultiSeries a_circ = series_in_u_z(indecomposable, order);
  const MultiSeries a_1 = a_u.mapped([](const MultiPoly& c) { return c.substitute(0, Rational(1)); });
  const MultiPoly u = MultiPoly::var(0), z = MultiPoly::var(1), one(1);
  const MultiSeries t = MultiSeries::variable(order);
  const MultiSeries unit = MultiSeries::constant(one, order);

  auto report_zero = [&](const MultiSeries& residual, const std::string& what) {
    const int n = residual.first_nonzero();
    r.expect(n < 0, [&] { return what + ": nonzero at t^" + std::to_string(n) + ": " + residual[n].to_string({"u", "z"}); });
  };

  const MultiSeries lhs = (u - one) * a_u;
  const MultiSeries rhs =
      t * ((u - one) * unit + (u * (u + z - one)) * a_u - z * a_1) * (unit + (u * z) * a_u);
  report_zero(lhs - rhs, "quadratic equation");
  // Both sides vanish at u = 1.
  report_zero(rhs.mapped([](const MultiPoly& c) { return c.substitute(0, Rational(1)); }), "right side at u=1");
  // A_u = A°_u + u z A°_u A_u.
  report_zero(a_u - a_circ - (u * z) * (a_circ * a_u), "decomposition through indecomposable intervals");
  // (u - 1) A°_u = t ((u - 1) + z (u A_u - A_1) + u (u - 1) A_u).
  report_zero((u - one) * a_circ - t * ((u - one) * unit + z * (u * a_u - a_1) + (u * (u - one)) * a_u),
              "indecomposable intervals from arbitrary ones");
  // A_1 is the closed formula.
  const ZSeries formula = a_series_from_formula(order);
  for (int n = 0; n <= order; ++n) {
    r.expect(a_1[n] == MultiPoly::from_univariate(formula[n], 1), [&] { return order_note("A_1 differs from A", n); });
  }
  return r;
}

ZSeries apply_pde_operator(int which, const ZSeries& f) {
  const MultiPoly t = MultiPoly::var(0), z = MultiPoly::var(1);
  const MultiPoly t2 = t * t, t3 = t2 * t;
  const MultiPoly z2 = z * z, z3 = z2 * z, z4 = z3 * z, z5 = z4 * z, z6 = z5 * z, z7 = z6 * z;
  const int n = f.order();
  auto c = [&](const MultiPoly& p) { return series_from_poly(p, n); };
  const ZSeries ft = f.derivative(), fz = derivative_z(f);
  switch (which) {
    case 1:
      return c(18) * f - c(18 * t * (t * z - t + 1)) * ft - c(z * (4 * t * z3 - 22 * t * z2 + 36 * t * z - 18 * t - 45)) * fz +
             c(t * z * (2 * t * z3 - 11 * t * z2 + 9 * t - 9)) * derivative_z(ft) -
             c(2 * z2 * (t * z3 - 5 * t * z2 + 7 * t * z - 3 * t - 6)) * derivative_z(fz);
    case 2:
      return c(24) * f - c(24 * t * (t * z - t + 1)) * ft +
             c(-4 * t * z4 + 20 * t * z3 - 37 * t * z2 + 30 * t * z - 9 * t + 54 * z + 9) * fz +
             c(t2 * (2 * t * z3 - 11 * t * z2 + 9 * t - 9)) * ft.derivative() -
             c(z * (2 * t * z4 - 9 * t * z3 + 15 * t * z2 - 11 * t * z + 3 * t - 13 * z - 3)) * derivative_z(fz);
    case 3: {
      const MultiPoly c0 = 12 * t * (t * z4 + 18 * t * z3 + 198 * t * z2 - 486 * t * z - 9 * z2 - 243 * t + 243);
      const MultiPoly c_t = 12 * t2 * z2 *
                            (10 * t2 * z4 - 110 * t2 * z3 + 334 * t2 * z2 - 378 * t2 * z - t * z2 + 144 * t2 - 108 * t * z +
                             333 * t + 9);
      const MultiPoly c_z = 432 * t3 * z7 - 4536 * t3 * z6 + 14256 * t3 * z5 - 60 * t2 * z6 - 18414 * t3 * z4 +
                            672 * t2 * z5 + 7128 * t3 * z3 - 6102 * t2 * z4 + 5508 * t3 * z2 + 28080 * t2 * z3 -
                            5832 * t3 * z - 22680 * t2 * z2 + 432 * t * z3 + 1458 * t3 - 11664 * t2 * z - 3240 * t * z2 -
                            4374 * t2 + 17496 * t * z + 4374 * t - 1458;
      const MultiPoly c_zz = 2 * z *
                             (189 * t3 * z7 - 1890 * t3 * z6 + 5670 * t3 * z5 - 26 * t2 * z6 - 6831 * t3 * z4 +
                              273 * t2 * z5 + 1809 * t3 * z3 - 2889 * t2 * z4 + 3240 * t3 * z2 + 11124 * t2 * z3 -
                              2916 * t3 * z - 4698 * t2 * z2 + 270 * t * z3 + 729 * t3 - 3645 * t2 * z - 1458 * t * z2 -
                              2187 * t2 + 6561 * t * z + 2187 * t - 729);
      const MultiPoly c_zzz = z2 * (2 * t * z3 - 11 * t * z2 + 9 * t - 9) *
                              (27 * t2 * z4 - 108 * t2 * z3 + 162 * t2 * z2 - 4 * t * z3 - 108 * t2 * z + 18 * t * z2 +
                               27 * t2 - 216 * t * z - 54 * t + 27);
      const ZSeries fzz = derivative_z(fz);
      return c(c0) * f + c(c_t) * ft + c(c_z) * fz + c(c_zz) * fzz + c(c_zzz) * derivative_z(fzz);
    }
    default:
      throw std::invalid_argument("apply_pde_operator: operator must be 1, 2 or 3");
  }
}

CheckReport verify_pde(int order) {
  CheckReport r("partial differential equations");
  const ZSeries a = a_series_from_formula(order);
  for (int which = 1; which <= 3; ++which) {
    const ZSeries residual = apply_pde_operator(which, a);
    r.expect(residual.order() >= order - 2, [&] {
      return "p" + std::to_string(which) + " residual known only to order " + std::to_string(residual.order());
    });
    r.expect(residual.is_zero(), [&] { return "p" + std::to_string(which) + " A has " + first_nonzero_note(residual); });
  }
  ZSeries perturbed = a;
  if (order >= 3) perturbed.set(3, perturbed[3] + ZPolynomial(1));
  r.expect(!apply_pde_operator(1, perturbed).is_zero(), [] { return std::string("p1 annihilates A + t^3"); });
  return r;
}

GradedSeries canopy_series_from_enumeration(int degree, Budget& budget) {
  MultiPoly f;
  for (int n = 1; n <= degree + 1; ++n) {
    const auto stats = interval_stats_refined(n, budget);
    for (const auto& [key, count] : stats.canopy.cells()) {
      f += MultiPoly::monomial(key, Rational(count));
    }
  }
  return GradedSeries(degree, f);
}

CheckReport fusy_humbert_check(int degree, Budget& budget) {
  CheckReport r("Fusy-Humbert system");
  // F to total degree `degree` needs u v F, U and V to degree + 2.
  const int top = degree + 2;
  const GradedSeries u = GradedSeries::var(0, top), v = GradedSeries::var(1, top), w = GradedSeries::var(2, top);
  GradedSeries big_u(top), big_v(top);
  for (int iteration = 0; iteration <= top; ++iteration) {
    const GradedSeries next_u = (v + w * big_u) * (1 + big_u) * (1 + big_v) * (1 + big_v);
    const GradedSeries next_v = (u + w * big_v) * (1 + big_v) * (1 + big_u) * (1 + big_u);
    big_u = next_u;
    big_v = next_v;
  }
  r.expect(big_u == (v + w * big_u) * (1 + big_u) * (1 + big_v) * (1 + big_v), [] { return std::string("U is not a fixed point"); });
  r.expect(big_v == (u + w * big_v) * (1 + big_v) * (1 + big_u) * (1 + big_u), [] { return std::string("V is not a fixed point"); });

  const GradedSeries rhs =
      u * big_u + v * big_v + w * big_u * big_v - big_u * big_v * ((1 + big_u) * (1 + big_v)).inverse();
  const GradedSeries f_enum = canopy_series_from_enumeration(degree, budget);
  const GradedSeries uv_f = u * v * GradedSeries(top, f_enum.polynomial());
  r.expect(rhs == uv_f, [&] {
    return "uvF differs: " + (rhs - uv_f).polynomial().to_string({"u", "v", "w"});
  });

  // F from the system, divided by u v.
  MultiPoly f_series;
  for (const auto& [e, c] : rhs.polynomial().terms()) {
    const int eu = e.size() > 0 ? e[0] : 0, ev = e.size() > 1 ? e[1] : 0, ew = e.size() > 2 ? e[2] : 0;
    if (eu == 0 || ev == 0) continue;  // such terms were compared to zero above
    f_series += MultiPoly::monomial({eu - 1, ev - 1, ew}, c);
  }

  // A(t, z) = t F(tz, tz, t).
  const int order = degree + 1;
  std::vector<std::vector<Rational>> rows(order + 1);
  for (const auto& [e, c] : f_series.terms()) {
    const int i = e.size() > 0 ? e[0] : 0, j = e.size() > 1 ? e[1] : 0, k = e.size() > 2 ? e[2] : 0;
    const int n = 1 + i + j + k;
    if (n > order) continue;
    auto& row = rows[n];
    if (static_cast<int>(row.size()) <= i + j) row.resize(i + j + 1, 0);
    row[i + j] += c;
  }
  ZSeries a_from_f(order);
  for (int n = 0; n <= order; ++n) a_from_f.set(n, ZPolynomial(rows[n]));
  const ZSeries a = a_series_from_formula(order);
  for (int n = 0; n <= order; ++n) {
    r.expect(a_from_f[n] == a[n], [&] { return order_note("t F(tz, tz, t) differs from A", n); });
  }

  // S = t (z + S)(1 + S)^3, and S = U(tz, tz, t) = V(tz, tz, t).
  const MultiPoly sv = MultiPoly::var(0), zv = MultiPoly::var(1), one(1);
  const MultiPoly phi = (zv + sv) * (one + sv) * (one + sv) * (one + sv);
  const ZSeries s = lagrange_solve(phi, top);
  for (const GradedSeries* g : {&big_u, &big_v}) {
    std::vector<std::vector<Rational>> srows(top + 1);
    for (const auto& [e, c] : g->polynomial().terms()) {
      const int i = e.size() > 0 ? e[0] : 0, j = e.size() > 1 ? e[1] : 0, k = e.size() > 2 ? e[2] : 0;
      auto& row = srows[i + j + k];
      if (static_cast<int>(row.size()) <= i + j) row.resize(i + j + 1, 0);
      row[i + j] += c;
    }
    ZSeries specialized(top);
    for (int n = 0; n <= top; ++n) specialized.set(n, ZPolynomial(srows[n]));
    r.expect(specialized == s, [&] { return std::string("U or V at (tz, tz, t) differs from S"); });
  }

  const ZSeries t = ZSeries::variable(top), one_s = ZSeries::constant(1, top);
  const ZPolynomial z = ZPolynomial::z();
  const ZSeries a_top = a_series_from_formula(top);
  const ZSeries lhs = (z * z) * (t * a_top);
  const ZSeries s2 = s * s;
  const ZSeries rhs_s = (2 * z) * (t * s) + t * s2 - s2 / ((one_s + s) * (one_s + s));
  r.expect(lhs == rhs_s, [&] { return "t z^2 A - (2tzS + tS^2 - S^2/(1+S)^2) has " + first_nonzero_note(lhs - rhs_s); });
  const ZSeries dlhs = lhs.derivative();
  const ZSeries drhs = (2 * z) * s + s2;
  r.expect(dlhs == drhs, [&] { return "d/dt(t z^2 A) - (2zS + S^2) has " + first_nonzero_note(dlhs - drhs); });

  const std::vector<ZSeries> powers{s, s2};
  for (int power = 1; power <= 2; ++power) {
    for (int n = 1; n <= std::min(8, top); ++n) {
      for (int k = 0; k <= n; ++k) {
        const Rational closed = Rational(power, n) * Rational(binomial(n, k) * binomial(3 * n, k - power));
        const Rational iterated = powers[power - 1][n][k];
        const Rational lagrange = lagrange_coeff(phi, n, k, power);
        r.expect(closed == iterated && closed == lagrange, [&] {
          return "[t^" + std::to_string(n) + " z^" + std::to_string(k) + "] S^" + std::to_string(power) + ": closed " +
                 to_decimal(closed) + ", iterated " + to_decimal(iterated) + ", Lagrange " + to_decimal(lagrange);
        });
      }
    }
  }
  return r;
}

}  // namespace tamari
