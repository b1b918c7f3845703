#include "tamari/suites.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tamari/binary_tree.hpp"
#include "tamari/equations.hpp"
#include "tamari/formulas.hpp"
#include "tamari/lattice_path.hpp"

namespace tamari {

namespace {

std::string at_n(std::size_t n) { return "n=" + std::to_string(n); }

std::string join(const std::vector<ExactInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_decimal(v[i]);
  return out + "]";
}

std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

}  // namespace

std::vector<CheckReport> order_oracle_suite(int n_max, Budget& budget) {
  CheckReport oracle("order against reachability");
  CheckReport axioms("partial order axioms");
  CheckReport stats("des + asc = n - 1");
  CheckReport counts("interval counts");
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    const TreeIndex index(n, &budget);
    const std::size_t c = index.size();
    budget.charge(c * c, "order oracle");
    std::vector<std::vector<bool>> reach(c, std::vector<bool>(c, false));
    for (std::size_t s = 0; s < c; ++s) {
      std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
      reach[s][s] = true;
      while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (auto u : index.up(cur)) {
          if (!reach[s][u]) {
            reach[s][u] = true;
            queue.push_back(u);
          }
        }
      }
    }
    std::vector<std::vector<bool>> leq(c, std::vector<bool>(c));
    ExactInt related = 0;
    for (std::size_t s = 0; s < c; ++s) {
      for (std::size_t t = 0; t < c; ++t) {
        leq[s][t] = tamari_leq(index.tree(s), index.tree(t));
        related += leq[s][t] ? 1 : 0;
        oracle.expect(leq[s][t] == reach[s][t], [&] {
          return at_n(n) + " s=" + to_string(index.tree(s)) + " t=" + to_string(index.tree(t));
        });
      }
    }
    for (std::size_t i = 0; i < c; ++i) {
      axioms.expect(leq[i][i], [&] { return at_n(n) + " not reflexive at " + to_string(index.tree(i)); });
      for (std::size_t j = 0; j < c; ++j) {
        if (!leq[i][j]) continue;
        if (i != j) {
          axioms.expect(!leq[j][i], [&] {
            return at_n(n) + " not antisymmetric: " + to_string(index.tree(i)) + " " + to_string(index.tree(j));
          });
        }
        bool closed = true;
        for (std::size_t k = 0; k < c && closed; ++k) closed = !leq[j][k] || leq[i][k];
        axioms.expect(closed, [&] {
          return at_n(n) + " not transitive above " + to_string(index.tree(i)) + " <= " + to_string(index.tree(j));
        });
      }
      stats.expect(index.des(i) + index.asc(i) == static_cast<int>(n) - 1,
                   [&] { return at_n(n) + " t=" + to_string(index.tree(i)); });
      stats.expect(des(index.tree(i)) == index.des(i) && asc(index.tree(i)) == index.asc(i),
                   [&] { return at_n(n) + " cover counts differ from edge counts at " + to_string(index.tree(i)); });
    }
    ExactInt formula = 0;
    for (const auto& v : a_row(static_cast<std::int64_t>(n))) formula += v;
    counts.expect(related == formula && count_intervals(n, budget) == formula, [&] {
      return at_n(n) + " related pairs " + to_decimal(related) + ", formula " + to_decimal(formula);
    });
  }
  return {oracle, axioms, stats, counts};
}

std::vector<CheckReport> canopy_suite(int n_max, Budget& budget) {
  CheckReport characterizations("canopy characterizations and sign counts");
  CheckReport monotone("canopy increases along intervals");
  CheckReport agreements("canopy agreements count des(s) + asc(t)");
  CheckReport histogram("agreement histogram equals a_formula");
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    const TreeIndex index(n, &budget);
    std::vector<CanopyVector> canopies(index.size());
    for (std::size_t id = 0; id < index.size(); ++id) {
      const auto& t = index.tree(id);
      const auto c = canopy(t);
      canopies[id] = c;
      characterizations.expect(c == canopy_by_right_leaves(t) && c == canopy_by_paths(t) &&
                                   c == canopy_by_left_subtrees(t),
                               [&] { return at_n(n) + " t=" + to_string(t); });
      const auto minus = std::count(c.begin(), c.end(), Sign::Minus);
      characterizations.expect(minus == asc(t) && static_cast<int>(c.size()) - minus == des(t),
                               [&] { return at_n(n) + " sign counts at " + to_string(t); });
    }
    std::vector<ExactInt> by_agree(n, 0);
    for_each_interval(index, budget, [&](std::uint32_t si, std::uint32_t ti) {
      const auto& cs = canopies[si];
      const auto& ct = canopies[ti];
      int both_plus = 0, both_minus = 0;
      bool increasing = true;
      for (std::size_t j = 0; j < cs.size(); ++j) {
        increasing = increasing && !(cs[j] == Sign::Plus && ct[j] == Sign::Minus);
        both_plus += cs[j] == Sign::Plus && ct[j] == Sign::Plus;
        both_minus += cs[j] == Sign::Minus && ct[j] == Sign::Minus;
      }
      auto where = [&] { return at_n(n) + " s=" + to_string(index.tree(si)) + " t=" + to_string(index.tree(ti)); };
      monotone.expect(increasing, where);
      agreements.expect(both_plus == index.des(si) && both_minus == index.asc(ti), where);
      const int a = agree(index.tree(si), index.tree(ti));
      agreements.expect(a == index.des(si) + index.asc(ti), where);
      if (a >= 0 && a < static_cast<int>(n)) by_agree[a] += 1;
    });
    const auto expected = a_row(static_cast<std::int64_t>(n));
    histogram.expect(by_agree == expected, [&] { return at_n(n) + " " + join(by_agree) + " vs " + join(expected); });
  }
  return {characterizations, monotone, agreements, histogram};
}

std::vector<CheckReport> dyck_suite(int n_max, Budget& budget) {
  CheckReport bijection("trees and Dyck paths in bijection");
  CheckReport statistics("valleys = asc, double falls = des, contacts = ell");
  CheckReport covers("rotations map to Dyck covers");
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    const TreeIndex index(n, &budget);
    std::vector<LatticePath> images;
    for (std::size_t id = 0; id < index.size(); ++id) {
      const auto& t = index.tree(id);
      const auto p = tree_to_dyck(t);
      auto where = [&] { return at_n(n) + " t=" + to_string(t) + " path=" + p.steps; };
      bijection.expect(is_dyck_path(p) && p.steps.size() == 2 * n && dyck_to_tree(p) == t, where);
      images.push_back(p);
      statistics.expect(valleys(p) == asc(t) && double_falls(p) == des(t) && contacts(p) == ell(t), where);
      std::vector<LatticePath> mapped;
      for (auto u : index.up(id)) mapped.push_back(tree_to_dyck(index.tree(u)));
      std::sort(mapped.begin(), mapped.end());
      covers.expect(mapped == dyck_rotations_up(p), where);
    }
    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    bijection.expect(distinct && images.size() == catalan(n), [&] { return at_n(n) + " images not distinct"; });
  }
  return {bijection, statistics, covers};
}

std::vector<CheckReport> euler_suite(int n_max, Budget& budget) {
  CheckReport diagonal("alternating sum of the diagonal f-vector");
  CheckReport formula("alternating sum of b_formula");
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    const auto f = diagonal_fvector(n, budget);
    ExactInt alt = 0;
    for (std::size_t k = 0; k < f.size(); ++k) alt += (k % 2 ? -1 : 1) * f[k];
    diagonal.expect(alt == 1, [&] { return at_n(n) + " f=" + join(f) + " sum=" + to_decimal(alt); });
    const auto b = b_row(static_cast<std::int64_t>(n));
    ExactInt alt_b = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt_b += (k % 2 ? -1 : 1) * b[k];
    formula.expect(alt_b == 1, [&] { return at_n(n) + " sum=" + to_decimal(alt_b); });
  }
  return {diagonal, formula};
}

std::vector<CheckReport> chu_vandermonde_suite(int bound) {
  CheckReport r("Chu-Vandermonde identity");
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      for (std::int64_t q = 0; q <= bound; ++q) {
        r.expect(chu_vandermonde_check(n, k, q), [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(q);
        });
      }
    }
  }
  return one(r);
}

std::vector<CheckReport> decompositions_suite(int n, std::optional<DecompositionMode> mode, Budget& budget) {
  std::vector<DecompositionMode> modes{DecompositionMode::MinMin, DecompositionMode::MaxMin,
                                       DecompositionMode::MinMax, DecompositionMode::MaxMax};
  if (mode) modes = {*mode};
  const auto size = static_cast<std::size_t>(n);
  const auto fvector = diagonal_fvector(size, budget);
  const TreeIndex index(size, &budget);
  std::vector<CheckReport> out;
  for (auto m : modes) {
    CheckReport r("decomposition " + to_string(m));
    const auto report = decomposition_report(size, m, budget);
    r.expect(report.fvector == fvector, [&] { return at_n(size) + " fibers sum to " + join(report.fvector); });
    if (m == DecompositionMode::MinMax) {
      // Not a Morse decomposition: some fiber is not an interval of the boolean lattice.
      if (n >= 3) {
        r.expect(report.non_boolean > 0, [&] { return at_n(size) + " every min-max fiber is boolean"; });
      }
      r.notes.push_back("min-max " + at_n(size) + ": " + std::to_string(report.non_boolean) +
                        " non-boolean fibers" +
                        (report.first_non_boolean.empty() ? "" : ", first " + report.first_non_boolean) +
                        " (expected)");
    } else {
      r.expect(report.non_boolean == 0, [&] { return at_n(size) + " " + report.first_non_boolean; });
    }
    if (m == DecompositionMode::MaxMin) {
      for (const auto& [key, poly] : report.fibers) {
        const auto shape = boolean_shape(poly);
        r.expect(shape == std::make_pair(0, index.des(key.first) + index.asc(key.second)), [&] {
          return at_n(size) + " fiber of " + to_string(index.tree(key.first)) + " <= " +
                 to_string(index.tree(key.second)) + " is " + join(poly);
        });
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> internal_cross_suite(int n_max, Budget& budget) {
  CheckReport edges("edge classes by blocks and by contractions");
  CheckReport criterion("facet criterion against all contractions");
  CheckReport counts("internal faces by edge classes and by testing");
  CheckReport facets("facets are internal");
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    const TreeIndex index(n, &budget);
    for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) {
      edges.expect(classify_edges(index.tree(s), index.tree(t)) ==
                       classify_edges_by_contraction(index.tree(s), index.tree(t)),
                   [&] { return at_n(n) + " s=" + to_string(index.tree(s)) + " t=" + to_string(index.tree(t)); });
    });
    for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
      criterion.expect(is_internal(face.f, face.g) == is_internal_by_all_contractions(face.f, face.g),
                       [&] { return at_n(n) + " F=" + to_string(face.f) + " G=" + to_string(face.g); });
    });
    const auto by_classes = internal_fvector(n, budget);
    const auto direct = internal_fvector_direct(n, budget);
    counts.expect(by_classes == direct, [&] { return at_n(n) + " " + join(by_classes) + " vs " + join(direct); });
    facets.expect(by_classes.back() == synchronized_count(static_cast<std::int64_t>(n)),
                  [&] { return at_n(n) + " top entry " + to_decimal(by_classes.back()); });
  }
  return {edges, criterion, counts, facets};
}

std::vector<CheckReport> m_tamari_suite(int max_elements, Budget& budget) {
  CheckReport counts("m-Tamari interval counts against the product formula");
  CheckReport stats("cover statistic histograms");
  CheckReport tamari("Tam(1, n) is Tam(n)");
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; fuss_catalan(m, n) <= max_elements; ++n) {
      const auto where = [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); };
      const ExactInt count = m_tamari_interval_count(m, n, budget);
      counts.expect(count == m_tamari_interval_formula(m, n), [&] { return where() + " count " + to_decimal(count); });
      const auto hist = m_tamari_interval_stats(m, n, budget);
      ExactInt sum = 0;
      for (const auto& v : hist) sum += v;
      stats.expect(sum == count && !hist.empty() && hist.front() == 1,
                   [&] { return where() + " histogram " + join(hist); });
      if (m == 1) {
        tamari.expect(hist == a_row(n), [&] { return where() + " histogram " + join(hist); });
      }
    }
  }
  return {counts, stats, tamari};
}

std::vector<std::string> suite_names() {
  return {"order-oracle", "canopy",       "dyck",          "catalytic",      "polynomial",
          "pde",          "telescoped",   "chu-vandermonde", "euler",        "fusy-humbert",
          "decompositions", "internal-cross", "m-tamari",    "specializations"};
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options, Budget& budget) {
  auto n_or = [&](int fallback) { return options.n > 0 ? options.n : fallback; };
  auto order_or = [&](int fallback) { return options.order > 0 ? options.order : fallback; };
  if (name == "order-oracle") return order_oracle_suite(n_or(7), budget);
  if (name == "canopy") return canopy_suite(n_or(7), budget);
  if (name == "dyck") return dyck_suite(n_or(6), budget);
  if (name == "catalytic") return one(catalytic_equation_check(order_or(7), budget));
  if (name == "polynomial") {
    const int order = order_or(12);
    return {verify_polynomial_equation(order), verify_b_equation(order), verify_parametrization(order)};
  }
  if (name == "pde") return one(verify_pde(order_or(12)));
  if (name == "telescoped") return {telescoped_recurrence_check(1, n_or(12)), two_term_recurrence_check(1, 20)};
  if (name == "chu-vandermonde") return chu_vandermonde_suite(n_or(30));
  if (name == "euler") return euler_suite(n_or(7), budget);
  if (name == "fusy-humbert") return one(fusy_humbert_check(order_or(6), budget));
  if (name == "decompositions") return decompositions_suite(n_or(5), options.mode, budget);
  if (name == "internal-cross") return internal_cross_suite(n_or(5), budget);
  if (name == "m-tamari") return m_tamari_suite(n_or(5000), budget);
  if (name == "specializations") {
    CheckReport r("specializations");
    for (int n = 1; n <= n_or(12); ++n) r.absorb(specialization_suite(n));
    return one(r);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tamari
