#pragma once

// Named batches of invariant checks, run by the command line tool and the
// acceptance run. Each suite returns one report per group of checks.

#include <optional>
#include <string>
#include <vector>

#include "tamari/diagonal.hpp"
#include "tamari/enumeration.hpp"
#include "tamari/report.hpp"

namespace tamari {

struct SuiteOptions {
  /// Size bound; 0 selects the suite's default.
  int n = 0;
  /// Truncation order; 0 selects the suite's default.
  int order = 0;
  /// Restrict the decompositions suite to one rule.
  std::optional<DecompositionMode> mode;
};

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options, Budget& budget);

/// tamari_leq agrees with reachability along covers; reflexivity,
/// antisymmetry and transitivity; des + asc = n - 1; interval counts.
std::vector<CheckReport> order_oracle_suite(int n_max, Budget& budget);
/// The canopy characterizations agree, its sign counts are asc and des,
/// canopies increase along intervals, and both-plus / both-minus positions
/// count des(s) / asc(t).
std::vector<CheckReport> canopy_suite(int n_max, Budget& budget);
/// Trees and Dyck paths: bijection, valleys = asc, double falls = des,
/// contacts = ell, and rotations map to path covers.
std::vector<CheckReport> dyck_suite(int n_max, Budget& budget);
/// Alternating sums of the diagonal f-vector equal 1.
std::vector<CheckReport> euler_suite(int n_max, Budget& budget);
/// chu_vandermonde_check on every n, r <= bound and 0 <= k < n.
std::vector<CheckReport> chu_vandermonde_suite(int bound);
/// Fiber shapes of the four decompositions of the diagonal. The min-max
/// rule is expected to produce a non-boolean fiber for n >= 3.
std::vector<CheckReport> decompositions_suite(int n, std::optional<DecompositionMode> mode, Budget& budget);
/// Internal faces through edge classes against direct testing.
std::vector<CheckReport> internal_cross_suite(int n_max, Budget& budget);
/// m-Tamari interval counts against the product formula for every (m, n)
/// with m <= 6 and at most `max_elements` elements; m = 1 against Tam(n).
std::vector<CheckReport> m_tamari_suite(int max_elements, Budget& budget);

}  // namespace tamari
