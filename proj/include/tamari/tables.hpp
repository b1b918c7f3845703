#pragma once

// The count tables in the row/column layout they are usually printed in:
// one row per n (or per n and a second index when a table is split into
// blocks), empty cells for absent entries, and a "Σ" column or row where
// the printed table has one.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tamari/enumeration.hpp"

namespace tamari {

struct TextTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma separated, one line per row, "\n" line ends.
  std::string to_csv() const;
  /// {"table": name, "header": [...], "rows": [[...]]}; counts are decimal
  /// strings and absent cells are null.
  std::string to_json() const;
};

struct TableOptions {
  /// Largest n; 0 selects the printed range.
  int n = 0;
  /// Largest m for the m-Tamari tables; 0 selects the printed range.
  int m = 0;
  /// formula, enumeration, faces or newton; empty selects the table's default.
  std::string source;
  /// Row sums over the second index, as a single block (refined-ell, refined-pq).
  bool marginal = false;
  /// Binomial transform in k (refined-ell, refined-pq).
  bool binomial = false;
  std::size_t jobs = 1;
  /// Called with a short message before each enumerated row.
  std::function<void(const std::string&)> progress;
};

std::vector<std::string> table_names();
/// Throws std::invalid_argument for an unknown table, source or option.
TextTable make_table(const std::string& name, const TableOptions& options, Budget& budget);

}  // namespace tamari
