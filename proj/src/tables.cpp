#include "tamari/tables.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "tamari/diagonal.hpp"
#include "tamari/equations.hpp"
#include "tamari/formulas.hpp"
#include "tamari/lattice_path.hpp"

namespace tamari {

namespace {

const std::string kSigma = "Σ";

using Cells = std::vector<std::optional<ExactInt>>;

struct BlockRow {
  std::string label;
  Cells cells;
};

struct Block {
  std::string label;
  std::vector<BlockRow> rows;
};

Cells present(const std::vector<ExactInt>& values) { return {values.begin(), values.end()}; }

struct Layout {
  std::string name;
  /// Label of the block column; empty for a single block.
  std::string outer;
  std::string corner;
  std::vector<std::string> columns;
  bool sum_column = false;
  bool sum_row = false;
};

TextTable render(const Layout& layout, const std::vector<Block>& blocks) {
  TextTable table;
  table.name = layout.name;
  const bool outer = !layout.outer.empty();
  if (outer) table.header.push_back(layout.outer);
  table.header.push_back(layout.corner);
  table.header.insert(table.header.end(), layout.columns.begin(), layout.columns.end());
  if (layout.sum_column) table.header.push_back(kSigma);
  const std::size_t width = layout.columns.size();

  for (const auto& block : blocks) {
    std::vector<std::optional<ExactInt>> column_sums(width);
    for (const auto& row : block.rows) {
      if (row.cells.size() > width) throw std::logic_error("table row wider than its header");
      std::vector<std::string> line;
      if (outer) line.push_back(block.label);
      line.push_back(row.label);
      ExactInt sum = 0;
      for (std::size_t c = 0; c < width; ++c) {
        if (c < row.cells.size() && row.cells[c]) {
          line.push_back(to_decimal(*row.cells[c]));
          sum += *row.cells[c];
          column_sums[c] = column_sums[c].value_or(0) + *row.cells[c];
        } else {
          line.emplace_back();
        }
      }
      if (layout.sum_column) line.push_back(to_decimal(sum));
      table.rows.push_back(std::move(line));
    }
    if (layout.sum_row) {
      std::vector<std::string> line;
      if (outer) line.push_back(block.label);
      line.push_back(kSigma);
      for (const auto& s : column_sums) line.push_back(s ? to_decimal(*s) : std::string());
      if (layout.sum_column) line.emplace_back();
      table.rows.push_back(std::move(line));
    }
  }
  return table;
}

std::vector<std::string> numbered(int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
  return out;
}

void require_source(const std::string& table, const std::string& source, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (source == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw std::invalid_argument("table " + table + " has no source '" + source + "' (available: " + list + ")");
}

void report(const TableOptions& options, const std::string& message) {
  if (options.progress) options.progress(message);
}

ExactInt as_integer(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("series coefficient is not an integer: " + to_decimal(r));
  return numerator(r);
}

TextTable table_a(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 9;
  require_source("a", source, {"formula", "enumeration", "newton"});
  std::optional<ZSeries> series;
  if (source == "newton") series = newton_solve(PolynomialEquation::quartic(), N);
  std::vector<Block> blocks(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<ExactInt> row;
    if (source == "formula") {
      row = a_row(n);
    } else if (source == "enumeration") {
      report(o, "intervals of Tam(" + std::to_string(n) + ")");
      row = interval_histogram(static_cast<std::size_t>(n), budget, o.jobs);
    } else {
      for (int k = 0; k < n; ++k) row.push_back(as_integer((*series)[n][k]));
    }
    blocks[0].rows.push_back({std::to_string(n), present(row)});
  }
  return render({"a", "", "n\\k", numbered(0, N - 1), true, false}, blocks);
}

TextTable table_b(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 9;
  require_source("b", source, {"formula", "enumeration", "faces"});
  std::vector<Block> blocks(1);
  for (int n = 1; n <= N; ++n) {
    const auto size = static_cast<std::size_t>(n);
    std::vector<ExactInt> row;
    if (source == "formula") {
      row = b_row(n);
    } else {
      report(o, "diagonal faces for n=" + std::to_string(n));
      row = source == "enumeration" ? diagonal_fvector(size, budget) : diagonal_fvector_enumerated(size, budget);
    }
    blocks[0].rows.push_back({std::to_string(n), present(row)});
  }
  return render({"b", "", "n\\k", numbered(0, N - 1), false, false}, blocks);
}

TextTable table_internal(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 7;
  require_source("internal", source, {"enumeration", "faces"});
  std::vector<Block> blocks(1);
  for (int n = 1; n <= N; ++n) {
    const auto size = static_cast<std::size_t>(n);
    report(o, "internal faces for n=" + std::to_string(n));
    const auto row = source == "enumeration" ? internal_fvector(size, budget) : internal_fvector_direct(size, budget);
    blocks[0].rows.push_back({std::to_string(n), present(row)});
  }
  return render({"internal", "", "n\\k", numbered(0, N - 1), true, false}, blocks);
}

TextTable table_m_intervals(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 9;
  const int M = o.m > 0 ? o.m : 6;
  require_source("m-intervals", source, {"formula", "enumeration"});
  std::vector<Block> blocks(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<ExactInt> row;
    for (int m = 1; m <= M; ++m) {
      if (source == "formula") {
        row.push_back(m_tamari_interval_formula(m, n));
      } else {
        report(o, "intervals of Tam(" + std::to_string(m) + ", " + std::to_string(n) + ")");
        row.push_back(m_tamari_interval_count(m, n, budget));
      }
    }
    blocks[0].rows.push_back({std::to_string(n), present(row)});
  }
  return render({"m-intervals", "", "n\\m", numbered(1, M), false, false}, blocks);
}

TextTable table_m_stats(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 4;
  const int M = o.m > 0 ? o.m : 6;
  require_source("m-stats", source, {"enumeration"});
  std::vector<Block> blocks;
  std::size_t width = 0;
  for (int m = 1; m <= M; ++m) {
    Block block{std::to_string(m), {}};
    for (int n = 1; n <= N; ++n) {
      report(o, "cover statistics of Tam(" + std::to_string(m) + ", " + std::to_string(n) + ")");
      auto hist = m_tamari_interval_stats(m, n, budget);
      // Entries above the largest attained value of des + asc are not printed.
      while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
      width = std::max(width, hist.size());
      block.rows.push_back({std::to_string(n), present(hist)});
    }
    blocks.push_back(std::move(block));
  }
  return render({"m-stats", "m", "n\\k", numbered(0, static_cast<int>(width) - 1), true, false}, blocks);
}

TextTable table_refined_ell(const TableOptions& o, const std::string& source, Budget& budget) {
  if (o.marginal) {
    const int N = o.n > 0 ? o.n : 9;
    require_source("refined-ell --marginal", source, {"formula", "enumeration"});
    std::vector<Block> blocks(1);
    for (int n = 1; n <= N; ++n) {
      std::vector<ExactInt> row;
      if (source == "formula") {
        for (int ell = 0; ell < n; ++ell) row.push_back(refined_formula(n, ell));
      } else {
        report(o, "intervals of Tam(" + std::to_string(n) + ") by ell");
        const auto marginal = interval_stats_refined(static_cast<std::size_t>(n), budget).by_ell_k.marginal(0);
        for (int ell = 0; ell < n; ++ell) row.push_back(marginal.get({ell}));
      }
      blocks[0].rows.push_back({std::to_string(n), present(row)});
    }
    return render({"refined-ell", "", "n\\k", numbered(0, N - 1), true, false}, blocks);
  }
  const int N = o.n > 0 ? o.n : 5;
  require_source("refined-ell", source, {"enumeration"});
  std::vector<Block> blocks;
  for (int n = 1; n <= N; ++n) {
    report(o, "intervals of Tam(" + std::to_string(n) + ") by ell and k");
    const auto stats = interval_stats_refined(static_cast<std::size_t>(n), budget);
    Block block{std::to_string(n), {}};
    for (int i = 0; i < n; ++i) {
      std::vector<ExactInt> row;
      for (int k = 0; k < n; ++k) {
        if (!o.binomial) {
          row.push_back(stats.by_ell_k.get({i, k}));
          continue;
        }
        ExactInt b = 0;
        for (int l = k; l < n; ++l) b += stats.by_ell_k.get({i, l}) * binomial(l, k);
        row.push_back(b);
      }
      block.rows.push_back({std::to_string(i), present(row)});
    }
    blocks.push_back(std::move(block));
  }
  return render({"refined-ell", "n", "i\\k", numbered(0, N - 1), !o.binomial, true}, blocks);
}

TextTable table_refined_pq(const TableOptions& o, const std::string& source, Budget& budget) {
  if (o.marginal) {
    const int N = o.n > 0 ? o.n : 9;
    require_source("refined-pq --marginal", source, {"formula", "enumeration"});
    std::vector<Block> blocks(1);
    for (int n = 1; n <= N; ++n) {
      std::vector<ExactInt> row;
      if (source == "formula") {
        for (int p = 0; p < n; ++p) row.push_back(separated_formula(n, p));
      } else {
        report(o, "intervals of Tam(" + std::to_string(n) + ") by des and asc");
        const auto stats = interval_stats_refined(static_cast<std::size_t>(n), budget);
        for (int p = 0; p < n; ++p) row.push_back(stats.by_des_asc.get({p, n - 1 - p}));
      }
      blocks[0].rows.push_back({std::to_string(n), present(row)});
    }
    return render({"refined-pq", "", "n\\p", numbered(0, N - 1), true, false}, blocks);
  }
  const int N = o.n > 0 ? o.n : 5;
  require_source("refined-pq", source, {"enumeration"});
  std::vector<Block> blocks;
  for (int n = 1; n <= N; ++n) {
    report(o, "intervals of Tam(" + std::to_string(n) + ") by des and asc");
    const auto stats = interval_stats_refined(static_cast<std::size_t>(n), budget);
    Block block{std::to_string(n), {}};
    for (int p = 0; p < n; ++p) {
      std::vector<ExactInt> row;
      if (o.binomial) {
        for (int k = 0; k < n; ++k) {
          ExactInt b = 0;
          for (int q = 0; p + q < n; ++q) b += stats.by_des_asc.get({p, q}) * binomial(p + q, k);
          row.push_back(b);
        }
      } else {
        for (int q = 0; p + q < n; ++q) row.push_back(stats.by_des_asc.get({p, q}));
      }
      block.rows.push_back({std::to_string(p), present(row)});
    }
    blocks.push_back(std::move(block));
  }
  return render({"refined-pq", "n", o.binomial ? "ℓ\\k" : "p\\q", numbered(0, N - 1), false, o.binomial}, blocks);
}

TextTable table_face_dims(const TableOptions& o, const std::string& source, Budget& budget) {
  const int N = o.n > 0 ? o.n : 5;
  require_source("face-dims", source, {"enumeration", "faces"});
  std::vector<Block> blocks;
  for (int n = 1; n <= N; ++n) {
    const auto size = static_cast<std::size_t>(n);
    report(o, "diagonal faces for n=" + std::to_string(n) + " by dimensions");
    const auto dims = source == "enumeration" ? diagonal_fvector_by_dims(size, budget)
                                              : diagonal_fvector_by_dims_enumerated(size, budget);
    Block block{std::to_string(n), {}};
    for (int p = 0; p < n; ++p) {
      std::vector<ExactInt> row;
      for (int q = 0; p + q < n; ++q) row.push_back(dims.get({p, q}));
      block.rows.push_back({std::to_string(p), present(row)});
    }
    blocks.push_back(std::move(block));
  }
  return render({"face-dims", "n", "p\\q", numbered(0, N - 1), false, false}, blocks);
}

}  // namespace

std::string TextTable::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string TextTable::to_json() const {
  nlohmann::ordered_json j;
  j["table"] = name;
  j["header"] = header;
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : r) row.push_back(c.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c));
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  return j.dump(2) + "\n";
}

std::vector<std::string> table_names() {
  return {"a", "b", "internal", "m-intervals", "m-stats", "refined-ell", "refined-pq", "face-dims"};
}

TextTable make_table(const std::string& name, const TableOptions& options, Budget& budget) {
  if (options.n < 0 || options.m < 0) throw std::invalid_argument("table ranges must be positive");
  const bool refined = name == "refined-ell" || name == "refined-pq";
  if ((options.marginal || options.binomial) && !refined) {
    throw std::invalid_argument("--marginal and --binomial apply to refined-ell and refined-pq only");
  }
  if (options.marginal && options.binomial) throw std::invalid_argument("--marginal and --binomial exclude each other");
  auto source_or = [&](const char* fallback) { return options.source.empty() ? std::string(fallback) : options.source; };
  if (name == "a") return table_a(options, source_or("formula"), budget);
  if (name == "b") return table_b(options, source_or("formula"), budget);
  if (name == "internal") return table_internal(options, source_or("enumeration"), budget);
  if (name == "m-intervals") return table_m_intervals(options, source_or("formula"), budget);
  if (name == "m-stats") return table_m_stats(options, source_or("enumeration"), budget);
  if (name == "refined-ell") return table_refined_ell(options, source_or(options.marginal ? "formula" : "enumeration"), budget);
  if (name == "refined-pq") return table_refined_pq(options, source_or(options.marginal ? "formula" : "enumeration"), budget);
  if (name == "face-dims") return table_face_dims(options, source_or("enumeration"), budget);
  throw std::invalid_argument("unknown table: " + name);
}

}  // namespace tamari
