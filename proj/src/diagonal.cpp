#include "tamari/diagonal.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <tuple>
#include <stdexcept>

#include "json.hpp"

namespace tamari {

namespace {

struct TreeEdges {
  LabeledTree labels;
  std::vector<int> descents;  // child labels of right-child edges
  std::vector<int> ascents;   // child labels of left-child edges
};

TreeEdges tree_edges(const BinaryTree& t) {
  TreeEdges e{label_inorder(t), {}, {}};
  for (int i = 1; i <= e.labels.n; ++i) {
    const int p = e.labels.parent[i];
    if (p == 0) continue;
    (i > p ? e.descents : e.ascents).push_back(i);
  }
  return e;
}

std::vector<TreeEdges> edge_cache(const TreeIndex& index) {
  std::vector<TreeEdges> out;
  out.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) out.push_back(tree_edges(index.tree(i)));
  return out;
}

// The edge from node c to its parent spans leaves span_lo[c]-1 .. span_hi[c].
int block_key(const LabeledTree& lt, int c) { return (lt.span_lo[c] - 1) * 64 + lt.span_hi[c]; }

// All contractions of subsets of `edges`, indexed by subset mask.
std::vector<SchroederTree> subset_contractions(const BinaryTree& t, const std::vector<int>& edges) {
  std::vector<SchroederTree> out;
  out.reserve(std::size_t{1} << edges.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<bool> flags(t.size() + 1, false);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (mask >> i & 1) flags[edges[i]] = true;
    }
    out.push_back(contract_binary(t, flags));
  }
  return out;
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

}  // namespace

void for_each_diagonal_face(const TreeIndex& index, Budget& budget,
                            const std::function<void(const DiagonalFace&, std::uint32_t, std::uint32_t)>& visit) {
  const auto edges = edge_cache(index);
  for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) {
    const auto& ds = edges[s].descents;
    const auto& at = edges[t].ascents;
    budget.charge(std::uint64_t{1} << (ds.size() + at.size()), "diagonal faces");
    const auto fs = subset_contractions(index.tree(s), ds);
    const auto gs = subset_contractions(index.tree(t), at);
    for (std::size_t x = 0; x < fs.size(); ++x) {
      for (std::size_t y = 0; y < gs.size(); ++y) {
        const int dim = std::popcount(x) + std::popcount(y);
        visit(DiagonalFace{fs[x], gs[y], dim}, s, t);
      }
    }
  });
}

std::vector<ExactInt> diagonal_fvector(std::size_t n, Budget& budget) {
  require_positive(n, "diagonal_fvector");
  const TreeIndex index(n, &budget);
  // Histogram of des(s)+asc(t) first, then the binomial transform.
  std::vector<std::uint64_t> hist(n, 0);
  for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) { ++hist[index.des(s) + index.asc(t)]; });
  std::vector<ExactInt> out(n, 0);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k <= l; ++k) out[k] += hist[l] * binomial(l, k);
  }
  return out;
}

std::vector<ExactInt> diagonal_fvector_enumerated(std::size_t n, Budget& budget) {
  require_positive(n, "diagonal_fvector_enumerated");
  const TreeIndex index(n, &budget);
  std::vector<std::uint64_t> counts(n, 0);
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    ++counts.at(face.dim);
  });
  return {counts.begin(), counts.end()};
}

StatTable diagonal_fvector_by_dims(std::size_t n, Budget& budget) {
  require_positive(n, "diagonal_fvector_by_dims");
  const TreeIndex index(n, &budget);
  std::map<std::pair<int, int>, std::uint64_t> hist;
  for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) { ++hist[{index.des(s), index.asc(t)}]; });
  StatTable out({"p", "q"});
  for (const auto& [key, c] : hist) {
    for (int p = 0; p <= key.first; ++p) {
      for (int q = 0; q <= key.second; ++q) out.add({p, q}, c * binomial(key.first, p) * binomial(key.second, q));
    }
  }
  return out;
}

StatTable diagonal_fvector_by_dims_enumerated(std::size_t n, Budget& budget) {
  require_positive(n, "diagonal_fvector_by_dims_enumerated");
  const TreeIndex index(n, &budget);
  std::map<std::pair<int, int>, std::uint64_t> hist;
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    ++hist[{static_cast<int>(face.f.dimension()), static_cast<int>(face.g.dimension())}];
  });
  StatTable out({"p", "q"});
  for (const auto& [key, c] : hist) out.add({key.first, key.second}, c);
  return out;
}

namespace {

enum class Kind { Descent, Ascent };

// Pair up edges of s and t whose keys coincide and tally the classes.
template <typename Key>
EdgeClassification classify(const std::vector<std::pair<Key, Kind>>& s_edges,
                            const std::vector<std::pair<Key, Kind>>& t_edges) {
  EdgeClassification out;
  auto partner = [](const std::vector<std::pair<Key, Kind>>& edges, const Key& key) -> const Kind* {
    for (const auto& [k, kind] : edges) {
      if (k == key) return &kind;
    }
    return nullptr;
  };
  for (const auto& [key, kind] : s_edges) {
    const Kind* other = partner(t_edges, key);
    if (kind == Kind::Descent) {
      if (!other) ++out.free;
      else if (*other == Kind::Descent) ++out.tied;
      else ++out.constrained;
    } else if (other && *other == Kind::Descent) {
      ++out.blocked;
    }
  }
  for (const auto& [key, kind] : t_edges) {
    if (kind != Kind::Ascent) continue;
    const Kind* other = partner(s_edges, key);
    if (!other) ++out.free;
    else if (*other == Kind::Ascent) ++out.tied;
    // A descent partner in s was counted once as constrained above.
  }
  return out;
}

void require_interval(const BinaryTree& s, const BinaryTree& t, const char* what) {
  if (s.empty() || !tamari_leq(s, t)) throw std::invalid_argument(std::string(what) + ": not an interval");
}

}  // namespace

EdgeClassification classify_edges(const BinaryTree& s, const BinaryTree& t) {
  require_interval(s, t, "classify_edges");
  auto collect = [](const BinaryTree& tree) {
    const LabeledTree lt = label_inorder(tree);
    std::vector<std::pair<int, Kind>> out;
    for (int i = 1; i <= lt.n; ++i) {
      if (lt.parent[i] == 0) continue;
      out.emplace_back(block_key(lt, i), i > lt.parent[i] ? Kind::Descent : Kind::Ascent);
    }
    return out;
  };
  return classify(collect(s), collect(t));
}

EdgeClassification classify_edges_by_contraction(const BinaryTree& s, const BinaryTree& t) {
  require_interval(s, t, "classify_edges_by_contraction");
  auto collect = [](const BinaryTree& tree) {
    const LabeledTree lt = label_inorder(tree);
    std::vector<std::pair<SchroederTree, Kind>> out;
    for (int i = 1; i <= lt.n; ++i) {
      if (lt.parent[i] == 0) continue;
      std::vector<bool> flags(lt.n + 1, true);
      flags[i] = false;
      out.emplace_back(contract_binary(tree, flags), i > lt.parent[i] ? Kind::Descent : Kind::Ascent);
    }
    return out;
  };
  return classify(collect(s), collect(t));
}

bool is_internal(const SchroederTree& f, const SchroederTree& g) {
  const auto a = two_node_contractions(f);
  const auto b = two_node_contractions(g);
  std::vector<SchroederTree> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

bool is_internal_by_all_contractions(const SchroederTree& f, const SchroederTree& g) {
  const auto a = proper_contractions(f);
  const auto b = proper_contractions(g);
  std::vector<SchroederTree> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

std::vector<ExactInt> internal_fvector(std::size_t n, Budget& budget) {
  require_positive(n, "internal_fvector");
  const TreeIndex index(n, &budget);
  // Histogram of (free, tied, cons), then the closed sum per class.
  std::map<std::tuple<int, int, int>, std::uint64_t> hist;
  for_each_interval(index, budget, [&](std::uint32_t s, std::uint32_t t) {
    const auto c = classify_edges(index.tree(s), index.tree(t));
    ++hist[{c.free, c.tied, c.constrained}];
  });
  std::vector<ExactInt> out(n, 0);
  for (const auto& [key, count] : hist) {
    const auto [fr, ti, co] = key;
    for (int k = 0; k < static_cast<int>(n); ++k) {
      ExactInt sum = 0;
      for (int i = 0; i <= co; ++i) {
        sum += (ExactInt(1) << i) * binomial(co, i) * binomial(fr, k - ti - 2 * co + i);
      }
      out[k] += sum * count;
    }
  }
  return out;
}

std::vector<ExactInt> internal_fvector_direct(std::size_t n, Budget& budget) {
  require_positive(n, "internal_fvector_direct");
  const TreeIndex index(n, &budget);
  std::vector<std::uint64_t> counts(n, 0);
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    if (is_internal(face.f, face.g)) ++counts.at(face.dim);
  });
  return {counts.begin(), counts.end()};
}

std::string to_string(DecompositionMode mode) {
  switch (mode) {
    case DecompositionMode::MinMin: return "min-min";
    case DecompositionMode::MaxMin: return "max-min";
    case DecompositionMode::MinMax: return "min-max";
    case DecompositionMode::MaxMax: return "max-max";
  }
  return "?";
}

DecompositionMode parse_decomposition_mode(const std::string& text) {
  for (auto m : {DecompositionMode::MinMin, DecompositionMode::MaxMin, DecompositionMode::MinMax,
                 DecompositionMode::MaxMax}) {
    if (to_string(m) == text) return m;
  }
  throw std::invalid_argument("unknown decomposition mode '" + text + "'");
}

std::pair<BinaryTree, BinaryTree> assigned_interval(const DiagonalFace& face, DecompositionMode mode) {
  const bool lower_min = mode == DecompositionMode::MinMin || mode == DecompositionMode::MinMax;
  const bool upper_min = mode == DecompositionMode::MinMin || mode == DecompositionMode::MaxMin;
  return {lower_min ? min_tree(face.f) : max_tree(face.f), upper_min ? min_tree(face.g) : max_tree(face.g)};
}

std::pair<int, int> boolean_shape(const std::vector<ExactInt>& poly) {
  int lo = 0;
  while (lo < static_cast<int>(poly.size()) && poly[lo] == 0) ++lo;
  int hi = static_cast<int>(poly.size()) - 1;
  while (hi >= lo && poly[hi] == 0) --hi;
  if (lo > hi) return {-1, -1};
  const int r = hi - lo;
  for (int i = 0; i <= r; ++i) {
    if (poly[lo + i] != binomial(r, i)) return {-1, -1};
  }
  return {lo, r};
}

DecompositionReport decomposition_report(std::size_t n, DecompositionMode mode, Budget& budget) {
  require_positive(n, "decomposition_report");
  const TreeIndex index(n, &budget);
  DecompositionReport report;
  report.mode = mode;
  report.n = n;
  report.fvector.assign(n, 0);
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    const auto [lo, hi] = assigned_interval(face, mode);
    auto& poly = report.fibers[{static_cast<std::uint32_t>(index.id(lo)), static_cast<std::uint32_t>(index.id(hi))}];
    if (poly.empty()) poly.assign(n, 0);
    poly.at(face.dim) += 1;
    report.fvector.at(face.dim) += 1;
  });
  for (const auto& [key, poly] : report.fibers) {
    if (boolean_shape(poly).first >= 0) continue;
    if (report.non_boolean++ == 0) {
      std::string text = to_string(index.tree(key.first)) + " <= " + to_string(index.tree(key.second)) + ": [";
      for (std::size_t i = 0; i < poly.size(); ++i) text += (i ? "," : "") + to_decimal(poly[i]);
      report.first_non_boolean = text + "]";
    }
  }
  return report;
}

std::string face_records_json(std::size_t n, Budget& budget) {
  require_positive(n, "face_records_json");
  const TreeIndex index(n, &budget);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    nlohmann::ordered_json rec;
    rec["f"] = to_string(face.f);
    rec["g"] = to_string(face.g);
    rec["dim"] = face.dim;
    rec["internal"] = is_internal(face.f, face.g);
    nlohmann::ordered_json assigned;
    for (auto mode : {DecompositionMode::MinMin, DecompositionMode::MaxMin, DecompositionMode::MinMax,
                      DecompositionMode::MaxMax}) {
      const auto [lo, hi] = assigned_interval(face, mode);
      assigned[to_string(mode)] = {to_string(lo), to_string(hi)};
    }
    rec["assigned_vertex_per_mode"] = std::move(assigned);
    records.push_back(std::move(rec));
  });
  return records.dump(1);
}

}  // namespace tamari
