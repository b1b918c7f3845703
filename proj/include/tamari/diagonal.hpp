#pragma once

// Faces of the cellular diagonal of the associahedron: pairs (F, G) of
// Schröder trees with max(F) <= min(G). Every face is reached from the
// interval S = max(F) <= T = min(G) by contracting a subset of the descent
// edges of S (giving F) and a subset of the ascent edges of T (giving G).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tamari/enumeration.hpp"
#include "tamari/schroeder_tree.hpp"

namespace tamari {

struct DiagonalFace {
  SchroederTree f;
  SchroederTree g;
  int dim = 0;
};

/// Visit each face once, with the interval (s, t) it was generated from.
void for_each_diagonal_face(const TreeIndex& index, Budget& budget,
                            const std::function<void(const DiagonalFace&, std::uint32_t s, std::uint32_t t)>& visit);

/// f-vector through the binomial sums over intervals.
std::vector<ExactInt> diagonal_fvector(std::size_t n, Budget& budget);
/// f-vector by generating every face.
std::vector<ExactInt> diagonal_fvector_enumerated(std::size_t n, Budget& budget);

/// Faces counted by (dim F, dim G), through sums of C(des(s), p) C(asc(t), q).
StatTable diagonal_fvector_by_dims(std::size_t n, Budget& budget);
/// Same table by generating every face.
StatTable diagonal_fvector_by_dims_enumerated(std::size_t n, Budget& budget);

struct EdgeClassification {
  int free = 0;
  int tied = 0;
  /// Counted once per matched (descent of s, ascent of t) pair.
  int constrained = 0;
  /// Ascents of s matched with descents of t. Such a pair keeps a common
  /// facet in every face of the fiber.
  int blocked = 0;
  friend bool operator==(const EdgeClassification&, const EdgeClassification&) = default;
};

/// Edges are matched through the block of leaves they span.
EdgeClassification classify_edges(const BinaryTree& s, const BinaryTree& t);
/// Edges are matched by comparing single-edge Schröder contractions.
EdgeClassification classify_edges_by_contraction(const BinaryTree& s, const BinaryTree& t);

/// No facet of the associahedron contains both F and G.
bool is_internal(const SchroederTree& f, const SchroederTree& g);
/// No Schröder tree other than the corolla is a contraction of both.
bool is_internal_by_all_contractions(const SchroederTree& f, const SchroederTree& g);

/// Internal faces by dimension through the free/tied/constrained counts.
std::vector<ExactInt> internal_fvector(std::size_t n, Budget& budget);
/// Internal faces by dimension by testing every face.
std::vector<ExactInt> internal_fvector_direct(std::size_t n, Budget& budget);

enum class DecompositionMode { MinMin, MaxMin, MinMax, MaxMax };
std::string to_string(DecompositionMode mode);
DecompositionMode parse_decomposition_mode(const std::string& text);

/// Tamari interval assigned to a face by the given rule.
std::pair<BinaryTree, BinaryTree> assigned_interval(const DiagonalFace& face, DecompositionMode mode);

struct DecompositionReport {
  DecompositionMode mode = DecompositionMode::MaxMin;
  std::size_t n = 0;
  /// Dimension-generating polynomial of every fiber, keyed by the assigned
  /// (lower, upper) tree ids.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<ExactInt>> fibers;
  /// Fibers whose polynomial is not x^d (1+x)^r.
  std::size_t non_boolean = 0;
  /// First non-boolean fiber, for the report.
  std::string first_non_boolean;
  /// Sum of the fiber polynomials.
  std::vector<ExactInt> fvector;
};

DecompositionReport decomposition_report(std::size_t n, DecompositionMode mode, Budget& budget);

/// If poly = x^d (1+x)^r, return {d, r}; otherwise {-1, -1}.
std::pair<int, int> boolean_shape(const std::vector<ExactInt>& poly);

/// One JSON object per face: f, g, dim, internal, assigned interval per mode.
std::string face_records_json(std::size_t n, Budget& budget);

}  // namespace tamari
