#pragma once

// Lattice paths: Dyck paths over {U, D} as an alternative model of the
// Tamari lattice, and N/E paths staying above the line x = my as elements
// of the m-Tamari lattice.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tamari/binary_tree.hpp"
#include "tamari/enumeration.hpp"

namespace tamari {

/// Steps are stored as characters: 'U'/'D' for Dyck paths, 'N'/'E' for
/// m-Tamari paths.
struct LatticePath {
  std::string steps;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

bool is_dyck_path(const LatticePath& p);
/// N/E path with n N steps and mn E steps, every prefix with #E <= m #N.
bool is_m_path(const LatticePath& p, int m);

/// pi(empty) = "", pi(node(L, R)) = pi(L) U pi(R) D.
LatticePath tree_to_dyck(const BinaryTree& t);
/// Inverse of tree_to_dyck. Throws std::invalid_argument on non-Dyck input.
BinaryTree dyck_to_tree(const LatticePath& p);

/// Occurrences of DU.
int valleys(const LatticePath& p);
/// Occurrences of DD.
int double_falls(const LatticePath& p);
/// Returns to the axis strictly between the two endpoints.
int contacts(const LatticePath& p);

/// Upper covers of a Dyck path: a D followed by a U is exchanged with the
/// primitive excursion starting at that U. Sorted.
std::vector<LatticePath> dyck_rotations_up(const LatticePath& p);

/// All elements of Tam(m, n), sorted.
std::vector<LatticePath> m_tamari_elements(int m, int n);

/// Fuss-Catalan number C((m+1)n, n) / (mn+1).
ExactInt fuss_catalan(int m, int n);

/// Upper covers in Tam(m, n): an E step immediately followed by an N step
/// is exchanged with the excursion starting at that N, the shortest factor
/// with m times more E than N steps. Sorted.
std::vector<LatticePath> m_tamari_covers(const LatticePath& p, int m);

/// Elements of Tam(m, n) with their cover lists.
class MTamariIndex {
 public:
  MTamariIndex(int m, int n, Budget* budget = nullptr);
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const LatticePath& element(std::size_t id) const { return elements_[id]; }
  const std::vector<std::uint32_t>& up(std::size_t id) const { return up_[id]; }
  const CoverLists& down_lists() const noexcept { return down_; }
  /// Number of elements covered by / covering each element.
  int des(std::size_t id) const { return static_cast<int>(down_[id].size()); }
  int asc(std::size_t id) const { return static_cast<int>(up_[id].size()); }

 private:
  int m_, n_;
  std::vector<LatticePath> elements_;
  CoverLists up_, down_;
};

/// Number of intervals of Tam(m, n), by enumeration.
ExactInt m_tamari_interval_count(int m, int n, Budget& budget);

/// Histogram of des(M) + asc(N) over intervals M <= N of Tam(m, n), where
/// des and asc count lower and upper covers. Indexed by k = 0..mn-1.
std::vector<ExactInt> m_tamari_interval_stats(int m, int n, Budget& budget);

}  // namespace tamari
