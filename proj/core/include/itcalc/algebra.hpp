#pragma once

// Bound quiver algebras kQ/I over F_p with I generated by paths.
//
// Vertices are 0-based internally; the text formats and reports use 1-based
// labels. Paths are written in diagram order: arrows[0] is traversed first.

#include "itcalc/exactlin.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace itcalc {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  /// Index of the arrow with this id, or nullopt.
  std::optional<int> arrow_index(const std::string& id) const;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

inline constexpr int kDefaultAdmissibilityCap = 64;

class Algebra {
 public:
  const Quiver& quiver() const noexcept { return quiver_; }
  int vertex_count() const noexcept { return quiver_.vertex_count; }
  std::size_t arrow_count() const noexcept { return quiver_.arrows.size(); }
  const Arrow& arrow(int a) const { return quiver_.arrows.at(static_cast<std::size_t>(a)); }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::vector<int>>& relations() const noexcept { return relations_; }

  /// Nonzero paths ordered by length, then lexicographically by arrow ids.
  const std::vector<Path>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Least N such that every path of length N lies in the ideal.
  int admissibility_bound() const noexcept { return bound_; }

  std::optional<std::size_t> basis_index(const Path& path) const;
  /// Basis index of path * arrow (path followed by the arrow), nullopt if zero.
  std::optional<std::size_t> extend(std::size_t path_index, int arrow) const;
  /// Basis index of arrow * path (the arrow followed by the path), nullopt if zero.
  std::optional<std::size_t> prepend(int arrow, std::size_t path_index) const;
  std::size_t trivial_path(int vertex) const { return trivial_.at(static_cast<std::size_t>(vertex)); }

  std::vector<std::size_t> paths_from(int vertex) const;
  std::vector<std::size_t> paths_to(int vertex) const;

  /// Basis paths of rad^k A, i.e. those of length >= k.
  std::vector<Path> radical_power_basis(int k) const;
  /// Every vertex has in-degree and out-degree at most one.
  bool is_nakayama() const;
  /// Loewy length of the indecomposable projective at `vertex`.
  int loewy_length(int vertex) const;

  std::string path_name(const Path& path) const;

  friend AlgebraPtr build_algebra(Quiver quiver, std::uint32_t p,
                                  std::vector<std::vector<int>> relations, int cap);

 private:
  explicit Algebra(PrimeField field) : field_(field) {}

  Quiver quiver_;
  PrimeField field_;
  std::vector<std::vector<int>> relations_;
  std::vector<Path> basis_;
  std::vector<std::size_t> trivial_;
  std::map<std::pair<int, std::vector<int>>, std::size_t> index_;
  int bound_ = 0;
};

/// Validates the quiver and relations, checks admissibility within `cap`
/// compositions and enumerates the path basis.
AlgebraPtr build_algebra(Quiver quiver, std::uint32_t p, std::vector<std::vector<int>> relations,
                         int cap = kDefaultAdmissibilityCap);

/// Same algebra with every arrow and relation reversed.
AlgebraPtr opposite_algebra(const Algebra& a);

}  // namespace itcalc
