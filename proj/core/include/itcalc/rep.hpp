#pragma once

// Finite-dimensional representations of a bound quiver algebra and the
// homomorphisms between them.
//
// A Rep stores one vector space per vertex (by dimension) and one matrix
// per arrow a: s -> t of shape dims[t] x dims[s]. A Hom stores one matrix per
// vertex of shape dims_target[v] x dims_source[v].

#include "itcalc/algebra.hpp"
#include "itcalc/exactlin.hpp"
#include "itcalc/settings.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace itcalc {

class Rep {
 public:
  Rep(AlgebraPtr algebra, std::vector<int> dims, std::vector<Mat> maps);

  static Rep zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }

  const std::vector<int>& dims() const noexcept { return dims_; }
  int dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex)); }
  int total_dim() const noexcept { return total_; }
  bool is_zero() const noexcept { return total_ == 0; }

  const Mat& map(int arrow) const { return maps_.at(static_cast<std::size_t>(arrow)); }
  const std::vector<Mat>& maps() const noexcept { return maps_; }

  /// Action of a path (diagram order) as a dims[target] x dims[source] matrix.
  Mat path_action(const Path& path) const;

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<Mat> maps_;
  int total_ = 0;
};

/// Throws AlgebraMismatch unless both live over the same algebra object.
void require_same_algebra(const Rep& a, const Rep& b);

class Hom {
 public:
  Hom() = default;
  explicit Hom(std::vector<Mat> components) : comps_(std::move(components)) {}

  static Hom zero(const Rep& from, const Rep& to);
  static Hom identity(const Rep& m);
  /// Inverse of the flatten() layout.
  static Hom unflatten(const Rep& from, const Rep& to, std::span<const Residue> flat);

  const Mat& at(int vertex) const { return comps_.at(static_cast<std::size_t>(vertex)); }
  const std::vector<Mat>& components() const noexcept { return comps_; }
  std::size_t vertex_count() const noexcept { return comps_.size(); }

  Hom operator+(const Hom& rhs) const;
  Hom operator-(const Hom& rhs) const;
  Hom scaled(Residue s) const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  /// Row-major components concatenated vertex by vertex.
  Vec flatten() const;
  std::size_t rank() const;

  friend bool operator==(const Hom&, const Hom&) = default;

 private:
  std::vector<Mat> comps_;
};

/// g o f
Hom compose(const Hom& g, const Hom& f);
/// Checks the commuting squares g_t * M_a = N_a * g_s for every arrow.
bool is_homomorphism(const Hom& h, const Rep& from, const Rep& to);
/// [f_1 f_2 ...] : from_1 + from_2 + ... -> to
Hom hom_from_sum(std::span<const Hom> parts, const Rep& to);
/// [f_1; f_2; ...] : from -> to_1 + to_2 + ...
Hom hom_to_sum(std::span<const Hom> parts, const Rep& from);
Hom hom_direct_sum(std::span<const Hom> parts);

struct HomSpace {
  Rep source;
  Rep target;
  std::vector<Hom> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  Hom combination(std::span<const Residue> coeffs) const;
};

HomSpace hom_space(const Rep& m, const Rep& n);

struct Embedded {
  Rep module;
  Hom inclusion;
};

struct Quotient {
  Rep module;
  Hom projection;
};

/// Subrepresentation spanned by the columns of bases[v] at each vertex; the
/// spans must be invariant under the arrow maps.
Embedded subrepresentation(const Rep& m, const std::vector<Mat>& bases);
Quotient quotient(const Rep& m, const std::vector<Mat>& sub_bases);
Embedded kernel(const Hom& f, const Rep& from);
Embedded image(const Hom& f, const Rep& to);
Quotient cokernel(const Hom& f, const Rep& to);

/// g with mono o g = f; nullopt unless im f lies in im mono.
std::optional<Hom> factor_through_mono(const Hom& f, const Hom& mono);
/// g with g o epi = f; nullopt unless f vanishes on ker epi.
std::optional<Hom> factor_through_epi(const Hom& f, const Hom& epi);
/// Inverse of an isomorphism.
Hom inverse(const Hom& iso);

Rep simple(const AlgebraPtr& a, int vertex);
/// P_i = A e_i: basis paths starting at i, arrows acting by composition.
Rep projective(const AlgebraPtr& a, int vertex);
/// I_i: dual of the paths ending at i.
Rep injective(const AlgebraPtr& a, int vertex);
/// P_i / rad^k P_i.
Rep projective_quotient(const AlgebraPtr& a, int vertex, int k);
/// The regular module, P_1 + ... + P_n.
Rep regular_module(const AlgebraPtr& a);

/// The map P_i -> M sending e_i to `element` in M(i).
Hom map_from_projective(const Rep& m, int vertex, std::span<const Residue> element);

/// rad M = sum of the images of the arrow maps.
Embedded radical(const Rep& m);

struct ProjectiveCover {
  Rep projective;
  Hom epi;
  /// c_i = dimension of (M / rad M) at vertex i.
  std::vector<int> multiplicities;
};

ProjectiveCover projective_cover(const Rep& m);
Rep syzygy(const Rep& m);

struct DirectSum {
  Rep module;
  std::vector<Hom> injections;
  std::vector<Hom> projections;
};

DirectSum direct_sum_with_maps(std::span<const Rep> ms);
Rep direct_sum(std::span<const Rep> ms);
Rep direct_sum(std::initializer_list<Rep> ms);
Rep power(const Rep& m, int copies);

/// The isomorphic copy with maps g_t * M_a * g_s^{-1}; every g_v invertible.
Rep change_basis(const Rep& m, const std::vector<Mat>& g);

bool is_isomorphic(const Rep& m, const Rep& n, const Settings& settings = {});
/// Exact test valid when both modules are indecomposable.
bool indecomposables_isomorphic(const Rep& x, const Rep& y);

struct Summand {
  Rep module;
  Hom inclusion;
  Hom projection;
};

/// Splits m into indecomposable summands with explicit inclusions and
/// projections; sum of inclusion o projection is the identity of m.
std::vector<Summand> split_indecomposables(const Rep& m, const Settings& settings = {});

struct Component {
  Rep module;
  int multiplicity = 0;
};

/// Pairwise non-isomorphic indecomposables with multiplicities, in order of
/// first appearance. The zero module decomposes into the empty list.
std::vector<Component> decompose(const Rep& m, const Settings& settings = {});

bool is_indecomposable(const Rep& m, const Settings& settings = {});

}  // namespace itcalc
