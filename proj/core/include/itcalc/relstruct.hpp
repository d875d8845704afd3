#pragma once

// The relative exact structure F = F_add(E) for a generator E = A + G.
//
// A short exact sequence is F-exact when Hom(E, -) keeps it exact, and the
// F-projectives are exactly add(E). Relative syzygies are kernels of minimal
// right add(E)-approximations.

#include "itcalc/complex.hpp"
#include "itcalc/rep.hpp"
#include "itcalc/settings.hpp"

#include <optional>
#include <vector>

namespace itcalc {

class RelStructure {
 public:
  /// E = A + g. Every projective is a summand of E, so F has enough
  /// projectives.
  RelStructure(AlgebraPtr algebra, const Rep& g, Settings settings = {});
  /// The absolute structure, G = 0.
  explicit RelStructure(AlgebraPtr algebra, Settings settings = {});

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const Settings& settings() const noexcept { return settings_; }
  const Rep& generator() const noexcept { return g_; }
  const Rep& E() const noexcept { return e_; }
  /// Pairwise non-isomorphic indecomposable summands of E: the projectives
  /// P_1, ..., P_n first, then the remaining summands of G.
  const std::vector<Rep>& E_indecs() const noexcept { return indecs_; }
  /// Position of an indecomposable in E_indecs, if any.
  std::optional<std::size_t> index_of(const Rep& indecomposable) const;

 private:
  AlgebraPtr algebra_;
  Settings settings_;
  Rep g_;
  Rep e_;
  std::vector<Rep> indecs_;
};

struct SES {
  Rep X, Y, Z;
  Hom inj;  // X -> Y
  Hom epi;  // Y -> Z
};

/// Throws InvalidInput unless 0 -> X -> Y -> Z -> 0 is exact.
void validate(const SES& s);
/// The sequence X -> Y -> coker.
SES ses_from_mono(const Hom& inj, const Rep& x, const Rep& y);
/// The sequence ker -> Y -> Z.
SES ses_from_epi(const Hom& epi, const Rep& y, const Rep& z);

bool is_F_exact(const RelStructure& f, const SES& s);
bool is_F_projective(const RelStructure& f, const Rep& p);

struct Approximation {
  Rep source;  // E0
  Hom map;     // E0 -> M
  /// Copies of each E_indecs entry in E0, in the order they are stacked.
  std::vector<int> multiplicities;
};

/// Minimal right add(E)-approximation of m.
Approximation min_right_approx(const RelStructure& f, const Rep& m);
Rep omega_F(const RelStructure& f, const Rep& m);

struct RelResolution {
  std::vector<Rep> terms;  // E_0, E_1, ...
  /// differentials[k] : E_(k+1) -> E_k
  std::vector<Hom> differentials;
  Hom augmentation;  // E_0 -> M
  /// True when the last syzygy reached was zero.
  bool finite = false;
};

/// F-projective resolution through E_length (or shorter when it stops).
RelResolution F_resolution(const RelStructure& f, const Rep& m, int length);
/// pd_F(m): least k <= limit with Omega_F^(k+1)(m) = 0, if any.
std::optional<int> F_projective_dimension(const RelStructure& f, const Rep& m, int limit);

int ext_F_dim(const RelStructure& f, const Rep& m, const Rep& n, int degree);

bool is_F_acyclic(const RelStructure& f, const Complex& c);

/// Pullback of s along h : Z' -> Z.
SES pullback(const SES& s, const Hom& h, const Rep& z_prime);
/// Pushout of s along h : X -> X'.
SES pushout(const SES& s, const Hom& h, const Rep& x_prime);
/// Baer sum of two sequences with the same end terms.
SES baer_sum(const SES& s1, const SES& s2);

}  // namespace itcalc
