#pragma once

// Bounded cochain complexes of representations.
//
// Terms live in degrees lo..hi; the differential d^i goes from degree i to
// degree i + 1. Degrees outside the window hold the zero module.

#include "itcalc/rep.hpp"

#include <vector>

namespace itcalc {

class Complex {
 public:
  /// The zero complex.
  explicit Complex(AlgebraPtr algebra);
  /// terms[k] sits in degree lo + k; diffs[k] : terms[k] -> terms[k + 1].
  /// Throws InvalidInput unless the differentials are homomorphisms of the
  /// right shapes with d o d = 0.
  Complex(AlgebraPtr algebra, int lo, std::vector<Rep> terms, std::vector<Hom> diffs);

  static Complex stalk(const Rep& m, int degree = 0);

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool is_zero() const noexcept;

  Rep term(int degree) const;
  /// d^degree; the zero map outside the window.
  Hom diff(int degree) const;

  /// X[s] with X[s]^i = X^(i + s) and differential (-1)^s d.
  Complex shifted(int s) const;
  /// Drops zero terms at both ends of the window.
  Complex trimmed() const;

 private:
  AlgebraPtr algebra_;
  int lo_ = 0;
  std::vector<Rep> terms_;
  std::vector<Hom> diffs_;
};

}  // namespace itcalc
