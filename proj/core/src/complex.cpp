#include "itcalc/complex.hpp"

#include "itcalc/error.hpp"

#include <string>

namespace itcalc {

Complex::Complex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

Complex::Complex(AlgebraPtr algebra, int lo, std::vector<Rep> terms, std::vector<Hom> diffs)
    : algebra_(std::move(algebra)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  const std::size_t n = terms_.size();
  if (diffs_.size() + 1 != n && !(n == 0 && diffs_.empty())) {
    throw Error(ErrorKind::InvalidInput, "a complex with " + std::to_string(n) + " terms needs " +
                                             std::to_string(n == 0 ? 0 : n - 1) + " differentials");
  }
  for (const auto& t : terms_) {
    if (t.algebra_ptr() != algebra_) throw Error(ErrorKind::AlgebraMismatch, "complex term over a different algebra");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!is_homomorphism(diffs_[k], terms_[k], terms_[k + 1])) {
      throw Error(ErrorKind::InvalidInput,
                  "d^" + std::to_string(lo_ + static_cast<int>(k)) + " is not a homomorphism");
    }
    if (k > 0 && !compose(diffs_[k], diffs_[k - 1]).is_zero()) {
      throw Error(ErrorKind::InvalidInput,
                  "d o d is nonzero at degree " + std::to_string(lo_ + static_cast<int>(k) - 1));
    }
  }
}

Complex Complex::stalk(const Rep& m, int degree) { return Complex(m.algebra_ptr(), degree, {m}, {}); }

bool Complex::is_zero() const noexcept {
  for (const auto& t : terms_) {
    if (!t.is_zero()) return false;
  }
  return true;
}

Rep Complex::term(int degree) const {
  if (degree < lo_ || degree > hi()) return Rep::zero(algebra_);
  return terms_[static_cast<std::size_t>(degree - lo_)];
}

Hom Complex::diff(int degree) const {
  if (degree < lo_ || degree >= hi()) return Hom::zero(term(degree), term(degree + 1));
  return diffs_[static_cast<std::size_t>(degree - lo_)];
}

Complex Complex::shifted(int s) const {
  std::vector<Hom> d;
  const Residue sign = (s % 2 == 0) ? 1 : algebra_->field().neg(1);
  for (const auto& h : diffs_) d.push_back(h.scaled(sign));
  return Complex(algebra_, lo_ - s, terms_, std::move(d));
}

Complex Complex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && term(a).is_zero()) ++a;
  while (b >= a && term(b).is_zero()) --b;
  if (a > b) return Complex(algebra_);
  std::vector<Rep> t;
  std::vector<Hom> d;
  for (int i = a; i <= b; ++i) {
    t.push_back(term(i));
    if (i < b) d.push_back(diff(i));
  }
  return Complex(algebra_, a, std::move(t), std::move(d));
}

}  // namespace itcalc
