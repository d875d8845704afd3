#pragma once

// Algebras shared by the test suites. They mirror fixtures/*.alg.

#include "itcalc/algebra.hpp"
#include "itcalc/rep.hpp"

#include <random>

namespace itcalc::testing {

// kA_2: 1 -a-> 2
inline AlgebraPtr a2(std::uint32_t p = 2) {
  return build_algebra(Quiver{2, {{"a", 0, 1}}}, p, {});
}

// kA_2 with the arrow reversed: 2 -a-> 1
inline AlgebraPtr a2_reversed(std::uint32_t p = 2) {
  return build_algebra(Quiver{2, {{"a", 1, 0}}}, p, {});
}

// k[x]/x^n
inline AlgebraPtr truncated_loop(int n, std::uint32_t p = 2) {
  return build_algebra(Quiver{1, {{"x", 0, 0}}}, p, {std::vector<int>(static_cast<std::size_t>(n), 0)});
}

inline AlgebraPtr l2(std::uint32_t p = 2) { return truncated_loop(2, p); }
inline AlgebraPtr l3(std::uint32_t p = 2) { return truncated_loop(3, p); }

// kA_3 with rad^2 = 0: 1 -a-> 2 -b-> 3, relation a then b
inline AlgebraPtr n3(std::uint32_t p = 2) {
  return build_algebra(Quiver{3, {{"a", 0, 1}, {"b", 1, 2}}}, p, {{0, 1}});
}

// Kronecker quiver: two parallel arrows 1 -> 2
inline AlgebraPtr kronecker(std::uint32_t p = 2) {
  return build_algebra(Quiver{2, {{"a", 0, 1}, {"b", 0, 1}}}, p, {});
}

// Endomorphism algebra of k[x]/x^2 + k: 1 -a-> 2 -b-> 1 with b then a zero.
inline AlgebraPtr auslander_l2(std::uint32_t p = 2) {
  return build_algebra(Quiver{2, {{"a", 0, 1}, {"b", 1, 0}}}, p, {{1, 0}});
}

/// Random conjugate of m (same iso class, different presentation).
inline Rep scramble(const Rep& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  std::vector<Mat> g;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) {
    const auto d = static_cast<std::size_t>(m.dim(v));
    while (true) {
      Mat x(d, d, f);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) x(r, c) = static_cast<Residue>(rng() % f.modulus());
      if (rank(x) == d) {
        g.push_back(std::move(x));
        break;
      }
    }
  }
  return change_basis(m, g);
}

}  // namespace itcalc::testing
