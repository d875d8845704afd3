#pragma once

// Brute-force oracles: they enumerate every tuple of per-vertex matrices and
// never call hom_space, decompose or is_isomorphic.

#include "itcalc/rep.hpp"

#include <cmath>
#include <functional>

namespace itcalc::testing {

/// Calls visit(h) for every homomorphism m -> n; only for tiny modules.
inline void for_each_hom_brute(const Rep& m, const Rep& n, const std::function<void(const Hom&)>& visit) {
  const auto& f = m.field();
  std::size_t entries = 0;
  for (int v = 0; v < m.algebra().vertex_count(); ++v)
    entries += static_cast<std::size_t>(m.dim(v) * n.dim(v));
  if (std::pow(static_cast<double>(f.modulus()), static_cast<double>(entries)) > 1 << 20) {
    throw std::runtime_error("brute-force hom enumeration too large");
  }
  Vec flat(entries, 0);
  while (true) {
    Hom h = Hom::unflatten(m, n, flat);
    if (is_homomorphism(h, m, n)) visit(h);
    std::size_t i = 0;
    for (; i < entries; ++i) {
      if (++flat[i] < f.modulus()) break;
      flat[i] = 0;
    }
    if (i == entries) break;
  }
}

inline std::size_t brute_hom_count(const Rep& m, const Rep& n) {
  std::size_t count = 0;
  for_each_hom_brute(m, n, [&](const Hom&) { ++count; });
  return count;
}

inline std::size_t brute_hom_dim(const Rep& m, const Rep& n) {
  const double count = static_cast<double>(brute_hom_count(m, n));
  return static_cast<std::size_t>(std::lround(std::log(count) / std::log(m.field().modulus())));
}

inline bool brute_isomorphic(const Rep& m, const Rep& n) {
  if (m.dims() != n.dims()) return false;
  bool found = false;
  for_each_hom_brute(m, n, [&](const Hom& h) { found = found || h.is_isomorphism(); });
  return found;
}

inline std::size_t brute_idempotent_count(const Rep& m) {
  std::size_t count = 0;
  for_each_hom_brute(m, m, [&](const Hom& h) {
    if (compose(h, h) == h) ++count;
  });
  return count;
}

/// Indecomposable iff the only idempotents are 0 and 1.
inline bool brute_indecomposable(const Rep& m) {
  return !m.is_zero() && brute_idempotent_count(m) == 2;
}

/// dim Ext^d(x, n) by dimension shifting along minimal projective covers,
/// from 0 -> Hom(X,N) -> Hom(P0,N) -> Hom(Omega X,N) -> Ext^1(X,N) -> 0.
inline std::size_t ext_dim_by_covers(Rep x, const Rep& n, int degree) {
  if (degree == 0) return hom_space(x, n).dim();
  for (int k = 1; k < degree; ++k) x = syzygy(x);
  if (x.is_zero()) return 0;
  const auto cover = projective_cover(x);
  const Rep omega = kernel(cover.epi, cover.projective).module;
  return hom_space(omega, n).dim() + hom_space(x, n).dim() - hom_space(cover.projective, n).dim();
}

}  // namespace itcalc::testing
