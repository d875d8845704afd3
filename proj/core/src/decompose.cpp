// Isomorphism testing and Krull-Schmidt decomposition.
//
// Splitting uses Fitting's lemma: for an endomorphism y of M with D = dim M,
// M = ker(y^D) + im(y^D). A module is certified indecomposable either by an
// exhaustive idempotent search in End(M) (small endomorphism rings) or by
// exhibiting a nilpotent ideal J with every nonzero element of End(M)/J a
// unit, which makes End(M) local.

#include "itcalc/error.hpp"
#include "itcalc/rep.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace itcalc {

namespace {


enum class FittingKind { Nilpotent, Unit, Split };

struct Fitting {
  FittingKind kind;
  Hom power;  // y^(2^k) with 2^k >= dim M
};

Fitting fitting(const Hom& y, int total_dim) {
  Hom z = y;
  for (int e = 1; e < total_dim; e *= 2) z = compose(z, z);
  if (z.is_zero()) return {FittingKind::Nilpotent, z};
  if (z.is_isomorphism()) return {FittingKind::Unit, z};
  return {FittingKind::Split, z};
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint32_t p) : rng_(seed), p_(p) {}

  Vec coefficients(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = static_cast<Residue>(rng_() % p_);
    return v;
  }

 private:
  std::mt19937_64 rng_;
  std::uint32_t p_;
};

// Advances a base-p counter; false once it wraps to zero.
bool next_coefficients(Vec& v, std::uint32_t p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

Hom scalar(const Rep& m, Residue c) { return Hom::identity(m).scaled(c); }

// The ideal-closure / nilpotency / residue-field test. Returns an
// endomorphism whose Fitting power splits m, or nullopt when End(m) is local.
std::optional<Hom> local_ring_test(const Rep& m, const HomSpace& end, const Settings& settings,
                                   Sampler& sampler) {
  const PrimeField& f = m.field();
  const std::uint32_t p = f.modulus();
  const int d = m.total_dim();
  const std::size_t n = end.dim();
  const std::size_t ambient = end.basis.front().flatten().size();

  std::vector<Hom> nilpotents;
  const Residue scalar_limit = std::min<std::uint32_t>(p, 16);
  for (const auto& b : end.basis) {
    for (Residue c = 0; c < scalar_limit; ++c) {
      Hom y = b - scalar(m, c);
      auto fit = fitting(y, d);
      if (fit.kind == FittingKind::Split) return fit.power;
      if (fit.kind == FittingKind::Nilpotent && !y.is_zero()) nilpotents.push_back(std::move(y));
    }
  }

  while (true) {
    IncrementalSpan span(ambient, f);
    std::vector<Hom> ideal;
    auto add = [&](const Hom& h) {
      if (span.insert(h.flatten())) ideal.push_back(h);
    };
    for (const auto& h : nilpotents) add(h);
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      for (const auto& b : end.basis) {
        add(compose(b, ideal[i]));
        add(compose(ideal[i], b));
      }
    }

    // J^k descends; a nonzero stable power means J is not nilpotent, which is
    // impossible in a local ring.
    std::vector<Hom> power = ideal;
    bool nilpotent = power.empty();
    while (!power.empty()) {
      IncrementalSpan next_span(ambient, f);
      std::vector<Hom> next;
      for (const auto& j : ideal) {
        for (const auto& q : power) {
          Hom h = compose(j, q);
          if (next_span.insert(h.flatten())) next.push_back(std::move(h));
        }
      }
      if (next.empty()) {
        nilpotent = true;
        break;
      }
      if (next.size() == power.size()) break;
      power = std::move(next);
    }
    if (!nilpotent) {
      for (const auto& h : power) {
        auto fit = fitting(h, d);
        if (fit.kind == FittingKind::Split) return fit.power;
      }
      for (int t = 0; t < 100000; ++t) {
        Hom y = end.combination(sampler.coefficients(n));
        auto fit = fitting(y, d);
        if (fit.kind == FittingKind::Split) return fit.power;
      }
      throw std::logic_error("non-local endomorphism ring without a detected splitting");
    }

    // Lifts of End/J: basis elements independent modulo J.
    std::vector<Hom> lifts;
    {
      IncrementalSpan extended = span;
      for (const auto& b : end.basis) {
        if (extended.insert(b.flatten())) lifts.push_back(b);
      }
    }
    const std::size_t c = lifts.size();
    bool grew = false;
    auto examine = [&](const Vec& coeffs) -> std::optional<Hom> {
      Hom z = Hom::zero(m, m);
      for (std::size_t i = 0; i < c; ++i) {
        if (coeffs[i] != 0) z = z + lifts[i].scaled(coeffs[i]);
      }
      auto fit = fitting(z, d);
      if (fit.kind == FittingKind::Split) return fit.power;
      if (fit.kind == FittingKind::Nilpotent && !span.contains(z.flatten())) {
        nilpotents.push_back(std::move(z));
        grew = true;
      }
      return std::nullopt;
    };

    if (enumerable(c, p, settings)) {
      Vec coeffs(c, 0);
      while (next_coefficients(coeffs, p) && !grew) {
        if (auto s = examine(coeffs)) return s;
      }
    } else {
      for (int t = 0; t < 4 * settings.random_trials && !grew; ++t) {
        if (auto s = examine(sampler.coefficients(c))) return s;
      }
    }
    if (!grew) return std::nullopt;
  }
}

std::optional<Hom> find_splitting(const Rep& m, const Settings& settings, Sampler& sampler) {
  const int d = m.total_dim();
  const HomSpace end = hom_space(m, m);
  if (end.dim() <= 1) return std::nullopt;
  const std::uint32_t p = m.field().modulus();
  const Residue scalar_limit = std::min<std::uint32_t>(p, 8);

  for (const auto& b : end.basis) {
    for (Residue c = 0; c < scalar_limit; ++c) {
      auto fit = fitting(b - scalar(m, c), d);
      if (fit.kind == FittingKind::Split) return fit.power;
    }
  }
  for (int t = 0; t < settings.random_trials; ++t) {
    auto fit = fitting(end.combination(sampler.coefficients(end.dim())), d);
    if (fit.kind == FittingKind::Split) return fit.power;
  }

  if (enumerable(end.dim(), p, settings)) {
    const Hom id = Hom::identity(m);
    Vec coeffs(end.dim(), 0);
    while (next_coefficients(coeffs, p)) {
      Hom e = end.combination(coeffs);
      if (e == id) continue;
      if (compose(e, e) == e) return e;
    }
    return std::nullopt;
  }
  return local_ring_test(m, end, settings, sampler);
}

void split_into(const Rep& m, const Hom& to_root, const Hom& from_root, const Settings& settings,
                Sampler& sampler, std::vector<Summand>& out) {
  if (m.is_zero()) return;
  auto z = find_splitting(m, settings, sampler);
  if (!z) {
    out.push_back({m, to_root, from_root});
    return;
  }
  // m = ker z + im z for a Fitting power or idempotent z.
  const Embedded ker = kernel(*z, m);
  const Embedded im = image(*z, m);
  std::vector<Mat> pk, pi;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) {
    const Mat& kb = ker.inclusion.at(v);
    const Mat& ib = im.inclusion.at(v);
    const auto inv = inverse(hstack(kb, ib));
    if (!inv) throw std::logic_error("Fitting decomposition is not a direct sum");
    pk.push_back(inv->row_block(0, kb.cols()));
    pi.push_back(inv->row_block(kb.cols(), ib.cols()));
  }
  const Hom proj_ker(std::move(pk)), proj_im(std::move(pi));
  split_into(ker.module, compose(to_root, ker.inclusion), compose(proj_ker, from_root), settings,
             sampler, out);
  split_into(im.module, compose(to_root, im.inclusion), compose(proj_im, from_root), settings,
             sampler, out);
}

std::vector<std::size_t> arrow_ranks(const Rep& m) {
  std::vector<std::size_t> r;
  for (const auto& a : m.maps()) r.push_back(rank(a));
  return r;
}

}  // namespace

std::vector<Summand> split_indecomposables(const Rep& m, const Settings& settings) {
  Sampler sampler(settings.seed, m.field().modulus());
  std::vector<Summand> out;
  const Hom id = Hom::identity(m);
  split_into(m, id, id, settings, sampler, out);
  return out;
}

bool is_indecomposable(const Rep& m, const Settings& settings) {
  if (m.is_zero()) return false;
  Sampler sampler(settings.seed, m.field().modulus());
  return !find_splitting(m, settings, sampler).has_value();
}

bool indecomposables_isomorphic(const Rep& x, const Rep& y) {
  require_same_algebra(x, y);
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  if (arrow_ranks(x) != arrow_ranks(y)) return false;
  const HomSpace fs = hom_space(x, y);
  if (fs.dim() == 0) return false;
  const HomSpace gs = hom_space(y, x);
  for (const auto& g : gs.basis) {
    for (const auto& f : fs.basis) {
      if (compose(g, f).is_isomorphism()) return true;
    }
  }
  return false;
}

std::vector<Component> decompose(const Rep& m, const Settings& settings) {
  std::vector<Component> out;
  for (auto& s : split_indecomposables(m, settings)) {
    bool found = false;
    for (auto& c : out) {
      if (indecomposables_isomorphic(c.module, s.module)) {
        ++c.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({std::move(s.module), 1});
  }
  return out;
}

bool is_isomorphic(const Rep& m, const Rep& n, const Settings& settings) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  if (arrow_ranks(m) != arrow_ranks(n)) return false;
  const HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return false;
  if (hom_space(m, m).dim() != h.dim() || hom_space(n, m).dim() != h.dim()) return false;

  const std::uint32_t p = m.field().modulus();
  if (enumerable(h.dim(), p, settings)) {
    Vec coeffs(h.dim(), 0);
    while (next_coefficients(coeffs, p)) {
      if (h.combination(coeffs).is_isomorphism()) return true;
    }
    return false;
  }
  Sampler sampler(settings.seed, p);
  for (int t = 0; t < settings.random_trials; ++t) {
    if (h.combination(sampler.coefficients(h.dim())).is_isomorphism()) return true;
  }

  // Krull-Schmidt matching of the two decompositions.
  auto dm = decompose(m, settings);
  auto dn = decompose(n, settings);
  if (dm.size() != dn.size()) return false;
  std::vector<bool> used(dn.size(), false);
  for (const auto& c : dm) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.size(); ++j) {
      if (used[j] || dn[j].multiplicity != c.multiplicity) continue;
      if (indecomposables_isomorphic(c.module, dn[j].module)) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace itcalc
