#include "itcalc/relstruct.hpp"

#include "itcalc/error.hpp"

#include <stdexcept>

namespace itcalc {

namespace {

std::size_t hom_ambient(const Rep& from, const Rep& to) {
  std::size_t n = 0;
  for (int v = 0; v < from.algebra().vertex_count(); ++v)
    n += static_cast<std::size_t>(from.dim(v)) * static_cast<std::size_t>(to.dim(v));
  return n;
}

// dim of the span of {post o h : h in basis}.
std::size_t image_rank(const Hom& post, const HomSpace& hs, const Rep& to) {
  IncrementalSpan span(hom_ambient(hs.source, to), to.field());
  for (const auto& h : hs.basis) span.insert(compose(post, h).flatten());
  return span.dim();
}

// dim of the span of {h o pre : h in basis}.
std::size_t precompose_rank(const HomSpace& hs, const Hom& pre, const Rep& from) {
  IncrementalSpan span(hom_ambient(from, hs.target), from.field());
  for (const auto& h : hs.basis) span.insert(compose(h, pre).flatten());
  return span.dim();
}

std::size_t total_rank(const Hom& h) {
  std::size_t r = 0;
  for (const auto& c : h.components()) r += rank(c);
  return r;
}

Hom require(std::optional<Hom> h, const char* what) {
  if (!h) throw std::logic_error(what);
  return std::move(*h);
}

}  // namespace

RelStructure::RelStructure(AlgebraPtr algebra, const Rep& g, Settings settings)
    : algebra_(std::move(algebra)), settings_(settings), g_(g), e_(Rep::zero(algebra_)) {
  if (g.algebra_ptr() != algebra_) {
    throw Error(ErrorKind::AlgebraMismatch, "generator lives over a different algebra");
  }
  e_ = g.is_zero() ? regular_module(algebra_) : direct_sum({regular_module(algebra_), g});
  for (int v = 0; v < algebra_->vertex_count(); ++v) indecs_.push_back(projective(algebra_, v));
  for (auto& c : decompose(g, settings_)) {
    if (!index_of(c.module)) indecs_.push_back(std::move(c.module));
  }
}

RelStructure::RelStructure(AlgebraPtr algebra, Settings settings)
    : RelStructure(algebra, Rep::zero(algebra), settings) {}

std::optional<std::size_t> RelStructure::index_of(const Rep& indecomposable) const {
  for (std::size_t i = 0; i < indecs_.size(); ++i) {
    if (indecomposables_isomorphic(indecs_[i], indecomposable)) return i;
  }
  return std::nullopt;
}

void validate(const SES& s) {
  require_same_algebra(s.X, s.Y);
  require_same_algebra(s.Y, s.Z);
  if (!is_homomorphism(s.inj, s.X, s.Y) || !is_homomorphism(s.epi, s.Y, s.Z)) {
    throw Error(ErrorKind::InvalidInput, "sequence maps are not homomorphisms");
  }
  if (!s.inj.is_injective() || !s.epi.is_surjective() || !compose(s.epi, s.inj).is_zero() ||
      s.Y.total_dim() != s.X.total_dim() + s.Z.total_dim()) {
    throw Error(ErrorKind::InvalidInput, "sequence is not short exact");
  }
}

SES ses_from_mono(const Hom& inj, const Rep& x, const Rep& y) {
  Quotient q = cokernel(inj, y);
  return {x, y, std::move(q.module), inj, std::move(q.projection)};
}

SES ses_from_epi(const Hom& epi, const Rep& y, const Rep& z) {
  Embedded k = kernel(epi, y);
  return {std::move(k.module), y, z, std::move(k.inclusion), epi};
}

bool is_F_exact(const RelStructure& f, const SES& s) {
  validate(s);
  if (s.Y.algebra_ptr() != f.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "sequence lives over a different algebra");
  }
  for (const auto& e : f.E_indecs()) {
    const std::size_t target = hom_space(e, s.Z).dim();
    if (target == 0) continue;
    if (image_rank(s.epi, hom_space(e, s.Y), s.Z) < target) return false;
  }
  return true;
}

bool is_F_projective(const RelStructure& f, const Rep& p) {
  if (p.algebra_ptr() != f.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "module lives over a different algebra");
  }
  for (const auto& c : decompose(p, f.settings())) {
    if (!f.index_of(c.module)) return false;
  }
  return true;
}

Approximation min_right_approx(const RelStructure& f, const Rep& m) {
  if (m.algebra_ptr() != f.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "module lives over a different algebra");
  }
  const auto& ind = f.E_indecs();
  const std::size_t ne = ind.size();
  if (m.is_zero()) return {m, Hom::zero(m, m), std::vector<int>(ne, 0)};

  struct Copy {
    std::size_t e;
    Hom h;
    // flattened h o phi for phi in Hom(E_l, E_e), one list per l
    std::vector<std::vector<Vec>> contributions;
  };
  std::vector<Copy> copies;
  std::vector<std::size_t> target(ne), ambient(ne);
  for (std::size_t l = 0; l < ne; ++l) {
    target[l] = hom_space(ind[l], m).dim();
    ambient[l] = hom_ambient(ind[l], m);
  }
  for (std::size_t i = 0; i < ne; ++i) {
    const HomSpace hs = hom_space(ind[i], m);
    if (hs.dim() == 0) continue;
    std::vector<HomSpace> into(ne, HomSpace{ind[i], ind[i], {}});
    for (std::size_t l = 0; l < ne; ++l) into[l] = hom_space(ind[l], ind[i]);
    for (const auto& h : hs.basis) {
      Copy c{i, h, std::vector<std::vector<Vec>>(ne)};
      for (std::size_t l = 0; l < ne; ++l)
        for (const auto& phi : into[l].basis) c.contributions[l].push_back(compose(h, phi).flatten());
      copies.push_back(std::move(c));
    }
  }

  std::vector<bool> active(copies.size(), true);
  auto surjective = [&]() {
    for (std::size_t l = 0; l < ne; ++l) {
      if (target[l] == 0) continue;
      IncrementalSpan span(ambient[l], m.field());
      for (std::size_t c = 0; c < copies.size() && span.dim() < target[l]; ++c) {
        if (!active[c]) continue;
        for (const auto& v : copies[c].contributions[l]) span.insert(v);
      }
      if (span.dim() < target[l]) return false;
    }
    return true;
  };

  for (std::size_t c = 0; c < copies.size(); ++c) {
    active[c] = false;
    if (!surjective()) active[c] = true;
  }
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (!active[c]) continue;
    active[c] = false;
    const bool redundant = surjective();
    active[c] = true;
    if (redundant) throw std::logic_error("approximation is not right minimal");
  }

  std::vector<Rep> sources;
  std::vector<Hom> parts;
  std::vector<int> mult(ne, 0);
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (!active[c]) continue;
    sources.push_back(ind[copies[c].e]);
    parts.push_back(copies[c].h);
    ++mult[copies[c].e];
  }
  Rep e0 = direct_sum(sources);
  Hom g = hom_from_sum(parts, m);
  return {std::move(e0), std::move(g), std::move(mult)};
}

Rep omega_F(const RelStructure& f, const Rep& m) {
  const Approximation a = min_right_approx(f, m);
  if (m.is_zero()) return m;
  return kernel(a.map, a.source).module;
}

RelResolution F_resolution(const RelStructure& f, const Rep& m, int length) {
  RelResolution res;
  Rep cur = m;
  Hom into_prev;
  for (int k = 0; k <= length && !cur.is_zero(); ++k) {
    Approximation a = min_right_approx(f, cur);
    if (k == 0) {
      res.augmentation = a.map;
    } else {
      res.differentials.push_back(compose(into_prev, a.map));
    }
    Embedded ker = kernel(a.map, a.source);
    res.terms.push_back(std::move(a.source));
    cur = std::move(ker.module);
    into_prev = std::move(ker.inclusion);
  }
  if (m.is_zero()) res.augmentation = Hom::zero(m, m);
  res.finite = cur.is_zero();
  return res;
}

std::optional<int> F_projective_dimension(const RelStructure& f, const Rep& m, int limit) {
  Rep cur = m;
  for (int k = 0; k <= limit; ++k) {
    Rep next = omega_F(f, cur);
    if (next.is_zero()) return k;
    cur = std::move(next);
  }
  return std::nullopt;
}

int ext_F_dim(const RelStructure& f, const Rep& m, const Rep& n, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "Ext degree must be non-negative");
  require_same_algebra(m, n);
  const RelResolution res = F_resolution(f, m, degree + 1);
  const auto d = static_cast<std::size_t>(degree);
  if (d >= res.terms.size()) return 0;
  const HomSpace here = hom_space(res.terms[d], n);
  std::size_t out = here.dim();
  if (d < res.differentials.size()) out -= precompose_rank(here, res.differentials[d], res.terms[d + 1]);
  if (d >= 1) {
    const HomSpace prev = hom_space(res.terms[d - 1], n);
    out -= precompose_rank(prev, res.differentials[d - 1], res.terms[d]);
  }
  return static_cast<int>(out);
}

bool is_F_acyclic(const RelStructure& f, const Complex& c) {
  if (c.is_zero()) return true;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const Rep x = c.term(i);
    const Hom in = c.diff(i - 1);
    const Hom out = c.diff(i);
    if (static_cast<std::size_t>(x.total_dim()) != total_rank(in) + total_rank(out)) return false;
    if (!compose(out, in).is_zero()) return false;
    const Embedded im_in = image(in, x);
    const Embedded im_out = image(out, c.term(i + 1));
    const Hom corestriction = require(factor_through_mono(out, im_out.inclusion), "image factorization failed");
    if (!is_F_exact(f, SES{im_in.module, x, im_out.module, im_in.inclusion, corestriction})) return false;
  }
  return true;
}

SES pullback(const SES& s, const Hom& h, const Rep& z_prime) {
  const Rep parts[] = {s.Y, z_prime};
  const DirectSum d = direct_sum_with_maps(parts);
  const Hom q = compose(s.epi, d.projections[0]) - compose(h, d.projections[1]);
  Embedded k = kernel(q, d.module);
  Hom inj = require(factor_through_mono(compose(d.injections[0], s.inj), k.inclusion),
                    "pullback injection does not factor");
  Hom epi = compose(d.projections[1], k.inclusion);
  return {s.X, std::move(k.module), z_prime, std::move(inj), std::move(epi)};
}

SES pushout(const SES& s, const Hom& h, const Rep& x_prime) {
  const Rep parts[] = {s.Y, x_prime};
  const DirectSum d = direct_sum_with_maps(parts);
  const Hom a = compose(d.injections[0], s.inj) - compose(d.injections[1], h);
  Quotient q = cokernel(a, d.module);
  Hom inj = compose(q.projection, d.injections[1]);
  Hom epi = require(factor_through_epi(compose(s.epi, d.projections[0]), q.projection),
                    "pushout projection does not factor");
  return {x_prime, std::move(q.module), s.Z, std::move(inj), std::move(epi)};
}

SES baer_sum(const SES& s1, const SES& s2) {
  require_same_algebra(s1.Y, s2.Y);
  if (s1.X.dims() != s2.X.dims() || s1.X.maps() != s2.X.maps() || s1.Z.dims() != s2.Z.dims() ||
      s1.Z.maps() != s2.Z.maps()) {
    throw Error(ErrorKind::InvalidInput, "Baer sum needs sequences with the same end terms");
  }
  const Rep parts[] = {s1.Y, s2.Y};
  const DirectSum d = direct_sum_with_maps(parts);
  const Hom q = compose(s1.epi, d.projections[0]) - compose(s2.epi, d.projections[1]);
  const Embedded k = kernel(q, d.module);
  const Hom anti = compose(d.injections[0], s1.inj) - compose(d.injections[1], s2.inj);
  const Hom anti_k = require(factor_through_mono(anti, k.inclusion), "antidiagonal does not factor");
  Quotient c = cokernel(anti_k, k.module);
  const Hom first = require(factor_through_mono(compose(d.injections[0], s1.inj), k.inclusion),
                            "injection does not factor");
  Hom inj = compose(c.projection, first);
  Hom epi = require(factor_through_epi(compose(s1.epi, compose(d.projections[0], k.inclusion)), c.projection),
                    "projection does not factor");
  return {s1.X, std::move(c.module), s1.Z, std::move(inj), std::move(epi)};
}

}  // namespace itcalc
