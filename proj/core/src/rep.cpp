#include "itcalc/rep.hpp"

#include "itcalc/error.hpp"

#include <algorithm>
#include <numeric>

namespace itcalc {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Rep::Rep(AlgebraPtr algebra, std::vector<int> dims, std::vector<Mat> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw Error(ErrorKind::InvalidInput, "representation without an algebra");
  const Algebra& a = *algebra_;
  if (dims_.size() != sz(a.vertex_count())) {
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(a.vertex_count()) +
                                             " dimensions, got " + std::to_string(dims_.size()));
  }
  for (int d : dims_) {
    if (d < 0) throw Error(ErrorKind::InvalidInput, "negative dimension");
    total_ += d;
  }
  if (maps_.size() != a.arrow_count()) {
    throw Error(ErrorKind::InvalidInput, "expected one matrix per arrow");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    const Mat& m = maps_[i];
    if (m.rows() != sz(dim(arr.target)) || m.cols() != sz(dim(arr.source))) {
      throw Error(ErrorKind::InvalidInput, "matrix for arrow " + arr.id + " has shape " +
                                               std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()));
    }
    if (m.modulus() != a.field().modulus()) {
      throw Error(ErrorKind::InvalidInput, "matrix for arrow " + arr.id + " uses another field");
    }
  }
  for (const auto& rel : a.relations()) {
    Path path{a.arrow(rel.front()).source, a.arrow(rel.back()).target, rel};
    if (!path_action(path).is_zero()) {
      throw Error(ErrorKind::InvalidInput, "relation " + a.path_name(path) + " does not act as zero");
    }
  }
}

Rep Rep::zero(AlgebraPtr algebra) {
  const Algebra& a = *algebra;
  std::vector<Mat> maps(a.arrow_count(), Mat(0, 0, a.field()));
  return Rep(std::move(algebra), std::vector<int>(sz(a.vertex_count()), 0), std::move(maps));
}

Mat Rep::path_action(const Path& path) const {
  Mat acc = Mat::identity(sz(dim(path.source)), field());
  for (int a : path.arrows) acc = map(a) * acc;
  return acc;
}

void require_same_algebra(const Rep& a, const Rep& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "modules live over different algebras");
  }
}

Hom Hom::zero(const Rep& from, const Rep& to) {
  std::vector<Mat> comps;
  for (int v = 0; v < from.algebra().vertex_count(); ++v)
    comps.emplace_back(sz(to.dim(v)), sz(from.dim(v)), from.field());
  return Hom(std::move(comps));
}

Hom Hom::identity(const Rep& m) {
  std::vector<Mat> comps;
  for (int v = 0; v < m.algebra().vertex_count(); ++v)
    comps.push_back(Mat::identity(sz(m.dim(v)), m.field()));
  return Hom(std::move(comps));
}

Hom Hom::unflatten(const Rep& from, const Rep& to, std::span<const Residue> flat) {
  std::vector<Mat> comps;
  std::size_t off = 0;
  for (int v = 0; v < from.algebra().vertex_count(); ++v) {
    const std::size_t r = sz(to.dim(v)), c = sz(from.dim(v));
    if (off + r * c > flat.size()) throw Error(ErrorKind::InvalidInput, "flattened hom too short");
    comps.emplace_back(r, c, from.field(),
                       std::vector<Residue>(flat.begin() + static_cast<std::ptrdiff_t>(off),
                                            flat.begin() + static_cast<std::ptrdiff_t>(off + r * c)));
    off += r * c;
  }
  if (off != flat.size()) throw Error(ErrorKind::InvalidInput, "flattened hom too long");
  return Hom(std::move(comps));
}

Hom Hom::operator+(const Hom& rhs) const {
  std::vector<Mat> out;
  for (std::size_t v = 0; v < comps_.size(); ++v) out.push_back(comps_[v] + rhs.comps_.at(v));
  return Hom(std::move(out));
}

Hom Hom::operator-(const Hom& rhs) const {
  std::vector<Mat> out;
  for (std::size_t v = 0; v < comps_.size(); ++v) out.push_back(comps_[v] - rhs.comps_.at(v));
  return Hom(std::move(out));
}

Hom Hom::scaled(Residue s) const {
  std::vector<Mat> out;
  for (const auto& c : comps_) out.push_back(c.scaled(s));
  return Hom(std::move(out));
}

bool Hom::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Mat& m) { return m.is_zero(); });
}

bool Hom::is_injective() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Mat& m) { return itcalc::rank(m) == m.cols(); });
}

bool Hom::is_surjective() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Mat& m) { return itcalc::rank(m) == m.rows(); });
}

bool Hom::is_isomorphism() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Mat& m) {
    return m.rows() == m.cols() && itcalc::rank(m) == m.rows();
  });
}

Vec Hom::flatten() const {
  Vec out;
  for (const auto& c : comps_) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

std::size_t Hom::rank() const {
  std::size_t r = 0;
  for (const auto& c : comps_) r += itcalc::rank(c);
  return r;
}

Hom compose(const Hom& g, const Hom& f) {
  if (g.vertex_count() != f.vertex_count()) {
    throw Error(ErrorKind::AlgebraMismatch, "composing homs over different quivers");
  }
  std::vector<Mat> out;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) out.push_back(g.components()[v] * f.components()[v]);
  return Hom(std::move(out));
}

bool is_homomorphism(const Hom& h, const Rep& from, const Rep& to) {
  const Algebra& a = from.algebra();
  if (h.vertex_count() != sz(a.vertex_count())) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (h.at(v).rows() != sz(to.dim(v)) || h.at(v).cols() != sz(from.dim(v))) return false;
  }
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    const int ai = static_cast<int>(i);
    if (!(h.at(arr.target) * from.map(ai) == to.map(ai) * h.at(arr.source))) return false;
  }
  return true;
}

Hom hom_from_sum(std::span<const Hom> parts, const Rep& to) {
  std::vector<Mat> comps;
  for (int v = 0; v < to.algebra().vertex_count(); ++v) {
    Mat acc(sz(to.dim(v)), 0, to.field());
    for (const auto& h : parts) acc = hstack(acc, h.at(v));
    comps.push_back(std::move(acc));
  }
  return Hom(std::move(comps));
}

Hom hom_to_sum(std::span<const Hom> parts, const Rep& from) {
  std::vector<Mat> comps;
  for (int v = 0; v < from.algebra().vertex_count(); ++v) {
    Mat acc(0, sz(from.dim(v)), from.field());
    for (const auto& h : parts) acc = vstack(acc, h.at(v));
    comps.push_back(std::move(acc));
  }
  return Hom(std::move(comps));
}

Hom hom_direct_sum(std::span<const Hom> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidInput, "empty direct sum of homs");
  std::vector<Mat> comps;
  const PrimeField field = parts.front().at(0).field();
  for (std::size_t v = 0; v < parts.front().vertex_count(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& h : parts) blocks.push_back(h.components().at(v));
    comps.push_back(block_diagonal(blocks, field));
  }
  return Hom(std::move(comps));
}

Hom HomSpace::combination(std::span<const Residue> coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(ErrorKind::InvalidInput, "coefficient count mismatch");
  Hom acc = Hom::zero(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) acc = acc + basis[i].scaled(coeffs[i]);
  }
  return acc;
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  require_same_algebra(m, n);
  const Algebra& a = m.algebra();
  const PrimeField& f = m.field();
  const std::size_t nv = sz(a.vertex_count());
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    offset[v + 1] = offset[v] + sz(n.dim(static_cast<int>(v))) * sz(m.dim(static_cast<int>(v)));
  }
  const std::size_t unknowns = offset[nv];
  auto var = [&](int v, std::size_t r, std::size_t c) {
    return offset[sz(v)] + r * sz(m.dim(v)) + c;
  };

  std::size_t eq_count = 0;
  for (const auto& arr : a.quiver().arrows) eq_count += sz(n.dim(arr.target)) * sz(m.dim(arr.source));
  Mat system(eq_count, unknowns, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    const Mat& ma = m.map(static_cast<int>(i));
    const Mat& na = n.map(static_cast<int>(i));
    const std::size_t mt = sz(m.dim(arr.target)), ns = sz(n.dim(arr.source));
    // (h_t M_a - N_a h_s)(r, c) = 0
    for (std::size_t r = 0; r < sz(n.dim(arr.target)); ++r) {
      for (std::size_t c = 0; c < sz(m.dim(arr.source)); ++c, ++row) {
        for (std::size_t k = 0; k < mt; ++k) {
          if (ma(k, c) != 0) {
            auto& e = system(row, var(arr.target, r, k));
            e = f.add(e, ma(k, c));
          }
        }
        for (std::size_t k = 0; k < ns; ++k) {
          if (na(r, k) != 0) {
            auto& e = system(row, var(arr.source, k, c));
            e = f.sub(e, na(r, k));
          }
        }
      }
    }
  }
  HomSpace out{m, n, {}};
  for (const auto& v : kernel_basis(system)) out.basis.push_back(Hom::unflatten(m, n, v));
  return out;
}

Embedded subrepresentation(const Rep& m, const std::vector<Mat>& bases) {
  const Algebra& a = m.algebra();
  std::vector<int> dims;
  for (const auto& b : bases) dims.push_back(static_cast<int>(b.cols()));
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    const Mat& bs = bases.at(sz(arr.source));
    const Mat& bt = bases.at(sz(arr.target));
    auto x = solve_matrix(bt, m.map(static_cast<int>(i)) * bs);
    if (!x) throw Error(ErrorKind::InvalidInput, "subspace is not invariant under arrow " + arr.id);
    maps.push_back(std::move(*x));
  }
  return {Rep(m.algebra_ptr(), std::move(dims), std::move(maps)), Hom(bases)};
}

Quotient quotient(const Rep& m, const std::vector<Mat>& sub_bases) {
  const Algebra& a = m.algebra();
  std::vector<Mat> complements, projections;
  std::vector<int> dims;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const Mat sub = column_space(sub_bases.at(sz(v)));
    Mat comp = complement_columns(sub);
    const auto inv = inverse(hstack(sub, comp));
    projections.push_back(inv->row_block(sub.cols(), comp.cols()));
    dims.push_back(static_cast<int>(comp.cols()));
    complements.push_back(std::move(comp));
  }
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    maps.push_back(projections[sz(arr.target)] * m.map(static_cast<int>(i)) * complements[sz(arr.source)]);
  }
  return {Rep(m.algebra_ptr(), std::move(dims), std::move(maps)), Hom(std::move(projections))};
}

Embedded kernel(const Hom& f, const Rep& from) {
  std::vector<Mat> bases;
  for (int v = 0; v < from.algebra().vertex_count(); ++v) {
    bases.push_back(Mat::from_columns(sz(from.dim(v)), kernel_basis(f.at(v)), from.field()));
  }
  return subrepresentation(from, bases);
}

Embedded image(const Hom& f, const Rep& to) {
  std::vector<Mat> bases;
  for (int v = 0; v < to.algebra().vertex_count(); ++v) bases.push_back(column_space(f.at(v)));
  return subrepresentation(to, bases);
}

Quotient cokernel(const Hom& f, const Rep& to) {
  std::vector<Mat> bases;
  for (int v = 0; v < to.algebra().vertex_count(); ++v) bases.push_back(column_space(f.at(v)));
  return quotient(to, bases);
}

std::optional<Hom> factor_through_mono(const Hom& f, const Hom& mono) {
  std::vector<Mat> g;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    auto x = solve_matrix(mono.at(static_cast<int>(v)), f.at(static_cast<int>(v)));
    if (!x) return std::nullopt;
    g.push_back(std::move(*x));
  }
  return Hom(std::move(g));
}

std::optional<Hom> factor_through_epi(const Hom& f, const Hom& epi) {
  std::vector<Mat> g;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) {
    const int u = static_cast<int>(v);
    auto x = solve_matrix(epi.at(u).transpose(), f.at(u).transpose());
    if (!x) return std::nullopt;
    g.push_back(x->transpose());
  }
  return Hom(std::move(g));
}

Hom inverse(const Hom& iso) {
  std::vector<Mat> g;
  for (const auto& c : iso.components()) {
    auto x = itcalc::inverse(c);
    if (!x) throw Error(ErrorKind::InvalidInput, "homomorphism is not invertible");
    g.push_back(std::move(*x));
  }
  return Hom(std::move(g));
}

Rep simple(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(vertex + 1) + " does not exist");
  }
  std::vector<int> dims(sz(a->vertex_count()), 0);
  dims[sz(vertex)] = 1;
  std::vector<Mat> maps;
  for (const auto& arr : a->quiver().arrows)
    maps.emplace_back(sz(dims[sz(arr.target)]), sz(dims[sz(arr.source)]), a->field());
  return Rep(a, std::move(dims), std::move(maps));
}

namespace {

// Module spanned by the basis paths from `vertex` of length < max_length,
// arrows acting by right composition.
Rep path_module(const AlgebraPtr& a, int vertex, int max_length) {
  if (vertex < 0 || vertex >= a->vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(vertex + 1) + " does not exist");
  }
  const auto nv = sz(a->vertex_count());
  std::vector<std::vector<std::size_t>> at(nv);
  std::vector<std::size_t> pos(a->dim(), 0);
  std::vector<bool> kept(a->dim(), false);
  for (auto idx : a->paths_from(vertex)) {
    const Path& p = a->basis()[idx];
    if (static_cast<int>(p.length()) >= max_length) continue;
    pos[idx] = at[sz(p.target)].size();
    at[sz(p.target)].push_back(idx);
    kept[idx] = true;
  }
  std::vector<int> dims;
  for (const auto& v : at) dims.push_back(static_cast<int>(v.size()));
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a->arrow_count(); ++i) {
    const Arrow& arr = a->quiver().arrows[i];
    Mat m(at[sz(arr.target)].size(), at[sz(arr.source)].size(), a->field());
    for (std::size_t c = 0; c < at[sz(arr.source)].size(); ++c) {
      auto ext = a->extend(at[sz(arr.source)][c], static_cast<int>(i));
      if (ext && kept[*ext]) m(pos[*ext], c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(a, std::move(dims), std::move(maps));
}

}  // namespace

Rep projective(const AlgebraPtr& a, int vertex) {
  return path_module(a, vertex, a->admissibility_bound() + 1);
}

Rep projective_quotient(const AlgebraPtr& a, int vertex, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "radical power must be non-negative");
  return path_module(a, vertex, k);
}

Rep injective(const AlgebraPtr& a, int vertex) {
  if (vertex < 0 || vertex >= a->vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(vertex + 1) + " does not exist");
  }
  const auto nv = sz(a->vertex_count());
  std::vector<std::vector<std::size_t>> at(nv);
  std::vector<std::size_t> pos(a->dim(), 0);
  for (auto idx : a->paths_to(vertex)) {
    const Path& p = a->basis()[idx];
    pos[idx] = at[sz(p.source)].size();
    at[sz(p.source)].push_back(idx);
  }
  std::vector<int> dims;
  for (const auto& v : at) dims.push_back(static_cast<int>(v.size()));
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a->arrow_count(); ++i) {
    const Arrow& arr = a->quiver().arrows[i];
    // I(u) -> I(v) for arr: u -> v is dual to q |-> arr q on paths v -> i.
    Mat m(at[sz(arr.target)].size(), at[sz(arr.source)].size(), a->field());
    for (std::size_t r = 0; r < at[sz(arr.target)].size(); ++r) {
      auto pre = a->prepend(static_cast<int>(i), at[sz(arr.target)][r]);
      if (pre) m(r, pos[*pre]) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(a, std::move(dims), std::move(maps));
}

Rep regular_module(const AlgebraPtr& a) {
  std::vector<Rep> ps;
  for (int v = 0; v < a->vertex_count(); ++v) ps.push_back(projective(a, v));
  return direct_sum(ps);
}

Hom map_from_projective(const Rep& m, int vertex, std::span<const Residue> element) {
  const AlgebraPtr& a = m.algebra_ptr();
  if (element.size() != sz(m.dim(vertex))) throw Error(ErrorKind::InvalidInput, "element length mismatch");
  std::vector<std::vector<Vec>> cols(sz(a->vertex_count()));
  for (auto idx : a->paths_from(vertex)) {
    const Path& p = a->basis()[idx];
    cols[sz(p.target)].push_back(m.path_action(p) * element);
  }
  std::vector<Mat> comps;
  for (int v = 0; v < a->vertex_count(); ++v) {
    comps.push_back(Mat::from_columns(sz(m.dim(v)), cols[sz(v)], m.field()));
  }
  return Hom(std::move(comps));
}

Embedded radical(const Rep& m) {
  const Algebra& a = m.algebra();
  std::vector<Mat> spans;
  for (int v = 0; v < a.vertex_count(); ++v) spans.emplace_back(sz(m.dim(v)), 0, m.field());
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const int t = a.quiver().arrows[i].target;
    spans[sz(t)] = hstack(spans[sz(t)], m.map(static_cast<int>(i)));
  }
  for (auto& s : spans) s = column_space(s);
  return subrepresentation(m, spans);
}

ProjectiveCover projective_cover(const Rep& m) {
  const AlgebraPtr& a = m.algebra_ptr();
  const Embedded rad = radical(m);
  std::vector<Rep> sources;
  std::vector<Hom> parts;
  std::vector<int> mult;
  for (int v = 0; v < a->vertex_count(); ++v) {
    const Mat top = complement_columns(rad.inclusion.at(v));
    mult.push_back(static_cast<int>(top.cols()));
    if (top.cols() == 0) continue;
    const Rep pv = projective(a, v);
    for (std::size_t c = 0; c < top.cols(); ++c) {
      sources.push_back(pv);
      parts.push_back(map_from_projective(m, v, top.column(c)));
    }
  }
  Rep p = sources.empty() ? Rep::zero(a) : direct_sum(sources);
  Hom epi = hom_from_sum(parts, m);
  if (sources.empty()) epi = Hom::zero(p, m);
  return {std::move(p), std::move(epi), std::move(mult)};
}

Rep syzygy(const Rep& m) {
  const auto cover = projective_cover(m);
  return kernel(cover.epi, cover.projective).module;
}

DirectSum direct_sum_with_maps(std::span<const Rep> ms) {
  if (ms.empty()) throw Error(ErrorKind::InvalidInput, "empty direct sum needs an algebra");
  const AlgebraPtr& a = ms.front().algebra_ptr();
  for (const auto& m : ms) require_same_algebra(ms.front(), m);
  const auto nv = sz(a->vertex_count());
  std::vector<int> dims(nv, 0);
  for (const auto& m : ms)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += m.dims()[v];
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a->arrow_count(); ++i) {
    std::vector<Mat> blocks;
    for (const auto& m : ms) blocks.push_back(m.map(static_cast<int>(i)));
    maps.push_back(block_diagonal(blocks, a->field()));
  }
  DirectSum out{Rep(a, dims, std::move(maps)), {}, {}};
  std::vector<int> offset(nv, 0);
  for (const auto& m : ms) {
    std::vector<Mat> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      const auto d = sz(m.dims()[v]);
      Mat i(sz(dims[v]), d, a->field());
      for (std::size_t k = 0; k < d; ++k) i(sz(offset[v]) + k, k) = 1;
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += m.dims()[v];
    }
    out.injections.emplace_back(std::move(inj));
    out.projections.emplace_back(std::move(proj));
  }
  return out;
}

Rep direct_sum(std::span<const Rep> ms) { return direct_sum_with_maps(ms).module; }

Rep direct_sum(std::initializer_list<Rep> ms) {
  return direct_sum(std::span<const Rep>(ms.begin(), ms.size()));
}

Rep power(const Rep& m, int copies) {
  if (copies <= 0) return Rep::zero(m.algebra_ptr());
  std::vector<Rep> ms(sz(copies), m);
  return direct_sum(ms);
}

Rep change_basis(const Rep& m, const std::vector<Mat>& g) {
  const Algebra& a = m.algebra();
  std::vector<Mat> inv;
  for (const auto& gv : g) {
    auto i = inverse(gv);
    if (!i) throw Error(ErrorKind::InvalidInput, "change of basis is not invertible");
    inv.push_back(std::move(*i));
  }
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& arr = a.quiver().arrows[i];
    maps.push_back(g.at(sz(arr.target)) * m.map(static_cast<int>(i)) * inv.at(sz(arr.source)));
  }
  return Rep(m.algebra_ptr(), m.dims(), std::move(maps));
}

}  // namespace itcalc
