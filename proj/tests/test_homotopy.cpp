#include "doctest.h"
#include "fixtures.hpp"
#include "itcalc/error.hpp"
#include "itcalc/homotopy.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <random>

using namespace itcalc;
using namespace itcalc::testing;

namespace {

// P_2 -> P_1 over A2, the inclusion of the radical.
Hom radical_inclusion(const AlgebraPtr& a) { return radical(projective(a, 0)).inclusion; }

// Random invertible per-vertex matrices.
Hom random_automorphism(const Rep& m, std::mt19937_64& rng) {
  std::vector<Mat> g;
  for (int v = 0; v < m.algebra().vertex_count(); ++v) {
    const auto d = static_cast<std::size_t>(m.dim(v));
    while (true) {
      Mat x(d, d, m.field());
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) x(r, c) = static_cast<Residue>(rng() % m.field().modulus());
      if (rank(x) == d) {
        g.push_back(std::move(x));
        break;
      }
    }
  }
  return Hom(std::move(g));
}

// c plus a contractible summand M = M in degrees i, i + 1, presented in
// scrambled bases.
Complex pad(const Complex& c, const Rep& m, int i, std::mt19937_64& rng) {
  const int lo = std::min(c.lo(), i), hi = std::max(c.hi(), i + 1);
  std::vector<Rep> terms;
  std::vector<DirectSum> sums;
  for (int k = lo; k <= hi; ++k) {
    std::vector<Rep> parts{c.term(k)};
    if (k == i || k == i + 1) parts.push_back(m);
    sums.push_back(direct_sum_with_maps(parts));
  }
  std::vector<Hom> g, ginv;
  for (auto& s : sums) {
    Hom a = random_automorphism(s.module, rng);
    terms.push_back(change_basis(s.module, a.components()));
    ginv.push_back(inverse(a));
    g.push_back(std::move(a));
  }
  std::vector<Hom> diffs;
  for (int k = lo; k < hi; ++k) {
    const auto s = static_cast<std::size_t>(k - lo);
    Hom d = compose(sums[s + 1].injections[0], compose(c.diff(k), sums[s].projections[0]));
    if (k == i) d = d + compose(sums[s + 1].injections[1], sums[s].projections[1]);
    diffs.push_back(compose(g[s + 1], compose(d, ginv[s])));
  }
  return Complex(c.algebra_ptr(), lo, std::move(terms), std::move(diffs));
}

}  // namespace

TEST_CASE("homotopy Hom dimensions") {
  auto a = a2();
  const Complex sa = Complex::stalk(regular_module(a));
  for (int i : {-2, -1, 1, 2}) CHECK(homotopy_hom_dim(sa, sa, i) == 0);
  const Complex p1 = Complex::stalk(projective(a, 0));
  CHECK(homotopy_hom_dim(p1, p1, 0) == 1);

  const Rep m = projective(a, 0);
  const Complex cone(a, 0, {m, m}, {Hom::identity(m)});
  for (int i = -2; i <= 2; ++i) {
    CHECK(homotopy_hom_dim(cone, sa, i) == 0);
    CHECK(homotopy_hom_dim(sa, cone, i) == 0);
    CHECK(homotopy_hom_dim(cone, cone, i) == 0);
  }

  // P_2 -> P_1 is the projective resolution of S_1
  const Complex res(a, -1, {projective(a, 1), m}, {radical_inclusion(a)});
  CHECK(homotopy_hom_dim(res, res, 0) == 1);
  CHECK(homotopy_hom_dim(Complex::stalk(projective(a, 1)), res, -1) == 0);
  // Hom(P_1, S_1) = k and Hom(P_2, S_1) = 0
  CHECK(homotopy_hom_dim(p1, res, 0) == 1);
  CHECK(homotopy_hom_dim(Complex::stalk(projective(a, 1)), res, 0) == 0);
  CHECK_THROWS_AS(homotopy_hom_dim(p1, Complex::stalk(simple(l2(), 0)), 0), Error);
}

TEST_CASE("minimization") {
  auto a = a2();
  const Rep p1 = projective(a, 0), p2 = projective(a, 1);
  CHECK(minimize(Complex(a, 0, {p1, p1}, {Hom::identity(p1)})).is_zero());

  const Complex res(a, -1, {p2, p1}, {radical_inclusion(a)});
  const Complex mres = minimize(res);
  CHECK(mres.lo() == -1);
  CHECK(mres.hi() == 0);
  CHECK(mres.term(-1).dims() == p2.dims());

  const Rep parts[] = {p1, p2};
  const DirectSum s = direct_sum_with_maps(parts);
  const Complex padded(a, 0, {p1, s.module}, {s.injections[0]});
  const Complex mp = minimize(padded);
  CHECK(mp.lo() == 1);
  CHECK(mp.hi() == 1);
  CHECK(is_isomorphic(mp.term(1), p2));
  CHECK(homotopy_hom_dim(padded, padded, 0) == homotopy_hom_dim(mp, mp, 0));
  CHECK(term_length(padded) == 0);
}

TEST_CASE("term length") {
  auto a = a2();
  CHECK(term_length(Complex::stalk(simple(a, 0), 4)) == 0);
  const Complex res(a, -1, {projective(a, 1), projective(a, 0)}, {radical_inclusion(a)});
  for (int s : {-3, 0, 2}) CHECK(term_length(res.shifted(s)) == 1);
  CHECK_THROWS_AS(term_length(Complex(a)), Error);
  const Rep p = projective(a, 0);
  CHECK_THROWS_AS(term_length(Complex(a, 0, {p, p}, {Hom::identity(p)})), Error);
}

TEST_CASE("truncations") {
  auto a = a2();
  const Complex stalk = Complex::stalk(simple(a, 0));
  CHECK(truncate(stalk, Truncation::AtMost, -1).is_zero());
  const Complex res(a, -1, {projective(a, 1), projective(a, 0)}, {radical_inclusion(a)});
  const Complex all = truncate(res, Truncation::AtLeast, -1);
  CHECK(all.lo() == -1);
  CHECK(all.hi() == 0);
  CHECK(all.diff(-1) == res.diff(-1));
  for (int n = -2; n <= 1; ++n) {
    const Complex lo = truncate(res, Truncation::AtMost, n), hi = truncate(res, Truncation::AtLeast, n + 1);
    for (int i = -2; i <= 1; ++i) {
      const int total = lo.term(i).total_dim() + hi.term(i).total_dim();
      CHECK(total == res.term(i).total_dim());
      CHECK((lo.term(i).is_zero() || hi.term(i).is_zero()));
    }
  }
}

TEST_CASE("homotopy Homs are invariant under minimization") {
  std::mt19937_64 rng(41);
  for (auto alg : {a2(), n3(), l2(), l3()}) {
    std::vector<Rep> ps;
    for (int v = 0; v < alg->vertex_count(); ++v) ps.push_back(projective(alg, v));
    for (int t = 0; t < 6; ++t) {
      const Rep x = direct_sum({ps[rng() % ps.size()], ps[rng() % ps.size()]});
      const Rep y = ps[rng() % ps.size()];
      const Complex c(alg, -1, {x, y}, {random_hom(x, y, rng)});
      const Complex padded = pad(c, ps[rng() % ps.size()], -2 + static_cast<int>(rng() % 3), rng);
      const Complex m = minimize(padded);
      CHECK(minimize(m).lo() == m.lo());
      CHECK(minimize(m).hi() == m.hi());
      const Complex probe = Complex::stalk(ps[rng() % ps.size()], -static_cast<int>(rng() % 2));
      for (int s = -2; s <= 2; ++s) {
        CHECK(homotopy_hom_dim(padded, probe, s) == homotopy_hom_dim(m, probe, s));
        CHECK(homotopy_hom_dim(probe, padded, s) == homotopy_hom_dim(probe, m, s));
        CHECK(homotopy_hom_dim(padded, c, s) == homotopy_hom_dim(c, c, s));
      }
    }
  }
}

TEST_CASE("relative tilting checks") {
  auto l = l2();
  const RelStructure fs(l, simple(l, 0));
  const TiltingReport e = check_relative_tilting(fs, Complex::stalk(fs.E()));
  CHECK(e.self_orthogonal);
  CHECK(e.generation_heuristic);
  CHECK(e.summand_count == 2);
  CHECK(e.term_length == 0);
  CHECK(e.endomorphism_dim == 5);

  auto a = a2();
  const Rep p1 = projective(a, 0);
  const TiltingReport pp = check_relative_tilting(RelStructure(a), Complex::stalk(direct_sum({p1, p1})));
  CHECK(pp.summand_count == 1);
  CHECK_FALSE(pp.generation_heuristic);

  const RelStructure fa(a, simple(a, 0));
  const TiltingReport ps = check_relative_tilting(fa, Complex::stalk(direct_sum({p1, simple(a, 0)})));
  CHECK(ps.self_orthogonal);
  CHECK(ps.summand_count == 2);
  CHECK(ps.simple_count == 3);

  CHECK_THROWS_AS(check_relative_tilting(RelStructure(a), Complex::stalk(simple(a, 0))), Error);

  const Rep p = projective(l, 0);
  const Complex twice(l, -1, {p, p}, {Hom::zero(p, p)});
  const TiltingReport tw = check_relative_tilting(RelStructure(l), twice);
  CHECK_FALSE(tw.self_orthogonal);
  CHECK(tw.nonzero_shifts == std::vector<int>{-1, 1});
}

TEST_CASE("derived-equivalence bound") {
  // APR tilting module P_1 + S_1 over A2, presented by its projective
  // resolution P_2 -> P_1 + P_1.
  auto a = a2();
  const Rep p1 = projective(a, 0), p2 = projective(a, 1);
  const Rep parts[] = {p1, p1};
  const DirectSum s = direct_sum_with_maps(parts);
  const Complex apr(a, -1, {p2, s.module}, {compose(s.injections[1], radical_inclusion(a))});
  const BoundReport r = verify_bound(RelStructure(a), apr, a2_reversed(), Family{true, {}}, Family{true, {}}, 50);
  CHECK(r.L == 1);
  CHECK(r.R == 1);
  CHECK(r.n == 1);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.endomorphism_dim == 3);
  CHECK(r.warnings.empty());

  for (auto alg : {a2(), l2(), l3(), n3()}) {
    const BoundReport id = verify_bound(RelStructure(alg), Complex::stalk(regular_module(alg)), alg,
                                        Family{true, {}}, Family{true, {}}, 50);
    CHECK(id.L == id.R);
    CHECK(id.n == 0);
    CHECK(id.verdict == Verdict::Holds);
    CHECK(id.warnings.empty());
  }

  auto l = l2();
  const RelStructure fs(l, simple(l, 0));
  const BoundReport e = verify_bound(fs, Complex::stalk(fs.E()), auslander_l2(), Family{true, {}}, Family{true, {}}, 50);
  CHECK(e.L == 0);
  CHECK(e.R == 2);
  CHECK(e.n == 0);
  CHECK(e.verdict == Verdict::Holds);
  CHECK(e.upper_slack == 0);
  CHECK(e.warnings.empty());

  // a wrong B is reported, not rejected
  const BoundReport w = verify_bound(fs, Complex::stalk(fs.E()), l2(), Family{true, {}}, Family{true, {}}, 50);
  CHECK(w.warnings.size() == 1);

  const Rep p = projective(l, 0);
  CHECK_THROWS_AS(verify_bound(RelStructure(l), Complex(l, -1, {p, p}, {Hom::zero(p, p)}), l, Family{true, {}},
                               Family{true, {}}, 50),
                  Error);
  CHECK_THROWS_AS(verify_bound(RelStructure(l), Complex::stalk(p), kronecker(), Family{true, {}}, Family{true, {}}, 50),
                  Error);
}
