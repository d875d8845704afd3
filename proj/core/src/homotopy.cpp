#include "itcalc/homotopy.hpp"

#include "itcalc/error.hpp"

#include <algorithm>

namespace itcalc {

namespace {

std::size_t hom_ambient(const Rep& from, const Rep& to) {
  std::size_t n = 0;
  for (int v = 0; v < from.algebra().vertex_count(); ++v)
    n += static_cast<std::size_t>(from.dim(v)) * static_cast<std::size_t>(to.dim(v));
  return n;
}

void place(Vec& column, std::size_t offset, const Vec& flat) {
  std::copy(flat.begin(), flat.end(), column.begin() + static_cast<std::ptrdiff_t>(offset));
}

std::size_t column_rank(const std::vector<Vec>& columns, std::size_t rows, const PrimeField& f) {
  if (columns.empty() || rows == 0) return 0;
  return rank(Mat::from_columns(rows, columns, f));
}

// Hom_K(x, z) for complexes over the same algebra.
std::size_t homotopy_classes(const Complex& x, const Complex& z) {
  const PrimeField& f = x.algebra_ptr()->field();
  const int lo = x.lo(), hi = x.hi();

  // Layout of the chain-map components f^i : x^i -> z^i and of the squares
  // x^i -> z^(i+1).
  std::vector<std::size_t> map_offset, square_offset;
  std::size_t map_total = 0, square_total = 0;
  for (int i = lo; i <= hi; ++i) {
    map_offset.push_back(map_total);
    map_total += hom_ambient(x.term(i), z.term(i));
    square_offset.push_back(square_total);
    square_total += hom_ambient(x.term(i), z.term(i + 1));
  }
  auto slot = [&](int i) { return static_cast<std::size_t>(i - lo); };

  std::vector<Vec> constraints;
  std::size_t variables = 0;
  for (int i = lo; i <= hi; ++i) {
    const Rep xi = x.term(i);
    for (const auto& b : hom_space(xi, z.term(i)).basis) {
      ++variables;
      Vec col(square_total, 0);
      place(col, square_offset[slot(i)], compose(z.diff(i), b).flatten());
      if (i > lo) {
        const Vec back = compose(b, x.diff(i - 1)).flatten();
        Vec neg(back.size());
        for (std::size_t k = 0; k < back.size(); ++k) neg[k] = f.neg(back[k]);
        place(col, square_offset[slot(i - 1)], neg);
      }
      constraints.push_back(std::move(col));
    }
  }
  const std::size_t cycles = variables - column_rank(constraints, square_total, f);

  std::vector<Vec> boundaries;
  for (int i = lo; i <= hi; ++i) {
    for (const auto& h : hom_space(x.term(i), z.term(i - 1)).basis) {
      Vec col(map_total, 0);
      place(col, map_offset[slot(i)], compose(z.diff(i - 1), h).flatten());
      if (i > lo) place(col, map_offset[slot(i - 1)], compose(h, x.diff(i - 1)).flatten());
      boundaries.push_back(std::move(col));
    }
  }
  return cycles - column_rank(boundaries, map_total, f);
}

struct Split {
  Rep module;
  Hom inclusion;
  Hom projection;
};

// The complement of summand `skip`, with its inclusion and projection.
Split complement(const Rep& whole, const std::vector<Summand>& parts, std::size_t skip) {
  std::vector<Rep> mods;
  std::vector<Hom> incs, projs;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == skip) continue;
    mods.push_back(parts[k].module);
    incs.push_back(parts[k].inclusion);
    projs.push_back(parts[k].projection);
  }
  if (mods.empty()) {
    Rep zero = Rep::zero(whole.algebra_ptr());
    return {zero, Hom::zero(zero, whole), Hom::zero(whole, zero)};
  }
  Rep sum = direct_sum(mods);
  Hom inc = hom_from_sum(incs, whole);
  Hom proj = hom_to_sum(projs, whole);
  return {std::move(sum), std::move(inc), std::move(proj)};
}

// One Gaussian elimination step on an invertible component, if any.
std::optional<Complex> eliminate_once(const Complex& c, const Settings& settings) {
  for (int i = c.lo(); i < c.hi(); ++i) {
    const Rep xi = c.term(i), xj = c.term(i + 1);
    if (xi.is_zero() || xj.is_zero()) continue;
    const auto as = split_indecomposables(xi, settings);
    const auto bs = split_indecomposables(xj, settings);
    const Hom d = c.diff(i);
    for (std::size_t a = 0; a < as.size(); ++a) {
      for (std::size_t b = 0; b < bs.size(); ++b) {
        if (as[a].module.dims() != bs[b].module.dims()) continue;
        const Hom phi = compose(bs[b].projection, compose(d, as[a].inclusion));
        if (!phi.is_isomorphism()) continue;

        const Split ac = complement(xi, as, a);
        const Split bc = complement(xj, bs, b);
        const Hom eps = compose(bc.projection, compose(d, ac.inclusion));
        const Hom gamma = compose(bc.projection, compose(d, as[a].inclusion));
        const Hom delta = compose(bs[b].projection, compose(d, ac.inclusion));
        const Hom new_d = eps - compose(gamma, compose(inverse(phi), delta));

        std::vector<Rep> terms;
        std::vector<Hom> diffs;
        for (int k = c.lo(); k <= c.hi(); ++k) {
          terms.push_back(k == i ? ac.module : k == i + 1 ? bc.module : c.term(k));
        }
        for (int k = c.lo(); k < c.hi(); ++k) {
          if (k == i - 1) {
            diffs.push_back(compose(ac.projection, c.diff(k)));
          } else if (k == i) {
            diffs.push_back(new_d);
          } else if (k == i + 1) {
            diffs.push_back(compose(c.diff(k), bc.inclusion));
          } else {
            diffs.push_back(c.diff(k));
          }
        }
        return Complex(c.algebra_ptr(), c.lo(), std::move(terms), std::move(diffs));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t homotopy_hom_dim(const Complex& x, const Complex& y, int shift) {
  if (x.algebra_ptr() != y.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "complexes live over different algebras");
  }
  if (x.is_zero() || y.is_zero()) return 0;
  return homotopy_classes(x, y.shifted(shift));
}

Complex minimize(const Complex& c, const Settings& settings) {
  Complex cur = c.trimmed();
  while (auto next = eliminate_once(cur, settings)) cur = next->trimmed();
  return cur;
}

int term_length(const Complex& c, const Settings& settings) {
  const Complex m = minimize(c, settings);
  if (m.is_zero()) throw Error(ErrorKind::ZeroComplex, "the complex is homotopic to zero");
  return m.hi() - m.lo();
}

Complex truncate(const Complex& c, Truncation mode, int n) {
  const int lo = mode == Truncation::AtLeast ? std::max(c.lo(), n) : c.lo();
  const int hi = mode == Truncation::AtMost ? std::min(c.hi(), n) : c.hi();
  if (c.is_zero() || lo > hi) return Complex(c.algebra_ptr());
  std::vector<Rep> terms;
  std::vector<Hom> diffs;
  for (int i = lo; i <= hi; ++i) {
    terms.push_back(c.term(i));
    if (i < hi) diffs.push_back(c.diff(i));
  }
  return Complex(c.algebra_ptr(), lo, std::move(terms), std::move(diffs));
}

TiltingReport check_relative_tilting(const RelStructure& f, const Complex& t) {
  if (t.algebra_ptr() != f.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "complex lives over a different algebra");
  }
  for (int i = t.lo(); i <= t.hi(); ++i) {
    if (!is_F_projective(f, t.term(i))) {
      throw Error(ErrorKind::TermNotFProjective, "term in degree " + std::to_string(i) + " is not F-projective");
    }
  }
  const Complex m = minimize(t, f.settings());
  if (m.is_zero()) throw Error(ErrorKind::ZeroComplex, "the complex is homotopic to zero");

  TiltingReport r;
  r.term_length = m.hi() - m.lo();
  for (int s = -r.term_length; s <= r.term_length; ++s) {
    if (s != 0 && homotopy_hom_dim(m, m, s) != 0) r.nonzero_shifts.push_back(s);
  }
  r.self_orthogonal = r.nonzero_shifts.empty();
  r.endomorphism_dim = homotopy_hom_dim(m, m, 0);

  std::vector<Rep> distinct;
  for (int i = m.lo(); i <= m.hi(); ++i) {
    for (const auto& c : decompose(m.term(i), f.settings())) {
      const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Rep& d) {
        return indecomposables_isomorphic(d, c.module);
      });
      if (!seen) distinct.push_back(c.module);
    }
  }
  r.summand_count = static_cast<int>(distinct.size());
  r.simple_count = static_cast<int>(f.E_indecs().size());
  r.generation_heuristic = r.summand_count == r.simple_count;
  return r;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BoundReport verify_bound(const RelStructure& fA, const Complex& t, const AlgebraPtr& B, const Family& family_a,
                         const Family& family_b, int horizon) {
  const TiltingReport tr = check_relative_tilting(fA, t);
  if (!tr.self_orthogonal) throw Error(ErrorKind::NotSelfOrthogonal, "Hom_K(T, T[i]) is nonzero for some i != 0");

  BoundReport r;
  Registry ra{fA};
  r.left = phi_dim(ra, family_a, horizon);
  Registry rb{RelStructure(B, fA.settings())};
  r.right = phi_dim(rb, family_b, horizon);
  r.L = r.left.value;
  r.R = r.right.value;
  r.n = tr.term_length;
  r.holds = r.L - r.n <= r.R && r.R <= r.L + r.n + 2;
  r.lower_slack = r.R - (r.L - r.n);
  r.upper_slack = r.L + r.n + 2 - r.R;
  if (!r.left.certified || !r.right.certified) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = r.holds ? Verdict::Holds : Verdict::Violated;
  }
  r.endomorphism_dim = tr.endomorphism_dim;
  r.dim_B = B->dim();
  if (r.endomorphism_dim != r.dim_B) {
    r.warnings.push_back("dim End_K(T) = " + std::to_string(r.endomorphism_dim) + " differs from dim B = " +
                         std::to_string(r.dim_B));
  }
  return r;
}

}  // namespace itcalc
