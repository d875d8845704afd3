// The rank sequence r_m = rank <[Omega^m X] : X in S_0> is computed on the
// Omega-closure U of the generators S_0. Once U is closed, Omega_F acts on
// the span of U by a fixed integer matrix T, and r_m = |S_0| minus the
// dimension of ker T^m restricted to <S_0>. The kernels ker T^m stabilize
// after at most |U| steps, so no rank drop can occur past closure + |U|.

#include "itcalc/itcore.hpp"

#include "itcalc/error.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace itcalc {

BigInt ClassVector::at(int id) const {
  const auto it = entries_.find(id);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void ClassVector::add(int id, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

void ClassVector::add(const ClassVector& v, const BigInt& scale) {
  for (const auto& [id, c] : v.entries_) add(id, c * scale);
}

Registry::Registry(RelStructure f) : f_(std::move(f)) {}

std::size_t Registry::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

Rep Registry::representative(int id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(static_cast<std::size_t>(id)).rep;
}

bool Registry::is_F_projective(int id) const {
  std::lock_guard lock(mutex_);
  return entries_.at(static_cast<std::size_t>(id)).f_projective;
}

int Registry::id_of(const Rep& indecomposable) {
  if (indecomposable.algebra_ptr() != f_.algebra_ptr()) {
    throw Error(ErrorKind::AlgebraMismatch, "module lives over a different algebra");
  }
  std::optional<bool> f_projective;
  std::size_t checked = 0;
  while (true) {
    std::vector<Rep> pending;
    {
      std::lock_guard lock(mutex_);
      if (checked == entries_.size() && f_projective) {
        entries_.push_back({indecomposable, *f_projective, std::nullopt});
        return static_cast<int>(entries_.size() - 1);
      }
      for (std::size_t i = checked; i < entries_.size(); ++i) pending.push_back(entries_[i].rep);
    }
    // iso tests run without the lock; entries registered meanwhile are
    // picked up on the next pass
    for (std::size_t k = 0; k < pending.size(); ++k) {
      if (indecomposables_isomorphic(pending[k], indecomposable)) return static_cast<int>(checked + k);
    }
    checked += pending.size();
    if (!f_projective) f_projective = f_.index_of(indecomposable).has_value();
  }
}

ClassVector Registry::class_of(const Rep& m) {
  ClassVector v;
  for (const auto& c : decompose(m, f_.settings())) {
    const int id = id_of(c.module);
    if (!is_F_projective(id)) v.add(id, c.multiplicity);
  }
  return v;
}

ClassVector Registry::omega_class(int id) {
  Rep rep = Rep::zero(f_.algebra_ptr());
  {
    std::lock_guard lock(mutex_);
    const Entry& e = entries_.at(static_cast<std::size_t>(id));
    if (e.omega) return *e.omega;
    if (e.f_projective) return {};
    rep = e.rep;
  }
  ClassVector omega = class_of(omega_F(f_, rep));
  std::lock_guard lock(mutex_);
  Entry& e = entries_[static_cast<std::size_t>(id)];
  if (!e.omega) e.omega = omega;
  return *e.omega;
}

ClassVector omega_power(Registry& reg, const ClassVector& v, int level) {
  ClassVector cur = v;
  for (int k = 0; k < level; ++k) {
    ClassVector next;
    for (const auto& [id, c] : cur.entries()) next.add(reg.omega_class(id), c);
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct Orbit {
  PhiResult result;
  std::vector<std::vector<ClassVector>> rows;  // rows[m][i] = [Omega^m X_i]
};

std::vector<int> generators_of(Registry& reg, std::span<const Rep> modules) {
  std::vector<int> gens;
  std::set<int> seen;
  for (const auto& m : modules) {
    for (const auto& c : decompose(m, reg.structure().settings())) {
      const int id = reg.id_of(c.module);
      if (!reg.is_F_projective(id) && seen.insert(id).second) gens.push_back(id);
    }
  }
  return gens;
}

std::size_t level_rank(const std::vector<ClassVector>& rows, const std::unordered_map<int, std::size_t>& column) {
  std::vector<std::vector<BigInt>> data;
  for (const auto& r : rows) {
    std::vector<BigInt> row(column.size());
    for (const auto& [id, c] : r.entries()) row[column.at(id)] = c;
    data.push_back(std::move(row));
  }
  return int_rank(IntMat::from_rows(data, column.size()));
}

Orbit compute_orbit(Registry& reg, std::span<const Rep> modules, int horizon) {
  if (horizon < 1) throw Error(ErrorKind::InvalidInput, "horizon must be at least 1");
  Orbit o;
  PhiResult& r = o.result;
  r.generators = generators_of(reg, modules);
  if (r.generators.empty()) {
    r.certified = true;
    r.closure_level = 0;
    r.rank_sequence = {0};
    return o;
  }

  // Breadth-first Omega-closure of the generators, one level per step.
  std::vector<int> support = r.generators;
  std::set<int> in_support(support.begin(), support.end());
  std::vector<int> frontier = r.generators;
  for (int level = 0; level <= horizon; ++level) {
    std::vector<int> next;
    for (int id : frontier) {
      const ClassVector omega = reg.omega_class(id);
      for (const auto& [j, c] : omega.entries()) {
        if (in_support.insert(j).second) {
          support.push_back(j);
          next.push_back(j);
        }
      }
    }
    if (next.empty()) {
      r.closure_level = level;
      break;
    }
    frontier = std::move(next);
  }
  r.support_size = support.size();
  r.certified = r.closure_level.has_value();
  const int last = r.certified ? *r.closure_level + static_cast<int>(support.size()) : horizon;

  std::unordered_map<int, std::size_t> column;
  std::vector<ClassVector> rows;
  for (int id : r.generators) rows.push_back(ClassVector::unit(id));
  for (int m = 0; m <= last; ++m) {
    if (m > 0) {
      for (auto& row : rows) row = omega_power(reg, row, 1);
    }
    for (const auto& row : rows)
      for (const auto& [id, c] : row.entries()) column.try_emplace(id, column.size());
    r.rank_sequence.push_back(level_rank(rows, column));
    o.rows.push_back(rows);
  }

  for (std::size_t m = 1; m < r.rank_sequence.size(); ++m) {
    if (r.rank_sequence[m] > r.rank_sequence[m - 1]) throw std::logic_error("rank sequence increased");
    if (r.rank_sequence[m] < r.rank_sequence[m - 1]) r.value = static_cast<int>(m);
  }
  return o;
}

}  // namespace

PhiResult phi(Registry& reg, std::span<const Rep> modules, int horizon) {
  return compute_orbit(reg, modules, horizon).result;
}

PhiResult phi(Registry& reg, const Rep& m, int horizon) {
  return phi(reg, std::span<const Rep>(&m, 1), horizon);
}

std::vector<Rep> nakayama_indecomposables(const AlgebraPtr& a) {
  if (!a->is_nakayama()) throw Error(ErrorKind::NotNakayama, "the algebra is not Nakayama");
  std::vector<Rep> out;
  for (int v = 0; v < a->vertex_count(); ++v) {
    for (int k = 1; k <= a->loewy_length(v); ++k) out.push_back(projective_quotient(a, v, k));
  }
  return out;
}

PhiResult phi_dim(Registry& reg, const Family& family, int horizon) {
  if (!family.nakayama_all) return phi(reg, family.modules, horizon);
  const auto all = nakayama_indecomposables(reg.structure().algebra_ptr());
  return phi(reg, all, horizon);
}

std::optional<Division> find_d_division(Registry& reg, const Rep& m, int horizon) {
  const Orbit o = compute_orbit(reg, std::span<const Rep>(&m, 1), horizon);
  const int d = o.result.value;
  if (d == 0) return std::nullopt;

  std::unordered_map<int, std::size_t> column;
  for (const auto& level : o.rows)
    for (const auto& row : level)
      for (const auto& [id, c] : row.entries()) column.try_emplace(id, column.size());
  auto matrix = [&](int level) {
    std::vector<std::vector<BigInt>> data;
    for (const auto& row : o.rows[static_cast<std::size_t>(level)]) {
      std::vector<BigInt> v(column.size());
      for (const auto& [id, c] : row.entries()) v[column.at(id)] = c;
      data.push_back(std::move(v));
    }
    return IntMat::from_rows(data, column.size());
  };
  auto combine = [&](const std::vector<BigInt>& coeffs, int level) {
    ClassVector v;
    const auto& rows = o.rows[static_cast<std::size_t>(level)];
    for (std::size_t i = 0; i < rows.size(); ++i) v.add(rows[i], coeffs[i]);
    return v;
  };

  for (const auto& c : int_left_kernel(matrix(d))) {
    if (!combine(c, d).is_zero()) throw std::logic_error("left kernel vector does not annihilate");
    if (combine(c, d - 1).is_zero()) continue;
    Division div;
    div.d = d;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int id = o.result.generators[i];
      if (c[i] > 0) div.X.emplace_back(id, c[i]);
      if (c[i] < 0) div.Y.emplace_back(id, -c[i]);
    }
    return div;
  }
  throw std::logic_error("rank drop without a witnessing kernel vector");
}

}  // namespace itcalc
