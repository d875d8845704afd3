#pragma once

// Igusa-Todorov machinery: the registry of indecomposables, class vectors in
// K_F(A), the Omega_F orbit of <M> and the function phi.
//
// K_F(A) is free on the iso-classes of indecomposable non-F-projective
// modules; class vectors only ever mention classes met so far, each under
// the dense ID the registry gave it.

#include "itcalc/relstruct.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace itcalc {

class ClassVector {
 public:
  ClassVector() = default;

  static ClassVector unit(int id) {
    ClassVector v;
    v.entries_[id] = 1;
    return v;
  }

  const std::map<int, BigInt>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  BigInt at(int id) const;

  void add(int id, const BigInt& c);
  void add(const ClassVector& v, const BigInt& scale = 1);

  friend bool operator==(const ClassVector&, const ClassVector&) = default;

 private:
  std::map<int, BigInt> entries_;  // no zero entries
};

class Registry {
 public:
  explicit Registry(RelStructure f);

  const RelStructure& structure() const noexcept { return f_; }
  std::size_t size() const;
  Rep representative(int id) const;
  bool is_F_projective(int id) const;

  /// ID of the class of an indecomposable module, registering it if new.
  int id_of(const Rep& indecomposable);
  ClassVector class_of(const Rep& m);
  /// [Omega_F X] for the registered class X, computed once.
  ClassVector omega_class(int id);

 private:
  struct Entry {
    Rep rep;
    bool f_projective = false;
    std::optional<ClassVector> omega;
  };

  RelStructure f_;
  mutable std::mutex mutex_;
  std::deque<Entry> entries_;
};

struct PhiResult {
  int value = 0;
  bool certified = false;
  std::vector<std::size_t> rank_sequence;
  /// IDs of the distinct non-F-projective summands generating <M>.
  std::vector<int> generators;
  /// Level at which the Omega-closure of the generators was reached, if it
  /// was within the horizon, and the size of the closure found so far.
  std::optional<int> closure_level;
  std::size_t support_size = 0;
};

PhiResult phi(Registry& reg, const Rep& m, int horizon);
/// phi of the direct sum of `modules`.
PhiResult phi(Registry& reg, std::span<const Rep> modules, int horizon);

/// All P_i / rad^k of a Nakayama algebra, i.e. all its indecomposables.
std::vector<Rep> nakayama_indecomposables(const AlgebraPtr& a);

struct Family {
  bool nakayama_all = false;
  std::vector<Rep> modules;
};

/// phi of the sum of the family; with nakayama_all, phi-dim_F of the algebra.
PhiResult phi_dim(Registry& reg, const Family& family, int horizon);

struct Division {
  int d = 0;
  /// Multiplicities of the generators of <M> in X and in Y.
  std::vector<std::pair<int, BigInt>> X;
  std::vector<std::pair<int, BigInt>> Y;
};

/// A relative d-Division of m with d = phi(m), or nullopt when phi(m) = 0.
std::optional<Division> find_d_division(Registry& reg, const Rep& m, int horizon);

/// Class of Omega_F^level of the class v, expanded through the registry.
ClassVector omega_power(Registry& reg, const ClassVector& v, int level);

}  // namespace itcalc
