#include "doctest.h"
#include "fixtures.hpp"
#include "itcalc/error.hpp"
#include "itcalc/itcore.hpp"

#include <future>
#include <random>

using namespace itcalc;
using namespace itcalc::testing;

namespace {

Rep module_of(const Registry& reg, const std::vector<std::pair<int, BigInt>>& parts, const AlgebraPtr& a) {
  std::vector<Rep> mods;
  for (const auto& [id, c] : parts) mods.push_back(power(reg.representative(id), static_cast<int>(c)));
  return mods.empty() ? Rep::zero(a) : direct_sum(mods);
}

Rep omega_iterated(const RelStructure& f, Rep m, int k) {
  for (int i = 0; i < k; ++i) m = omega_F(f, m);
  return m;
}

}  // namespace

TEST_CASE("class vectors") {
  auto a = a2();
  Registry reg{RelStructure(a)};
  CHECK(reg.class_of(projective(a, 0)).is_zero());
  const Rep s1 = simple(a, 0);
  const ClassVector two = reg.class_of(direct_sum({s1, s1}));
  REQUIRE(two.entries().size() == 1);
  const int id = two.entries().begin()->first;
  CHECK(two.at(id) == 2);
  CHECK(is_isomorphic(reg.representative(id), s1));
  CHECK(reg.class_of(direct_sum({projective(a, 0), s1})) == ClassVector::unit(id));
  CHECK(reg.id_of(s1) == id);
  CHECK_THROWS_AS(reg.class_of(simple(l2(), 0)), Error);

  ClassVector v = ClassVector::unit(3);
  v.add(3, -1);
  CHECK(v.is_zero());
}

TEST_CASE("phi on the fixtures") {
  auto n = n3();
  Registry rn{RelStructure(n)};
  const PhiResult p0 = phi(rn, projective(n, 0), 50);
  CHECK(p0.value == 0);
  CHECK(p0.certified);
  CHECK(p0.rank_sequence == std::vector<std::size_t>{0});

  const PhiResult p = phi(rn, direct_sum({simple(n, 0), simple(n, 1)}), 50);
  CHECK(p.value == 2);
  CHECK(p.certified);
  REQUIRE(p.rank_sequence.size() >= 3);
  CHECK(p.rank_sequence[0] == 2);
  CHECK(p.rank_sequence[1] == 1);
  CHECK(p.rank_sequence[2] == 0);
  CHECK(p.rank_sequence.back() == 0);

  auto l = l3();
  Registry rl{RelStructure(l)};
  const PhiResult q = phi(rl, direct_sum({projective_quotient(l, 0, 1), projective_quotient(l, 0, 2)}), 50);
  CHECK(q.value == 0);
  CHECK(q.certified);
  for (auto r : q.rank_sequence) CHECK(r == 2);

  CHECK_THROWS_AS(phi(rl, simple(l, 0), 0), Error);
}

TEST_CASE("phi-dim of Nakayama algebras") {
  auto check = [](const AlgebraPtr& a, const Rep& g, int expected) {
    Registry reg{RelStructure(a, g)};
    const PhiResult r = phi_dim(reg, Family{true, {}}, 50);
    CHECK(r.value == expected);
    CHECK(r.certified);
  };
  for (auto [a, expected] : {std::pair{l2(), 0}, {l3(), 0}, {n3(), 2}, {a2(), 1}, {a2_reversed(), 1}})
    check(a, Rep::zero(a), expected);
  auto l = l2();
  check(l, simple(l, 0), 0);

  auto k = kronecker();
  Registry rk{RelStructure(k)};
  CHECK_THROWS_AS(phi_dim(rk, Family{true, {}}, 50), Error);
  CHECK(phi_dim(rk, Family{false, {simple(k, 0)}}, 50).value == 1);
}

TEST_CASE("d-divisions") {
  auto n = n3();
  const RelStructure f(n);
  Registry reg{f};
  const Rep m = direct_sum({simple(n, 0), simple(n, 1)});
  const auto div = find_d_division(reg, m, 50);
  REQUIRE(div);
  CHECK(div->d == 2);
  const Rep x = module_of(reg, div->X, n), y = module_of(reg, div->Y, n);
  CHECK(reg.class_of(omega_iterated(f, x, 2)) == reg.class_of(omega_iterated(f, y, 2)));
  CHECK_FALSE(reg.class_of(omega_iterated(f, x, 1)) == reg.class_of(omega_iterated(f, y, 1)));

  CHECK_FALSE(find_d_division(reg, projective(n, 0), 50));
  auto l = l3();
  Registry rl{RelStructure(l)};
  CHECK_FALSE(find_d_division(rl, direct_sum({projective_quotient(l, 0, 1), projective_quotient(l, 0, 2)}), 50));
}

TEST_CASE("phi is a lower bound without closure") {
  auto n = n3();
  Registry reg{RelStructure(n)};
  const PhiResult r = phi(reg, direct_sum({simple(n, 0), simple(n, 1)}), 1);
  CHECK(r.value <= 2);
}

TEST_CASE("registry is safe to share between threads") {
  auto l = l3();
  const std::vector<Rep> mods{simple(l, 0), projective_quotient(l, 0, 2), projective(l, 0)};
  Registry shared{RelStructure(l)};
  std::vector<std::future<ClassVector>> jobs;
  for (int t = 0; t < 8; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      std::mt19937_64 rng(static_cast<std::uint64_t>(t));
      return shared.class_of(scramble(direct_sum({mods[0], mods[1], mods[t % 3]}), rng));
    }));
  }
  for (auto& j : jobs) j.get();
  CHECK(shared.size() == 3);
  for (std::size_t i = 0; i < shared.size(); ++i)
    for (std::size_t j = i + 1; j < shared.size(); ++j)
      CHECK_FALSE(indecomposables_isomorphic(shared.representative(static_cast<int>(i)),
                                             shared.representative(static_cast<int>(j))));
}
