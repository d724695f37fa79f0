#include <doctest.h>

#include <algorithm>
#include <set>

#include "minquot/gf2.hpp"
#include "minquot/group_table.hpp"
#include "minquot/hom.hpp"
#include "minquot/permutation.hpp"

using namespace minquot;

namespace {

Permutation cyc(const std::string& text, int degree) {
  return Permutation::from_cycles(text, degree);
}

// Definition-level conjugacy class: conjugate by every group element.
std::set<std::string> brute_force_class(const PermTable& group,
                                        const Permutation& x) {
  std::set<std::string> keys;
  for (const auto& g : group.elements())
    keys.insert((g * x * g.inverse()).key());
  return keys;
}

}  // namespace

TEST_CASE("closure enumerates the generated subgroup") {
  CHECK(PermTable::closure({cyc("(1 2)", 3), cyc("(2 3)", 3)}).order() == 6);
  CHECK(PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)}).order() ==
        120);
  CHECK(PermTable::closure({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)})
            .order() == 4);
  CHECK(PermTable::closure({Permutation::identity_of(3)}).order() == 1);
}

TEST_CASE("closure order is deterministic and generator-order independent") {
  const auto a = cyc("(1 2)", 5), b = cyc("(1 2 3 4 5)", 5);
  const auto t1 = PermTable::closure({a, b});
  const auto t2 = PermTable::closure({b, a, b});
  REQUIRE(t1.order() == t2.order());
  for (std::size_t i = 0; i < t1.order(); ++i)
    CHECK(t1.at(i) == t2.at(i));
  CHECK(t1.identity() == Permutation::identity_of(5));
}

TEST_CASE("closure is idempotent") {
  const auto table = PermTable::closure({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  const auto again = PermTable::closure(table.elements());
  CHECK(again.order() == table.order());
  for (const auto& x : table.elements()) CHECK(again.contains(x));
}

TEST_CASE("closure enforces the element ceiling") {
  ClosureOptions options;
  options.max_elements = 10;
  CHECK_THROWS_WITH_AS(
      PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)}, options),
      "closure exceeded element ceiling of 10", CeilingExceeded);
}

TEST_CASE("tables are closed under product and inverse") {
  CHECK(PermTable::closure({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)})
            .verify_closed());
}

TEST_CASE("conjugacy classes match the brute-force definition") {
  const auto s4 = PermTable::closure({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  for (const auto& x :
       {cyc("(1 2)", 4), cyc("(1 2)(3 4)", 4), cyc("(1 2 3)", 4),
        Permutation::identity_of(4)}) {
    const auto bfs = conjugacy_class(s4, x);
    std::set<std::string> keys;
    for (const auto& e : bfs) keys.insert(e.key());
    CHECK(keys == brute_force_class(s4, x));
    CHECK(std::is_sorted(bfs.begin(), bfs.end(),
                         [](const Permutation& a, const Permutation& b) {
                           return a.key() < b.key();
                         }));
  }
  CHECK(conjugacy_class(s4, cyc("(1 2)", 4)).size() == 6);
  CHECK(conjugacy_class(s4, cyc("(1 2)(3 4)", 4)).size() == 3);
  CHECK(conjugacy_class(s4, Permutation::identity_of(4)).size() == 1);
  CHECK_THROWS_AS(conjugacy_class(s4, cyc("(1 2)", 5)), NotInGroup);
}

TEST_CASE("orbit times stabilizer equals the group order, element by element") {
  for (const auto& table :
       {PermTable::closure({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)}),
        PermTable::closure({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)})}) {
    for (const auto& x : table.elements()) {
      const auto counts = orbit_stabilizer(table, x);
      CHECK(counts.orbit * counts.stabilizer == table.order());
    }
  }
}

TEST_CASE("centralizer orders") {
  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  CHECK(centralizer(s5, cyc("(1 2)", 5)).order() == 12);  // 2 * 3!
  const auto s4 = PermTable::closure({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  CHECK(centralizer(s4, Permutation::identity_of(4)).order() == 24);
  CHECK_THROWS_AS(centralizer(s4, cyc("(1 5)", 5)), NotInGroup);

  const auto sp4 = sp_group(2);
  const auto t = transvection(GF2Vector::basis(4, 0));
  CHECK(centralizer(sp4, t).order() == 48);  // 720 / class size 15
}

TEST_CASE("centralizer content is worker-count independent") {
  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  const auto c1 = centralizer(s5, cyc("(1 2)(3 4)", 5), 1);
  const auto c3 = centralizer(s5, cyc("(1 2)(3 4)", 5), 3);
  REQUIRE(c1.order() == c3.order());
  for (std::size_t i = 0; i < c1.order(); ++i) CHECK(c1.at(i) == c3.at(i));
}

TEST_CASE("normal closures in S5") {
  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  CHECK(normal_closure(s5, {cyc("(1 2)", 5)}).order() == 120);
  CHECK(normal_closure(s5, {cyc("(1 2 3)", 5)}).order() == 60);
  CHECK(normal_closure(s5, {Permutation::identity_of(5)}).order() == 1);
  CHECK_THROWS_AS(normal_closure(s5, {cyc("(1 2)", 4)}), NotInGroup);
}

TEST_CASE("normal closures are normal and satisfy Lagrange") {
  const auto a4 = PermTable::closure({cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  const auto v = normal_closure(a4, {cyc("(1 2)(3 4)", 4)});
  CHECK(v.order() == 4);
  CHECK(a4.order() % v.order() == 0);
  for (const auto& x : v.elements())
    for (const auto& g : a4.generators()) CHECK(v.contains(conjugate(x, g)));
}

TEST_CASE("normal_closure_order matches normal_closure") {
  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  CHECK(normal_closure_order(s5, {cyc("(1 2 3)", 5)}) == 60);
  CHECK(normal_closure_order(s5, {cyc("(1 2)", 5)}) == 120);
}

TEST_CASE("simplicity checks") {
  const auto a5 = PermTable::closure({cyc("(1 2 3)", 5), cyc("(3 4 5)", 5)});
  REQUIRE(a5.order() == 60);
  CHECK(is_simple(a5));

  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  const auto result = simplicity_check(s5);
  CHECK_FALSE(result.simple);
  CHECK(result.witness_order == 60);
  CHECK(s5.order() % result.witness_order == 0);

  const auto trivial = PermTable::closure({Permutation::identity_of(2)});
  CHECK_THROWS_AS(is_simple(trivial), RangeError);
}

TEST_CASE("simplicity sweep is worker-count independent") {
  const auto s5 = PermTable::closure({cyc("(1 2)", 5), cyc("(1 2 3 4 5)", 5)});
  const auto r1 = simplicity_check(s5, 1);
  const auto r4 = simplicity_check(s5, 4);
  CHECK(r1.simple == r4.simple);
  CHECK(r1.witness_order == r4.witness_order);
  CHECK(r1.witness_index == r4.witness_index);
}

TEST_CASE("conjugation orbit and centralizer counts for key examples") {
  const auto s6 = PermTable::closure({cyc("(1 2)", 6), cyc("(1 2 3 4 5 6)", 6)});
  const auto counts = orbit_stabilizer(s6, cyc("(1 2)", 6));
  CHECK(counts.orbit == 15);
  CHECK(counts.stabilizer == 48);
  CHECK(counts.orbit * counts.stabilizer == 720);

  const auto sp4 = sp_group(2);
  const auto t1 = transvection(GF2Vector::basis(4, 0));
  const auto t2 = transvection(GF2Vector::basis(4, 1));
  const auto single = orbit_stabilizer(sp4, t1);
  CHECK(single.orbit == 15);
  CHECK(single.stabilizer == 48);
  const auto pair = orbit_stabilizer_pair(sp4, t1, t2);
  CHECK(pair.orbit == 120);
  CHECK(pair.stabilizer == 6);
  CHECK_THROWS_AS(orbit_stabilizer_pair(sp4, t1, GF2Matrix::identity_of(6)),
                  NotInGroup);
}

TEST_CASE("class representatives cover the group exactly once") {
  const auto s4 = PermTable::closure({cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  const auto reps = conjugacy_class_representatives(s4);
  CHECK(reps.size() == 5);
  CHECK(reps.front() == Permutation::identity_of(4));
  std::size_t total = 0;
  for (const auto& rep : reps) total += conjugacy_class(s4, rep).size();
  CHECK(total == s4.order());
}
