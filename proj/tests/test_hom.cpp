#include <doctest.h>

#include <set>

#include "minquot/checks.hpp"

#include "minquot/hom.hpp"
#include "minquot/targets.hpp"

using namespace minquot;

namespace {

Permutation cyc(const std::string& text, int degree) {
  return Permutation::from_cycles(text, degree);
}

// Cyclicity oracle: a finite group is cyclic iff some element has full
// order.
bool image_is_cyclic(const BraidHom<Permutation>& h) {
  const auto image = PermTable::closure(h.images);
  for (const auto& x : image.elements()) {
    std::uint64_t order = 1;
    auto power = x;
    while (!(power == image.identity())) {
      power = power * x;
      ++order;
    }
    if (order == image.order()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validity of generator assignments") {
  const auto pi4 = standard_projection(4);
  CHECK(pi4.valid);
  CHECK(pi4.surjective);
  CHECK_FALSE(pi4.cyclic_image);

  const auto s3 = symmetric_group(3);
  const auto bad =
      make_braid_hom(3, s3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  CHECK_FALSE(bad.valid);  // aba has order 3, bab has order 2

  CHECK_THROWS_AS(make_braid_hom(3, s3, {cyc("(1 2)", 3)}), RangeError);
  CHECK_THROWS_AS(
      make_braid_hom(3, symmetric_group(4), {cyc("(1 2)", 3), cyc("(2 3)", 3)}),
      NotInGroup);
}

TEST_CASE("evaluating words through a homomorphism") {
  const auto pi4 = standard_projection(4);
  CHECK(evaluate(pi4, bkl_word(1, 3, 4)) == cyc("(1 3)", 4));
  CHECK(evaluate(pi4, BraidWord(4, {})) == Permutation::identity_of(4));
  CHECK(evaluate(pi4, BraidWord(4, {1, -1, 2})) == cyc("(2 3)", 4));

  const auto s3 = symmetric_group(3);
  const auto invalid =
      make_braid_hom(3, s3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)});
  CHECK_THROWS_AS(evaluate(invalid, BraidWord(3, {1})), InvalidHom);
  CHECK_THROWS_AS(evaluate(pi4, BraidWord(5, {1})), DimensionMismatch);
}

TEST_CASE("raw enumeration for three strands into S3") {
  const auto s3 = symmetric_group(3);
  const auto raw = enumerate_homs_raw(3, s3);
  CHECK(raw.size() == 12);
  int cyclic = 0;
  for (const auto& h : raw) {
    CHECK(h.valid);
    if (h.cyclic_image) ++cyclic;
  }
  CHECK(cyclic == 6);
  // Non-cyclic homs are exactly the ordered pairs of distinct
  // transpositions.
  for (const auto& h : raw) {
    if (h.cyclic_image) continue;
    CHECK(h.images[0].to_cycle_string().size() == 5);  // "(a b)"
    CHECK(!(h.images[0] == h.images[1]));
    CHECK(h.surjective);
  }
}

TEST_CASE("cyclic-image flag agrees with the cyclicity oracle") {
  for (const auto& h : enumerate_homs_raw(3, symmetric_group(3)))
    CHECK(h.cyclic_image == image_is_cyclic(h));
  HomSearchOptions options;
  options.non_cyclic_only = true;
  for (const auto& h : enumerate_homs_raw(4, symmetric_group(4), options))
    CHECK_FALSE(image_is_cyclic(h));
}

TEST_CASE("raw count equals the sum of class sizes") {
  for (int n : {3, 4}) {
    for (const auto& table : {symmetric_group(3), symmetric_group(4)}) {
      const auto raw = enumerate_homs_raw(n, table);
      const auto classes = enumerate_homs_classes(n, table);
      std::uint64_t total = 0;
      for (const auto& cls : classes) total += cls.size;
      CHECK(total == raw.size());
    }
  }
}

TEST_CASE("hom counts into cyclic targets equal the target order") {
  for (int m : {1, 2, 3, 4, 6, 12}) {
    const auto zm = cyclic_group(m);
    for (int n = 2; n <= 6; ++n)
      CHECK(enumerate_homs_raw(n, zm).size() == static_cast<std::size_t>(m));
  }
}

TEST_CASE("no non-cyclic homs from five strands into S4") {
  HomSearchOptions options;
  options.non_cyclic_only = true;
  CHECK(enumerate_homs_classes(5, symmetric_group(4), options).empty());
  CHECK(enumerate_homs_raw(5, symmetric_group(4), options).empty());
}

TEST_CASE("enumeration bounds raise typed errors") {
  CHECK_THROWS_AS(enumerate_homs_raw(8, symmetric_group(3)), RangeError);
  CHECK_THROWS_AS(enumerate_homs_raw(1, symmetric_group(3)), RangeError);
  HomSearchOptions tight;
  tight.max_target_order = 10;
  CHECK_THROWS_AS(enumerate_homs_raw(3, symmetric_group(4), tight), RangeError);
}

TEST_CASE("canonicalization is conjugation invariant") {
  const auto s4 = symmetric_group(4);
  const auto pi4 = standard_projection(4, s4);
  const auto base = canonicalize(pi4);
  for (const auto& g : {cyc("(1 3)", 4), cyc("(1 2 3 4)", 4), cyc("(2 4)", 4)}) {
    std::vector<Permutation> conj_images;
    for (const auto& x : pi4.images) conj_images.push_back(conjugate(x, g));
    const auto moved = canonicalize(make_braid_hom(4, s4, conj_images));
    CHECK(moved.representative.images == base.representative.images);
    CHECK(moved.size == base.size);
  }
  const auto pi3 = standard_projection(3);
  CHECK(canonicalize(pi3).size == 6);
}

TEST_CASE("worker count does not change enumeration output") {
  const auto s4 = symmetric_group(4);
  HomSearchOptions w1, w3;
  w1.workers = 1;
  w3.workers = 3;
  const auto a = enumerate_homs_classes(4, s4, w1);
  const auto b = enumerate_homs_classes(4, s4, w3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].representative.images == b[i].representative.images);
    CHECK(a[i].size == b[i].size);
  }
}

TEST_CASE("standard projection images and range") {
  for (int n = 2; n <= 7; ++n) {
    const auto pi = standard_projection(n);
    CHECK(pi.valid);
    CHECK(pi.surjective);
    for (int i = 1; i < n; ++i)
      CHECK(pi.images[i - 1] ==
            cyc("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n));
  }
  CHECK_THROWS_AS(standard_projection(8), RangeError);
}

TEST_CASE("exceptional maps out of B4 validate with the right images") {
  const auto s4 = symmetric_group(4);
  const std::uint64_t expected_orders[] = {24, 24, 12, 6};
  for (int k = 1; k <= 4; ++k) {
    const auto f = exceptional_b4_map(k, s4);
    CHECK(f.valid);
    CHECK(f.image_order == expected_orders[k - 1]);
    CHECK_FALSE(f.cyclic_image);
  }
  CHECK_THROWS_AS(exceptional_b4_map(5), RangeError);

  // The fourth map factors through the collapse to three strands.
  const auto f4 = exceptional_b4_map(4, s4);
  const auto collapse = b4_collapse_to_s3();
  CHECK(collapse.valid);
  for (int i = 0; i < 3; ++i) {
    CHECK(f4.images[i].apply(4) == 4);
    for (int p = 1; p <= 3; ++p)
      CHECK(f4.images[i].apply(p) == collapse.images[i].apply(p));
  }
}

TEST_CASE("the outer automorphism of S6 verifies and is not inner") {
  const auto s6 = symmetric_group(6);
  const auto outer = s6_outer_automorphism(s6);
  CHECK(outer.apply(cyc("(1 2)", 6)) == cyc("(1 2)(3 4)(5 6)", 6));
  CHECK(outer.apply(cyc("(1 2 3 4 5 6)", 6)) == cyc("(1 2 3)(4 5)", 6));
  CHECK_FALSE(is_inner(outer));

  // Conjugation maps are inner by construction.
  const auto g = cyc("(1 4 2)", 6);
  std::vector<Permutation> gens{cyc("(1 2)", 6), cyc("(1 2 3 4 5 6)", 6)};
  std::vector<Permutation> conj_images;
  for (const auto& x : gens) conj_images.push_back(conjugate(x, g));
  CHECK(is_inner(automorphism_from_generator_images(s6, gens, conj_images)));
}

TEST_CASE("generator assignments that break relations are rejected") {
  const auto s3 = symmetric_group(3);
  // (1 2 3) -> (1 2) breaks the cube relation.
  CHECK_THROWS_AS(
      automorphism_from_generator_images(
          s3, {cyc("(1 2)", 3), cyc("(1 2 3)", 3)},
          {cyc("(1 2)", 3), cyc("(1 2)", 3)}),
      Error);
  const auto s4 = symmetric_group(4);
  CHECK_THROWS_AS(automorphism_from_generator_images(s4, {cyc("(1 2)", 4)},
                                                     {cyc("(1 2)", 4)}),
                  Error);
}

TEST_CASE("postcomposition with automorphisms preserves validity") {
  const auto s6 = symmetric_group(6);
  const auto pi6 = standard_projection(6, s6);
  const auto outer = s6_outer_automorphism(s6);
  const auto twisted = postcompose(pi6, outer);
  CHECK(twisted.valid);
  CHECK(twisted.surjective);
  // Images become triple transpositions, so the classes differ...
  CHECK(!(canonicalize(twisted).representative.images ==
          canonicalize(pi6).representative.images));
  // ...but the maps agree up to an automorphism of the target.
  CHECK(equal_up_to_aut(pi6, twisted));
  CHECK(equal_up_to_aut(twisted, pi6));
  CHECK(equal_up_to_aut(pi6, pi6));
}

TEST_CASE("equal_up_to_aut separates genuinely different maps") {
  const auto s4 = symmetric_group(4);
  const auto pi4 = standard_projection(4, s4);
  CHECK_FALSE(equal_up_to_aut(pi4, exceptional_b4_map(1, s4)));
  CHECK_FALSE(equal_up_to_aut(pi4, exceptional_b4_map(3, s4)));
  CHECK_THROWS_AS(equal_up_to_aut(pi4, standard_projection(5)),
                  DimensionMismatch);
}

namespace {

// Brute-force oracle: check every assignment of generator images.
std::vector<std::vector<Permutation>> all_valid_tuples(
    int n, const PermTable& group) {
  std::vector<std::vector<Permutation>> out;
  std::vector<std::size_t> pick(n - 1, 0);
  while (true) {
    std::vector<Permutation> images;
    for (auto i : pick) images.push_back(group.at(i));
    if (braid_relations_hold(images)) out.push_back(images);
    int pos = n - 2;
    while (pos >= 0 && ++pick[pos] == group.order()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("backtracking search agrees with exhaustive assignment checking") {
  struct Case {
    int n;
    PermTablePtr table;
  };
  const std::vector<Case> cases{
      {3, symmetric_group(3)}, {4, symmetric_group(3)},
      {3, symmetric_group(4)}, {4, klein_four_group()},
      {3, cyclic_group(6)}};
  for (const auto& c : cases) {
    const auto brute = all_valid_tuples(c.n, *c.table);
    const auto fast = enumerate_homs_raw(c.n, c.table);
    REQUIRE(fast.size() == brute.size());
    std::set<std::vector<std::string>> brute_keys, fast_keys;
    for (const auto& images : brute)
      brute_keys.insert(detail::tuple_key(images));
    for (const auto& h : fast) fast_keys.insert(detail::tuple_key(h.images));
    CHECK(brute_keys == fast_keys);
  }
}

TEST_CASE("all images of a valid hom share one conjugacy class") {
  for (const auto& h : enumerate_homs_raw(4, symmetric_group(4))) {
    const auto cls = conjugacy_class(*h.target, h.images[0]);
    for (const auto& x : h.images)
      CHECK(std::binary_search(
          cls.begin(), cls.end(), x,
          [](const Permutation& a, const Permutation& b) {
            return a.key() < b.key();
          }));
  }
}

TEST_CASE("elements satisfying both braid and commutation relations coincide") {
  const auto s4 = symmetric_group(4);
  for (const auto& x : s4->elements())
    for (const auto& y : s4->elements()) {
      const bool braid = x * y * x == y * x * y;
      const bool comm = x * y == y * x;
      if (braid && comm) CHECK(x == y);
    }
}

TEST_CASE("hom classification into Sp(4,F2) mirrors S6") {
  // Sp(4,F2) and S6 are isomorphic, so the class counts must agree.
  const auto sp4 = std::make_shared<const FiniteGroupTable<GF2Matrix>>(sp_group(2));
  HomSearchOptions options;
  options.non_cyclic_only = true;
  const auto mat_classes = enumerate_homs_classes(6, sp4, options);
  const auto perm_classes = enumerate_homs_classes(6, symmetric_group(6), options);
  REQUIRE(mat_classes.size() == perm_classes.size());
  std::multiset<std::uint64_t> mat_sizes, perm_sizes;
  for (const auto& c : mat_classes) mat_sizes.insert(c.size);
  for (const auto& c : perm_classes) perm_sizes.insert(c.size);
  CHECK(mat_sizes == perm_sizes);
  for (const auto& c : mat_classes) {
    CHECK(c.representative.surjective);
    const auto report = lemma_a_check(c.representative);
    CHECK(report.pass);
    CHECK(report.witnesses.empty());
  }
}

TEST_CASE("two strands impose no relations") {
  const auto s3 = symmetric_group(3);
  CHECK(enumerate_homs_raw(2, s3).size() == 6);
  // One class per conjugacy class of the target.
  CHECK(enumerate_homs_classes(2, s3).size() == 3);
}
