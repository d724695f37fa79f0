#pragma once

#include <string>
#include <vector>

#include "minquot/braid.hpp"
#include "minquot/catalog.hpp"
#include "minquot/gf2.hpp"
#include "minquot/hom.hpp"
#include "minquot/report.hpp"

namespace minquot {

// Distinctness of the band-generator images under a valid homomorphism:
// passes when the image is cyclic or all C(n,2) images differ. For n = 4
// collisions are recorded as witnesses but do not fail the check (the
// collapse through three strands makes them unavoidable there).
template <GroupElementLike E>
CheckReport lemma_a_check(const BraidHom<E>& h) {
  if (!h.valid) throw InvalidHom("lemma_a_check requires a valid homomorphism");
  if (h.n < 3) throw RangeError("lemma_a_check requires n >= 3");
  CheckReport report;
  report.name = "lemma-a";
  report.param("n", std::to_string(h.n));
  const int n = h.n;
  std::vector<std::pair<std::string, E>> values;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      values.emplace_back(
          "rho(" + std::to_string(i) + "," + std::to_string(j) + ")",
          evaluate(h, bkl_word(i, j, n)));
  report.count("rho_words", static_cast<std::int64_t>(values.size()));
  if (h.cyclic_image) {
    report.count("collisions", 0);
    report.note("image is cyclic; distinctness not required");
    return report;
  }
  std::int64_t collisions = 0;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a].second == values[b].second) {
        ++collisions;
        const std::string witness = values[a].first + " = " +
                                    values[b].first + " = " +
                                    element_text(values[a].second);
        if (n == 4)
          report.note("collision (permitted for n=4): " + witness);
        else
          report.fail("collision: " + witness);
      }
  report.count("collisions", collisions);
  return report;
}

// Built-in catalogs. The small catalog holds the 8 isomorphism types of
// groups of order <= 6; the larger one backs the order-bound harness for
// five strands.
std::vector<CatalogEntry> builtin_small_catalog();
std::vector<CatalogEntry> builtin_theorem_catalog();

// Over all groups of order <= 6: the only non-cyclic quotient target of
// B3 and B4 is S3; the B3 homs onto it form a single conjugacy class of
// size 6, and the B4 homs a single class.
CheckReport base_case_check(int workers = 1);

// For n in {5, 6}: no catalog group of order < n! admits a non-cyclic
// homomorphism from B_n; groups admitting one have image of order n!,
// and when the target is the full symmetric group on n points every
// non-cyclic hom agrees with the standard projection up to automorphism.
CheckReport theorem_a_catalog_check(int n,
                                    const std::vector<CatalogEntry>& catalog,
                                    int workers = 1);

// Normal subgroups of S_n (n in {5, 6}), computed as normal closures of
// class representatives, are exactly {1, A_n, S_n}.
CheckReport sn_quotient_lattice_check(int n);

// Orbit facts for the mapping-class shadow: the transvection class in
// Sp(2g, F_2) is exactly {T_v : v != 0} of size 2^{2g}-1; the ordered
// pair (T_{e1}, T_{e2}) has orbit 2^{2g-1}(2^{2g}-1) and stabilizer of
// order |Sp(2g-2, F_2)|; and for 3 <= n <= 7 the centralizer of (1 2) in
// S_n is {1, (1 2)} times the pointwise stabilizer of {1, 2}.
CheckReport mcg_orbit_checks(int g, int workers = 1);
CheckReport mcg_orbit_checks(int g, const FiniteGroupTable<GF2Matrix>& sp,
                             int workers = 1);

}  // namespace minquot
