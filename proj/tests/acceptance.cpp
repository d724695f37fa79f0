// Acceptance suite: runs the headline classification and counting facts
// end to end and prints one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "minquot/catalog.hpp"
#include "minquot/checks.hpp"
#include "minquot/targets.hpp"

using namespace minquot;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void criterion(int number, const std::string& label, bool ok,
               double elapsed = -1.0) {
  if (elapsed >= 0.0)
    std::printf("criterion %2d %-52s %s (%.1fs)\n", number, label.c_str(),
                ok ? "PASS" : "FAIL", elapsed);
  else
    std::printf("criterion %2d %-52s %s\n", number, label.c_str(),
                ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::int64_t count_of(const CheckReport& report, const std::string& key) {
  for (const auto& [k, v] : report.counts)
    if (k == key) return v;
  return -1;
}

Permutation cyc(const std::string& text, int degree) {
  return Permutation::from_cycles(text, degree);
}

}  // namespace

int main() {
  const auto t_start = std::chrono::steady_clock::now();
  HomSearchOptions non_cyclic;
  non_cyclic.non_cyclic_only = true;

  const auto s3 = symmetric_group(3);
  const auto s4 = symmetric_group(4);
  const auto s5 = symmetric_group(5);
  const auto s6 = symmetric_group(6);

  // 1. Non-cyclic homs B_n -> S_n up to conjugation: one class for
  //    n = 3, 5 and two for n = 6, the extra one being the outer twist.
  std::vector<HomClass<Permutation>> classes3, classes5, classes6;
  {
    const auto t0 = std::chrono::steady_clock::now();
    classes3 = enumerate_homs_classes(3, s3, non_cyclic);
    classes5 = enumerate_homs_classes(5, s5, non_cyclic);
    classes6 = enumerate_homs_classes(6, s6, non_cyclic);
    const double elapsed = seconds_since(t0);
    bool ok = classes3.size() == 1 && classes5.size() == 1 &&
              classes6.size() == 2 && elapsed <= 300.0;
    if (ok) {
      ok = equal_up_to_aut(classes3[0].representative, standard_projection(3, s3)) &&
           equal_up_to_aut(classes5[0].representative, standard_projection(5, s5)) &&
           equal_up_to_aut(classes6[0].representative,
                           classes6[1].representative) &&
           equal_up_to_aut(classes6[0].representative,
                           standard_projection(6, s6));
    }
    criterion(1, "B_n -> S_n classes: 1, 1, 2 (n = 3, 5, 6)", ok, elapsed);
  }

  // 2. Complete non-cyclic classification of B4 -> S4: the standard
  //    projection plus the four exceptional maps, with image orders
  //    24, 24, 12, 6 for the latter.
  {
    const auto found = enumerate_homs_classes(4, s4, non_cyclic);
    std::set<std::vector<std::string>> found_keys;
    for (const auto& cls : found)
      found_keys.insert(detail::tuple_key(cls.representative.images));
    std::set<std::vector<std::string>> expected_keys;
    std::vector<BraidHom<Permutation>> named{standard_projection(4, s4)};
    for (int k = 1; k <= 4; ++k) named.push_back(exceptional_b4_map(k, s4));
    bool ok = found.size() == 5;
    for (const auto& h : named) {
      ok = ok && h.valid;
      expected_keys.insert(
          detail::tuple_key(canonicalize(h).representative.images));
    }
    ok = ok && found_keys == expected_keys;
    ok = ok && exceptional_b4_map(3, s4).image_order == 12 &&
         exceptional_b4_map(4, s4).image_order == 6;
    criterion(2, "B4 -> S4 classification is {pi, f1, f2, f3, f4}", ok);
  }

  // 3. Band-generator images: pairwise distinct for every class found in
  //    criterion 1; the collapse map exhibits a collision on 4 strands.
  {
    bool ok = true;
    const auto expect_distinct = [&](const HomClass<Permutation>& cls,
                                     std::int64_t words) {
      const auto report = lemma_a_check(cls.representative);
      ok = ok && report.pass && count_of(report, "rho_words") == words &&
           count_of(report, "collisions") == 0;
    };
    for (const auto& cls : classes3) expect_distinct(cls, 3);
    for (const auto& cls : classes5) expect_distinct(cls, 10);
    for (const auto& cls : classes6) expect_distinct(cls, 15);
    const auto f4_report = lemma_a_check(exceptional_b4_map(4, s4));
    ok = ok && f4_report.pass && count_of(f4_report, "collisions") > 0;
    criterion(3, "rho-images distinct (10 / 15); f4 collides on B4", ok);
  }

  // 4. Base cases: over all groups of order <= 6, only S3 receives
  //    non-cyclic homs from B3 and B4; the B3 homs form one class of 6.
  {
    const auto report = base_case_check();
    const bool ok = report.pass && count_of(report, "B3->S3 raw") == 6 &&
                    count_of(report, "B3->S3 classes") == 1 &&
                    count_of(report, "B4->S3 classes") == 1;
    criterion(4, "order <= 6 base cases: S3 is the only target", ok);
  }

  // 5. Order-bound harness for B5 over the built-in catalog: no
  //    non-cyclic homs into any group of order < 120.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = theorem_a_catalog_check(5, builtin_theorem_catalog());
    const double elapsed = seconds_since(t0);
    bool ok = report.pass && elapsed <= 60.0;
    for (const auto& entry : builtin_theorem_catalog()) {
      const auto order = count_of(report, entry.name + " order");
      const auto classes = count_of(report, entry.name + " non-cyclic classes");
      if (order < 120 && classes != 0) ok = false;
    }
    ok = ok && count_of(report, "S5 non-cyclic classes") == 1;
    criterion(5, "B5 catalog harness: nothing below order 120", ok, elapsed);
  }

  // 6. Symplectic group orders by BFS, against the product formula, and
  //    the induction identity |Sp(2g)| = 2^{2g-1}(2^{2g}-1) |Sp(2g-2)|.
  const auto t_sp = std::chrono::steady_clock::now();
  const auto sp1 = std::make_shared<const MatTable>(sp_group(1));
  const auto sp2 = std::make_shared<const MatTable>(sp_group(2));
  const auto sp3 = std::make_shared<const MatTable>(sp_group(3));
  const double sp_elapsed = seconds_since(t_sp);
  {
    bool ok = sp1->order() == 6 && sp2->order() == 720 &&
              sp3->order() == 1451520 && sp_elapsed <= 180.0;
    ok = ok && sp1->order() == sp_order_formula(1) &&
         sp2->order() == sp_order_formula(2) &&
         sp3->order() == sp_order_formula(3);
    ok = ok && sp2->order() == 120 * sp1->order() &&
         sp3->order() == 2016 * sp2->order();
    criterion(6, "Sp(2g,F2) orders 6, 720, 1451520 and induction", ok,
              sp_elapsed);
  }

  // 7. Transvection classes are {T_v : v != 0} of sizes 3, 15, 63;
  //    ordered pair orbits 6, 120, 2016 with stabilizers 1, 6, 720.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    const std::vector<std::shared_ptr<const MatTable>> sps{sp1, sp2, sp3};
    const std::int64_t class_sizes[] = {3, 15, 63};
    const std::int64_t orbits[] = {6, 120, 2016};
    const std::int64_t stabs[] = {1, 6, 720};
    for (int g = 1; g <= 3; ++g) {
      const auto report = mcg_orbit_checks(g, *sps[g - 1]);
      ok = ok && report.pass;
      ok = ok && count_of(report, "transvection_class") == class_sizes[g - 1];
      ok = ok && count_of(report, "pair_orbit") == orbits[g - 1];
      ok = ok && count_of(report, "pair_stabilizer") == stabs[g - 1];
    }
    criterion(7, "transvection classes 3/15/63; pairs 6/120/2016", ok,
              seconds_since(t0));
  }

  // 8. Refinement actions realize Sp(2,F2) = S3 and Sp(4,F2) = S6.
  {
    bool ok = true;
    try {
      const auto iso1 = iso_to_symmetric(1, *sp1);
      const auto iso2 = iso_to_symmetric(2, *sp2);
      ok = iso1.forms.size() == 3 && iso2.forms.size() == 6;
    } catch (const Error&) {
      ok = false;
    }
    criterion(8, "refinement actions: Sp(2)=S3, Sp(4)=S6, faithful", ok);
  }

  // 9. Simplicity and quotient lattices: Sp(6,F2), A5, A6 are simple;
  //    the normal subgroups of S5 and S6 are exactly {1, A_n, S_n}.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = is_simple(*sp3, 2);
    const double sp6_elapsed = seconds_since(t0);
    ok = ok && sp6_elapsed <= 900.0;
    ok = ok && is_simple(*alternating_group(5)) &&
         is_simple(*alternating_group(6));
    ok = ok && sn_quotient_lattice_check(5).pass &&
         sn_quotient_lattice_check(6).pass;
    criterion(9, "Sp(6,F2), A5, A6 simple; S_n lattice {1, A, S}", ok,
              seconds_since(t0));
  }

  // 10. The outer automorphism of S6 validates and is not inner.
  {
    bool ok = true;
    try {
      const auto outer = s6_outer_automorphism(s6);
      ok = !is_inner(outer);
      ok = ok && outer.apply(cyc("(1 2)", 6)) == cyc("(1 2)(3 4)(5 6)", 6);
    } catch (const Error&) {
      ok = false;
    }
    criterion(10, "S6 outer automorphism: valid, not inner", ok);
  }

  // 11. Relation suite for n <= 6 and hom counts into cyclic groups.
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 3; n <= 6; ++n) ok = ok && relation_suite(n).pass();
    for (int m = 1; m <= 12 && ok; ++m) {
      const auto zm = cyclic_group(m);
      for (int n = 2; n <= 6; ++n)
        ok = ok &&
             enumerate_homs_raw(n, zm).size() == static_cast<std::size_t>(m);
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed <= 120.0;
    criterion(11, "relation suite n <= 6; #Hom(B_n, Z_m) = m", ok, elapsed);
  }

  // 12. Reports are byte-identical across repeated runs and worker
  //     counts.
  {
    bool ok = true;
    const auto render_base = [&](int workers) {
      return emit_report(base_case_check(workers), ReportFormat::json);
    };
    ok = ok && render_base(1) == render_base(1);
    ok = ok && render_base(1) == render_base(3);

    const auto render_classify = [&](int workers) {
      HomSearchOptions options = non_cyclic;
      options.workers = workers;
      return emit_report(
          classification_report(5, "S5",
                                enumerate_homs_classes(5, s5, options), true),
          ReportFormat::tsv);
    };
    ok = ok && render_classify(1) == render_classify(4);

    const auto render_orbits = [&](int workers) {
      return emit_report(mcg_orbit_checks(2, *sp2, workers),
                         ReportFormat::json);
    };
    ok = ok && render_orbits(1) == render_orbits(2) &&
         render_orbits(2) == render_orbits(2);
    criterion(12, "byte-identical reports across runs and workers", ok);
  }

  std::printf("%s (%d criterion(s) failed, total %.1fs)\n",
              failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
              failures, seconds_since(t_start));
  return failures == 0 ? 0 : 1;
}
