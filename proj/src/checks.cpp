#include "minquot/checks.hpp"

#include <algorithm>

namespace minquot {

namespace {

CatalogEntry cyclic_entry(int m) {
  CatalogEntry entry;
  entry.name = "Z" + std::to_string(m);
  entry.degree = m;
  if (m == 1) {
    entry.generators.push_back(Permutation::identity_of(1));
  } else {
    std::vector<int> images;
    for (int i = 2; i <= m; ++i) images.push_back(i);
    images.push_back(1);
    entry.generators.push_back(Permutation::from_images(images));
  }
  return entry;
}

CatalogEntry symmetric_entry(int n) {
  CatalogEntry entry;
  entry.name = "S" + std::to_string(n);
  entry.degree = n;
  for (int i = 1; i < n; ++i)
    entry.generators.push_back(Permutation::from_cycles(
        "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")", n));
  return entry;
}

CatalogEntry alternating_entry(int n) {
  CatalogEntry entry;
  entry.name = "A" + std::to_string(n);
  entry.degree = n;
  for (int i = 1; i + 2 <= n; ++i)
    entry.generators.push_back(Permutation::from_cycles(
        "(" + std::to_string(i) + " " + std::to_string(i + 1) + " " +
            std::to_string(i + 2) + ")",
        n));
  return entry;
}

CatalogEntry klein_entry() {
  return {"klein4", 4,
          {Permutation::from_cycles("(1 2)(3 4)", 4),
           Permutation::from_cycles("(1 3)(2 4)", 4)}};
}

}  // namespace

std::vector<CatalogEntry> builtin_small_catalog() {
  std::vector<CatalogEntry> out;
  for (int m = 1; m <= 6; ++m) out.push_back(cyclic_entry(m));
  out.push_back(klein_entry());
  out.push_back(symmetric_entry(3));
  return out;
}

std::vector<CatalogEntry> builtin_theorem_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= 5; ++n) out.push_back(symmetric_entry(n));
  out.push_back(alternating_entry(4));
  out.push_back(alternating_entry(5));
  for (int m = 1; m <= 12; ++m) out.push_back(cyclic_entry(m));
  out.push_back(klein_entry());
  out.push_back({"D4", 4,
                 {Permutation::from_cycles("(1 2 3 4)", 4),
                  Permutation::from_cycles("(1 3)", 4)}});
  out.push_back({"Q8", 8,
                 {Permutation::from_cycles("(1 2 3 4)(5 6 7 8)", 8),
                  Permutation::from_cycles("(1 5 3 7)(2 8 4 6)", 8)}});
  return out;
}

CheckReport base_case_check(int workers) {
  CheckReport report;
  report.name = "base-cases";
  HomSearchOptions options;
  options.non_cyclic_only = true;
  options.workers = workers;

  for (int n : {3, 4}) {
    for (const auto& entry : builtin_small_catalog()) {
      const auto table = catalog_table(entry);
      const auto raw = enumerate_homs_raw(n, table, options);
      const auto classes = enumerate_homs_classes(n, table, options);
      const std::string tag =
          "B" + std::to_string(n) + "->" + entry.name;
      report.count(tag + " raw", static_cast<std::int64_t>(raw.size()));
      report.count(tag + " classes", static_cast<std::int64_t>(classes.size()));
      if (entry.name == "S3") {
        if (classes.size() != 1)
          report.fail(tag + ": expected one non-cyclic class, found " +
                      std::to_string(classes.size()));
        if (n == 3 && raw.size() != 6)
          report.fail(tag + ": expected 6 raw non-cyclic homs, found " +
                      std::to_string(raw.size()));
        for (const auto& h : raw)
          if (!h.surjective)
            report.fail(tag + ": non-cyclic hom with image order " +
                        std::to_string(h.image_order) + " is not onto S3");
      } else if (!raw.empty()) {
        report.fail(tag + ": unexpected non-cyclic homomorphism into " +
                    entry.name);
      }
    }
  }
  return report;
}

CheckReport theorem_a_catalog_check(int n,
                                    const std::vector<CatalogEntry>& catalog,
                                    int workers) {
  if (n < 5 || n > 6)
    throw RangeError("theorem_a_catalog_check supports n in {5, 6}");
  CheckReport report;
  report.name = "theorem-a-catalog";
  report.param("n", std::to_string(n));
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;

  HomSearchOptions options;
  options.non_cyclic_only = true;
  options.workers = workers;

  for (const auto& entry : catalog) {
    const auto table = catalog_table(entry);
    if (table->order() > factorial)
      throw RangeError("catalog entry '" + entry.name + "' has order " +
                       std::to_string(table->order()) + " > n! = " +
                       std::to_string(factorial));
    const auto classes = enumerate_homs_classes(n, table, options);
    report.count(entry.name + " order",
                 static_cast<std::int64_t>(table->order()));
    report.count(entry.name + " non-cyclic classes",
                 static_cast<std::int64_t>(classes.size()));
    if (classes.empty()) continue;
    if (table->order() < factorial) {
      report.fail("counterexample: non-cyclic hom B" + std::to_string(n) +
                  " -> " + entry.name + " of order " +
                  std::to_string(table->order()) + " < " +
                  std::to_string(factorial));
      continue;
    }
    const bool standard_sn = entry.degree == n && table->order() == factorial;
    for (const auto& cls : classes) {
      if (cls.representative.image_order != factorial)
        report.fail(entry.name + ": non-cyclic class with image order " +
                    std::to_string(cls.representative.image_order) +
                    " != " + std::to_string(factorial));
      if (standard_sn &&
          !equal_up_to_aut(cls.representative, standard_projection(n, table)))
        report.fail(entry.name +
                    ": class not related to the standard projection by an "
                    "automorphism");
    }
  }
  return report;
}

CheckReport sn_quotient_lattice_check(int n) {
  if (n < 5 || n > 6)
    throw RangeError("sn_quotient_lattice_check supports n in {5, 6}");
  CheckReport report;
  report.name = "sn-quotient-lattice";
  report.param("n", std::to_string(n));
  const auto sn = symmetric_group(n);
  const auto an = alternating_group(n);
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;

  std::vector<std::uint64_t> orders_found;
  bool an_matches = true;
  for (const auto& rep : conjugacy_class_representatives(*sn)) {
    const auto closure = normal_closure(*sn, {rep});
    orders_found.push_back(closure.order());
    if (closure.order() == factorial / 2) {
      // Must be the alternating group, element for element.
      for (const auto& x : closure.elements())
        if (!an->contains(x)) an_matches = false;
    }
  }
  std::sort(orders_found.begin(), orders_found.end());
  orders_found.erase(std::unique(orders_found.begin(), orders_found.end()),
                     orders_found.end());
  report.count("normal_subgroups",
               static_cast<std::int64_t>(orders_found.size()));
  for (auto o : orders_found)
    report.count("order " + std::to_string(o), static_cast<std::int64_t>(o));
  const std::vector<std::uint64_t> expected{1, factorial / 2, factorial};
  if (orders_found != expected)
    report.fail("normal subgroup orders differ from {1, n!/2, n!}");
  if (!an_matches)
    report.fail("index-2 normal subgroup is not the alternating group");
  return report;
}

CheckReport mcg_orbit_checks(int g, const FiniteGroupTable<GF2Matrix>& sp,
                             int workers) {
  if (g < 1 || g > 3) throw RangeError("mcg_orbit_checks supports 1 <= g <= 3");
  CheckReport report;
  report.name = "mcg-orbit-checks";
  report.param("g", std::to_string(g));
  const int dim = 2 * g;

  // Transvection class equals {T_v : v != 0}.
  const auto t1 = transvection(GF2Vector::basis(dim, 0));
  const auto cls = conjugacy_class(sp, t1);
  const std::uint64_t expected_class = (1ull << dim) - 1;
  report.count("transvection_class", static_cast<std::int64_t>(cls.size()));
  if (cls.size() != expected_class)
    report.fail("transvection class has size " + std::to_string(cls.size()) +
                ", expected " + std::to_string(expected_class));
  for (const auto& m : cls) {
    GF2Vector v;
    if (!transvection_vector(m, &v)) {
      report.fail("class element is not a transvection: " + element_text(m));
      break;
    }
  }

  // Ordered pair orbit and stabilizer.
  const auto t2 = transvection(GF2Vector::basis(dim, 1));
  const auto pair_counts = orbit_stabilizer_pair(sp, t1, t2, workers);
  report.count("pair_orbit", static_cast<std::int64_t>(pair_counts.orbit));
  report.count("pair_stabilizer",
               static_cast<std::int64_t>(pair_counts.stabilizer));
  const std::uint64_t expected_orbit =
      (1ull << (dim - 1)) * ((1ull << dim) - 1);
  if (pair_counts.orbit != expected_orbit)
    report.fail("pair orbit is " + std::to_string(pair_counts.orbit) +
                ", expected " + std::to_string(expected_orbit));
  if (pair_counts.stabilizer != sp_order_formula(g - 1))
    report.fail("pair stabilizer is " +
                std::to_string(pair_counts.stabilizer) + ", expected " +
                std::to_string(sp_order_formula(g - 1)));

  // Symmetric-group analogue: centralizer of a transposition.
  for (int n = 3; n <= 7; ++n) {
    const auto sn = symmetric_group(n);
    const auto t = Permutation::from_cycles("(1 2)", n);
    const auto cent = centralizer(*sn, t, workers);
    std::uint64_t expected_cent = 2;
    for (int i = 2; i <= n - 2; ++i) expected_cent *= i;
    report.count("S" + std::to_string(n) + " centralizer",
                 static_cast<std::int64_t>(cent.order()));
    if (cent.order() != expected_cent) {
      report.fail("centralizer of (1 2) in S" + std::to_string(n) + " has order " +
                  std::to_string(cent.order()) + ", expected " +
                  std::to_string(expected_cent));
      continue;
    }
    // Set structure {1, (1 2)} x (pointwise stabilizer of {1, 2}).
    std::vector<Permutation> product_set;
    for (std::size_t i = 0; i < sn->order(); ++i) {
      const Permutation& p = sn->at(i);
      if (p.apply(1) == 1 && p.apply(2) == 2) {
        product_set.push_back(p);
        product_set.push_back(t * p);
      }
    }
    std::vector<std::string> lhs, rhs;
    for (const auto& p : product_set) lhs.push_back(p.key());
    for (const auto& p : cent.elements()) rhs.push_back(p.key());
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs)
      report.fail("centralizer of (1 2) in S" + std::to_string(n) +
                  " is not {1,(1 2)} x pointwise stabilizer");
  }
  return report;
}

CheckReport mcg_orbit_checks(int g, int workers) {
  const auto sp = sp_group(g);
  return mcg_orbit_checks(g, sp, workers);
}

}  // namespace minquot
