// Command-line front end for the braid / mapping-class quotient
// verification library: homomorphism classification, band-generator
// distinctness, symplectic counting facts, simplicity sweeps, and
// catalog-driven order-bound checks. Reports go to standard output (or a
// file) in JSON or TSV; progress heartbeats go to standard error only, so
// report bytes are stable across runs and worker counts.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minquot/catalog.hpp"
#include "minquot/checks.hpp"
#include "minquot/targets.hpp"

using namespace minquot;

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::string output;
  std::size_t ceiling = 4'000'000;
  bool ceiling_set = false;
  std::uint64_t hom_bound = 10'000;
  int workers = 1;
};

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  return ReportFormat::tsv;
}

ClosureOptions closure_options(const GlobalOptions& opts,
                               const std::string& label) {
  ClosureOptions co;
  co.max_elements = opts.ceiling;
  if (!opts.ceiling_set) {
    if (const char* env = std::getenv("MINQUOT_CEILING")) {
      co.max_elements = std::strtoull(env, nullptr, 10);
      if (co.max_elements == 0) co.max_elements = opts.ceiling;
    }
  }
  co.progress = [label, last = std::size_t{0}](std::size_t n) mutable {
    if (n - last >= 200'000) {
      last = n;
      std::fprintf(stderr, "%s: %zu elements...\n", label.c_str(), n);
    }
  };
  return co;
}

int finish(const std::string& text, bool pass, const GlobalOptions& opts) {
  if (opts.output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "cannot open output file '%s'\n",
                   opts.output.c_str());
      return 2;
    }
    out << text;
  }
  return pass ? 0 : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open catalog file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_classify(const GlobalOptions& opts, int n, const std::string& target,
                 bool classes_mode, bool non_cyclic) {
  const auto table = resolve_target(target, closure_options(opts, target));
  HomSearchOptions search;
  search.non_cyclic_only = non_cyclic;
  search.workers = opts.workers;
  search.max_target_order = opts.hom_bound;
  const auto report = std::visit(
      [&](const auto& t) {
        if (classes_mode)
          return classification_report(n, target,
                                       enumerate_homs_classes(n, t, search),
                                       non_cyclic);
        return classification_report(n, target,
                                     enumerate_homs_raw(n, t, search),
                                     non_cyclic);
      },
      table);
  return finish(emit_report(report, parse_format(opts.format)), true, opts);
}

int run_lemma_a(const GlobalOptions& opts, int n, const std::string& target) {
  const auto table = resolve_target(target, closure_options(opts, target));
  HomSearchOptions search;
  search.non_cyclic_only = true;
  search.workers = opts.workers;
  search.max_target_order = opts.hom_bound;
  CheckReport merged;
  merged.name = "verify-lemma-a";
  merged.param("n", std::to_string(n));
  merged.param("target", target);
  std::visit(
      [&](const auto& t) {
        const auto classes = enumerate_homs_classes(n, t, search);
        merged.count("non_cyclic_classes",
                     static_cast<std::int64_t>(classes.size()));
        if (classes.empty())
          merged.note("no non-cyclic homomorphisms; nothing to check");
        for (std::size_t i = 0; i < classes.size(); ++i) {
          const auto sub = lemma_a_check(classes[i].representative);
          merged.count("class " + std::to_string(i) + " collisions",
                       sub.counts.back().second);
          if (!sub.pass) {
            merged.pass = false;
            for (const auto& w : sub.witnesses)
              merged.witnesses.push_back("class " + std::to_string(i) + ": " +
                                         w);
          }
        }
      },
      table);
  return finish(emit_report(merged, parse_format(opts.format)), merged.pass,
                opts);
}

int run_sp_info(const GlobalOptions& opts, int g) {
  const auto sp =
      sp_group(g, closure_options(opts, "sp" + std::to_string(2 * g)));
  CheckReport report;
  report.name = "sp-info";
  report.param("g", std::to_string(g));
  report.count("order", static_cast<std::int64_t>(sp.order()));
  report.count("order_formula", static_cast<std::int64_t>(sp_order_formula(g)));
  if (sp.order() != sp_order_formula(g))
    report.fail("enumerated order disagrees with the product formula");

  const int dim = 2 * g;
  const auto t1 = transvection(GF2Vector::basis(dim, 0));
  const auto cls = conjugacy_class(sp, t1);
  report.count("transvections", static_cast<std::int64_t>(cls.size()));
  if (cls.size() != (1ull << dim) - 1)
    report.fail("transvection class size is not 2^(2g)-1");

  if (g >= 2) {
    const auto sp_prev = sp_group(g - 1);
    const auto counting = sp_counting_checks(g, sp, sp_prev, opts.workers);
    report.count("symplectic_pairs",
                 static_cast<std::int64_t>(counting.pair_count));
    report.count("pair_orbit", static_cast<std::int64_t>(counting.pair_orbit));
    report.count("pair_stabilizer",
                 static_cast<std::int64_t>(counting.conj_pair_stabilizer));
    if (!counting.pair_count_ok)
      report.fail("symplectic pair count differs from 2^(2g-1)(2^(2g)-1)");
    if (!counting.transitive_ok)
      report.fail("the action on symplectic pairs is not transitive");
    if (!counting.order_identity_ok)
      report.fail("|Sp(2g)| != 2^(2g-1)(2^(2g)-1) |Sp(2g-2)|");
    if (!counting.stabilizer_ok)
      report.fail("pair stabilizer order differs from |Sp(2g-2)|");
  } else {
    const auto t2 = transvection(GF2Vector::basis(dim, 1));
    const auto pair_counts = orbit_stabilizer_pair(sp, t1, t2, opts.workers);
    report.count("pair_orbit", static_cast<std::int64_t>(pair_counts.orbit));
    report.count("pair_stabilizer",
                 static_cast<std::int64_t>(pair_counts.stabilizer));
    if (pair_counts.orbit != 6 || pair_counts.stabilizer != 1)
      report.fail("pair orbit/stabilizer differ from (6, 1)");
  }
  return finish(emit_report(report, parse_format(opts.format)), report.pass,
                opts);
}

int run_verify_iso(const GlobalOptions& opts, int g) {
  CheckReport report;
  report.name = "verify-iso";
  report.param("g", std::to_string(g));
  try {
    const auto sp = sp_group(g);
    const auto iso = iso_to_symmetric(g, sp);
    report.count("forms", static_cast<std::int64_t>(iso.forms.size()));
    report.count("image_order", static_cast<std::int64_t>(sp.order()));
    report.note("action on the " + std::to_string(iso.forms.size()) +
                " forms is faithful with full symmetric image");
  } catch (const Error& e) {
    report.fail(e.what());
  }
  return finish(emit_report(report, parse_format(opts.format)), report.pass,
                opts);
}

int run_simplicity(const GlobalOptions& opts, const std::string& name) {
  CheckReport report;
  report.name = "simplicity";
  report.param("group", name);
  const auto table = resolve_target(name, closure_options(opts, name));
  std::visit(
      [&](const auto& t) {
        report.count("order", static_cast<std::int64_t>(t->order()));
        const auto result = simplicity_check(
            *t, opts.workers, [&](std::size_t done, std::size_t total) {
              if (t->order() > 100'000)
                std::fprintf(stderr, "simplicity %s: representative %zu/%zu\n",
                             name.c_str(), done, total);
            });
        if (!result.simple) {
          report.fail("proper normal subgroup of order " +
                      std::to_string(result.witness_order) +
                      " generated by the class of " +
                      element_text(t->at(result.witness_index)));
        } else {
          report.note("no proper nontrivial normal closure found");
        }
      },
      table);
  return finish(emit_report(report, parse_format(opts.format)), report.pass,
                opts);
}

int run_base_cases(const GlobalOptions& opts) {
  const auto report = base_case_check(opts.workers);
  return finish(emit_report(report, parse_format(opts.format)), report.pass,
                opts);
}

int run_catalog(const GlobalOptions& opts, int n, const std::string& path) {
  const auto entries =
      path.empty() ? builtin_theorem_catalog() : parse_catalog(read_file(path));
  const auto report = theorem_a_catalog_check(n, entries, opts.workers);
  return finish(emit_report(report, parse_format(opts.format)), report.pass,
                opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minquot: finite verification suite for minimal non-cyclic quotients "
      "of braid and mapping class groups"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Report format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", opts.output, "Write the report to a file");
  app.add_option("--ceiling", opts.ceiling,
                 "Element-count ceiling for closures (default 4000000; the "
                 "MINQUOT_CEILING environment variable overrides the default)")
      ->each([&opts](const std::string&) { opts.ceiling_set = true; });
  app.add_option("--hom-order-bound", opts.hom_bound,
                 "Largest target order accepted by hom enumeration");
  app.add_option("--workers", opts.workers, "Worker thread count")
      ->check(CLI::Range(1, 64));

  int n = 2, g = 1;
  std::string target, group_name, catalog_path;
  bool classes_mode = false, non_cyclic = false;

  auto* classify = app.add_subcommand(
      "classify-homs", "Enumerate homomorphisms from a braid group");
  classify->add_option("--n", n, "Strand count")
      ->required()
      ->check(CLI::Range(2, 7));
  classify->add_option("--target", target, "Built-in target group")->required();
  classify->add_flag("--classes", classes_mode, "Group homs up to conjugation");
  classify->add_flag("--non-cyclic", non_cyclic, "Drop cyclic-image homs");

  auto* lemma = app.add_subcommand(
      "verify-lemma-a",
      "Band-generator image distinctness for all non-cyclic hom classes");
  lemma->add_option("--n", n, "Strand count")
      ->required()
      ->check(CLI::Range(3, 7));
  lemma->add_option("--target", target, "Built-in target group")->required();

  auto* spinfo =
      app.add_subcommand("sp-info", "Order and orbit counts for Sp(2g, F2)");
  spinfo->add_option("--g", g, "Genus")->required()->check(CLI::Range(1, 3));

  auto* iso = app.add_subcommand(
      "verify-iso", "Refinement-action isomorphism onto a symmetric group");
  iso->add_option("--g", g, "Genus")->required()->check(CLI::Range(1, 2));

  auto* simple =
      app.add_subcommand("simplicity", "Normal-closure simplicity sweep");
  simple->add_option("--group", group_name, "One of A5, S5, S6, sp6")
      ->required()
      ->check(CLI::IsMember({"A5", "S5", "S6", "sp6"}));

  auto* base = app.add_subcommand(
      "base-cases",
      "Non-cyclic quotients of B3 and B4 over all groups of order at most 6");

  auto* catalog =
      app.add_subcommand("catalog-run", "Order-bound harness over a group catalog");
  catalog->add_option("--n", n, "Strand count")
      ->required()
      ->check(CLI::Range(5, 6));
  catalog->add_option("--catalog", catalog_path,
                      "JSON-lines catalog file (default: built-in catalog)");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify))
      return run_classify(opts, n, target, classes_mode, non_cyclic);
    if (app.got_subcommand(lemma)) return run_lemma_a(opts, n, target);
    if (app.got_subcommand(spinfo)) return run_sp_info(opts, g);
    if (app.got_subcommand(iso)) return run_verify_iso(opts, g);
    if (app.got_subcommand(simple)) return run_simplicity(opts, group_name);
    if (app.got_subcommand(base)) return run_base_cases(opts);
    if (app.got_subcommand(catalog)) return run_catalog(opts, n, catalog_path);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
