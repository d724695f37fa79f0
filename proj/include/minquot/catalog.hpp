#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minquot/gf2.hpp"
#include "minquot/group_table.hpp"
#include "minquot/hom.hpp"
#include "minquot/permutation.hpp"
#include "minquot/report.hpp"

namespace minquot {

// One user-supplied group: a name plus permutation generators of the
// stated degree.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;
};

// JSON-lines catalog: one object per line,
//   {"name": "A5", "degree": 5, "generators": [[2,1,3,4,5], "(1 2 3)"]}
// with each generator either a 1-based image array or a cycle string.
// Malformed lines raise ParseError with the line number.
std::vector<CatalogEntry> parse_catalog(const std::string& text);

// Canonical serialization (image arrays only, one compact object per
// line). parse/emit round-trips byte-identically on emitted output.
std::string emit_catalog(const std::vector<CatalogEntry>& entries);

PermTablePtr catalog_table(const CatalogEntry& entry,
                           const ClosureOptions& options = {});

enum class ReportFormat { json, tsv };

// Element renderings used in reports: a 1-based image array for
// permutations, a list of row bitstrings for F_2 matrices.
nlohmann::ordered_json element_json(const Permutation& p);
nlohmann::ordered_json element_json(const GF2Matrix& m);
std::string element_text(const Permutation& p);
std::string element_text(const GF2Matrix& m);

std::string emit_report(const CheckReport& report, ReportFormat format);

// Flattened homomorphism listing ready for serialization.
struct HomRow {
  nlohmann::ordered_json images;
  bool cyclic = false;
  bool surjective = false;
  std::uint64_t image_order = 0;
  std::uint64_t class_size = 0;  // 0 on raw rows
};

struct ClassificationReport {
  int n = 0;
  std::string target;
  std::string mode;  // "raw" or "classes"
  bool non_cyclic_only = false;
  std::vector<HomRow> rows;
};

std::string emit_report(const ClassificationReport& report,
                        ReportFormat format);

template <GroupElementLike E>
ClassificationReport classification_report(int n, std::string target,
                                           const std::vector<BraidHom<E>>& raw,
                                           bool non_cyclic_only) {
  ClassificationReport out;
  out.n = n;
  out.target = std::move(target);
  out.mode = "raw";
  out.non_cyclic_only = non_cyclic_only;
  for (const auto& h : raw) {
    HomRow row;
    row.images = nlohmann::ordered_json::array();
    for (const E& x : h.images) row.images.push_back(element_json(x));
    row.cyclic = h.cyclic_image;
    row.surjective = h.surjective;
    row.image_order = h.image_order;
    out.rows.push_back(std::move(row));
  }
  return out;
}

template <GroupElementLike E>
ClassificationReport classification_report(
    int n, std::string target, const std::vector<HomClass<E>>& classes,
    bool non_cyclic_only) {
  ClassificationReport out;
  out.n = n;
  out.target = std::move(target);
  out.mode = "classes";
  out.non_cyclic_only = non_cyclic_only;
  for (const auto& cls : classes) {
    HomRow row;
    row.images = nlohmann::ordered_json::array();
    for (const E& x : cls.representative.images)
      row.images.push_back(element_json(x));
    row.cyclic = cls.representative.cyclic_image;
    row.surjective = cls.representative.surjective;
    row.image_order = cls.representative.image_order;
    row.class_size = cls.size;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace minquot
