#include "minquot/catalog.hpp"

#include <sstream>

namespace minquot {

namespace {

using nlohmann::ordered_json;

Permutation parse_generator(const nlohmann::json& g, int degree,
                            const std::string& entry_name) {
  try {
    if (g.is_string()) {
      return Permutation::from_cycles(g.get<std::string>(), degree);
    }
    if (g.is_array()) {
      std::vector<int> images;
      for (const auto& v : g) {
        if (!v.is_number_integer())
          throw InvalidWord("generator image arrays must hold integers");
        images.push_back(v.get<int>());
      }
      if (static_cast<int>(images.size()) != degree)
        throw InvalidWord("image array length differs from degree");
      return Permutation::from_images(images);
    }
    throw InvalidWord("generators must be image arrays or cycle strings");
  } catch (const Error& e) {
    throw InvalidWord("entry '" + entry_name + "': " + e.what());
  }
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_number, std::string("invalid JSON: ") + e.what());
    }
    try {
      if (!obj.is_object()) throw InvalidWord("expected a JSON object");
      if (!obj.contains("name") || !obj["name"].is_string())
        throw InvalidWord("missing string field 'name'");
      CatalogEntry entry;
      entry.name = obj["name"].get<std::string>();
      if (!obj.contains("degree") || !obj["degree"].is_number_integer() ||
          obj["degree"].get<int>() < 1)
        throw InvalidWord("entry '" + entry.name +
                          "': 'degree' must be a positive integer");
      entry.degree = obj["degree"].get<int>();
      if (!obj.contains("generators") || !obj["generators"].is_array() ||
          obj["generators"].empty())
        throw InvalidWord("entry '" + entry.name +
                          "': 'generators' must be a nonempty array");
      for (const auto& g : obj["generators"])
        entry.generators.push_back(parse_generator(g, entry.degree, entry.name));
      entries.push_back(std::move(entry));
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return entries;
}

std::string emit_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& entry : entries) {
    ordered_json obj;
    obj["name"] = entry.name;
    obj["degree"] = entry.degree;
    obj["generators"] = ordered_json::array();
    for (const auto& g : entry.generators) obj["generators"].push_back(g.to_images());
    out += obj.dump();
    out += '\n';
  }
  return out;
}

PermTablePtr catalog_table(const CatalogEntry& entry,
                           const ClosureOptions& options) {
  return std::make_shared<const PermTable>(
      PermTable::closure(entry.generators, options));
}

nlohmann::ordered_json element_json(const Permutation& p) {
  return ordered_json(p.to_images());
}

nlohmann::ordered_json element_json(const GF2Matrix& m) {
  return ordered_json(m.to_row_strings());
}

std::string element_text(const Permutation& p) { return p.to_cycle_string(); }

std::string element_text(const GF2Matrix& m) {
  std::string out;
  for (const auto& row : m.to_row_strings()) {
    if (!out.empty()) out += '|';
    out += row;
  }
  return out;
}

std::string emit_report(const CheckReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json obj;
    obj["check"] = report.name;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    obj["params"] = params;
    obj["verdict"] = report.pass ? "pass" : "fail";
    ordered_json counts = ordered_json::object();
    for (const auto& [k, v] : report.counts) counts[k] = v;
    obj["counts"] = counts;
    obj["witnesses"] = report.witnesses;
    return obj.dump(2) + "\n";
  }
  std::string out = "check\t" + report.name + "\n";
  for (const auto& [k, v] : report.params) out += "param\t" + k + "\t" + v + "\n";
  for (const auto& [k, v] : report.counts)
    out += "count\t" + k + "\t" + std::to_string(v) + "\n";
  for (const auto& w : report.witnesses) out += "witness\t" + w + "\n";
  out += std::string("verdict\t") + (report.pass ? "pass" : "fail") + "\n";
  return out;
}

std::string emit_report(const ClassificationReport& report,
                        ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json obj;
    obj["check"] = "classify-homs";
    obj["n"] = report.n;
    obj["target"] = report.target;
    obj["mode"] = report.mode;
    obj["non_cyclic_only"] = report.non_cyclic_only;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json r;
      r["images"] = row.images;
      r["cyclic"] = row.cyclic;
      r["surjective"] = row.surjective;
      r["image_order"] = row.image_order;
      if (report.mode == "classes") r["class_size"] = row.class_size;
      rows.push_back(std::move(r));
    }
    obj["homs"] = std::move(rows);
    obj["total"] = report.rows.size();
    return obj.dump(2) + "\n";
  }
  std::string out = "check\tclassify-homs\n";
  out += "param\tn\t" + std::to_string(report.n) + "\n";
  out += "param\ttarget\t" + report.target + "\n";
  out += "param\tmode\t" + report.mode + "\n";
  out += "param\tnon_cyclic_only\t" +
         std::string(report.non_cyclic_only ? "true" : "false") + "\n";
  for (const auto& row : report.rows) {
    out += "hom\t" + row.images.dump() + "\tcyclic=" +
           (row.cyclic ? "1" : "0") + "\tsurjective=" +
           (row.surjective ? "1" : "0") +
           "\timage_order=" + std::to_string(row.image_order);
    if (report.mode == "classes")
      out += "\tclass_size=" + std::to_string(row.class_size);
    out += "\n";
  }
  out += "count\ttotal\t" + std::to_string(report.rows.size()) + "\n";
  return out;
}

}  // namespace minquot
