#include "minquot/targets.hpp"

namespace minquot {

PermTablePtr cyclic_group(int m) {
  if (m < 1 || m > 24) throw RangeError("cyclic_group supports 1 <= m <= 24");
  std::vector<Permutation> gens;
  if (m == 1) {
    gens.push_back(Permutation::identity_of(1));
  } else {
    std::vector<int> images;
    for (int i = 2; i <= m; ++i) images.push_back(i);
    images.push_back(1);
    gens.push_back(Permutation::from_images(images));
  }
  return std::make_shared<const PermTable>(PermTable::closure(std::move(gens)));
}

PermTablePtr klein_four_group() {
  return std::make_shared<const PermTable>(
      PermTable::closure({Permutation::from_cycles("(1 2)(3 4)", 4),
                          Permutation::from_cycles("(1 3)(2 4)", 4)}));
}

std::vector<std::string> builtin_target_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 7; ++n) names.push_back("S" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) names.push_back("A" + std::to_string(n));
  for (int m = 1; m <= 12; ++m) names.push_back("Z" + std::to_string(m));
  names.push_back("klein4");
  names.push_back("sp2");
  names.push_back("sp4");
  names.push_back("sp6");
  return names;
}

AnyTable resolve_target(const std::string& name,
                        const ClosureOptions& options) {
  if (name == "klein4") return klein_four_group();
  if (name == "sp2") return std::make_shared<const MatTable>(sp_group(1, options));
  if (name == "sp4") return std::make_shared<const MatTable>(sp_group(2, options));
  if (name == "sp6") return std::make_shared<const MatTable>(sp_group(3, options));
  if (name.size() >= 2) {
    const char kind = name[0];
    bool numeric = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) numeric = false;
    if (numeric) {
      const int k = std::stoi(name.substr(1));
      if (kind == 'S' && k >= 2 && k <= 7) return symmetric_group(k);
      if (kind == 'A' && k >= 4 && k <= 6) return alternating_group(k);
      if (kind == 'Z' && k >= 1 && k <= 12) return cyclic_group(k);
    }
  }
  throw RangeError("unknown target '" + name + "'");
}

std::uint64_t table_order(const AnyTable& table) {
  return std::visit([](const auto& t) { return t->order(); }, table);
}

}  // namespace minquot
