#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minquot/gf2.hpp"
#include "minquot/group_table.hpp"
#include "minquot/hom.hpp"
#include "minquot/permutation.hpp"

namespace minquot {

using MatTable = FiniteGroupTable<GF2Matrix>;
using MatTablePtr = std::shared_ptr<const MatTable>;
using AnyTable = std::variant<PermTablePtr, MatTablePtr>;

// Cyclic group of order m as the closure of an m-cycle (degree m).
PermTablePtr cyclic_group(int m);
PermTablePtr klein_four_group();

// Built-in target names accepted by the CLI: S2..S7, A4..A6, Z1..Z12,
// klein4, sp2, sp4, sp6.
std::vector<std::string> builtin_target_names();

// Resolves a built-in name to its table; throws RangeError for unknown
// names.
AnyTable resolve_target(const std::string& name,
                        const ClosureOptions& options = {});

std::uint64_t table_order(const AnyTable& table);

}  // namespace minquot
