#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystcohom/abelian.hpp"
#include "crystcohom/descriptor.hpp"
#include "crystcohom/group.hpp"

namespace crystcohom {

/// Published values for a bundled group. Degrees absent from the maps were
/// not published.
struct ExpectedCohomology {
  std::map<std::size_t, AbelianGroupInvariants> degrees;  // H^k(Gamma)
  std::optional<AbelianGroupInvariants> tail_even;
  std::optional<AbelianGroupInvariants> tail_odd;
  std::map<std::size_t, AbelianGroupInvariants> e2_totals;
  std::optional<std::size_t> first_counterexample;
};

struct CatalogEntry {
  std::string id;
  std::string type;  // "4 x| 4": dimension x| holonomy order
  std::size_t n = 0;
  int q = 1;
  MatrixZ matrix;
  std::string source;
  ExpectedCohomology expected;

  HolonomyAction action() const { return HolonomyAction::crystallographic(matrix, q); }
  GroupDescriptor descriptor() const { return {id, n, q, matrix}; }
};

/// Every bundled group, in listing order.
const std::vector<CatalogEntry>& catalog();

/// Throws NotFound.
const CatalogEntry& find_catalog_entry(const std::string& id);

}  // namespace crystcohom
