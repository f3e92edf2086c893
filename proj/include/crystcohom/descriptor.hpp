#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crystcohom/group.hpp"
#include "crystcohom/matrix.hpp"

namespace crystcohom {

/// Input document {label, n, q, rows}. The rows give M acting on column
/// vectors from the left. CARAT prints the transposed representation, so a
/// matrix copied from CARAT has to be transposed first.
struct GroupDescriptor {
  std::string label;
  std::size_t n = 0;
  int q = 1;
  MatrixZ matrix;

  /// Validated action (exact order q). Throws ValidationError.
  HolonomyAction action() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// One JSON object, or an array of them. Throws ParseError for malformed
/// documents (non-integer entries, ragged rows, n inconsistent with rows).
std::vector<GroupDescriptor> parse_descriptors(const std::string& text);

/// A single descriptor, validated. Throws ParseError or ValidationError.
HolonomyAction parse_group(const std::string& text);

std::string descriptor_to_json(const GroupDescriptor& d);

}  // namespace crystcohom
