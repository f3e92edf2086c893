#pragma once

#include <cstddef>
#include <string>

#include "crystcohom/abelian.hpp"
#include "crystcohom/cohomology.hpp"

namespace crystcohom {

struct GroupHeader {
  std::string label;
  std::size_t n = 0;
  int q = 1;
};

std::string render_cohomology_text(const GroupHeader& header, const GammaCohomology& result,
                                   Notation notation = Notation::primary);
std::string render_e2_text(const GroupHeader& header, const E2Page& page, std::size_t top,
                           Notation notation = Notation::primary);
std::string render_check_text(const ConjectureReport& report, Notation notation = Notation::primary);

/// Single-line JSON documents. The check document has one entry
/// {degree, lhs: {rank, torsion}, rhs: {rank, torsion}, verdict} per degree,
/// torsion being the invariant factors in increasing order.
std::string cohomology_to_json(const GroupHeader& header, const GammaCohomology& result);
std::string e2_to_json(const GroupHeader& header, const E2Page& page, std::size_t top);
std::string report_to_json(const ConjectureReport& report);

/// Inverse of report_to_json. Throws ParseError.
ConjectureReport report_from_json(const std::string& text);

}  // namespace crystcohom
