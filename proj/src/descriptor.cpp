#include "crystcohom/descriptor.hpp"

#include <json.hpp>

#include "crystcohom/errors.hpp"

namespace crystcohom {

using nlohmann::json;

HolonomyAction GroupDescriptor::action() const {
  return HolonomyAction::crystallographic(matrix, q);
}

namespace {

GroupDescriptor descriptor_from(const json& doc) {
  if (!doc.is_object()) throw ParseError("group descriptor must be a JSON object");
  for (const char* key : {"n", "q", "rows"})
    if (!doc.contains(key)) throw ParseError(std::string("group descriptor lacks \"") + key + "\"");
  GroupDescriptor d;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
    d.label = doc["label"].get<std::string>();
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  if (!doc["q"].is_number_integer() || doc["q"].get<long>() < 1)
    throw ParseError("\"q\" must be a positive integer");
  d.n = doc["n"].get<std::size_t>();
  d.q = doc["q"].get<int>();

  const json& rows = doc["rows"];
  if (!rows.is_array()) throw ParseError("\"rows\" must be an array of arrays");
  if (rows.size() != d.n)
    throw ParseError("\"rows\" has " + std::to_string(rows.size()) + " rows but n = " +
                     std::to_string(d.n));
  std::vector<std::vector<std::int64_t>> entries;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != d.n)
      throw ParseError("every row must be an array of n integers");
    std::vector<std::int64_t> r;
    for (const json& e : row) {
      if (!e.is_number_integer()) throw ParseError("matrix entries must be exact integers");
      r.push_back(e.get<std::int64_t>());
    }
    entries.push_back(std::move(r));
  }
  d.matrix = MatrixZ::from_rows(entries, d.n);
  return d;
}

}  // namespace

std::vector<GroupDescriptor> parse_descriptors(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<GroupDescriptor> out;
  if (doc.is_array()) {
    for (const json& item : doc) out.push_back(descriptor_from(item));
  } else {
    out.push_back(descriptor_from(doc));
  }
  return out;
}

HolonomyAction parse_group(const std::string& text) {
  const auto all = parse_descriptors(text);
  if (all.size() != 1) throw ParseError("expected exactly one group descriptor");
  return all.front().action();
}

std::string descriptor_to_json(const GroupDescriptor& d) {
  json doc;
  doc["label"] = d.label;
  doc["n"] = d.n;
  doc["q"] = d.q;
  doc["rows"] = d.matrix.to_int64_rows();
  return doc.dump();
}

}  // namespace crystcohom
