#include "crystcohom/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "crystcohom/errors.hpp"

namespace crystcohom {

using nlohmann::json;

namespace {

std::string header_line(const GroupHeader& h) {
  std::ostringstream os;
  os << (h.label.empty() ? "group" : h.label) << "  (n = " << h.n << ", q = " << h.q << ")\n";
  return os.str();
}

/// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

json group_json(const AbelianGroupInvariants& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion()) {
    if (d.fits_slong_p())
      torsion.push_back(d.get_si());
    else
      torsion.push_back(d.get_str());
  }
  return {{"rank", g.free_rank()}, {"torsion", torsion}};
}

AbelianGroupInvariants group_from(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("torsion") ||
      !j["rank"].is_number_unsigned() || !j["torsion"].is_array())
    throw ParseError("group entry must be {rank, torsion}");
  std::vector<BigInt> factors;
  for (const json& d : j["torsion"]) {
    if (d.is_number_integer())
      factors.emplace_back(static_cast<long>(d.get<std::int64_t>()));
    else if (d.is_string())
      factors.emplace_back(d.get<std::string>());
    else
      throw ParseError("torsion entries must be integers");
  }
  try {
    return {j["rank"].get<std::size_t>(), std::move(factors)};
  } catch (const Error& e) {
    throw ParseError(std::string("invalid invariant factors: ") + e.what());
  }
}

json comparison_json(const DegreeComparison& c) {
  return {{"degree", c.degree},
          {"lhs", group_json(c.lhs)},
          {"rhs", group_json(c.rhs)},
          {"verdict", to_string(c.verdict)}};
}

DegreeComparison comparison_from(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("lhs") || !j.contains("rhs") ||
      !j.contains("verdict"))
    throw ParseError("degree entry must be {degree, lhs, rhs, verdict}");
  if (!j["degree"].is_number_unsigned() || !j["verdict"].is_string())
    throw ParseError("bad degree entry");
  return {j["degree"].get<std::size_t>(), group_from(j["lhs"]), group_from(j["rhs"]),
          parse_verdict(j["verdict"].get<std::string>())};
}

std::string tail_phrase(std::size_t start) {
  return "for degrees >= " + std::to_string(start);
}

}  // namespace

std::string render_cohomology_text(const GroupHeader& header, const GammaCohomology& result,
                                   Notation notation) {
  std::ostringstream os;
  os << header_line(header);
  for (std::size_t k = 0; k < result.groups.size(); ++k)
    os << "H^" << k << " = " << result.groups[k].render(notation) << '\n';
  if (result.tail)
    os << "H^{2k} = " << result.tail->even.render(notation)
       << ", H^{2k+1} = " << result.tail->odd.render(notation) << ' '
       << tail_phrase(result.tail->start) << '\n';
  return os.str();
}

std::string render_e2_text(const GroupHeader& header, const E2Page& page, std::size_t top,
                           Notation notation) {
  std::ostringstream os;
  os << header_line(header);
  std::vector<std::vector<std::string>> rows{{"j", "i = 0", "i odd", "i even >= 2"}};
  for (std::size_t j = 0; j <= page.n; ++j)
    rows.push_back({std::to_string(j), page.rows[j].h0.render(notation),
                    page.rows[j].odd.render(notation), page.rows[j].even.render(notation)});
  os << table(rows);
  for (std::size_t k = 0; k <= top; ++k) os << "E2 sum, degree " << k << " = " << page.total(k).render(notation) << '\n';
  return os.str();
}

std::string render_check_text(const ConjectureReport& report, Notation notation) {
  std::ostringstream os;
  os << header_line({report.label, report.n, report.q});
  std::vector<std::vector<std::string>> rows{{"k", "H^k(Gamma)", "E2 sum", "verdict"}};
  for (const auto& c : report.degrees)
    rows.push_back({std::to_string(c.degree), c.lhs.render(notation), c.rhs.render(notation),
                    to_string(c.verdict)});
  if (report.tail) {
    for (const auto* c : {&report.tail->even, &report.tail->odd})
      rows.push_back({c == &report.tail->even ? "2k" : "2k+1", c->lhs.render(notation),
                      c->rhs.render(notation), to_string(c->verdict)});
  }
  os << table(rows);
  if (report.tail) os << "(2k, 2k+1 rows hold " << tail_phrase(report.tail->start) << ")\n";
  if (auto k = report.first_counterexample()) {
    os << "counterexample found at degree " << *k << '\n';
  } else {
    const std::size_t top = report.degrees.empty() ? 0 : report.degrees.back().degree;
    os << "conjecture holds through degree " << top << (report.tail ? " and in the periodic tail" : "")
       << '\n';
  }
  return os.str();
}

std::string cohomology_to_json(const GroupHeader& header, const GammaCohomology& result) {
  json doc{{"label", header.label}, {"n", header.n}, {"q", header.q}};
  json degrees = json::array();
  for (std::size_t k = 0; k < result.groups.size(); ++k)
    degrees.push_back({{"degree", k}, {"group", group_json(result.groups[k])}});
  doc["degrees"] = degrees;
  if (result.tail)
    doc["tail"] = {{"start", result.tail->start},
                   {"even", group_json(result.tail->even)},
                   {"odd", group_json(result.tail->odd)}};
  return doc.dump();
}

std::string e2_to_json(const GroupHeader& header, const E2Page& page, std::size_t top) {
  json doc{{"label", header.label}, {"n", header.n}, {"q", header.q}};
  json terms = json::array();
  for (std::size_t j = 0; j <= page.n; ++j)
    terms.push_back({{"j", j},
                     {"h0", group_json(page.rows[j].h0)},
                     {"odd", group_json(page.rows[j].odd)},
                     {"even", group_json(page.rows[j].even)}});
  doc["terms"] = terms;
  json totals = json::array();
  for (std::size_t k = 0; k <= top; ++k)
    totals.push_back({{"degree", k}, {"group", group_json(page.total(k))}});
  doc["totals"] = totals;
  return doc.dump();
}

std::string report_to_json(const ConjectureReport& report) {
  json doc{{"label", report.label}, {"n", report.n}, {"q", report.q}};
  json degrees = json::array();
  for (const auto& c : report.degrees) degrees.push_back(comparison_json(c));
  doc["degrees"] = degrees;
  if (report.tail)
    doc["tail"] = {{"start", report.tail->start},
                   {"even", comparison_json(report.tail->even)},
                   {"odd", comparison_json(report.tail->odd)}};
  if (auto k = report.first_counterexample())
    doc["counterexample"] = *k;
  else
    doc["counterexample"] = nullptr;
  return doc.dump();
}

ConjectureReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degrees") || !doc["degrees"].is_array())
    throw ParseError("report must be an object with a \"degrees\" array");
  ConjectureReport out;
  try {
    out.label = doc.value("label", std::string{});
    out.n = doc.at("n").get<std::size_t>();
    out.q = doc.at("q").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report header: ") + e.what());
  }
  for (const json& c : doc["degrees"]) out.degrees.push_back(comparison_from(c));
  if (doc.contains("tail") && !doc["tail"].is_null()) {
    const json& t = doc["tail"];
    if (!t.is_object() || !t.contains("start") || !t["start"].is_number_unsigned() ||
        !t.contains("even") || !t.contains("odd"))
      throw ParseError("bad tail entry");
    out.tail = TailComparison{t["start"].get<std::size_t>(), comparison_from(t["even"]),
                              comparison_from(t["odd"])};
  }
  return out;
}

}  // namespace crystcohom
