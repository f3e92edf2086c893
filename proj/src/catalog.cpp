#include "crystcohom/catalog.hpp"

#include "crystcohom/errors.hpp"

namespace crystcohom {

namespace {

AbelianGroupInvariants g(const char* text) { return parse_group_notation(text); }

/// H^1 .. H^5 and the two tail groups, as printed.
ExpectedCohomology table_row(std::initializer_list<const char*> low, const char* even,
                             const char* odd) {
  ExpectedCohomology e;
  e.degrees[0] = g("Z");
  std::size_t k = 1;
  for (const char* s : low) e.degrees[k++] = g(s);
  e.tail_even = g(even);
  e.tail_odd = g(odd);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string id, std::string type, int q, MatrixZ m, std::string source,
                 ExpectedCohomology e) {
    const std::size_t n = m.rows();
    out.push_back({std::move(id), std::move(type), n, q, std::move(m), std::move(source), std::move(e)});
  };

  {
    auto e = table_row({"Z", "Z + Z_4 + Z_2", "Z + Z_4 + Z_2", "Z_4 + Z_2^3", "Z_4 + Z_2^3"},
                       "Z_4 + Z_2^3", "Z_4 + Z_2^3");
    e.e2_totals[4] = g("Z_4^2 + Z_2^2");
    add("min.27-1.2", "4 x| 4", 4,
        {{-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 1, 0, 1}, {0, 0, -1, 1}},
        "CARAT min.27-1.2", e);
  }
  {
    auto e = table_row({"Z", "Z + Z_4 + Z_2", "Z + Z_4 + Z_2", "Z_4^2", "Z_2^4"}, "Z_4^2", "Z_2^4");
    e.e2_totals[4] = g("Z_4 + Z_2^3");
    e.first_counterexample = 4;
    add("min.27-1.5", "4 x| 4", 4,
        {{0, 1, 0, 0}, {-1, 0, 0, 1}, {0, 0, -1, 1}, {0, 0, 0, 1}},
        "CARAT min.27-1.5", e);
  }
  add("min.81-1.2", "5 x| 4", 4,
      {{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 1, 0, 1}, {0, 0, 0, -1, 1}},
      "CARAT min.81-1.2",
      table_row({"Z", "Z^2 + Z_4 + Z_2^2", "Z^2 + Z_4^2 + Z_2", "Z + Z_4^2 + Z_2^5",
                 "Z + Z_4 + Z_2^6"},
                "Z_4^2 + Z_2^6", "Z_4^2 + Z_2^6"));
  add("min.81-1.5", "5 x| 4", 4,
      {{-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}},
      "CARAT min.81-1.5",
      table_row({"Z", "Z^2 + Z_4 + Z_2^2", "Z^2 + Z_4 + Z_2^2", "Z + Z_4^2 + Z_2^3",
                 "Z + Z_4 + Z_2^4"},
                "Z_4^2 + Z_2^4", "Z_4^2 + Z_2^4"));
  add("min.82-1.3", "5 x| 4", 4,
      {{-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, -1, 0, -1}, {0, 0, -1, 0, 0}},
      "CARAT min.82-1.3",
      table_row({"Z^2", "Z^2 + Z_4 + Z_2", "Z^2 + Z_4^2 + Z_2^2", "Z + Z_4^2 + Z_2^4",
                 "Z_4^2 + Z_2^6"},
                "Z_4^2 + Z_2^6", "Z_4^2 + Z_2^6"));
  add("min.82-1.5", "5 x| 4", 4,
      {{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, -1, 0, -1, -1}, {0, 0, 0, 0, -1}, {0, 0, 0, -1, 0}},
      "CARAT min.82-1.5",
      table_row({"Z^2", "Z^2 + Z_4 + Z_2", "Z^2 + Z_4^2 + Z_2^2", "Z + Z_4^3 + Z_2",
                 "Z_4^2 + Z_2^4"},
                "Z_4^2 + Z_2^4", "Z_4^2 + Z_2^4"));
  add("min.82-1.7", "5 x| 4", 4,
      {{1, 1, 0, 0, 0}, {-1, 0, 0, -1, 0}, {0, 0, 0, 0, -1}, {-1, 0, 0, 0, 0}, {0, 0, -1, 0, 0}},
      "CARAT min.82-1.7",
      table_row({"Z^2", "Z^2 + Z_4", "Z^2 + Z_2^4", "Z + Z_4^2 + Z_2^2", "Z_4 + Z_2^5"},
                "Z_4 + Z_2^5", "Z_4 + Z_2^5"));
  add("min.142-1.2", "5 x| 8", 8,
      {{0, 0, 0, 0, -1}, {1, 0, 0, 0, -1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, -1}},
      "CARAT min.142-1.2 (orbifold group Z_8^(5))",
      table_row({"0", "Z^2 + Z_8 + Z_4", "Z^2", "Z + Z_8 + Z_4 + Z_2^2", "Z_2^2"},
                "Z_8^2 + Z_2^4", "Z_2^2"));
  {
    ExpectedCohomology e;
    const char* low[] = {"Z", "0", "Z^3 + Z_12 + Z_3", "Z^2", "Z^3 + Z_12 + Z_6 + Z_3^3", "Z_2^2",
                         "Z + Z_12 + Z_6^2 + Z_3^5"};
    for (std::size_t k = 0; k < std::size(low); ++k) e.degrees[k] = g(low[k]);
    e.tail_even = g("Z_12^2 + Z_6^2 + Z_3^5");
    e.tail_odd = g("Z_2^2");
    add("Z12^(6)", "6 x| 12", 12,
        {{0, 0, 0, 0, 0, -1},
         {1, 0, 0, 0, 0, -1},
         {0, 1, 0, 0, 0, 0},
         {0, 0, 1, 0, 0, 1},
         {0, 0, 0, 1, 0, 0},
         {0, 0, 0, 0, 1, -1}},
        "Calabi-Yau toroidal orbifold group Z_12^(6)", e);
  }
  {
    ExpectedCohomology e;
    e.degrees[0] = g("Z");
    e.degrees[4] = g("Z^8 + Z_9^2 + Z_3^4");
    e.e2_totals[4] = g("Z^8 + Z_9 + Z_3^6");
    add("Z9-dim8", "8 x| 9", 9,
        {{-1, 0, -1, -1, -1, 0, 0, 0},
         {1, 1, 1, 0, 1, 0, 1, 0},
         {0, 0, 0, 0, 0, 0, 1, 0},
         {0, 0, 0, 0, 1, 0, 0, 0},
         {1, 0, 0, 0, 0, 0, -1, -1},
         {-1, -1, 0, 0, -1, -1, 0, 0},
         {-1, -1, 0, 0, 0, 0, 0, 1},
         {0, 1, 0, 0, 0, 1, 0, 0}},
        "odd non-prime holonomy Z_9 in dimension 8", e);
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& find_catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw NotFound("no catalog entry '" + id + "'");
}

}  // namespace crystcohom
