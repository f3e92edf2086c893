// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "crystcohom/catalog.hpp"
#include "crystcohom/cohomology.hpp"
#include "crystcohom/wall_resolution.hpp"
#include "generators.hpp"
#include "golden_differentials.hpp"
#include "published.hpp"
#include "properties.hpp"

using namespace crystcohom;
using props::Failures;

namespace {

std::string show(const AbelianGroupInvariants& g) { return g.render(); }

void expect(Failures& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

void expect_group(Failures& out, const AbelianGroupInvariants& got, const AbelianGroupInvariants& want,
                  const std::string& what) {
  if (!(got == want)) out.push_back(what + ": got " + show(got) + ", want " + show(want));
}

// Shared between criteria 1 and 8.
const GammaCohomology& z4_cohomology() {
  static const GammaCohomology r = gamma_cohomology(find_catalog_entry("min.27-1.5").action(), 8);
  return r;
}

const WallResolution& z4_resolution() {
  static const WallResolution res(find_catalog_entry("min.27-1.5").action(), 9);
  return res;
}

// Computed once in criterion 6 and reused by criterion 8.
const GammaCohomology& z12_cohomology() {
  static const GammaCohomology r = gamma_cohomology(find_catalog_entry("Z12^(6)").action(), 8);
  return r;
}

// Criterion 7 computes through degree 4 only; see the README.
const GammaCohomology& z9_cohomology() {
  static const GammaCohomology r =
      gamma_cohomology(find_catalog_entry("Z9-dim8").action(), 4, CohomologyOptions{Execution::parallel, false});
  return r;
}

Failures golden_pipeline() {
  Failures out;
  const auto& r = z4_cohomology();
  for (std::size_t m = 0; m < r.smith_diagonals.size(); ++m) {
    expect(out, r.dims[m] == published::cochain_rank(m), "rank of F_" + std::to_string(m));
    expect(out, r.smith_diagonals[m] == published::coboundary_diagonal(m), "SNF of delta_" + std::to_string(m));
  }
  const auto& low = published::low_cohomology();
  for (std::size_t k = 0; k < low.size(); ++k) expect_group(out, r.groups[k], low[k], "H^" + std::to_string(k));
  for (std::size_t k = 4; k < r.groups.size(); ++k)
    expect_group(out, r.groups[k], k % 2 == 0 ? published::tail_even() : published::tail_odd(), "H^" + std::to_string(k));
  expect(out, r.tail && r.tail->even == published::tail_even() && r.tail->odd == published::tail_odd(), "periodic tail");
  return out;
}

Failures golden_differentials() {
  auto out = golden::mismatches(z4_resolution());
  expect(out, golden::lines().size() >= 40, "golden table has " + std::to_string(golden::lines().size()) + " lines");
  return out;
}

Failures e2_table() {
  Failures out;
  const auto h = find_catalog_entry("min.27-1.5").action();
  const auto page = e2_page(h);
  const auto rows = published::e2_rows();
  const auto actions = published::exterior_actions();
  const auto smith = published::e2_smith();
  for (std::size_t j = 0; j <= 4; ++j) {
    const std::string at = " (j = " + std::to_string(j) + ")";
    expect_group(out, page.rows[j].h0, rows[j].h0, "H^0" + at);
    expect_group(out, page.rows[j].even, rows[j].even, "H^even" + at);
    expect_group(out, page.rows[j].odd, rows[j].odd, "H^odd" + at);
    if (j == 0) continue;
    expect(out, page.actions[j] == actions[j - 1], "exterior power action" + at);
    expect(out, page.rows[j].smith_minus_identity == smith[j - 1].first, "SNF of A - I" + at);
    expect(out, page.rows[j].smith_norm == smith[j - 1].second, "SNF of the norm" + at);
  }
  const auto report = compare_conjecture(h, z4_cohomology(), page, "min.27-1.5");
  expect(out, report.first_counterexample() == 4u, "first counterexample is not degree 4");
  const auto& d4 = report.degrees.at(3);
  expect(out, d4.verdict == Verdict::torsion_mismatch, "degree 4 verdict " + to_string(d4.verdict));
  expect_group(out, d4.lhs, published::g("Z_4^2"), "degree 4 lhs");
  expect_group(out, d4.rhs, published::g("Z_4 + Z_2^3"), "degree 4 rhs");
  return out;
}

bool is_table_row(const CatalogEntry& e) { return e.id.rfind("min.", 0) == 0; }

Failures table_rows() {
  Failures out;
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (!is_table_row(e)) continue;
    ++rows;
    const auto h = e.action();
    const auto r = gamma_cohomology(h, std::max<std::size_t>(5, e.n + 2));
    for (const auto& [k, want] : e.expected.degrees) expect_group(out, r.groups[k], want, e.id + " H^" + std::to_string(k));
    expect(out, r.tail.has_value(), e.id + " has no tail");
    if (r.tail) {
      expect_group(out, r.tail->even, *e.expected.tail_even, e.id + " even tail");
      expect_group(out, r.tail->odd, *e.expected.tail_odd, e.id + " odd tail");
    }
    const auto page = e2_page(h);
    for (const auto& [k, want] : e.expected.e2_totals)
      expect_group(out, page.total(k), want, e.id + " E2 degree " + std::to_string(k));
  }
  expect(out, rows == 8, std::to_string(rows) + " table rows bundled");
  return out;
}

Failures order8_group() {
  Failures out;
  const auto h = find_catalog_entry("min.142-1.2").action();
  const auto page = e2_page(h);
  const auto rows = published::group8_e2_rows();
  for (std::size_t j = 0; j <= 5; ++j) {
    const std::string at = " (j = " + std::to_string(j) + ")";
    expect_group(out, page.rows[j].h0, rows[j].h0, "H^0" + at);
    expect_group(out, page.rows[j].even, rows[j].even, "H^even" + at);
    expect_group(out, page.rows[j].odd, rows[j].odd, "H^odd" + at);
  }
  const auto report = compare_conjecture(h, 7, {}, "min.142-1.2");
  expect(out, !report.holds(), "no failing degree");
  for (const auto& c : report.degrees)
    expect(out, c.verdict == Verdict::equal || c.verdict == Verdict::extension_problem,
           "degree " + std::to_string(c.degree) + " verdict " + to_string(c.verdict));
  if (report.tail)
    for (const auto* c : {&report.tail->even, &report.tail->odd})
      expect(out, c->verdict == Verdict::equal || c->verdict == Verdict::extension_problem,
             "tail verdict " + to_string(c->verdict));
  else
    out.push_back("no tail comparison");
  return out;
}

Failures z12() {
  Failures out;
  const auto& e = find_catalog_entry("Z12^(6)");
  const auto& r = z12_cohomology();
  for (const auto& [k, want] : e.expected.degrees) expect_group(out, r.groups[k], want, "H^" + std::to_string(k));
  expect(out, r.tail.has_value(), "no tail");
  if (r.tail) {
    expect_group(out, r.tail->even, *e.expected.tail_even, "even tail");
    expect_group(out, r.tail->odd, *e.expected.tail_odd, "odd tail");
  }
  return out;
}

Failures z9() {
  Failures out;
  const auto& e = find_catalog_entry("Z9-dim8");
  const auto h = e.action();
  const auto& r = z9_cohomology();
  const auto page = e2_page(h);
  expect_group(out, r.groups.at(4), published::g("Z^8 + Z_9^2 + Z_3^4"), "H^4");
  expect_group(out, page.total(4), published::g("Z^8 + Z_9 + Z_3^6"), "E2 degree 4");
  expect(out, classify(r.groups.at(4), page.total(4)) != Verdict::equal, "degree 4 classified equal");
  return out;
}

Failures properties() {
  Failures out;
  testgen::Rng rng(2024);

  // Lattice resolution.
  props::append(out, props::boundary_squares_zero(rng, 500));
  props::append(out, props::homotopy_identity(rng, 1000));

  // Wall identities on every catalog entry of dimension <= 6.
  props::append(out, props::wall_identities(z4_resolution(), rng));
  for (const auto& e : catalog()) {
    if (e.n > 6 || e.id == "min.27-1.5") continue;
    const WallResolution res(e.action(), e.n + 3);
    for (auto& f : props::wall_identities(res, rng)) out.push_back(e.id + ": " + f);
    for (auto& f : props::parity_rechecks(res)) out.push_back(e.id + ": " + f);
  }

  // Rational collapse and Euler characteristic on every catalog entry.
  for (const auto& e : catalog()) {
    const auto h = e.action();
    const auto page = e2_page(h);
    const GammaCohomology* lhs = nullptr;
    GammaCohomology own;
    if (e.id == "min.27-1.5") {
      lhs = &z4_cohomology();
    } else if (e.id == "Z12^(6)") {
      lhs = &z12_cohomology();
    } else if (e.id == "Z9-dim8") {
      lhs = &z9_cohomology();
    } else {
      own = gamma_cohomology(h, e.n + 2);
      lhs = &own;
    }
    for (auto& f : props::rational_collapse(h, *lhs, page)) out.push_back(e.id + ": " + f);
    if (lhs->groups.size() > e.n) {
      for (auto& f : props::euler_characteristic(h, *lhs)) out.push_back(e.id + ": " + f);
      for (auto& f : props::periodicity(*lhs, e.n)) out.push_back(e.id + ": " + f);
    }
    for (auto& f : props::alternating_betti_sum(h, page)) out.push_back(e.id + ": " + f);
  }

  props::append(out, props::prime_order_agreement(rng, 30));
  props::append(out, props::trivial_kunneth(4));
  props::append(out, props::torus(5));
  return out;
}

struct Criterion {
  const char* name;
  std::function<Failures()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"4-dimensional Z_4 counterexample: coboundary SNF and cohomology", golden_pipeline},
      {"printed d_1 and d_2 values, d_k = 0 for k >= 3", golden_differentials},
      {"E2 table, exterior powers and degree 4 torsion-mismatch", e2_table},
      {"the eight 4- and 5-dimensional groups, through degree 5 plus tail", table_rows},
      {"order-8 group: E2 table and extension-problem verdicts", order8_group},
      {"Z_12^(6) cohomology", z12},
      {"dimension-8 Z_9 group, degree 4 inequality (resolution through degree 5)", z9},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Failures failures;
    try {
      failures = criteria[i].run();
    } catch (const std::exception& ex) {
      failures.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %zu. %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                ok ? "" : ": ", ok ? "" : failures.front().c_str());
    if (failures.size() > 1) std::printf("       ... and %zu more\n", failures.size() - 1);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
