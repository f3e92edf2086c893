// crystcohom: integral cohomology of split crystallographic groups Z^n x| Z_q.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystcohom/catalog.hpp"
#include "crystcohom/cohomology.hpp"
#include "crystcohom/descriptor.hpp"
#include "crystcohom/errors.hpp"
#include "crystcohom/report.hpp"

using namespace crystcohom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 3;

struct Inputs {
  std::vector<std::string> catalog_ids;
  std::string input_file;
  std::optional<std::size_t> top_degree;
  std::string format = "text";
  std::string notation = "primary";
  bool serial = false;
  bool no_tail = false;
};

std::vector<GroupDescriptor> collect(const Inputs& in) {
  std::vector<GroupDescriptor> out;
  for (const auto& id : in.catalog_ids) out.push_back(find_catalog_entry(id).descriptor());
  if (!in.input_file.empty()) {
    std::ifstream file(in.input_file);
    if (!file) throw ParseError("cannot read " + in.input_file);
    std::stringstream buffer;
    buffer << file.rdbuf();
    for (auto& d : parse_descriptors(buffer.str())) out.push_back(std::move(d));
  }
  if (out.empty()) throw ParseError("no group given: use --catalog-id or --input");
  return out;
}

CohomologyOptions options_of(const Inputs& in) {
  CohomologyOptions o;
  o.exec = in.serial ? Execution::serial : Execution::parallel;
  o.periodic_tail = !in.no_tail;
  return o;
}

Notation notation_of(const Inputs& in) {
  return in.notation == "invariant" ? Notation::invariant_factors : Notation::primary;
}

std::size_t top_of(const Inputs& in, const GroupDescriptor& d) {
  return in.top_degree.value_or(d.n + 2);
}

int run_cohomology(const Inputs& in) {
  for (const auto& d : collect(in)) {
    const auto result = gamma_cohomology(d.action(), top_of(in, d), options_of(in));
    const GroupHeader header{d.label, d.n, d.q};
    if (in.format == "json")
      std::cout << cohomology_to_json(header, result) << '\n';
    else
      std::cout << render_cohomology_text(header, result, notation_of(in));
  }
  return kExitOk;
}

int run_e2(const Inputs& in) {
  for (const auto& d : collect(in)) {
    const auto page = e2_page(d.action());
    const GroupHeader header{d.label, d.n, d.q};
    if (in.format == "json")
      std::cout << e2_to_json(header, page, top_of(in, d)) << '\n';
    else
      std::cout << render_e2_text(header, page, top_of(in, d), notation_of(in));
  }
  return kExitOk;
}

int run_check(const Inputs& in) {
  bool counterexample = false;
  for (const auto& d : collect(in)) {
    const auto report = compare_conjecture(d.action(), top_of(in, d), options_of(in), d.label);
    counterexample = counterexample || !report.holds();
    if (in.format == "json")
      std::cout << report_to_json(report) << '\n';
    else
      std::cout << render_check_text(report, notation_of(in));
  }
  return counterexample ? kExitCounterexample : kExitOk;
}

int run_catalog(const Inputs& in) {
  if (in.catalog_ids.empty()) {
    for (const auto& e : catalog())
      std::cout << e.id << "  " << e.type << "  " << e.source << '\n';
    return kExitOk;
  }
  for (const auto& id : in.catalog_ids) {
    const auto& e = find_catalog_entry(id);
    if (in.format == "json") {
      std::cout << descriptor_to_json(e.descriptor()) << '\n';
      continue;
    }
    std::cout << e.id << "  " << e.type << "  " << e.source << '\n' << e.matrix.to_string();
  }
  return kExitOk;
}

/// Quick end-to-end checks against bundled published values.
int run_selftest() {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok    " : "FAIL  ") << what << '\n';
    if (!ok) ++failures;
  };
  for (const auto& e : catalog()) {
    const auto round = parse_descriptors(descriptor_to_json(e.descriptor()));
    report(round.size() == 1 && round.front() == e.descriptor() && round.front().action() == e.action(),
           e.id + " round-trips through the input format");
    const auto page = e2_page(e.action());
    for (const auto& [k, g] : e.expected.e2_totals)
      report(page.total(k) == g, e.id + " E2 sum in degree " + std::to_string(k));
  }
  for (const char* id : {"min.27-1.5", "min.27-1.2"}) {
    const auto& e = find_catalog_entry(id);
    const auto result = gamma_cohomology(e.action(), e.n + 2);
    bool ok = result.tail && result.tail->even == *e.expected.tail_even &&
              result.tail->odd == *e.expected.tail_odd;
    for (const auto& [k, g] : e.expected.degrees)
      if (k < result.groups.size()) ok = ok && result.groups[k] == g;
    report(ok, std::string(id) + " cohomology matches the published list");
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return failures == 0 ? kExitOk : kExitError;
}

void add_group_options(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--catalog-id", in.catalog_ids, "Bundled group id (repeatable)");
  cmd->add_option("--input", in.input_file, "JSON file {label, n, q, rows} or an array of them")
      ->check(CLI::ExistingFile);
  cmd->add_option("--top-degree", in.top_degree, "Highest degree reported (default n + 2)");
  cmd->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--notation", in.notation, "Group notation in text output")
      ->check(CLI::IsMember({"primary", "invariant"}));
  cmd->add_flag("--serial", in.serial, "Run the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral cohomology of split crystallographic groups Z^n x| Z_q"};
  app.require_subcommand(1);
  Inputs in;

  auto* cohomology = app.add_subcommand("cohomology", "H^k(Gamma; Z) and the periodic tail");
  add_group_options(cohomology, in);
  cohomology->add_flag("--no-tail", in.no_tail, "Only compute H^0 .. H^top (top may be below n + 2)");
  auto* e2 = app.add_subcommand("e2", "E2 page H^i(Z_q, H^j(Z^n)) and its degree sums");
  add_group_options(e2, in);
  auto* check = app.add_subcommand("check", "Compare H^k(Gamma) with the E2 sum; exit 3 on a counterexample");
  add_group_options(check, in);
  check->add_flag("--no-tail", in.no_tail, "Only compare degrees 1 .. top");
  auto* list = app.add_subcommand("catalog", "List bundled groups, or show the given ids");
  list->add_option("--catalog-id", in.catalog_ids, "Show this entry (repeatable)");
  list->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* selftest = app.add_subcommand("selftest", "Quick checks against bundled published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*cohomology) return run_cohomology(in);
    if (*e2) return run_e2(in);
    if (*check) return run_check(in);
    if (*list) return run_catalog(in);
    if (*selftest) return run_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
