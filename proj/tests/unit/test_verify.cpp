#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "k3fock/verify/catalogue.hpp"
#include "k3fock/verify/checks.hpp"
#include "k3fock/verify/config.hpp"
#include "k3fock/verify/tables.hpp"

using namespace k3fock;
using namespace k3fock::verify;

namespace {

SuiteConfig config(const std::vector<std::string>& args) { return parse_config(args); }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config defaults") {
  const auto cfg = config({});
  CHECK(cfg.n_max == 3);
  CHECK(cfg.lattice.rank() == 1);
  CHECK(cfg.lattice.gram()[0][0] == 2);
  CHECK(cfg.all_suites);
  CHECK(cfg.selected() == suite_names());
  CHECK(cfg.format == Format::kText);
  CHECK(cfg.fault == Fault::kNone);
}

TEST_CASE("config flags") {
  const auto one = config({"--n", "2", "--suite", "projectors"});
  CHECK(one.n_max == 2);
  CHECK(one.selected() == std::vector<std::string>{"projectors"});

  const auto r1 = config({"--gram", "2"});
  CHECK(r1.lattice.rank() == 1);

  const auto hyp = config({"--gram", "0 1; 1 0"});
  CHECK(hyp.lattice.rank() == 2);
  CHECK(hyp.lattice.gram()[0][1] == 1);
  CHECK(hyp.lattice.gram()[1][1] == 0);

  CHECK(config({"--rho", "2"}).lattice.rank() == 2);
  CHECK(config({"--format", "json", "--no-timing"}).format == Format::kJson);
  CHECK_FALSE(config({"--no-timing"}).timing);
  CHECK(config({"--suite", "none"}).selected().empty());
  CHECK(config({"--suite", "tables", "--suite", "ring"}).selected() == std::vector<std::string>{"ring", "tables"});
}

TEST_CASE("bad configurations are usage errors") {
  CHECK_THROWS_AS(config({"--gram", "0 1; 2 0"}), UsageError);
  CHECK_THROWS_AS(config({"--gram", "1 2"}), UsageError);
  CHECK_THROWS_AS(config({"--n", "-1"}), UsageError);
  CHECK_THROWS_AS(config({"--d-max", "0"}), UsageError);
  CHECK_THROWS_AS(config({"--format", "xml"}), UsageError);
  CHECK_THROWS_AS(config({"--rho", "3", "--gram", "2"}), UsageError);
  CHECK_THROWS_AS(config({"--inject-fault", "no-such-fault"}), UsageError);
  CHECK_THROWS_AS(config({"--bogus"}), UsageError);
  CHECK_THROWS_AS(run_suite(config({"--suite", "nonsense"})), UsageError);
}

TEST_CASE("config file with flag override") {
  const std::string path = "test_verify_config.toml";
  {
    std::ofstream f(path);
    f << "n = 1\nsuite = [\"ring\"]\nformat = \"json\"\n";
  }
  const auto from_file = config({"--config", path});
  CHECK(from_file.n_max == 1);
  CHECK(from_file.selected() == std::vector<std::string>{"ring"});
  CHECK(from_file.format == Format::kJson);
  CHECK(config({"--config", path, "--n", "2"}).n_max == 2);
  std::remove(path.c_str());
}

TEST_CASE("empty suite list gives an empty passing report") {
  const auto report = run_suite(config({"--suite", "none"}));
  CHECK(report.results.empty());
  CHECK(report.passed());
  CHECK(report.to_json(false).is_array());
  CHECK(report.to_json(false).empty());
}

TEST_CASE("projector suite passes at n = 2") {
  const auto report = run_suite(config({"--n", "2", "--suite", "projectors"}));
  CHECK(report.passed());
  CHECK(report.count(Status::kPass) > 0);
  for (const auto& r : report.results) {
    const int n = r.params.value("n", 0);
    CHECK(r.status == (n <= 2 ? Status::kPass : Status::kSkipped));
  }
}

TEST_CASE("reports are sorted and deterministic") {
  const auto cfg = config({"--n", "2", "--suite", "ring", "--suite", "heisenberg", "--no-timing"});
  const auto a = run_suite(cfg);
  const auto b = run_suite(cfg);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK(a.to_text(false) == b.to_text(false));
  for (std::size_t i = 1; i < a.results.size(); ++i) CHECK(a.results[i - 1].id < a.results[i].id);
  std::set<std::string> ids;
  for (const auto& r : a.results) ids.insert(r.id);
  CHECK(ids.size() == a.results.size());
}

TEST_CASE("json schema") {
  auto cfg = config({"--n", "1", "--suite", "ring"});
  cfg.fault = Fault::kFlipDiagonalDivisorSign;
  const auto json = run_suite(cfg).to_json(true);
  REQUIRE(json.is_array());
  bool saw_witness = false;
  for (const auto& row : json) {
    CHECK(row.contains("id"));
    CHECK(row.contains("eq_anchor"));
    CHECK(row.contains("params"));
    CHECK(row.contains("status"));
    CHECK(row.contains("millis"));
    CHECK(row.size() == (row.contains("witness") ? 6u : 5u));
    CHECK(row.contains("witness") == (row["status"] == "fail"));
    if (row.contains("witness")) {
      saw_witness = true;
      for (const char* key : {"instance", "basis_vector", "lhs", "rhs"}) CHECK(row["witness"].contains(key));
    }
  }
  CHECK(saw_witness);
}

TEST_CASE("broken divisor rule makes the ring suite fail with a witness") {
  auto cfg = config({"--suite", "ring"});
  cfg.fault = Fault::kFlipDiagonalDivisorSign;
  const auto report = run_suite(cfg);
  CHECK_FALSE(report.passed());
  CHECK(report.count(Status::kFail) > 0);
  for (const auto& r : report.results) CHECK((r.status == Status::kFail) == r.witness.has_value());
  // The guard is released afterwards.
  CHECK(active_fault() == Fault::kNone);
  CHECK(run_suite(config({"--suite", "ring"})).passed());
}

TEST_CASE("bounds beyond the configuration are skipped") {
  const auto report = run_suite(config({"--n", "1", "--suite", "heisenberg", "--k-max", "4"}));
  CHECK(report.passed());
  CHECK(report.count(Status::kSkipped) > 0);
  for (const auto& r : report.results) CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("every check has an anchor and a family") {
  for (const auto& suite : suite_names()) {
    const auto checks = suite_checks(suite);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      CHECK_FALSE(c.anchor.empty());
      CHECK(family_of(c.id).rfind(suite + ".", 0) == 0);
    }
  }
  CHECK(family_of("ring.small_diagonal[k=3]") == "ring.small_diagonal");
  CHECK(family_of("ring.triple_diagonal") == "ring.triple_diagonal");
}

TEST_CASE("catalogue file matches the registered checks") {
  const std::string committed = read_file(K3FOCK_CATALOGUE_PATH);
  REQUIRE_FALSE(committed.empty());
  CHECK(committed == catalogue_text());

  std::map<std::string, std::set<std::string>> anchors;
  for (const auto& suite : suite_names()) {
    for (const auto& c : suite_checks(suite)) anchors[family_of(c.id)].insert(c.anchor);
  }
  // One anchor per family.
  for (const auto& [family, set] : anchors) CHECK_MESSAGE(set.size() == 1, family);
  const auto families = catalogue_families(committed);
  CHECK(families.size() == anchors.size());
  for (const auto& f : families) CHECK_MESSAGE(anchors.count(f) == 1, "no check implements ", f);
}

TEST_CASE("decomposition tables") {
  auto cfg = config({"--n", "1"});
  const auto rows = emit_tables(cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 0);
  CHECK(rows[0].dim == 1);
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[1 + i].n == 1);
    CHECK(rows[1 + i].i == i);
    CHECK(rows[1 + i].s == 0);
    CHECK(rows[1 + i].dim == 1);
  }
  CHECK(tables_csv(rows) == "n,i,s,dim\n0,0,0,1\n1,0,0,1\n1,1,0,1\n1,2,0,1\n");

  const auto plane = config({"--n", "3", "--gram", "0 1; 1 0"});
  const fock::FockSpace space(plane.lattice);
  for (int n = 0; n <= 3; ++n) {
    int total = 0;
    for (const auto& r : level_table(space, n)) total += r.dim;
    CHECK(total == space.basis(n)->size());
  }

  cfg.fault = Fault::kTableShift;
  CHECK(emit_tables(cfg)[0].s == 1);
}
