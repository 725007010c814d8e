#include "doctest.h"
#include "hopf/parser.hpp"
#include "hopf/suite.hpp"

#include "json.hpp"

#include <set>

using namespace hopf;

TEST_SUITE("suite") {
  TEST_CASE("glob") {
    CHECK(glob_match("*", "confluence.A"));
    CHECK(glob_match("confluence.*", "confluence.Atilde"));
    CHECK(glob_match("cleft.?gen.*", "cleft.Agen.section"));
    CHECK_FALSE(glob_match("cleft.A.*", "cleft.Agen.section"));
    CHECK_FALSE(glob_match("quantum", "quantum.KE"));
  }

  TEST_CASE("registry") {
    std::set<std::string> ids;
    std::set<int> criteria;
    for (const RegisteredCheck& c : registered_checks()) {
      CHECK(ids.insert(c.id).second);
      criteria.insert(c.criteria.begin(), c.criteria.end());
    }
    for (int k = 1; k <= 14; ++k) CHECK_MESSAGE(criteria.count(k), "criterion " << k);
  }

  TEST_CASE("filtered run and JSON report") {
    SuiteOptions opts;
    opts.filter = "commutation.*";
    opts.algebra = "Atilde";
    opts.field = "F7";
    const SuiteReport report = run_suite(opts);
    CHECK(report.results.size() == 8);
    CHECK(report.exit_code() == 0);
    const auto doc = nlohmann::json::parse(report.to_json());
    CHECK(doc["summary"]["pass"] == 8);
    std::string previous;
    for (const auto& r : doc["results"]) {
      CHECK(r["field"] == "F7");
      CHECK(r["status"] == "pass");
      CHECK(r["check_id"].get<std::string>() > previous);
      previous = r["check_id"].get<std::string>();
    }
  }

  TEST_CASE("root-free field skips") {
    SuiteOptions opts;
    opts.filter = "quantum.*";
    opts.field = "Q";
    const SuiteReport report = run_suite(opts);
    CHECK(report.skipped() == report.results.size());
    CHECK(report.exit_code() == 0);
  }

  TEST_CASE("negative control files fail") {
    SuiteOptions opts;
    CHECK(run_file_checks(data_directory() + "/negative/nonconfluent.hpf", opts).exit_code() == 1);
    CHECK(run_file_checks(data_directory() + "/negative/bad-coproduct.hpf", opts).exit_code() == 1);
    CHECK(run_file_checks(data_directory() + "/negative/bad-antipode.hpf", opts).exit_code() == 1);
    CHECK(run_file_checks(data_directory() + "/A.hpf", opts).exit_code() == 0);
  }

  TEST_CASE("configuration errors") {
    SuiteOptions opts;
    opts.field = "F5";
    CHECK_THROWS(run_suite(opts));
    opts.field = "Qr";
    opts.filter = "nothing.*";
    CHECK_THROWS_AS(run_suite(opts), std::invalid_argument);
    opts.filter = "*";
    opts.algebra = "Z";
    CHECK_THROWS_AS(run_suite(opts), std::invalid_argument);
  }
}
