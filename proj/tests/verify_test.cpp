#include "maxsym/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

using namespace maxsym;

namespace {

const VerificationReport& full_report() {
  static const VerificationReport report = run_verification();
  return report;
}

}  // namespace

TEST_CASE("the full claim suite passes") {
  const auto& report = full_report();
  CHECK(report.checks.size() >= 40);
  CHECK(report.failed() == 0);
  CHECK(report.all_passed());
  for (const auto& c : report.checks) {
    CHECK(c.pass);
    CHECK(c.expected == c.computed);
    CHECK(c.elapsed_ms >= 0.0);
    CHECK(!c.anchor.empty());
  }
}

TEST_CASE("check ids are unique and sorted") {
  const auto& report = full_report();
  std::set<std::string> ids;
  for (size_t i = 0; i < report.checks.size(); ++i) {
    ids.insert(report.checks[i].id);
    if (i > 0) CHECK(report.checks[i - 1].id < report.checks[i].id);
  }
  CHECK(ids.size() == report.checks.size());
}

TEST_CASE("check ids are stable against the golden list") {
  std::ifstream golden(std::string(MAXSYM_TEST_DATA_DIR) + "/check_ids.txt");
  REQUIRE(golden.good());
  std::vector<std::string> expected;
  std::string line;
  while (std::getline(golden, line))
    if (!line.empty()) expected.push_back(line);

  const auto& report = full_report();
  REQUIRE(report.checks.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(report.checks[i].id == expected[i]);
}

TEST_CASE("a tampered expectation fails exactly that check") {
  VerifyOptions options;
  options.expected_overrides["catalogue/order/Abar5"] = "121";
  auto report = run_verification(options);
  CHECK(report.failed() == 1);
  for (const auto& c : report.checks) {
    if (c.id == "catalogue/order/Abar5") {
      CHECK_FALSE(c.pass);
      CHECK(c.expected == "121");
      CHECK(c.computed == "120");
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("json report matches the shipped schema structure") {
  auto doc = nlohmann::json::parse(render_json(full_report()));
  REQUIRE(doc.is_object());
  CHECK(doc.at("report") == "verify-paper");
  CHECK(doc.at("total").is_number_unsigned());
  CHECK(doc.at("failed").is_number());
  REQUIRE(doc.at("checks").is_array());
  CHECK(doc.at("total").get<size_t>() == doc.at("checks").size());
  for (const auto& entry : doc.at("checks")) {
    REQUIRE(entry.is_object());
    CHECK(entry.size() == 6);
    CHECK(entry.at("id").is_string());
    CHECK(entry.at("anchor").is_string());
    CHECK(entry.at("expected").is_string());
    CHECK(entry.at("computed").is_string());
    CHECK(entry.at("pass").is_boolean());
    CHECK(entry.at("elapsed_ms").is_number());
  }
}

TEST_CASE("json key order is stable") {
  std::string text = render_json(full_report());
  size_t id_pos = text.find("\"id\"");
  size_t anchor_pos = text.find("\"anchor\"");
  size_t expected_pos = text.find("\"expected\"");
  CHECK(id_pos < anchor_pos);
  CHECK(anchor_pos < expected_pos);
}

TEST_CASE("csv report quotes fields containing commas") {
  std::string csv = render_csv(full_report());
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "id,anchor,expected,computed,pass,elapsed_ms");
  CHECK(csv.find("\"order/untwisted/C(2,2)\"") != std::string::npos);
}

TEST_CASE("text report prints one line per check plus a summary") {
  std::string text = render_text(full_report());
  size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == full_report().checks.size() + 1);
  CHECK(text.find("FAIL") == std::string::npos);
}
