// End-to-end tests against the installed CLI binary; the path arrives via
// the MAXSYM_CLI environment variable set by CTest.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* binary = std::getenv("MAXSYM_CLI");
  REQUIRE_MESSAGE(binary != nullptr, "MAXSYM_CLI must point at the maxsym binary");
  std::string command = std::string(binary) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("classify prints the geometry class first") {
  auto euclidean = run_cli("classify --labels 4,4,2,2,2,3");
  CHECK(euclidean.exit_code == 0);
  CHECK(first_line(euclidean.output) == "Euclidean");
  CHECK(contains(euclidean.output, "vertex triples"));
  CHECK(contains(euclidean.output, "leading minors"));

  auto spherical = run_cli("classify --labels 2,2,2,2,2,2");
  CHECK(spherical.exit_code == 0);
  CHECK(first_line(spherical.output) == "Spherical");

  auto border = run_cli("classify --labels 6,2,2,2,2,3");
  CHECK(border.exit_code == 0);
  CHECK(first_line(border.output) == "NotCoxeter");
}

TEST_CASE("classify rejects malformed labels with exit 2") {
  CHECK(run_cli("classify --labels 4,4,2,2,2").exit_code == 2);
  CHECK(run_cli("classify --labels 4,4,2,2,2,x").exit_code == 2);
  CHECK(run_cli("classify --labels 1,2,2,2,2,2").exit_code == 2);
  CHECK(run_cli("classify").exit_code == 2);
}

TEST_CASE("classify renders json on request") {
  auto r = run_cli("classify --labels 3,5,2,2,2,3 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("class") == "Spherical");
  CHECK(doc.at("tetrahedron") == "C(3,5;2,2;2,3)");
  CHECK(doc.at("leading_minors").size() == 4);
}

TEST_CASE("order reproduces the published genera") {
  auto h4 = run_cli("order --family C --n 3 --m 5");
  CHECK(h4.exit_code == 0);
  CHECK(first_line(h4.output) == "14400 (genus 601)");

  auto taumu = run_cli("order --family Ctaumu --n 2 --m 2");
  CHECK(taumu.exit_code == 0);
  CHECK(first_line(taumu.output) == "144 (genus 4 at 48(g-1))");

  auto tau = run_cli("order --family Ctau --n 2 --m 3");
  CHECK(tau.exit_code == 0);
  CHECK(first_line(tau.output) == "240 (genus 11)");
}

TEST_CASE("order reports exceeded with a geometry certificate and exit 3") {
  auto r = run_cli("order --family C --n 5 --m 5 --budget 100000");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "exceeded"));
  CHECK(contains(r.output, "Hyperbolic"));
}

TEST_CASE("order rejects invalid family combinations with exit 2") {
  CHECK(run_cli("order --family Cmu --n 2 --m 3").exit_code == 2);
  CHECK(run_cli("order --family Ctaumu --n 2 --m 3").exit_code == 2);
  CHECK(run_cli("order --family X --n 2 --m 2").exit_code == 2);
  CHECK(run_cli("order --family C --n 1 --m 2").exit_code == 2);
  CHECK(run_cli("order").exit_code == 2);
}

TEST_CASE("order accepts raw labels and prints the presentation") {
  auto r = run_cli("order --labels 2,3,2,2,2,3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "presentation: r1,r2,r3,r4 | r1^2/r2^2/r3^2/r4^2/(r1 r2)^3/"));
  CHECK(contains(r.output, "order: 48"));

  auto twisted = run_cli("order --labels 2,2,3,3,2,2 --twists tau");
  CHECK(twisted.exit_code == 0);
  CHECK(contains(twisted.output, "order: 72"));
  CHECK(contains(twisted.output, "t r1 t r2^-1"));
}

TEST_CASE("the coset budget environment variable is honored") {
  const char* binary = std::getenv("MAXSYM_CLI");
  REQUIRE(binary != nullptr);
  std::string command = std::string("MAXSYM_COSET_BUDGET=5 ") + binary + " order --family C --n 2 --m 2 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
  CHECK(contains(output, "exceeded (budget 5)"));
}

TEST_CASE("glue classifies the boundary identifications") {
  auto dbl = run_cli("glue --left H5 --right H5 --map id");
  CHECK(dbl.exit_code == 0);
  CHECK(first_line(dbl.output) == "Double(H,5)");

  auto mismatch = run_cli("glue --left H2 --right Ht2 --map id");
  CHECK(mismatch.exit_code == 0);
  CHECK(first_line(mismatch.output) == "TypeMismatch");

  auto twisted = run_cli("glue --left Ht5 --right Ht5 --map refl");
  CHECK(twisted.exit_code == 0);
  CHECK(first_line(twisted.output) == "TwistedCoxeterQuotient(5,5)");
  CHECK(contains(twisted.output, "quotient: C(5,5;3,3;2,2)"));
  CHECK(contains(twisted.output, "geometry: Hyperbolic"));

  auto bad = run_cli("glue --left H4 --right H5 --map id");
  CHECK(bad.exit_code == 0);
  CHECK(first_line(bad.output) == "BadOrbifold(4,5)");
}

TEST_CASE("glue rejects unknown arguments with exit 2") {
  CHECK(run_cli("glue --left H9 --right H5 --map id").exit_code == 2);
  CHECK(run_cli("glue --left H2 --right H3 --map flip").exit_code == 2);
  CHECK(run_cli("glue --left H2 --map id").exit_code == 2);
}

TEST_CASE("enumerate lists canonical labelings") {
  auto r = run_cli("enumerate --max-label 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2,2,2,2,2,2 Spherical\n");
  CHECK(run_cli("enumerate --max-label 1").exit_code == 2);
}

TEST_CASE("twisted families over infinite bases report exceeded") {
  auto r = run_cli("order --family Ctau --n 3 --m 3 --budget 50000");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "exceeded (budget 50000)"));
  CHECK(contains(r.output, "Euclidean"));
}

TEST_CASE("amalgams lists chi values") {
  auto eight = run_cli("amalgams");
  CHECK(eight.exit_code == 0);
  CHECK(std::count(eight.output.begin(), eight.output.end(), '\n') == 8);
  CHECK(contains(eight.output, "Dbar5 *_Zbar5 Abar5 chi=-1/24"));

  auto twelve = run_cli("amalgams --orientation-preserving");
  CHECK(twelve.exit_code == 0);
  CHECK(std::count(twelve.output.begin(), twelve.output.end(), '\n') == 12);
  CHECK(contains(twelve.output, "D5 *_Z5 A5 chi=-1/12"));
}

TEST_CASE("search-minimal leads with the octet") {
  auto r = run_cli("search-minimal --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(first_line(r.output), "chi=-1/24"));
  CHECK(contains(r.output, "Dbar2 *_Zbar2 Dbar3 chi=-1/24"));
  CHECK(contains(r.output, "admissibility table"));
}

TEST_CASE("verify-paper passes and is deterministic") {
  auto text = run_cli("verify-paper");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "checks passed"));
  CHECK(!contains(text.output, "FAIL"));

  auto first = run_cli("verify-paper --format json");
  auto second = run_cli("verify-paper --format json");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  auto normalize = [](const std::string& text_in) {
    auto doc = nlohmann::ordered_json::parse(text_in);
    for (auto& check : doc.at("checks")) check["elapsed_ms"] = 0.0;
    return doc.dump(2);
  };
  CHECK(normalize(first.output) == normalize(second.output));

  auto csv = run_cli("verify-paper --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(first_line(csv.output) == "id,anchor,expected,computed,pass,elapsed_ms");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("verify-paper --format yaml").exit_code == 2);
}
