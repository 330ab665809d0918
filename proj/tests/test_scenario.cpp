#include <doctest.h>

#include "tdlc/suites.hpp"

using namespace tdlc;

namespace {

const char* kHalf = R"({"schema": 1, "id": "half", "backend": "padic", "prime": 2, "dim": 1,
  "matrix": [["1/2"]], "subgroups": {"Z2": {"kind": "base", "k": 0}},
  "compute": ["entropy", "scale"], "expect": {"entropy": "2", "scale": "2"}})";

std::string with(const std::string& field) {
  std::string s = kHalf;
  return s.substr(0, s.size() - 1) + ", " + field + "}";
}

}  // namespace

TEST_CASE("rationals in scenario files") {
  CHECK(scenario::parse_rational("3") == Rational(3));
  CHECK(scenario::parse_rational("-3/6") == Rational(-1, 2));
  CHECK(scenario::parse_rational("5/2^3") == Rational(5, 8));
  CHECK_THROWS_AS(scenario::parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(scenario::parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(scenario::parse_rational(""), InvalidInput);
}

TEST_CASE("scenario parsing is strict") {
  auto sc = scenario::parse(kHalf);
  CHECK(sc.id == "half");
  CHECK(sc.system->backend() == Backend::padic);
  CHECK(sc.subgroup("Z2") == sc.system->base(0));
  CHECK_THROWS_AS(scenario::parse(with(R"("colour": 1)")), InvalidInput);
  CHECK_THROWS_AS(scenario::parse(R"({"schema": 2, "id": "x", "backend": "finite", "group": "S3", "map": "identity"})"),
                  InvalidInput);
  CHECK_THROWS_AS(scenario::parse(R"({"schema": 1, "id": "x", "backend": "finite", "group": "S3", "map": [0, 0, 0, 0, 0, 1]})"),
                  InvalidInput);
  CHECK_THROWS_AS(scenario::parse(with(R"("checks": [{"type": "addition", "args": {"subgroup": "nope"}}])")),
                  InvalidInput);
  CHECK_THROWS_AS(scenario::parse(with(R"("probe": -1)")), InvalidInput);
  CHECK_THROWS_AS(scenario::parse("{not json"), InvalidInput);
}

TEST_CASE("every catalog entry parses and its id matches") {
  CHECK(scenario::catalog_ids().size() >= 20);
  for (const auto& id : scenario::catalog_ids()) {
    CAPTURE(id);
    CHECK(scenario::catalog_scenario(id).id == id);
  }
  CHECK_THROWS(scenario::catalog_source("no_such_entry"));
}

TEST_CASE("reports: json and csv") {
  auto sc = scenario::parse(kHalf);
  auto rep = report::run(sc, sc.compute, true, {});
  CHECK_FALSE(rep.failed);
  CHECK_FALSE(rep.unresolved);
  const std::string json = report::to_json({rep});
  CHECK(json == report::to_json({report::run(sc, sc.compute, true, {})}));
  CHECK(json.find("\"version\"") != std::string::npos);
  const std::string csv = report::to_csv({rep});
  CHECK(csv.rfind("scenario,quantity,alpha,infinite,certified\n", 0) == 0);
  CHECK(csv.find("half,entropy,2,") != std::string::npos);
}

TEST_CASE("a wrong expectation marks the report failed") {
  auto sc = scenario::parse(R"({"schema": 1, "id": "bad", "backend": "padic", "prime": 2, "dim": 1,
    "matrix": [["1/2"]], "compute": ["scale"], "expect": {"scale": "4"}})");
  CHECK(report::run(sc, sc.compute, false, {}).failed);
}

TEST_CASE("limits: command line over scenario over defaults") {
  auto sc = scenario::parse(with(R"("probe": 20)"));
  CHECK(report::resolve(sc, {}).probe == 20);
  report::Options o;
  o.probe = 30;
  CHECK(report::resolve(sc, o).probe == 30);
  CHECK(report::resolve(scenario::parse(kHalf), {}).probe == 64);
}
