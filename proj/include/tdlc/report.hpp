#pragma once

#include "tdlc/dynamics.hpp"
#include "tdlc/scenario.hpp"

#include <json.hpp>

namespace tdlc::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "tdlc 0.1.0";

// limits given on the command line; unset values fall back to the scenario,
// then to the defaults
struct Options {
  std::optional<std::size_t> probe, tidy_probe, resolution;
  bool timing = false;
};

struct Limits {
  std::size_t probe = cotraj::kDefaultProbe;
  std::size_t tidy_probe = cotraj::kDefaultTidyProbe;
  std::size_t resolution = dynamics::kDefaultResolution;
};

Limits resolve(const scenario::Scenario& sc, const Options& opt);

struct Row {
  std::string quantity;
  std::string alpha;
  bool infinite = false;
  bool certified = false;
};

struct Report {
  std::string scenario;
  Json body;
  std::vector<Row> rows;
  bool failed = false;      // a check or expectation disagrees
  bool unresolved = false;  // something is only a bound or inconclusive
};

// computations from {entropy, scale, nub, tidy, cotraj}; checks run when
// with_checks is set
Report run(const scenario::Scenario& sc, const std::vector<std::string>& computations, bool with_checks,
           const Options& opt);

// runs one scenario check and returns its verdict
dynamics::Verdict run_check(const scenario::Scenario& sc, const scenario::Check& c, const Limits& lim);

std::string to_json(const std::vector<Report>& reports);
std::string to_csv(const std::vector<Report>& reports);

}  // namespace tdlc::report
