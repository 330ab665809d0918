#pragma once

#include "tdlc/report.hpp"

namespace tdlc::suites {

struct Line {
  std::string suite;
  std::string subject;
  dynamics::Status status = dynamics::Status::pass;
  std::string detail;
};

struct Result {
  std::vector<Line> lines;
  std::size_t count(dynamics::Status s) const;
  bool ok(bool strict) const;
};

// indices, cotrajectory, limit-free, addition, scale-link, scale, monotonicity,
// oracle, product, expectations
const std::vector<std::string>& suite_names();

// "all" runs every suite in the order above
Result run(const std::string& name, const report::Options& opt = {});

std::string to_json(const std::string& name, const Result& r);

}  // namespace tdlc::suites
