#pragma once

#include "tdlc/system.hpp"

#include <map>

namespace tdlc::scenario {

inline constexpr int kSchemaVersion = 1;

struct Check {
  std::string type;  // addition, scale-link, lower-bound, monotonicity, identities, stable-below
  std::vector<std::string> subgroups;
  std::string expect = "PASS";  // verdict the verification suites require
};

struct Expect {
  std::optional<std::string> entropy;  // alpha
  std::optional<std::string> scale;
  std::optional<std::string> nub;  // "trivial", "whole" or a subgroup name
};

struct Scenario {
  std::string id;
  std::string description;
  SystemPtr system;
  std::vector<std::pair<std::string, Subgroup>> subgroups;  // in file order
  std::vector<Check> checks;
  std::vector<std::string> compute;
  std::optional<std::size_t> probe, tidy_probe, resolution;
  Expect expect;
  std::string canonical;  // the validated input, re-serialized with sorted keys

  const Subgroup& subgroup(const std::string& name) const;
};

// Validates against schema 1 and builds the system and named subgroups.
// Unknown fields, wrong types and inconsistent parameters raise InvalidInput.
Scenario parse(const std::string& json_text);
Scenario load(const std::string& path);

// "a", "-a", "a/b", "a/p^k"
Rational parse_rational(const std::string& s);

// built-in catalog, in a fixed order
const std::vector<std::string>& catalog_ids();
const std::string& catalog_source(const std::string& id);
Scenario catalog_scenario(const std::string& id);

}  // namespace tdlc::scenario
