#pragma once

#include "tdlc/cotrajectory.hpp"

namespace tdlc::dynamics {

inline constexpr std::size_t kDefaultResolution = 2;

struct EntropyEntry {
  std::size_t k = 0;  // base element index
  Subgroup u;
  std::optional<ExactEntropy> value;  // absent when unresolved
  bool via_limit = false;             // from the α plateau instead of [φU₊ : U₊]
  std::string note;
};

struct EntropyReport {
  ExactEntropy value;
  std::optional<Subgroup> witness;
  std::size_t probed = 0;
  bool saturated = false;
  std::string certificate;
  std::vector<EntropyEntry> table;
};

// sup of the local entropies over base(0..probe)
EntropyReport topological_entropy(const System& sys, std::size_t probe = cotraj::kDefaultProbe);

struct ScaleReport {
  Integer value = 1;
  Subgroup witness;
  std::size_t probed = 0;
  std::optional<bool> oracle_agrees;
  bool witness_tidy_above = false;
  std::optional<bool> witness_tidy_below;
  bool certified = false;
  std::string certificate;
};

// min of [φU : U ∩ φU] over the base, the backend candidates and the
// tidy-above transforms of the base
ScaleReport scale(const System& sys, std::size_t probe = cotraj::kDefaultProbe);

struct NubReport {
  Subgroup nub;
  std::size_t resolution = 0;
  std::size_t minimizing = 0;
  bool certified = false;
  std::string certificate;
};

NubReport nub(const System& sys, std::size_t resolution = kDefaultResolution,
              std::size_t probe = cotraj::kDefaultProbe);

enum class Status { pass, fail, skipped, inconclusive };
const char* status_name(Status s);

struct Verdict {
  Status status = Status::pass;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;  // name -> alpha
};

// h(φ) = h(φ|H) + h(φ̄) for closed φ-stable H containing ker φ that is
// normal or compact
Verdict verify_addition_theorem(const System& sys, const Subgroup& h, std::size_t probe = cotraj::kDefaultProbe);

// log s = h on G/nub, h = log s + h on nub, and the equivalence of
// h = log s, nub trivial and zero entropy on nub
Verdict verify_scale_entropy_link(const System& sys, std::size_t probe = cotraj::kDefaultProbe,
                                  std::size_t resolution = kDefaultResolution);

struct LowerBound {
  ExactEntropy value;
  std::size_t accepted = 0;
  std::vector<std::string> rejected;
};

// max of log[φM : M] over compact M ≤ φM
LowerBound entropy_lower_bound(const System& sys, const std::vector<Subgroup>& candidates);

// entropy on a restriction and on a compact quotient never exceeds h(φ);
// for compact φ-invariant H the quotient table over base elements
// containing H equals the original one
Verdict verify_monotonicity(const System& sys, const Subgroup& h, std::size_t probe = cotraj::kDefaultProbe);

}  // namespace tdlc::dynamics
