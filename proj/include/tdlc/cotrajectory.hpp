#pragma once

#include "tdlc/system.hpp"

namespace tdlc::cotraj {

inline constexpr std::size_t kDefaultProbe = 64;
inline constexpr std::size_t kDefaultTidyProbe = 16;

// U_{-n} = U ∩ φ⁻¹U ∩ ... ∩ φ⁻ⁿU
Subgroup minus_n(const System& sys, const Subgroup& u, std::size_t n);
// U_0 = U, U_{n+1} = U ∩ φU_n
Subgroup plus_n(const System& sys, const Subgroup& u, std::size_t n);

struct Row {
  std::size_t n = 0;
  Subgroup minus;
  std::optional<Subgroup> plus;  // absent when the backend has no images
  IndexValue c;                  // [U : U_{-n}]
  IndexValue alpha;              // [U_{-n} : U_{-n-1}]
};

struct CotrajectoryTable {
  Subgroup base;
  std::vector<Row> rows;  // n = 0..n_max
  std::optional<std::size_t> stable_from;
  std::string certificate;

  // alpha at the certified plateau; throws Unresolved otherwise
  IndexValue limit() const;
};

CotrajectoryTable alpha_sequence(const System& sys, const Subgroup& u, std::size_t n_max);

enum class PlusMethod { fixpoint, structural };
const char* method_name(PlusMethod m);

struct PlusGroupResult {
  Subgroup group;
  PlusMethod method = PlusMethod::fixpoint;
  std::size_t steps = 0;
};

PlusGroupResult plus_group(const System& sys, const Subgroup& u, std::size_t cap = kDefaultProbe);
PlusGroupResult minus_group(const System& sys, const Subgroup& u, std::size_t cap = kDefaultProbe);

// log[φU₊ : U₊]
ExactEntropy htop_local(const System& sys, const Subgroup& u, std::size_t cap = kDefaultProbe);
// log of the certified plateau value of α
ExactEntropy htop_limit_estimate(const System& sys, const Subgroup& u, std::size_t n_max = kDefaultProbe);

// [φU : U ∩ φU]
IndexValue displacement(const System& sys, const Subgroup& u);

bool is_tidy_above(const System& sys, const Subgroup& u, std::size_t cap = kDefaultProbe);
// the first U_{-n} that is tidy above
Subgroup tidy_above_transform(const System& sys, const Subgroup& u, std::size_t probe = kDefaultTidyProbe);

struct TidyBelow {
  bool holds = false;
  bool indirect = false;  // decided through the minimizing property
  std::string reason;
};

// U₊₊ closed and [φⁿ⁺¹U₊ : φⁿU₊] constant for n ≤ probe; when closedness
// is undecided and the scale is known, falls back to U being minimizing
TidyBelow is_tidy_below(const System& sys, const Subgroup& u, std::size_t probe = kDefaultTidyProbe,
                        const std::optional<Integer>& scale = std::nullopt);

bool is_minimizing(const System& sys, const Subgroup& u, const Integer& scale);

// identities between the two cotrajectories, checked for n ≤ probe
struct IdentityCounts {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

IdentityCounts check_identities(const System& sys, const Subgroup& u, std::size_t probe = kDefaultTidyProbe);
// every φ-stable compact H ≤ U lies in every U_n
IdentityCounts check_stable_below(const System& sys, const Subgroup& u, const Subgroup& h,
                                  std::size_t probe = kDefaultTidyProbe);

}  // namespace tdlc::cotraj
