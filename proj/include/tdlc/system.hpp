#pragma once

#include "tdlc/handles.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace tdlc {

class System;
using SystemPtr = std::shared_ptr<const System>;

struct Capabilities {
  bool quotient = false;
  bool restriction = false;
  bool set_product = true;
  bool images = true;
  bool plus_plus_certificate = false;
  bool structural_plus = false;
  bool entropy_oracle = false;
};

// A closed subgroup together with the structural facts about it that the
// dynamics layer needs. Built by describe_subgroup, never by hand.
struct ClosedSubgroupSpec {
  Subgroup subgroup;
  bool normal = false;
  bool compact = false;
  bool phi_invariant = false;  // phi(H) <= H
  bool phi_stable = false;     // phi(H) == H
  bool contains_kernel = false;
};

enum class ClosureStatus { closed, not_closed, unknown };

struct ClosureCertificate {
  ClosureStatus status = ClosureStatus::unknown;
  std::string reason;
};

// Result of a backend's own nub closure over a list of minimizing subgroups.
struct NubClosure {
  Subgroup nub;
  bool certified = false;
  std::string method;
};

// A totally disconnected locally compact group with a continuous
// endomorphism, seen through its closed-subgroup handles.
class System {
 public:
  virtual ~System() = default;

  virtual Backend backend() const = 0;
  virtual std::string name() const = 0;
  virtual Capabilities capabilities() const = 0;

  virtual Subgroup whole() const = 0;
  virtual Subgroup trivial() const = 0;
  // decreasing family of compact open subgroups, a neighbourhood base of 1
  virtual Subgroup base(std::size_t k) const = 0;

  virtual Subgroup intersect(const Subgroup& a, const Subgroup& b) const = 0;
  virtual Subgroup image(const Subgroup& u) const = 0;
  virtual Subgroup preimage(const Subgroup& u) const = 0;
  // the set AB, only meaningful when it is a subgroup
  virtual Subgroup set_product(const Subgroup& a, const Subgroup& b) const = 0;
  virtual bool contains(const Subgroup& outer, const Subgroup& inner) const = 0;
  // [outer : inner] assuming inner <= outer
  virtual IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const = 0;
  virtual bool is_normal(const Subgroup& h) const { (void)h; return true; }
  virtual bool commutes(const Subgroup& a, const Subgroup& b) const { (void)a; (void)b; return true; }
  virtual Subgroup kernel() const = 0;
  virtual std::string describe(const Subgroup& u) const = 0;

  virtual SystemPtr quotient(const ClosedSubgroupSpec& h) const;
  virtual SystemPtr restrict_to(const ClosedSubgroupSpec& h) const;
  // image of a subgroup K (containing H) in the coordinates of quotient(h)
  virtual Subgroup project(const ClosedSubgroupSpec& h, const Subgroup& k) const;
  // a subgroup of H (in G coordinates) moved into the coordinates of restrict_to(h)
  virtual Subgroup to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const;

  // ---- hooks used by the cotrajectory and dynamics layers ----

  // U_+ computed in closed form when the plain fixpoint iteration does not stop
  virtual std::optional<Subgroup> structural_plus(const Subgroup& u) const { (void)u; return std::nullopt; }
  virtual std::optional<Subgroup> structural_minus(const Subgroup& u) const { (void)u; return std::nullopt; }
  // smallest n from which alpha_n is guaranteed constant, given the
  // computed U_+ and the computed cotrajectory U_{-0..-N}
  virtual std::optional<std::size_t> alpha_bound(const Subgroup& u, const std::optional<Subgroup>& plus,
                                                 std::span<const Subgroup> minus) const;
  // is U_{++} = union of phi^n U_+ closed
  virtual ClosureCertificate plus_plus_closed(const Subgroup& plus, std::size_t probe) const;
  virtual std::optional<Integer> entropy_oracle() const { return std::nullopt; }
  virtual std::optional<Integer> scale_oracle() const { return std::nullopt; }
  virtual std::vector<Subgroup> scale_candidates(std::size_t depth) const;
  virtual std::vector<Subgroup> nub_candidates(std::size_t resolution) const;
  virtual NubClosure nub_closure(const std::vector<Subgroup>& minimizing, const Integer& scale) const;
};

// ---- checked front-end operations (backend tag and preconditions) ----

void require_same(const System& sys, const Subgroup& u);
Subgroup intersect(const System& sys, const Subgroup& a, const Subgroup& b);
Subgroup image(const System& sys, const Subgroup& u);
Subgroup preimage(const System& sys, const Subgroup& u);
Subgroup set_product(const System& sys, const Subgroup& a, const Subgroup& b);
bool contains(const System& sys, const Subgroup& outer, const Subgroup& inner);
// [outer : inner]; throws PreconditionError unless inner <= outer
IndexValue index(const System& sys, const Subgroup& outer, const Subgroup& inner);
// count of cosets l*inner for l in outer, inner not necessarily a subgroup of outer
IndexValue generalized_index(const System& sys, const Subgroup& outer, const Subgroup& inner);

ClosedSubgroupSpec describe_subgroup(const System& sys, const Subgroup& h);

// U_+ by fixpoint iteration (at most cap steps), then the backend closed form
std::optional<Subgroup> plus_group_of(const System& sys, const Subgroup& u, std::size_t cap);
std::optional<Subgroup> minus_group_of(const System& sys, const Subgroup& u, std::size_t cap);
// first n from which alpha_n is provably constant: a repeated cotrajectory
// term or the backend bound
std::optional<std::size_t> alpha_start(const System& sys, const Subgroup& u, const std::optional<Subgroup>& plus,
                                       std::span<const Subgroup> minus);

}  // namespace tdlc
