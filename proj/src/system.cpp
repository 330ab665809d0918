#include "tdlc/system.hpp"

namespace tdlc {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::finite: return "finite";
    case Backend::padic: return "padic";
    case Backend::shift: return "shift";
    case Backend::product: return "product";
  }
  return "?";
}

static long floor_mod(long i, std::size_t n) {
  long m = static_cast<long>(n);
  long r = i % m;
  return r < 0 ? r + m : r;
}

int Profile::left_at(long i) const { return left[floor_mod(i, left.size())]; }
int Profile::right_at(long i) const { return right[floor_mod(i, right.size())]; }

int Profile::at(long i) const {
  if (i < start) return left_at(i);
  if (i < end()) return window[i - start];
  return right_at(i);
}

bool operator==(const ProductSubgroup& a, const ProductSubgroup& b) {
  return *a.first == *b.first && *a.second == *b.second;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.payload == b.payload && a.compact == b.compact && a.open == b.open;
}

Subgroup make_pair(Subgroup a, Subgroup b) {
  Subgroup s;
  s.compact = a.compact && b.compact;
  s.open = a.open && b.open;
  s.payload = ProductSubgroup{std::make_shared<const Subgroup>(std::move(a)),
                              std::make_shared<const Subgroup>(std::move(b))};
  return s;
}

SystemPtr System::quotient(const ClosedSubgroupSpec&) const {
  throw CapabilityError(name() + ": quotients are not supported");
}

SystemPtr System::restrict_to(const ClosedSubgroupSpec&) const {
  throw CapabilityError(name() + ": restriction is not supported");
}

Subgroup System::project(const ClosedSubgroupSpec&, const Subgroup&) const {
  throw CapabilityError(name() + ": projection to a quotient is not supported");
}

Subgroup System::to_restricted(const ClosedSubgroupSpec&, const Subgroup&) const {
  throw CapabilityError(name() + ": restriction is not supported");
}

std::optional<std::size_t> System::alpha_bound(const Subgroup&, const std::optional<Subgroup>&,
                                               std::span<const Subgroup>) const {
  return std::nullopt;
}

ClosureCertificate System::plus_plus_closed(const Subgroup&, std::size_t) const {
  return {ClosureStatus::unknown, "no closedness test for this backend"};
}

std::vector<Subgroup> System::scale_candidates(std::size_t depth) const {
  std::vector<Subgroup> out;
  for (std::size_t k = 0; k <= depth; ++k) out.push_back(base(k));
  return out;
}

std::vector<Subgroup> System::nub_candidates(std::size_t resolution) const { return scale_candidates(resolution); }

NubClosure System::nub_closure(const std::vector<Subgroup>& minimizing, const Integer&) const {
  if (minimizing.empty()) throw Unresolved(name() + ": no minimizing subgroup among the candidates");
  Subgroup acc = minimizing.front();
  for (std::size_t i = 1; i < minimizing.size(); ++i) acc = intersect(acc, minimizing[i]);
  return {acc, false, "intersection of probed minimizing candidates"};
}

void require_same(const System& sys, const Subgroup& u) {
  if (u.backend() != sys.backend())
    throw BackendMismatch(std::string("handle from backend ") + backend_name(u.backend()) + " used with " +
                          backend_name(sys.backend()) + " system");
}

Subgroup intersect(const System& sys, const Subgroup& a, const Subgroup& b) {
  require_same(sys, a);
  require_same(sys, b);
  return sys.intersect(a, b);
}

Subgroup image(const System& sys, const Subgroup& u) {
  require_same(sys, u);
  return sys.image(u);
}

Subgroup preimage(const System& sys, const Subgroup& u) {
  require_same(sys, u);
  return sys.preimage(u);
}

Subgroup set_product(const System& sys, const Subgroup& a, const Subgroup& b) {
  require_same(sys, a);
  require_same(sys, b);
  if (!sys.commutes(a, b)) throw PreconditionError("set product of non-permuting subgroups is not a subgroup");
  return sys.set_product(a, b);
}

bool contains(const System& sys, const Subgroup& outer, const Subgroup& inner) {
  require_same(sys, outer);
  require_same(sys, inner);
  return sys.contains(outer, inner);
}

IndexValue index(const System& sys, const Subgroup& outer, const Subgroup& inner) {
  if (!contains(sys, outer, inner))
    throw PreconditionError("index: " + sys.describe(inner) + " is not contained in " + sys.describe(outer));
  return sys.raw_index(outer, inner);
}

IndexValue generalized_index(const System& sys, const Subgroup& outer, const Subgroup& inner) {
  return index(sys, outer, intersect(sys, outer, inner));
}

ClosedSubgroupSpec describe_subgroup(const System& sys, const Subgroup& h) {
  require_same(sys, h);
  ClosedSubgroupSpec s;
  s.subgroup = h;
  s.normal = sys.is_normal(h);
  s.compact = h.compact;
  Subgroup img = sys.image(h);
  s.phi_invariant = sys.contains(h, img);
  s.phi_stable = s.phi_invariant && img == h;
  s.contains_kernel = sys.contains(h, sys.kernel());
  return s;
}

std::optional<Subgroup> plus_group_of(const System& sys, const Subgroup& u, std::size_t cap) {
  if (sys.capabilities().images) {
    Subgroup x = u;
    for (std::size_t n = 0; n < cap; ++n) {
      Subgroup next = sys.intersect(u, sys.image(x));
      if (next == x) return x;
      x = next;
    }
  }
  return sys.structural_plus(u);
}

std::optional<Subgroup> minus_group_of(const System& sys, const Subgroup& u, std::size_t cap) {
  Subgroup x = u;
  for (std::size_t n = 0; n < cap; ++n) {
    Subgroup next = sys.intersect(u, sys.preimage(x));
    if (next == x) return x;
    x = next;
  }
  return sys.structural_minus(u);
}

std::optional<std::size_t> alpha_start(const System& sys, const Subgroup& u, const std::optional<Subgroup>& plus,
                                       std::span<const Subgroup> minus) {
  std::optional<std::size_t> fix;
  for (std::size_t n = 0; n + 1 < minus.size(); ++n)
    if (minus[n] == minus[n + 1]) {
      fix = n;
      break;
    }
  auto bound = sys.alpha_bound(u, plus, minus);
  if (fix && bound) return std::min(*fix, *bound);
  return fix ? fix : bound;
}

}  // namespace tdlc
