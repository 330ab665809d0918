#include "tdlc/cotrajectory.hpp"

namespace tdlc::cotraj {

namespace {

void require_compact_open(const System& sys, const Subgroup& u) {
  require_same(sys, u);
  if (!u.compact || !u.open) throw PreconditionError(sys.describe(u) + " is not compact open");
}

void require_images(const System& sys) {
  if (!sys.capabilities().images) throw CapabilityError(sys.name() + ": forward images are not available");
}

std::string at_n(const std::string& what, std::size_t n) { return what + " at n=" + std::to_string(n); }

}  // namespace

Subgroup minus_n(const System& sys, const Subgroup& u, std::size_t n) {
  require_compact_open(sys, u);
  Subgroup x = u;
  for (std::size_t i = 0; i < n; ++i) x = sys.intersect(u, sys.preimage(x));
  return x;
}

Subgroup plus_n(const System& sys, const Subgroup& u, std::size_t n) {
  require_compact_open(sys, u);
  require_images(sys);
  Subgroup x = u;
  for (std::size_t i = 0; i < n; ++i) x = sys.intersect(u, sys.image(x));
  return x;
}

IndexValue CotrajectoryTable::limit() const {
  if (!stable_from) throw Unresolved("alpha sequence has no certified plateau: " + certificate);
  return rows[*stable_from].alpha;
}

CotrajectoryTable alpha_sequence(const System& sys, const Subgroup& u, std::size_t n_max) {
  require_compact_open(sys, u);
  if (n_max < 1) throw PreconditionError("alpha_sequence needs n_max >= 1");
  const bool images = sys.capabilities().images;
  std::vector<Subgroup> minus{u};
  for (std::size_t n = 0; n <= n_max; ++n) minus.push_back(sys.intersect(u, sys.preimage(minus.back())));

  CotrajectoryTable t;
  t.base = u;
  Subgroup plus = u;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Row r;
    r.n = n;
    r.minus = minus[n];
    if (images) {
      r.plus = plus;
      plus = sys.intersect(u, sys.image(plus));
    }
    r.c = index(sys, u, minus[n]);
    r.alpha = index(sys, minus[n], minus[n + 1]);
    if (n > 0) {
      const Row& prev = t.rows.back();
      if (!divides(prev.c, r.c) || prev.c * prev.alpha != r.c)
        throw InvariantViolation(at_n("c_n does not divide c_{n+1} with quotient alpha_n", n - 1));
      if (r.alpha > prev.alpha) throw InvariantViolation(at_n("alpha increases", n));
    }
    t.rows.push_back(std::move(r));
  }

  std::optional<Subgroup> plus_group_opt;
  auto start = alpha_start(sys, u, std::nullopt, minus);
  if (!start) {
    try {
      plus_group_opt = plus_group(sys, u, n_max).group;
      start = alpha_start(sys, u, plus_group_opt, minus);
    } catch (const Unresolved&) {
    }
  }
  if (!start || *start > n_max) {
    t.certificate = "no backend certificate for the plateau within n_max=" + std::to_string(n_max);
    return t;
  }
  std::size_t m = n_max;
  while (m > 0 && t.rows[m - 1].alpha == t.rows[n_max].alpha) --m;
  t.stable_from = m;
  t.certificate = "alpha constant from n=" + std::to_string(*start) + " by " + backend_name(sys.backend()) +
                  " backend certificate";
  return t;
}

const char* method_name(PlusMethod m) { return m == PlusMethod::fixpoint ? "fixpoint" : "structural"; }

PlusGroupResult plus_group(const System& sys, const Subgroup& u, std::size_t cap) {
  require_compact_open(sys, u);
  const bool images = sys.capabilities().images;
  Subgroup x = u;
  std::size_t steps = 0;
  if (images)
    for (; steps < cap; ++steps) {
      Subgroup next = sys.intersect(u, sys.image(x));
      if (next == x) return {x, PlusMethod::fixpoint, steps};
      x = std::move(next);
    }
  auto s = sys.structural_plus(u);
  if (!s) throw Unresolved(sys.name() + ": U+ not reached within " + std::to_string(cap) + " steps");
  if (!sys.contains(x, *s) || (images && sys.intersect(u, sys.image(*s)) != *s))
    throw InvariantViolation(sys.name() + ": structural U+ fails U+ = U ∩ φU+");
  return {*s, PlusMethod::structural, steps};
}

PlusGroupResult minus_group(const System& sys, const Subgroup& u, std::size_t cap) {
  require_compact_open(sys, u);
  Subgroup x = u;
  std::size_t steps = 0;
  for (; steps < cap; ++steps) {
    Subgroup next = sys.intersect(u, sys.preimage(x));
    if (next == x) return {x, PlusMethod::fixpoint, steps};
    x = std::move(next);
  }
  auto s = sys.structural_minus(u);
  if (!s) throw Unresolved(sys.name() + ": U- not reached within " + std::to_string(cap) + " steps");
  if (!sys.contains(x, *s) || sys.intersect(u, sys.preimage(*s)) != *s)
    throw InvariantViolation(sys.name() + ": structural U- fails U- = U ∩ φ⁻¹U-");
  return {*s, PlusMethod::structural, steps};
}

ExactEntropy htop_local(const System& sys, const Subgroup& u, std::size_t cap) {
  require_images(sys);
  Subgroup plus = plus_group(sys, u, cap).group;
  return ExactEntropy::log_of(index(sys, sys.image(plus), plus));
}

ExactEntropy htop_limit_estimate(const System& sys, const Subgroup& u, std::size_t n_max) {
  return ExactEntropy::log_of(alpha_sequence(sys, u, n_max).limit());
}

IndexValue displacement(const System& sys, const Subgroup& u) {
  require_images(sys);
  return generalized_index(sys, sys.image(u), u);
}

bool is_tidy_above(const System& sys, const Subgroup& u, std::size_t cap) {
  if (!sys.capabilities().set_product) throw CapabilityError(sys.name() + ": set products are not available");
  Subgroup plus = plus_group(sys, u, cap).group;
  Subgroup minus = minus_group(sys, u, cap).group;
  if (!sys.commutes(plus, minus)) return false;
  return sys.set_product(plus, minus) == u;
}

Subgroup tidy_above_transform(const System& sys, const Subgroup& u, std::size_t probe) {
  Subgroup x = u;
  for (std::size_t n = 0; n <= probe; ++n) {
    if (is_tidy_above(sys, x)) return x;
    x = sys.intersect(u, sys.preimage(x));
  }
  throw Unresolved(sys.name() + ": no U_{-n} tidy above for n <= " + std::to_string(probe));
}

bool is_minimizing(const System& sys, const Subgroup& u, const Integer& scale) {
  return displacement(sys, u) == IndexValue(scale);
}

TidyBelow is_tidy_below(const System& sys, const Subgroup& u, std::size_t probe, const std::optional<Integer>& scale) {
  require_images(sys);
  Subgroup plus = plus_group(sys, u).group;
  Subgroup y = plus;
  std::optional<IndexValue> step;
  for (std::size_t n = 0; n <= probe; ++n) {
    Subgroup next = sys.image(y);
    IndexValue d = index(sys, next, y);
    if (step && d != *step) return {false, false, at_n("index [φⁿ⁺¹U+ : φⁿU+] changes", n)};
    step = d;
    y = std::move(next);
  }
  ClosureCertificate cert = sys.plus_plus_closed(plus, probe);
  switch (cert.status) {
    case ClosureStatus::closed: return {true, false, cert.reason};
    case ClosureStatus::not_closed: return {false, false, cert.reason};
    case ClosureStatus::unknown: break;
  }
  if (scale && is_tidy_above(sys, u))
    return {is_minimizing(sys, u, *scale), true, "closedness undecided (" + cert.reason + "); tidy above and minimizing"};
  throw Unresolved(sys.name() + ": closedness of U++ undecided: " + cert.reason);
}

IdentityCounts check_identities(const System& sys, const Subgroup& u, std::size_t probe) {
  require_compact_open(sys, u);
  require_images(sys);
  IdentityCounts out;
  auto check = [&](bool ok, std::string what) {
    ++out.checked;
    if (!ok) out.failures.push_back(sys.describe(u) + ": " + std::move(what));
  };
  CotrajectoryTable t;
  try {
    t = alpha_sequence(sys, u, probe + 1);
  } catch (const InvariantViolation& e) {
    check(false, e.what());
    return out;
  }
  check(true, "alpha monotone and c_n divisibility");
  auto minus = [&](std::size_t n) -> const Subgroup& { return t.rows[n].minus; };
  auto plus = [&](std::size_t n) -> const Subgroup& { return *t.rows[n].plus; };

  for (std::size_t n = 0; n <= probe; ++n) {
    // φᵏU₋ₙ = Uₖ ∩ U_{k-n}, which for k = n reads φⁿU₋ₙ = Uₙ
    Subgroup img = minus(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) img = sys.image(img);
      check(img == sys.intersect(plus(k), minus(n - k)), at_n("φᵏU₋ₙ != Uₖ ∩ U_{k-n}", n) + ", k=" + std::to_string(k));
    }
    check(index(sys, sys.image(plus(n)), plus(n + 1)) == t.rows[n].alpha, at_n("[φUₙ : Uₙ₊₁] != alpha_n", n));
  }
  Subgroup up = plus_group(sys, u).group;
  check(sys.contains(u, up) && sys.intersect(u, sys.image(up)) == up, "U+ != U ∩ φU+");
  check(!index(sys, sys.image(up), up).is_infinite(), "[φU+ : U+] infinite");
  return out;
}

IdentityCounts check_stable_below(const System& sys, const Subgroup& u, const Subgroup& h, std::size_t probe) {
  require_compact_open(sys, u);
  require_same(sys, h);
  if (!h.compact || !sys.contains(u, h) || sys.image(h) != h)
    throw PreconditionError(sys.describe(h) + " is not a compact φ-stable subgroup of " + sys.describe(u));
  IdentityCounts out;
  Subgroup x = u;
  for (std::size_t n = 0; n <= probe; ++n) {
    ++out.checked;
    if (!sys.contains(x, h)) out.failures.push_back(at_n(sys.describe(h) + " not contained in U_n", n));
    x = sys.intersect(u, sys.image(x));
  }
  return out;
}

}  // namespace tdlc::cotraj
