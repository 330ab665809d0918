#include "tdlc/dynamics.hpp"

#include "tdlc/product.hpp"

namespace tdlc::dynamics {

using cotraj::kDefaultTidyProbe;

namespace {

struct Local {
  ExactEntropy value;
  bool via_limit = false;
};

Local local_entropy(const System& sys, const Subgroup& u, std::size_t probe) {
  if (sys.capabilities().images) return {cotraj::htop_local(sys, u, probe), false};
  return {cotraj::htop_limit_estimate(sys, u, probe), true};
}

bool compact_open(const Subgroup& u) { return u.compact && u.open; }

void push_unique(std::vector<Subgroup>& out, Subgroup u) {
  for (const auto& x : out)
    if (x == u) return;
  out.push_back(std::move(u));
}

}  // namespace

EntropyReport topological_entropy(const System& sys, std::size_t probe) {
  EntropyReport r;
  bool resolved = true;
  std::optional<ExactEntropy> last;
  for (std::size_t k = 0; k <= probe; ++k) {
    EntropyEntry e;
    e.k = k;
    e.u = sys.base(k);
    if (!r.table.empty() && r.table.back().u == e.u) {
      e.value = r.table.back().value;
      e.via_limit = r.table.back().via_limit;
      e.note = r.table.back().note;
    } else {
      try {
        auto l = local_entropy(sys, e.u, probe);
        e.value = l.value;
        e.via_limit = l.via_limit;
      } catch (const Unresolved& ex) {
        e.note = ex.what();
      }
    }
    ++r.probed;
    if (e.value) {
      if (last && *e.value < *last)
        throw InvariantViolation(sys.name() + ": local entropy decreases along the base at k=" + std::to_string(k));
      last = e.value;
      if (!r.witness || *e.value > r.value) {
        r.value = *e.value;
        r.witness = e.u;
      }
    } else {
      resolved = false;
    }
    r.table.push_back(std::move(e));
  }
  auto oracle = sys.entropy_oracle();
  if (!resolved) {
    r.certificate = "unresolved base elements; lower bound";
  } else if (!oracle) {
    r.certificate = "no backend certificate for the base; lower bound";
  } else if (ExactEntropy::log_of(*oracle) != r.value) {
    r.certificate = "backend prediction alpha=" + to_string(*oracle) + " not reached; lower bound";
  } else {
    r.saturated = true;
    r.certificate = "equals the backend prediction along the base";
  }
  return r;
}

namespace {

void certify_scale(const System& sys, ScaleReport& r, std::size_t probe) {
  if (auto o = sys.scale_oracle()) r.oracle_agrees = *o == r.value;
  try {
    r.witness_tidy_above = cotraj::is_tidy_above(sys, r.witness, probe);
  } catch (const Error&) {
  }
  try {
    r.witness_tidy_below = cotraj::is_tidy_below(sys, r.witness, kDefaultTidyProbe).holds;
  } catch (const Error&) {
  }
  const bool tidy = r.witness_tidy_above && r.witness_tidy_below.value_or(false);
  if (r.oracle_agrees == false)
    throw InvariantViolation(sys.name() + ": scale search found " + to_string(r.value) +
                             ", backend prediction differs");
  r.certified = tidy || r.oracle_agrees.value_or(false);
  if (tidy) r.certificate = "witness is tidy";
  if (r.oracle_agrees.value_or(false)) r.certificate += std::string(tidy ? "; " : "") + "equals the backend prediction";
  if (!r.certified) r.certificate = "minimum over the probed candidates";
}

}  // namespace

ScaleReport scale(const System& sys, std::size_t probe) {
  if (!sys.capabilities().images) throw CapabilityError(sys.name() + ": scale needs forward images");
  // the scale of a direct product is the product of the scales
  if (auto prod = dynamic_cast<const product::ProductSystem*>(&sys)) {
    ScaleReport a = scale(*prod->first(), probe), b = scale(*prod->second(), probe);
    ScaleReport r;
    r.witness = make_pair(a.witness, b.witness);
    r.value = a.value * b.value;
    r.probed = a.probed + b.probed;
    if (cotraj::displacement(sys, r.witness).value() != r.value)
      throw InvariantViolation(sys.name() + ": displacement of the paired witness is not the product");
    certify_scale(sys, r, probe);
    return r;
  }
  std::vector<Subgroup> cands;
  for (auto& u : sys.scale_candidates(probe))
    if (compact_open(u)) push_unique(cands, std::move(u));
  const std::size_t tidy_depth = std::min(probe, kDefaultTidyProbe);
  for (std::size_t k = 0; k <= tidy_depth; ++k) {
    try {
      push_unique(cands, cotraj::tidy_above_transform(sys, sys.base(k), kDefaultTidyProbe));
    } catch (const Unresolved&) {
    } catch (const CapabilityError&) {
    }
  }
  if (cands.empty()) throw Unresolved(sys.name() + ": no compact open candidate for the scale");
  ScaleReport r;
  std::optional<IndexValue> best;
  for (const auto& u : cands) {
    IndexValue d = cotraj::displacement(sys, u);
    if (!best || d < *best) {
      best = d;
      r.witness = u;
    }
  }
  r.probed = cands.size();
  r.value = best->value();
  certify_scale(sys, r, probe);
  return r;
}

NubReport nub(const System& sys, std::size_t resolution, std::size_t probe) {
  if (auto prod = dynamic_cast<const product::ProductSystem*>(&sys)) {
    NubReport a = nub(*prod->first(), resolution, probe), b = nub(*prod->second(), resolution, probe);
    NubReport r;
    r.nub = make_pair(a.nub, b.nub);
    r.resolution = resolution;
    r.minimizing = a.minimizing * b.minimizing;
    r.certified = a.certified && b.certified;
    r.certificate = "componentwise: (" + a.certificate + ", " + b.certificate + ")";
    return r;
  }
  ScaleReport s = scale(sys, probe);
  std::vector<Subgroup> mins;
  for (auto& u : sys.nub_candidates(resolution))
    if (compact_open(u) && cotraj::is_minimizing(sys, u, s.value)) push_unique(mins, std::move(u));
  if (cotraj::is_minimizing(sys, s.witness, s.value)) push_unique(mins, s.witness);
  NubClosure c = sys.nub_closure(mins, s.value);
  NubReport r;
  r.nub = c.nub;
  r.resolution = resolution;
  r.minimizing = mins.size();
  bool inside = c.nub.compact && sys.image(c.nub) == c.nub;
  for (const auto& m : mins) inside = inside && sys.contains(m, c.nub);
  if (c.certified && !inside)
    throw InvariantViolation(sys.name() + ": certified nub is not a compact φ-stable subgroup of every minimizing one");
  r.certified = c.certified && s.certified;
  r.certificate = c.method;
  if (c.certified && !s.certified) r.certificate += "; scale not certified";
  return r;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

Verdict skipped(std::string why) { return {Status::skipped, std::move(why), {}}; }

}  // namespace

Verdict verify_addition_theorem(const System& sys, const Subgroup& h, std::size_t probe) {
  ClosedSubgroupSpec spec = describe_subgroup(sys, h);
  if (!spec.phi_stable) return skipped("H is not φ-stable");
  if (!spec.contains_kernel) return skipped("H does not contain ker φ");
  if (!spec.normal && !spec.compact) return skipped("H is neither normal nor compact");
  SystemPtr r, q;
  try {
    r = sys.restrict_to(spec);
    q = sys.quotient(spec);
  } catch (const CapabilityError& e) {
    return skipped(e.what());
  }
  EntropyReport eg = topological_entropy(sys, probe), er = topological_entropy(*r, probe),
                eq = topological_entropy(*q, probe);
  Verdict v;
  v.values = {{"h", eg.value.alpha_string()}, {"h_restricted", er.value.alpha_string()},
              {"h_quotient", eq.value.alpha_string()}};
  if (!eg.saturated || !er.saturated || !eq.saturated) {
    v.status = Status::inconclusive;
    v.detail = "an entropy is only a lower bound";
    return v;
  }
  const bool ok = eg.value == er.value + eq.value;
  v.status = ok ? Status::pass : Status::fail;
  v.detail = "alpha " + eg.value.alpha_string() + (ok ? " = " : " != ") + er.value.alpha_string() + " * " +
             eq.value.alpha_string();
  return v;
}

Verdict verify_scale_entropy_link(const System& sys, std::size_t probe, std::size_t resolution) {
  ScaleReport s = scale(sys, probe);
  NubReport n = nub(sys, resolution, probe);
  Verdict v;
  if (!n.certified) {
    v.status = Status::inconclusive;
    v.detail = "nub not certified: " + n.certificate;
    return v;
  }
  ClosedSubgroupSpec spec = describe_subgroup(sys, n.nub);
  SystemPtr r, q;
  try {
    r = sys.restrict_to(spec);
    q = sys.quotient(spec);
  } catch (const CapabilityError& e) {
    return skipped(e.what());
  }
  EntropyReport eg = topological_entropy(sys, probe), en = topological_entropy(*r, probe),
                eq = topological_entropy(*q, probe);
  const ExactEntropy ls = ExactEntropy::log_of(s.value);
  v.values = {{"scale", to_string(s.value)},
              {"h", eg.value.alpha_string()},
              {"h_nub", en.value.alpha_string()},
              {"h_mod_nub", eq.value.alpha_string()}};
  if (!eg.saturated || !en.saturated || !eq.saturated) {
    v.status = Status::inconclusive;
    v.detail = "an entropy is only a lower bound";
    return v;
  }
  const bool quotient_ok = ls == eq.value;
  const bool sum_ok = eg.value == ls + en.value;
  const bool a = eg.value == ls, b = n.nub == sys.trivial(), c = en.value == ExactEntropy::zero();
  const bool matrix_ok = a == b && b == c;
  v.status = quotient_ok && sum_ok && matrix_ok ? Status::pass : Status::fail;
  auto yn = [](bool x) { return x ? "yes" : "no"; };
  v.detail = std::string("log s = h(G/nub): ") + yn(quotient_ok) + "; h = log s + h(nub): " + yn(sum_ok) +
             "; h = log s: " + yn(a) + ", nub trivial: " + yn(b) + ", h(nub) = 0: " + yn(c);
  return v;
}

LowerBound entropy_lower_bound(const System& sys, const std::vector<Subgroup>& candidates) {
  LowerBound out;
  for (const auto& m : candidates) {
    require_same(sys, m);
    Subgroup img = sys.image(m);
    if (!m.compact || !sys.contains(img, m)) {
      out.rejected.push_back(sys.describe(m) + ": not a compact subgroup with M ≤ φM");
      continue;
    }
    IndexValue i = sys.raw_index(img, m);
    if (i.is_infinite()) {
      out.rejected.push_back(sys.describe(m) + ": [φM : M] infinite");
      continue;
    }
    ++out.accepted;
    out.value = std::max(out.value, ExactEntropy::log_of(i));
  }
  return out;
}

Verdict verify_monotonicity(const System& sys, const Subgroup& h, std::size_t probe) {
  ClosedSubgroupSpec spec = describe_subgroup(sys, h);
  if (!spec.phi_invariant) return skipped("H is not φ-invariant");
  EntropyReport eg = topological_entropy(sys, probe);
  Verdict v;
  v.values.push_back({"h", eg.value.alpha_string()});
  std::vector<std::string> notes;
  bool fail = false, inconclusive = !eg.saturated;
  try {
    SystemPtr r = sys.restrict_to(spec);
    EntropyReport er = topological_entropy(*r, probe);
    v.values.push_back({"h_restricted", er.value.alpha_string()});
    inconclusive = inconclusive || !er.saturated;
    notes.push_back(er.value > eg.value ? "restriction increases entropy" : "restriction compared");
    fail = fail || er.value > eg.value;
  } catch (const CapabilityError& e) {
    notes.push_back(std::string("restriction skipped: ") + e.what());
  }
  if (spec.compact) {
    try {
      SystemPtr q = sys.quotient(spec);
      EntropyReport eq = topological_entropy(*q, probe);
      v.values.push_back({"h_quotient", eq.value.alpha_string()});
      inconclusive = inconclusive || !eq.saturated;
      if (eq.value > eg.value) fail = true, notes.push_back("quotient increases entropy");
      std::size_t rows = 0;
      for (std::size_t k = 0; k <= std::min(probe, kDefaultTidyProbe); ++k) {
        Subgroup u = sys.base(k);
        if (!sys.contains(u, h)) {
          if (!sys.commutes(u, h)) continue;
          u = sys.set_product(u, h);
          if (!compact_open(u)) continue;
        }
        ++rows;
        if (local_entropy(sys, u, probe).value != local_entropy(*q, sys.project(spec, u), probe).value) {
          fail = true;
          notes.push_back("local entropy changes under the quotient at k=" + std::to_string(k));
        }
      }
      notes.push_back(std::to_string(rows) + " base rows compared on the quotient");
    } catch (const CapabilityError& e) {
      notes.push_back(std::string("quotient skipped: ") + e.what());
    }
  } else {
    notes.push_back("H is not compact, restriction only");
  }
  v.status = fail ? Status::fail : inconclusive ? Status::inconclusive : Status::pass;
  for (std::size_t i = 0; i < notes.size(); ++i) v.detail += (i ? "; " : "") + notes[i];
  return v;
}

}  // namespace tdlc::dynamics
