#include "tdlc/suites.hpp"

#include "tdlc/finite.hpp"
#include "tdlc/index_lemmas.hpp"
#include "tdlc/padic.hpp"
#include "tdlc/product.hpp"

namespace tdlc::suites {

using dynamics::Status;

std::size_t Result::count(Status s) const {
  std::size_t n = 0;
  for (const auto& l : lines) n += l.status == s;
  return n;
}

bool Result::ok(bool strict) const { return count(Status::fail) == 0 && (!strict || count(Status::inconclusive) == 0); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"indices",      "cotrajectory", "limit-free", "addition",
                                              "scale-link",   "scale",        "monotonicity", "oracle",
                                              "product",      "expectations"};
  return names;
}

namespace {

struct Context {
  report::Options opt;
  std::vector<scenario::Scenario> catalog;
  Result out;
  std::string suite;

  void add(std::string subject, Status s, std::string detail) {
    out.lines.push_back({suite, std::move(subject), s, std::move(detail)});
  }
  report::Limits limits(const scenario::Scenario& sc) const { return report::resolve(sc, opt); }
};

// base elements 0..3 and the named compact open subgroups, without repeats
std::vector<std::pair<std::string, Subgroup>> subjects(const scenario::Scenario& sc) {
  std::vector<std::pair<std::string, Subgroup>> out;
  auto push = [&](std::string name, Subgroup u) {
    if (!u.compact || !u.open) return;
    for (const auto& [n, s] : out)
      if (s == u) return;
    out.emplace_back(std::move(name), std::move(u));
  };
  for (std::size_t k = 0; k <= 3; ++k) push("base" + std::to_string(k), sc.system->base(k));
  for (const auto& [name, s] : sc.subgroups) push(name, s);
  return out;
}

void indices(Context& c) {
  const std::vector<std::pair<std::string, finite::Group>> groups{{"S3", finite::Group::symmetric3()},
                                                                  {"D4", finite::Group::dihedral(4)},
                                                                  {"Q8", finite::Group::quaternion()},
                                                                  {"Z12", finite::Group::cyclic(12)},
                                                                  {"A4", finite::Group::alternating4()}};
  for (const auto& [name, g] : groups) {
    auto r = finite::check_index_identities(g);
    for (const auto& [id, n] : r.checked) {
      std::string first;
      std::size_t bad = 0;
      for (const auto& f : r.failures)
        if (f.rfind(id + ":", 0) == 0 && bad++ == 0) first = f;
      c.add(name + " " + id, bad ? Status::fail : Status::pass,
            std::to_string(n) + " instances" + (bad ? ", " + std::to_string(bad) + " violations; " + first : ""));
    }
  }
}

void scenario_checks(Context& c, std::initializer_list<const char*> types) {
  for (const auto& sc : c.catalog)
    for (const auto& ch : sc.checks) {
      if (std::find_if(types.begin(), types.end(), [&](const char* t) { return ch.type == t; }) == types.end())
        continue;
      auto v = report::run_check(sc, ch, c.limits(sc));
      const std::string got = dynamics::status_name(v.status);
      Status s = v.status == Status::inconclusive ? Status::inconclusive
                 : got != ch.expect              ? Status::fail
                                                 : v.status;
      std::string subject = sc.id + " " + ch.type;
      for (const auto& n : ch.subgroups) subject += " " + n;
      std::string detail = v.detail;
      for (const auto& [k, a] : v.values) detail += "; " + k + "=" + a;
      if (got != ch.expect) detail = "expected " + ch.expect + ", got " + got + "; " + detail;
      c.add(std::move(subject), s, std::move(detail));
    }
}

void cotrajectory(Context& c) {
  for (const auto& sc : c.catalog) {
    if (!sc.system->capabilities().images) continue;
    for (const auto& [name, u] : subjects(sc)) {
      auto r = cotraj::check_identities(*sc.system, u, c.limits(sc).tidy_probe);
      c.add(sc.id + " " + name, r.ok() ? Status::pass : Status::fail,
            std::to_string(r.checked) + " identities" + (r.ok() ? "" : "; " + r.failures.front()));
    }
  }
  scenario_checks(c, {"identities", "stable-below"});
}

void limit_free(Context& c) {
  for (const auto& sc : c.catalog) {
    const System& sys = *sc.system;
    if (!sys.capabilities().images) continue;
    for (const auto& [name, u] : subjects(sc)) {
      const auto lim = c.limits(sc);
      auto t = cotraj::alpha_sequence(sys, u, lim.probe);
      if (!t.stable_from) {
        c.add(sc.id + " " + name, Status::skipped, t.certificate);
        continue;
      }
      try {
        auto local = cotraj::htop_local(sys, u, lim.probe);
        auto limit = ExactEntropy::log_of(t.limit());
        c.add(sc.id + " " + name, local == limit ? Status::pass : Status::fail,
              "local " + local.alpha_string() + ", limit " + limit.alpha_string() + " from n=" +
                  std::to_string(*t.stable_from));
      } catch (const Unresolved& e) {
        c.add(sc.id + " " + name, Status::inconclusive, e.what());
      }
    }
  }
}

void scale_suite(Context& c) {
  for (const auto& sc : c.catalog) {
    const System& sys = *sc.system;
    auto s = dynamics::scale(sys, c.limits(sc).probe);
    std::vector<std::string> problems;
    if (sc.expect.scale && *sc.expect.scale != to_string(s.value))
      problems.push_back("expected " + *sc.expect.scale);
    if (sys.whole().compact && s.value != 1) problems.push_back("compact group with scale != 1");
    if (!s.witness_tidy_above) problems.push_back("witness not tidy above");
    if (s.witness_tidy_below == false) problems.push_back("witness not tidy below");
    if (!cotraj::is_minimizing(sys, s.witness, s.value)) problems.push_back("witness not minimizing");
    std::string detail = "s=" + to_string(s.value) + ", witness " + sys.describe(s.witness) + ", tidy below " +
                         (s.witness_tidy_below ? (*s.witness_tidy_below ? "yes" : "no") : "undecided") + ", " +
                         s.certificate;
    for (const auto& p : problems) detail += "; " + p;
    c.add(sc.id, problems.empty() ? (s.certified ? Status::pass : Status::inconclusive) : Status::fail, detail);
  }
}

void oracle(Context& c) {
  for (const auto& sc : c.catalog) {
    auto p = std::dynamic_pointer_cast<const padic::PAdicSystem>(sc.system);
    if (!p) continue;
    const auto lim = c.limits(sc);
    const Integer want = p->polygon().predicted_alpha;
    const IndexValue w(want);
    std::vector<std::string> problems;
    std::size_t rows = 0;
    for (const auto& [name, u] : subjects(sc)) {
      ++rows;
      auto t = cotraj::alpha_sequence(*p, u, lim.probe);
      if (t.rows.back().alpha != w) problems.push_back(name + ": alpha_" + std::to_string(lim.probe) + "=" +
                                                      t.rows.back().alpha.to_string());
      auto local = cotraj::htop_local(*p, u, lim.probe);
      if (local != ExactEntropy::log_of(want)) problems.push_back(name + ": local entropy " + local.alpha_string());
    }
    std::string scale_value;
    try {
      scale_value = to_string(dynamics::scale(*p, lim.probe).value);
    } catch (const InvariantViolation& e) {
      problems.push_back(e.what());
    }
    std::string detail = "p^e=" + to_string(want) + ", stabilized alpha on " + std::to_string(rows) +
                         " subgroups, scale search " + scale_value;
    for (const auto& q : problems) detail += "; " + q;
    c.add(sc.id, problems.empty() ? Status::pass : Status::fail, detail);
  }
}

void product_suite(Context& c) {
  for (const auto& sc : c.catalog) {
    auto pr = std::dynamic_pointer_cast<const product::ProductSystem>(sc.system);
    if (!pr) continue;
    const std::size_t probe = c.limits(sc).probe;
    auto e = dynamics::topological_entropy(*pr, probe);
    auto e1 = dynamics::topological_entropy(*pr->first(), probe), e2 = dynamics::topological_entropy(*pr->second(), probe);
    auto s = dynamics::scale(*pr, probe), s1 = dynamics::scale(*pr->first(), probe),
         s2 = dynamics::scale(*pr->second(), probe);
    const bool ok = e.value == e1.value + e2.value && s.value == s1.value * s2.value;
    const bool sat = e.saturated && e1.saturated && e2.saturated;
    c.add(sc.id, !ok ? Status::fail : sat ? Status::pass : Status::inconclusive,
          "h alpha " + e.value.alpha_string() + " vs " + e1.value.alpha_string() + "*" + e2.value.alpha_string() +
              ", s " + to_string(s.value) + " vs " + to_string(s1.value) + "*" + to_string(s2.value));
  }
  const scenario::Scenario *pp = nullptr, *diag = nullptr;
  for (const auto& sc : c.catalog) {
    if (sc.id == "product_q2_q2") pp = &sc;
    if (sc.id == "q2_diag_half") diag = &sc;
  }
  if (pp && diag) {
    const std::size_t probe = c.limits(*pp).probe;
    auto a = dynamics::topological_entropy(*pp->system, probe), b = dynamics::topological_entropy(*diag->system, probe);
    auto sa = dynamics::scale(*pp->system, probe), sb = dynamics::scale(*diag->system, probe);
    const bool ok = a.value == b.value && sa.value == sb.value;
    c.add("product_q2_q2 vs q2_diag_half", ok ? Status::pass : Status::fail,
          "h alpha " + a.value.alpha_string() + " vs " + b.value.alpha_string() + ", s " + to_string(sa.value) +
              " vs " + to_string(sb.value));
  }
}

void expectations(Context& c) {
  for (const auto& sc : c.catalog) {
    if (!sc.expect.entropy && !sc.expect.nub) continue;
    std::vector<std::string> comps;
    if (sc.expect.entropy) comps.push_back("entropy");
    if (sc.expect.nub) comps.push_back("nub");
    auto r = report::run(sc, comps, false, c.opt);
    std::string detail;
    if (r.body.contains("expectations"))
      for (const auto& e : r.body["expectations"])
        detail += (detail.empty() ? "" : "; ") + e["quantity"].get<std::string>() + " " + e["actual"].get<std::string>() +
                  (e["status"] == "PASS" ? "" : " (expected " + e["expected"].get<std::string>() + ")");
    c.add(sc.id, r.failed ? Status::fail : r.unresolved ? Status::inconclusive : Status::pass, detail);
  }
}

void run_one(Context& c, const std::string& name) {
  c.suite = name;
  if (name == "indices") indices(c);
  else if (name == "cotrajectory") cotrajectory(c);
  else if (name == "limit-free") limit_free(c);
  else if (name == "addition") scenario_checks(c, {"addition"});
  else if (name == "scale-link") scenario_checks(c, {"scale-link", "lower-bound"});
  else if (name == "scale") scale_suite(c);
  else if (name == "monotonicity") scenario_checks(c, {"monotonicity"});
  else if (name == "oracle") oracle(c);
  else if (name == "product") product_suite(c);
  else if (name == "expectations") expectations(c);
  else throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace

Result run(const std::string& name, const report::Options& opt) {
  Context c;
  c.opt = opt;
  for (const auto& id : scenario::catalog_ids()) c.catalog.push_back(scenario::catalog_scenario(id));
  if (name == "all")
    for (const auto& n : suite_names()) run_one(c, n);
  else
    run_one(c, name);
  return std::move(c.out);
}

std::string to_json(const std::string& name, const Result& r) {
  report::Json j;
  j["version"] = report::kVersion;
  j["suite"] = name;
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)},
                  {"inconclusive", r.count(Status::inconclusive)}};
  report::Json lines = report::Json::array();
  for (const auto& l : r.lines)
    lines.push_back({{"suite", l.suite}, {"subject", l.subject}, {"status", dynamics::status_name(l.status)},
                     {"detail", l.detail}});
  j["results"] = std::move(lines);
  return j.dump(2) + "\n";
}

}  // namespace tdlc::suites
