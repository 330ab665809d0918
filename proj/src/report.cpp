#include "tdlc/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace tdlc::report {

using dynamics::Status;
using dynamics::Verdict;

Limits resolve(const scenario::Scenario& sc, const Options& opt) {
  Limits l;
  l.probe = opt.probe.value_or(sc.probe.value_or(l.probe));
  l.tidy_probe = opt.tidy_probe.value_or(sc.tidy_probe.value_or(l.tidy_probe));
  l.resolution = opt.resolution.value_or(sc.resolution.value_or(l.resolution));
  return l;
}

namespace {

Json entropy_json(const System& sys, const dynamics::EntropyReport& e) {
  Json j;
  j["alpha"] = e.value.alpha_string();
  j["display"] = e.value.display_value();
  j["infinite"] = e.value.is_infinite();
  j["certified"] = e.saturated;
  j["certificate"] = e.certificate;
  j["witness"] = e.witness ? sys.describe(*e.witness) : "";
  j["probed"] = e.probed;
  Json table = Json::array();
  for (const auto& t : e.table) {
    Json r;
    r["k"] = t.k;
    r["alpha"] = t.value ? Json(t.value->alpha_string()) : Json(nullptr);
    r["method"] = t.via_limit ? "limit" : "local";
    if (!t.note.empty()) r["note"] = t.note;
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  return j;
}

std::string nub_label(const System& sys, const Subgroup& n) {
  if (n == sys.trivial()) return "trivial";
  if (n == sys.whole()) return "whole";
  return sys.describe(n);
}

std::vector<std::string> names_of(const scenario::Check& c) { return c.subgroups; }

Verdict guarded(const std::function<Verdict()>& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    return {Status::skipped, e.what(), {}};
  } catch (const CapabilityError& e) {
    return {Status::skipped, e.what(), {}};
  } catch (const Unresolved& e) {
    return {Status::inconclusive, e.what(), {}};
  }
}

}  // namespace

Verdict run_check(const scenario::Scenario& sc, const scenario::Check& c, const Limits& lim) {
  const System& sys = *sc.system;
  auto arg = [&](std::size_t i) -> const Subgroup& { return sc.subgroup(c.subgroups.at(i)); };
  return guarded([&]() -> Verdict {
    if (c.type == "addition") return dynamics::verify_addition_theorem(sys, arg(0), lim.probe);
    if (c.type == "scale-link") return dynamics::verify_scale_entropy_link(sys, lim.probe, lim.resolution);
    if (c.type == "monotonicity") return dynamics::verify_monotonicity(sys, arg(0), lim.probe);
    if (c.type == "lower-bound") {
      std::vector<Subgroup> ms;
      for (std::size_t i = 0; i < c.subgroups.size(); ++i) ms.push_back(arg(i));
      auto lb = dynamics::entropy_lower_bound(sys, ms);
      auto h = dynamics::topological_entropy(sys, lim.probe);
      Verdict v;
      v.values = {{"lower_bound", lb.value.alpha_string()}, {"h", h.value.alpha_string()}};
      if (lb.accepted == 0) return {Status::skipped, "no admissible candidate", v.values};
      if (!h.saturated && lb.value > h.value) return {Status::inconclusive, "entropy is only a lower bound", v.values};
      const bool ok = lb.value <= h.value;
      v.status = ok ? Status::pass : Status::fail;
      v.detail = std::to_string(lb.accepted) + " candidates; bound " + (lb.value == h.value ? "attains" : "below") +
                 " the entropy";
      for (const auto& r : lb.rejected) v.detail += "; rejected " + r;
      return v;
    }
    if (c.type == "identities") {
      Subgroup u = c.subgroups.empty() ? sys.base(0) : arg(0);
      auto r = cotraj::check_identities(sys, u, lim.tidy_probe);
      Verdict v{r.ok() ? Status::pass : Status::fail, std::to_string(r.checked) + " identities checked", {}};
      for (const auto& f : r.failures) v.detail += "; " + f;
      return v;
    }
    if (c.type == "stable-below") {
      auto r = cotraj::check_stable_below(sys, arg(0), arg(1), lim.tidy_probe);
      Verdict v{r.ok() ? Status::pass : Status::fail, std::to_string(r.checked) + " inclusions checked", {}};
      for (const auto& f : r.failures) v.detail += "; " + f;
      return v;
    }
    throw InvalidInput("unknown check " + c.type);
  });
}

Report run(const scenario::Scenario& sc, const std::vector<std::string>& computations, bool with_checks,
           const Options& opt) {
  const System& sys = *sc.system;
  const Limits lim = resolve(sc, opt);
  Report rep;
  rep.scenario = sc.id;
  Json& b = rep.body;
  b["scenario"] = sc.id;
  b["description"] = sc.description;
  b["system"] = sys.name();
  b["backend"] = backend_name(sys.backend());
  b["limits"] = {{"probe", lim.probe}, {"tidy_probe", lim.tidy_probe}, {"resolution", lim.resolution}};
  b["input"] = Json::parse(sc.canonical);
  auto clock = std::chrono::steady_clock::now();
  auto stamp = [&](Json& j) {
    if (!opt.timing) return;
    auto now = std::chrono::steady_clock::now();
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now - clock).count();
    clock = now;
  };

  std::optional<dynamics::EntropyReport> entropy;
  std::optional<dynamics::ScaleReport> scale;
  std::optional<dynamics::NubReport> nub;
  Json expectations = Json::array();
  auto expect = [&](const char* what, const std::optional<std::string>& want, const std::string& got) {
    if (!want) return;
    const bool ok = *want == got;
    expectations.push_back({{"quantity", what}, {"expected", *want}, {"actual", got}, {"status", ok ? "PASS" : "FAIL"}});
    rep.failed = rep.failed || !ok;
  };
  auto unresolved = [&](Json& j, const Error& e) {
    j = {{"unresolved", e.what()}};
    rep.unresolved = true;
  };

  for (const auto& c : computations) {
    if (c == "entropy") {
      try {
        entropy = dynamics::topological_entropy(sys, lim.probe);
        b["entropy"] = entropy_json(sys, *entropy);
        rep.rows.push_back({"entropy", entropy->value.alpha_string(), entropy->value.is_infinite(), entropy->saturated});
        rep.unresolved = rep.unresolved || !entropy->saturated;
        expect("entropy", sc.expect.entropy, entropy->value.alpha_string());
      } catch (const Unresolved& e) {
        unresolved(b["entropy"], e);
      } catch (const CapabilityError& e) {
        unresolved(b["entropy"], e);
      }
      stamp(b["entropy"]);
    } else if (c == "scale") {
      try {
        scale = dynamics::scale(sys, lim.probe);
        b["scale"] = to_string(scale->value);
        Json info;
        info["witness"] = sys.describe(scale->witness);
        info["probed"] = scale->probed;
        info["certified"] = scale->certified;
        info["certificate"] = scale->certificate;
        info["oracle_agrees"] = scale->oracle_agrees ? Json(*scale->oracle_agrees) : Json(nullptr);
        info["witness_tidy_above"] = scale->witness_tidy_above;
        info["witness_tidy_below"] = scale->witness_tidy_below ? Json(*scale->witness_tidy_below) : Json(nullptr);
        stamp(info);
        b["scale_info"] = std::move(info);
        rep.rows.push_back({"scale", to_string(scale->value), false, scale->certified});
        rep.unresolved = rep.unresolved || !scale->certified;
        expect("scale", sc.expect.scale, to_string(scale->value));
      } catch (const Unresolved& e) {
        unresolved(b["scale_info"], e);
      } catch (const CapabilityError& e) {
        unresolved(b["scale_info"], e);
      }
    } else if (c == "nub") {
      try {
        nub = dynamics::nub(sys, lim.resolution, lim.probe);
        const std::string label = nub_label(sys, nub->nub);
        b["nub"] = label;
        Json info;
        info["subgroup"] = sys.describe(nub->nub);
        info["resolution"] = nub->resolution;
        info["minimizing_found"] = nub->minimizing;
        info["certified"] = nub->certified;
        info["certificate"] = nub->certificate;
        stamp(info);
        b["nub_info"] = std::move(info);
        rep.unresolved = rep.unresolved || !nub->certified;
        if (sc.expect.nub) {
          const std::string& want = *sc.expect.nub;
          bool named = want != "trivial" && want != "whole";
          expect("nub", sc.expect.nub, named && sc.subgroup(want) == nub->nub ? want : label);
        }
      } catch (const Unresolved& e) {
        unresolved(b["nub_info"], e);
      } catch (const CapabilityError& e) {
        unresolved(b["nub_info"], e);
      }
    } else if (c == "tidy") {
      Json rows = Json::array();
      for (std::size_t k = 0; k <= std::min<std::size_t>(lim.tidy_probe, 3); ++k) {
        Subgroup u = sys.base(k);
        Json r{{"k", k}, {"subgroup", sys.describe(u)}};
        try {
          r["tidy_above"] = cotraj::is_tidy_above(sys, u, lim.probe);
          auto below = cotraj::is_tidy_below(sys, u, lim.tidy_probe, scale ? std::optional<Integer>(scale->value)
                                                                             : std::nullopt);
          r["tidy_below"] = below.holds;
          r["tidy_below_indirect"] = below.indirect;
          r["tidy_below_reason"] = below.reason;
          r["tidy_above_transform"] = sys.describe(cotraj::tidy_above_transform(sys, u, lim.tidy_probe));
        } catch (const Error& e) {
          r["unresolved"] = e.what();
          rep.unresolved = true;
        }
        rows.push_back(std::move(r));
      }
      b["tidy"] = std::move(rows);
      stamp(b["tidy"].back());
    } else if (c == "cotraj") {
      Json out = Json::array();
      std::vector<std::pair<std::string, Subgroup>> subjects{{"base0", sys.base(0)}};
      for (const auto& [name, s] : sc.subgroups)
        if (s.compact && s.open && !(s == sys.base(0))) subjects.emplace_back(name, s);
      for (const auto& [name, u] : subjects) {
        Json r{{"subgroup", name}, {"describe", sys.describe(u)}};
        try {
          auto t = cotraj::alpha_sequence(sys, u, lim.probe);
          Json rows = Json::array();
          for (const auto& row : t.rows)
            rows.push_back({{"n", row.n}, {"c", row.c.to_string()}, {"alpha", row.alpha.to_string()}});
          r["rows"] = std::move(rows);
          r["stable_from"] = t.stable_from ? Json(*t.stable_from) : Json(nullptr);
          r["certificate"] = t.certificate;
          if (t.stable_from) r["limit"] = t.limit().to_string();
          if (sys.capabilities().images) {
            auto p = cotraj::plus_group(sys, u, lim.probe);
            r["plus"] = {{"subgroup", sys.describe(p.group)}, {"method", cotraj::method_name(p.method)},
                         {"steps", p.steps}};
            r["local"] = cotraj::htop_local(sys, u, lim.probe).alpha_string();
          }
          if (!t.stable_from) rep.unresolved = true;
        } catch (const Error& e) {
          r["unresolved"] = e.what();
          rep.unresolved = true;
        }
        out.push_back(std::move(r));
      }
      b["cotraj"] = std::move(out);
    } else {
      throw InvalidInput("unknown computation '" + c + "'");
    }
  }
  if (!expectations.empty()) b["expectations"] = std::move(expectations);

  if (with_checks && !sc.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : sc.checks) {
      Verdict v = run_check(sc, c, lim);
      const std::string got = dynamics::status_name(v.status);
      Json r{{"type", c.type}, {"subgroups", names_of(c)}, {"status", got}, {"expected", c.expect}, {"detail", v.detail}};
      Json vals = Json::object();
      for (const auto& [k, a] : v.values) vals[k] = a;
      r["values"] = std::move(vals);
      stamp(r);
      checks.push_back(std::move(r));
      if (v.status == Status::inconclusive) rep.unresolved = true;
      else if (got != c.expect) rep.failed = true;
      std::string target = c.subgroups.empty() ? "" : ":" + c.subgroups.front();
      for (const auto& [k, a] : v.values)
        rep.rows.push_back({c.type + target + "." + k, a, a == "inf", v.status == Status::pass});
    }
    b["checks"] = std::move(checks);
  }
  b["status"] = rep.failed ? "FAIL" : rep.unresolved ? "UNRESOLVED" : "OK";
  return rep;
}

std::string to_json(const std::vector<Report>& reports) {
  Json j;
  j["version"] = kVersion;
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.body);
  j["reports"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "scenario,quantity,alpha,infinite,certified\n";
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      out << r.scenario << ',' << row.quantity << ',' << row.alpha << ',' << (row.infinite ? "true" : "false") << ','
          << (row.certified ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace tdlc::report
