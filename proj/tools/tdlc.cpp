#include "tdlc/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kResource = 3 };

struct Flags {
  std::optional<std::size_t> probe, tidy_probe, resolution;
  std::string out;
  std::string format = "json";
  bool strict = false;
  bool timing = false;
};

tdlc::report::Options options(const Flags& f) {
  tdlc::report::Options o;
  o.probe = f.probe;
  o.tidy_probe = f.tidy_probe;
  o.resolution = f.resolution;
  o.timing = f.timing;
  return o;
}

// a path to a scenario file, or the id of a built-in scenario
tdlc::scenario::Scenario open_scenario(const std::string& arg) {
  if (std::filesystem::exists(arg)) return tdlc::scenario::load(arg);
  for (const auto& id : tdlc::scenario::catalog_ids())
    if (id == arg) return tdlc::scenario::catalog_scenario(id);
  throw tdlc::InvalidInput("no scenario file or catalog entry named '" + arg + "'");
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(f.out, std::ios::binary);
  if (!o) throw tdlc::InvalidInput("cannot write '" + f.out + "'");
  o << text;
}

int run_reports(const Flags& f, const std::vector<std::string>& inputs, const std::vector<std::string>& computations,
                bool checks) {
  std::vector<tdlc::report::Report> reports;
  for (const auto& in : inputs) {
    auto sc = open_scenario(in);
    const auto& comps = computations.empty() ? sc.compute : computations;
    reports.push_back(tdlc::report::run(sc, comps, checks, options(f)));
  }
  emit(f, f.format == "csv" ? tdlc::report::to_csv(reports) : tdlc::report::to_json(reports));
  bool failed = false, unresolved = false;
  for (const auto& r : reports) failed = failed || r.failed, unresolved = unresolved || r.unresolved;
  if (failed) return kVerifyFailed;
  if (unresolved && f.strict) return kResource;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact entropy, scale and nub of endomorphisms of totally disconnected locally compact groups"};
  app.require_subcommand(1);
  Flags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--probe", f.probe, "base elements and cotrajectory length probed (default 64)");
    sub->add_option("--tidy-probe", f.tidy_probe, "steps probed for tidiness and identities (default 16)");
    sub->add_option("--resolution", f.resolution, "window radius of the nub candidate family (default 2)");
    sub->add_option("--out", f.out, "write the report to this path instead of stdout");
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--strict", f.strict, "treat unresolved or inconclusive results as failures");
    sub->add_flag("--timing", f.timing, "include elapsed times (reports are then not byte-stable)");
  };

  std::vector<std::string> inputs;
  std::string suite = "all";
  const std::vector<std::pair<const char*, const char*>> single{
      {"entropy", "topological entropy as the sup of local entropies over the base"},
      {"scale", "scale: minimal displacement index with a tidy witness"},
      {"nub", "intersection of the minimizing subgroups found"},
      {"tidy", "tidiness above and below of the first base elements"},
      {"cotraj", "cotrajectory index table, U+ and local entropy"}};
  for (const auto& [name, help] : single) {
    auto sub = app.add_subcommand(name, help);
    sub->add_option("scenario", inputs, "scenario file or catalog id")->required();
    add_common(sub);
  }
  auto rep = app.add_subcommand("report", "run the computations and checks listed in each scenario");
  rep->add_option("scenario", inputs, "scenario files or catalog ids")->required();
  add_common(rep);
  auto ver = app.add_subcommand("verify", "run a verification suite over the built-in catalog");
  std::vector<std::string> suites{"all"};
  for (const auto& s : tdlc::suites::suite_names()) suites.push_back(s);
  ver->add_option("suite", suite, "suite name")->check(CLI::IsMember(suites));
  add_common(ver);
  auto cat = app.add_subcommand("catalog", "list the built-in scenarios, or print one");
  std::string show;
  cat->add_option("id", show, "scenario to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*cat) {
      if (show.empty()) {
        for (const auto& id : tdlc::scenario::catalog_ids()) std::cout << id << '\n';
      } else {
        std::cout << tdlc::scenario::catalog_source(show);
      }
      return kOk;
    }
    if (*ver) {
      auto r = tdlc::suites::run(suite, options(f));
      emit(f, tdlc::suites::to_json(suite, r));
      using tdlc::dynamics::Status;
      std::cerr << suite << ": " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
                << r.count(Status::skipped) << " skipped, " << r.count(Status::inconclusive) << " inconclusive\n";
      return r.ok(f.strict) ? kOk : kVerifyFailed;
    }
    if (*rep) return run_reports(f, inputs, {}, true);
    for (const auto& [name, help] : single)
      if (app.got_subcommand(name)) return run_reports(f, inputs, {name}, false);
  } catch (const tdlc::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const tdlc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const tdlc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return f.strict ? kResource : kVerifyFailed;
  }
  return kOk;
}
