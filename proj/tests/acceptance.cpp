#include "tdlc/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using tdlc::dynamics::Status;
using tdlc::suites::Line;
using tdlc::suites::Result;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) ok = false, why = what;
  }
};

const Line* find(const Result& r, const std::string& subject) {
  for (const auto& l : r.lines)
    if (l.subject == subject) return &l;
  return nullptr;
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

// subject must be present, passing, and its detail must contain each part
void expect_line(Outcome& o, const Result& r, const std::string& subject, std::initializer_list<std::string> parts = {}) {
  const Line* l = find(r, subject);
  o.require(l != nullptr, "missing " + subject);
  if (!l) return;
  o.require(l->status == Status::pass, subject + " is " + tdlc::dynamics::status_name(l->status));
  for (const auto& p : parts) o.require(has(l->detail, p), subject + ": expected '" + p + "' in '" + l->detail + "'");
}

void no_failures(Outcome& o, const Result& r) {
  for (const auto& l : r.lines)
    o.require(l.status == Status::pass || l.status == Status::skipped,
              l.subject + " is " + tdlc::dynamics::status_name(l.status) + ": " + l.detail);
}

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  double budget_s;
  std::function<void(Outcome&, const Result&)> extra;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "local entropy equals the limit estimate", "limit-free", 10,
       [](Outcome& o, const Result& r) {
         o.require(r.count(Status::pass) >= 40, "fewer than 40 instances: " + std::to_string(r.count(Status::pass)));
       }},
      {2, "addition theorem", "addition", 5,
       [](Outcome& o, const Result& r) {
         expect_line(o, r, "q2_diag_half addition H", {"alpha 4 = 2 * 2"});
         expect_line(o, r, "shift_z4 addition H", {"alpha 4 = 2 * 2"});
         expect_line(o, r, "q2_jordan addition H", {"alpha 4 = 2 * 2"});
         expect_line(o, r, "q2_half addition 0", {"alpha 2 = 1 * 2"});
         expect_line(o, r, "q2_half addition G", {"alpha 2 = 2 * 1"});
       }},
      {3, "scale values with tidy witnesses", "scale", 5,
       [](Outcome& o, const Result& r) {
         expect_line(o, r, "q2_half", {"s=2,", "witness is tidy"});
         expect_line(o, r, "laurent_z2", {"s=2,", "witness is tidy"});
         expect_line(o, r, "laurent_z3", {"s=3,", "witness is tidy"});
         for (const char* id : {"finite_trivial", "finite_s3", "finite_s3_sign", "finite_q8", "finite_d4", "finite_a4",
                                "shift_z2", "shift_z3", "shift_z4", "shift_z4_double", "shift_v4_swap",
                                "product_trivial_shift_z2"})
           expect_line(o, r, id, {"s=1,", "witness is tidy"});
       }},
      {4, "scale and entropy through the nub", "scale-link", 10,
       [](Outcome& o, const Result& r) {
         expect_line(o, r, "shift_z2 scale-link", {"h = log s: no", "scale=1"});
         for (const char* id : {"q2_half", "q2_double", "q2_diag_half", "q2_mixed", "q3_diag"})
           expect_line(o, r, std::string(id) + " scale-link", {"h = log s: yes", "nub trivial: yes"});
       }},
      {5, "index lemmas over small groups", "indices", 60,
       [](Outcome& o, const Result& r) {
         for (const char* g : {"S3", "D4", "Q8", "Z12", "A4"})
           for (const char* lemma : {"index-tower", "product-index", "meet-index", "join-index", "preimage-index",
                                     "image-index", "image-monotone", "snake", "normalized-core"})
             expect_line(o, r, std::string(g) + " " + lemma);
       }},
      {6, "cotrajectory identities", "cotrajectory", 20,
       [](Outcome& o, const Result& r) { o.require(r.count(Status::pass) > 0, "no instances"); }},
      {7, "product formula", "product", 5,
       [](Outcome& o, const Result& r) {
         o.require(r.count(Status::pass) >= 6, "fewer than 5 products");
         expect_line(o, r, "product_q2_q2 vs q2_diag_half");
       }},
      {8, "Newton polygon oracle", "oracle", 5,
       [](Outcome& o, const Result& r) {
         for (const char* id : {"q2_half", "q2_diag_half", "q2_jordan", "q2_singular", "q2_mixed"})
           expect_line(o, r, id, {"stabilized alpha"});
       }},
      {9, "entropy monotonicity", "monotonicity", 10,
       [](Outcome& o, const Result& r) {
         o.require(r.count(Status::pass) > 0, "no instances");
         bool quotient = false;
         for (const auto& l : r.lines) quotient = quotient || has(l.detail, "base rows compared on the quotient");
         o.require(quotient, "no quotient table compared");
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = tdlc::suites::run(c.suite);
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok) {
      no_failures(o, r);
      c.extra(o, r);
      o.require(secs < c.budget_s, "took " + std::to_string(secs) + " s");
    }
    all = all && o.ok;
    std::printf("%s %d %s: %zu instances, %.2f s (budget %.0f s)%s\n", o.ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), r.lines.size(), secs, c.budget_s, o.ok ? "" : ("; " + o.why).c_str());
  }

  Outcome det;
  try {
    const std::string a = tdlc::suites::to_json("all", tdlc::suites::run("all"));
    const std::string b = tdlc::suites::to_json("all", tdlc::suites::run("all"));
    det.require(a == b, "reports differ");
  } catch (const std::exception& e) {
    det.require(false, e.what());
  }
  all = all && det.ok;
  std::printf("%s 10 deterministic reports%s\n", det.ok ? "PASS" : "FAIL", det.ok ? "" : ("; " + det.why).c_str());
  return all ? 0 : 1;
}
