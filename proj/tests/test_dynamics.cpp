#include <doctest.h>

#include "tdlc/dynamics.hpp"
#include "tdlc/finite.hpp"
#include "tdlc/padic.hpp"
#include "tdlc/product.hpp"
#include "tdlc/shift.hpp"

using namespace tdlc;
using namespace tdlc::dynamics;

namespace {

using linalg::Matrix;
const Rational half(1, 2);

std::shared_ptr<padic::PAdicSystem> padic_sys(std::vector<std::vector<Rational>> rows) {
  return padic::make_system(Integer(2), Matrix::from_rows(rows), "Q2");
}

std::shared_ptr<shift::ShiftSystem> zmod_shift(int n, shift::TailMode mode) {
  finite::Map id(n);
  for (int a = 0; a < n; ++a) id[a] = a;
  return shift::make_system(finite::Group::cyclic(n), id, 1, mode, "Z/" + std::to_string(n));
}

ExactEntropy log_of(long a) { return ExactEntropy::log_of(Integer(a)); }

}  // namespace

TEST_CASE("Q2 under x/2: entropy, scale, nub, link") {
  auto sys = padic_sys({{half}});
  auto e = topological_entropy(*sys, 8);
  CHECK(e.value == log_of(2));
  CHECK(e.saturated);
  CHECK(*e.witness == sys->base(0));
  auto s = scale(*sys, 8);
  CHECK(s.value == 2);
  CHECK(s.witness == sys->base(0));
  CHECK(s.certified);
  CHECK(s.witness_tidy_above);
  auto n = nub(*sys, 2, 8);
  CHECK(n.nub == sys->trivial());
  CHECK(n.certified);
  auto v = verify_scale_entropy_link(*sys, 8);
  CHECK(v.status == Status::pass);
  auto lb = entropy_lower_bound(*sys, {sys->base(0), sys->whole()});
  CHECK(lb.value == log_of(2));
  CHECK(lb.accepted == 1);
}

TEST_CASE("compact full shift: nub is everything") {
  auto sys = zmod_shift(2, shift::TailMode::compact);
  auto e = topological_entropy(*sys, 8);
  CHECK(e.value == log_of(2));
  CHECK(e.saturated);
  auto s = scale(*sys, 8);
  CHECK(s.value == 1);
  CHECK(s.witness == sys->whole());
  auto n = nub(*sys, 2, 8);
  CHECK(n.nub == sys->whole());
  CHECK(n.certified);
  auto v = verify_scale_entropy_link(*sys, 8);
  INFO(v.detail);
  CHECK(v.status == Status::pass);
  const auto& a = sys->alphabet();
  auto lb = entropy_lower_bound(*sys, {sys->handle(Profile{{a.zero}, 1, {}, {a.full}})});
  CHECK(lb.value == log_of(2));
}

TEST_CASE("laurent shift scale equals the alphabet size") {
  for (int n : {2, 3}) {
    auto sys = zmod_shift(n, shift::TailMode::laurent);
    auto s = scale(*sys, 8);
    CHECK(s.value == n);
    CHECK(s.witness == sys->base(0));
    CHECK(s.witness_tidy_above);
    CHECK(topological_entropy(*sys, 8).value == log_of(n));
    CHECK(verify_scale_entropy_link(*sys, 8).status == Status::pass);
  }
}

TEST_CASE("finite systems have zero entropy and scale one") {
  auto g = finite::Group::symmetric3();
  for (const auto& phi : finite::all_endomorphisms(g)) {
    auto sys = finite::make_system(g, phi, "S3");
    auto e = topological_entropy(*sys, 4);
    CHECK(e.value == ExactEntropy::zero());
    CHECK(e.saturated);
    CHECK(scale(*sys, 4).value == 1);
    auto v = verify_scale_entropy_link(*sys, 4);
    INFO(v.detail);
    CHECK(v.status == Status::pass);
  }
  auto id = finite::make_system(g, finite::identity_map(g), "S3");
  CHECK(nub(*id).nub == id->trivial());
}

TEST_CASE("addition theorem instances") {
  auto diag = padic_sys({{half, 0}, {0, half}});
  auto line = diag->subspace(Matrix::from_rows({{1}, {0}}));
  auto v = verify_addition_theorem(*diag, line, 8);
  INFO(v.detail);
  CHECK(v.status == Status::pass);
  CHECK(v.values[0].second == "4");

  auto jordan = padic_sys({{half, 1}, {0, half}});
  CHECK(verify_addition_theorem(*jordan, jordan->subspace(Matrix::from_rows({{1}, {0}})), 8).status == Status::pass);
  CHECK(verify_addition_theorem(*jordan, jordan->trivial(), 8).status == Status::pass);
  CHECK(verify_addition_theorem(*jordan, jordan->whole(), 8).status == Status::pass);
  CHECK(verify_addition_theorem(*jordan, jordan->subspace(Matrix::from_rows({{0}, {1}})), 8).status ==
        Status::skipped);

  auto z4 = zmod_shift(4, shift::TailMode::compact);
  auto two = z4->constant(z4->alphabet().id(z4->alphabet().group->generated(finite::Elements().set(2))));
  auto w = verify_addition_theorem(*z4, two, 8);
  INFO(w.detail);
  CHECK(w.status == Status::pass);
  CHECK(w.values[1].second == "2");
  CHECK(w.values[2].second == "2");
}

TEST_CASE("addition theorem for a compact non-normal subgroup") {
  auto g = finite::Group::symmetric3();
  auto sys = finite::make_system(g, finite::identity_map(g), "S3");
  auto h = sys->handle(g.subgroups()[1]);
  CHECK_FALSE(sys->is_normal(h));
  CHECK(verify_addition_theorem(*sys, h, 4).status == Status::pass);
}

TEST_CASE("product entropy adds and scales multiply") {
  auto a = padic_sys({{half}});
  auto b = zmod_shift(3, shift::TailMode::compact);
  auto p = product::make_system(a, b);
  auto e = topological_entropy(*p, 8);
  CHECK(e.value == log_of(6));
  CHECK(e.saturated);
  CHECK(scale(*p, 8).value == 2);
  auto pp = product::make_system(a, a);
  auto diag = padic_sys({{half, 0}, {0, half}});
  CHECK(topological_entropy(*pp, 8).value == topological_entropy(*diag, 8).value);
  CHECK(scale(*pp, 8).value == scale(*diag, 8).value);
  auto n = nub(*pp, 2, 8);
  CHECK(n.nub == pp->trivial());
  CHECK(n.certified);
}

TEST_CASE("monotonicity under restriction and compact quotient") {
  auto z4 = zmod_shift(4, shift::TailMode::compact);
  auto two = z4->constant(z4->alphabet().id(z4->alphabet().group->generated(finite::Elements().set(2))));
  auto v = verify_monotonicity(*z4, two, 8);
  INFO(v.detail);
  CHECK(v.status == Status::pass);
  auto diag = padic_sys({{half, 0}, {0, 2}});
  auto w = verify_monotonicity(*diag, diag->subspace(Matrix::from_rows({{1}, {0}})), 8);
  INFO(w.detail);
  CHECK(w.status == Status::pass);
}
