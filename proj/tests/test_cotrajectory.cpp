#include <doctest.h>

#include "tdlc/cotrajectory.hpp"
#include "tdlc/finite.hpp"
#include "tdlc/padic.hpp"
#include "tdlc/shift.hpp"

using namespace tdlc;
using namespace tdlc::cotraj;

namespace {

using linalg::Matrix;
const Rational half(1, 2);

std::shared_ptr<padic::PAdicSystem> q2(const Rational& a) {
  return padic::make_system(Integer(2), Matrix::from_rows({{a}}), "Q2");
}

std::shared_ptr<shift::ShiftSystem> zmod_shift(int n, shift::TailMode mode) {
  finite::Map id(n);
  for (int a = 0; a < n; ++a) id[a] = a;
  return shift::make_system(finite::Group::cyclic(n), id, 1, mode, "Z/" + std::to_string(n));
}

// trivial at coordinate 0, full elsewhere
Subgroup point(const shift::ShiftSystem& s) {
  return s.window(s.alphabet().full, 0, {s.alphabet().zero}, s.alphabet().full);
}

}  // namespace

TEST_CASE("Q2 under x/2") {
  auto sys = q2(half);
  auto u = sys->base(0);
  CHECK(minus_n(*sys, u, 3) == sys->base(3));
  CHECK(minus_n(*sys, u, 0) == u);
  CHECK(plus_n(*sys, u, 5) == u);
  auto t = alpha_sequence(*sys, u, 8);
  for (const auto& r : t.rows) {
    CHECK(r.c == IndexValue(ipow(Integer(2), r.n)));
    CHECK(r.alpha == IndexValue::finite(2));
  }
  REQUIRE(t.stable_from);
  CHECK(*t.stable_from == 0);
  auto p = plus_group(*sys, u);
  CHECK(p.method == PlusMethod::fixpoint);
  CHECK(p.steps == 0);
  CHECK(p.group == u);
  CHECK(minus_group(*sys, u).group == sys->trivial());
  CHECK(htop_local(*sys, u) == ExactEntropy::log_of(Integer(2)));
  CHECK(htop_limit_estimate(*sys, u, 8) == htop_local(*sys, u));
  CHECK(is_tidy_above(*sys, u));
  CHECK(tidy_above_transform(*sys, u) == u);
  CHECK(is_tidy_below(*sys, u).holds);
  CHECK(is_minimizing(*sys, u, Integer(2)));
}

TEST_CASE("Q2 under 2x") {
  auto sys = q2(Rational(2));
  auto u = sys->base(0);
  CHECK(plus_n(*sys, u, 1) == sys->base(1));
  CHECK(plus_n(*sys, u, 4) == sys->base(4));
  auto p = plus_group(*sys, u, 8);
  CHECK(p.method == PlusMethod::structural);
  CHECK(p.group == sys->trivial());
  CHECK(htop_local(*sys, u) == ExactEntropy::zero());
  CHECK(htop_limit_estimate(*sys, u) == ExactEntropy::zero());
}

TEST_CASE("mixed slopes are tidy above on the unit lattice") {
  auto sys = padic::make_system(Integer(2), Matrix::from_rows({{2, 0}, {0, half}}), "mixed");
  auto u = sys->base(0);
  CHECK(is_tidy_above(*sys, u));
  CHECK(htop_local(*sys, u) == ExactEntropy::log_of(Integer(2)));
  CHECK(htop_limit_estimate(*sys, u) == htop_local(*sys, u));
  CHECK(check_identities(*sys, u).ok());
}

TEST_CASE("compact full shift with U trivial at one coordinate") {
  auto sys = zmod_shift(2, shift::TailMode::compact);
  const auto& a = sys->alphabet();
  auto u = point(*sys);
  CHECK(minus_n(*sys, u, 2) == sys->window(a.full, 0, {a.zero, a.zero, a.zero}, a.full));
  auto t = alpha_sequence(*sys, u, 10);
  for (const auto& r : t.rows) {
    CHECK(r.c == IndexValue(ipow(Integer(2), r.n)));
    CHECK(r.alpha == IndexValue::finite(2));
  }
  REQUIRE(t.stable_from);
  CHECK(*t.stable_from == 0);
  auto p = plus_group(*sys, u, 16);
  CHECK(p.method == PlusMethod::structural);
  CHECK(p.group == sys->handle(Profile{{a.zero}, 1, {}, {a.full}}));
  CHECK(minus_group(*sys, u).group == sys->handle(Profile{{a.full}, 0, {}, {a.zero}}));
  CHECK(htop_local(*sys, u) == ExactEntropy::log_of(Integer(2)));
  CHECK(htop_limit_estimate(*sys, u) == htop_local(*sys, u));
  CHECK(is_tidy_above(*sys, u));
  CHECK_FALSE(is_tidy_below(*sys, u).holds);
  CHECK_FALSE(is_minimizing(*sys, u, Integer(1)));
  CHECK(check_identities(*sys, u).ok());
}

TEST_CASE("Z/4 shift limit") {
  auto sys = zmod_shift(4, shift::TailMode::compact);
  CHECK(htop_limit_estimate(*sys, point(*sys)) == ExactEntropy::log_of(Integer(4)));
}

TEST_CASE("finite groups have zero local entropy and satisfy the identities") {
  for (auto g : {finite::Group::symmetric3(), finite::Group::quaternion(), finite::Group::cyclic(12)}) {
    auto shared = std::make_shared<const finite::Group>(g);
    for (const auto& phi : finite::all_endomorphisms(g)) {
      auto sys = finite::make_system(g, phi, "G");
      for (const auto& s : g.subgroups()) {
        auto u = sys->handle(s);
        auto t = alpha_sequence(*sys, u, static_cast<std::size_t>(g.order()));
        REQUIRE(t.stable_from);
        CHECK(t.rows.back().alpha == IndexValue());
        CHECK(htop_local(*sys, u) == ExactEntropy::zero());
        CHECK(htop_limit_estimate(*sys, u) == ExactEntropy::zero());
        CHECK(check_identities(*sys, u, 8).ok());
      }
      auto stable = sys->whole();
      for (int i = 0; i < 8; ++i) stable = sys->image(stable);
      CHECK(check_stable_below(*sys, sys->whole(), stable).ok());
    }
  }
}

TEST_CASE("identity endomorphism") {
  auto g = finite::Group::dihedral(4);
  auto sys = finite::make_system(g, finite::identity_map(g), "D4");
  for (const auto& s : g.subgroups()) {
    auto u = sys->handle(s);
    CHECK(plus_group(*sys, u).group == u);
    CHECK(minus_group(*sys, u).group == u);
    CHECK(is_tidy_below(*sys, u).holds);
    CHECK(is_minimizing(*sys, u, Integer(1)));
  }
}

TEST_CASE("preconditions") {
  auto sys = q2(half);
  CHECK_THROWS_AS(alpha_sequence(*sys, sys->whole(), 4), PreconditionError);
  CHECK_THROWS_AS(alpha_sequence(*sys, sys->base(0), 0), PreconditionError);
  auto g = finite::Group::symmetric3();
  auto parent = finite::make_system(g, finite::identity_map(g), "S3");
  auto h = g.subgroups()[1];
  auto cosets = parent->quotient(describe_subgroup(*parent, parent->handle(h)));
  CHECK_FALSE(cosets->capabilities().images);
  CHECK_THROWS_AS(htop_local(*cosets, cosets->whole()), CapabilityError);
  CHECK(htop_limit_estimate(*cosets, cosets->whole()) == ExactEntropy::zero());
}
