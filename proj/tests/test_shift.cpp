#include <doctest.h>

#include "../src/shift_internal.hpp"

#include <random>

using namespace tdlc;
using namespace tdlc::shift;

namespace {

std::shared_ptr<ShiftSystem> z_mod(int n, long k, TailMode mode, int mult = 1) {
  auto g = finite::Group::cyclic(n);
  finite::Map m(n);
  for (int a = 0; a < n; ++a) m[a] = (a * mult) % n;
  return make_system(g, m, k, mode, "Z/" + std::to_string(n));
}

std::shared_ptr<ShiftSystem> klein_swap(long k, TailMode mode) {
  auto g = finite::Group::abelian({2, 2});
  // elements a*2+b; swap the two factors
  return make_system(g, {0, 2, 1, 3}, k, mode, "V4 swap");
}

}  // namespace

TEST_CASE("profiles normalize to a unique form") {
  Profile a{{1}, -3, {1, 1, 0, 2, 2}, {2}};
  Profile b{{1}, -1, {0}, {2}};
  CHECK(normalize(a) == normalize(b));
  // alternating tails of period 2 written with period 4
  Profile c{{1, 0, 1, 0}, 0, {}, {1, 0}};
  CHECK(normalize(c) == Profile{{1, 0}, 0, {}, {1, 0}});
  Profile d{{0}, 5, {3, 1}, {1, 2}};
  CHECK(reflect(reflect(d)) == normalize(d));
  for (long i = -10; i < 10; ++i) CHECK(reflect(d).at(i) == d.at(-1 - i));
}

TEST_CASE("compact full shift cotrajectory indices") {
  auto sys = z_mod(2, 1, TailMode::compact);
  auto u = sys->base(1);
  CHECK(u.compact);
  CHECK(u.open);
  // U_{-n} = U ∩ phi^-1 U_{-(n-1)} is trivial on [-1, 1+n]
  Subgroup m = u;
  for (int n = 1; n <= 6; ++n) m = intersect(*sys, u, preimage(*sys, m));
  CHECK(m == sys->window(sys->alphabet().full, -1, std::vector<int>(9, sys->alphabet().zero), sys->alphabet().full));
  CHECK(index(*sys, u, m).value() == 64);
  CHECK(sys->entropy_oracle() == Integer(2));
  CHECK(sys->scale_oracle() == Integer(1));
}

TEST_CASE("laurent series: F[[t]] under t^-1") {
  auto sys = z_mod(3, 1, TailMode::laurent);
  auto u = sys->base(0);
  CHECK(u.compact);
  CHECK(u.open);
  auto img = image(*sys, u);
  CHECK(contains(*sys, img, u));
  CHECK(index(*sys, img, u).value() == 3);
  CHECK_FALSE(sys->whole().compact);
  CHECK(index(*sys, sys->whole(), u).is_infinite());
}

// window oracle: iterate U_{n+1} = U ∩ phi U_n many times and compare the
// closed form on a window of coordinates
TEST_CASE("closed-form plus and minus groups match long iteration on windows") {
  std::vector<std::shared_ptr<ShiftSystem>> systems{
      z_mod(4, 1, TailMode::compact), z_mod(4, 1, TailMode::compact, 2), z_mod(4, -2, TailMode::compact, 3),
      z_mod(4, 0, TailMode::compact, 2), klein_swap(1, TailMode::compact), klein_swap(2, TailMode::laurent),
      z_mod(4, 1, TailMode::laurent, 2), z_mod(6, -1, TailMode::laurent, 5)};
  std::mt19937 rng(3);
  for (const auto& sys : systems) {
    const int ns = static_cast<int>(sys->alphabet().subs.size());
    std::uniform_int_distribution<int> pick(0, ns - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> vals(5);
      for (auto& v : vals) v = pick(rng);
      int left = sys->mode() == TailMode::laurent ? sys->alphabet().zero : pick(rng);
      auto u = sys->window(left, -2, vals, pick(rng));
      auto plus = sys->structural_plus(u);
      auto minus = sys->structural_minus(u);
      REQUIRE(plus);
      REQUIRE(minus);
      Subgroup p = u, m = u;
      for (int n = 0; n < 80; ++n) {
        p = intersect(*sys, u, image(*sys, p));
        m = intersect(*sys, u, preimage(*sys, m));
      }
      for (long i = -12; i <= 12; ++i) {
        CHECK(p.as<Profile>().at(i) == plus->as<Profile>().at(i));
        CHECK(m.as<Profile>().at(i) == minus->as<Profile>().at(i));
      }
      CHECK(intersect(*sys, u, image(*sys, *plus)) == *plus);
      CHECK(intersect(*sys, u, preimage(*sys, *minus)) == *minus);
    }
  }
}

TEST_CASE("periodic tails appear under an alphabet swap") {
  auto sys = klein_swap(1, TailMode::compact);
  const auto& a = sys->alphabet();
  // first factor subgroup {0, 2} (elements a*2+b with b = 0)
  finite::Elements first;
  first.set(0), first.set(2);
  int f = a.id(first);
  auto u = sys->window(f, 0, {}, a.full);
  auto img = image(*sys, u);
  auto img2 = image(*sys, img);
  CHECK(img != u);
  CHECK(img2.as<Profile>().left.size() == 1);
  auto alt = sys->handle(Profile{{f, a.id(finite::image_set(a.sigma, first))}, 0, {}, {a.full}});
  CHECK(alt.as<Profile>().left.size() == 2);
  CHECK(image(*sys, image(*sys, alt)) == sys->translate(alt, 2));
}

TEST_CASE("quotient and restriction by a constant subgroup") {
  auto sys = z_mod(4, 1, TailMode::compact);
  const auto& a = sys->alphabet();
  finite::Elements two;
  two.set(0), two.set(2);
  auto h = sys->constant(a.id(two));
  auto spec = describe_subgroup(*sys, h);
  CHECK(spec.phi_stable);
  CHECK(spec.compact);
  auto q = std::dynamic_pointer_cast<const ShiftSystem>(sys->quotient(spec));
  auto r = std::dynamic_pointer_cast<const ShiftSystem>(sys->restrict_to(spec));
  CHECK(q->alphabet().group->order() == 2);
  CHECK(r->alphabet().group->order() == 2);
  // window-wise duality: [U : V] = [pi U : pi V] * [U ∩ H : V ∩ H] for V <= U
  auto u = sys->base(0), v = sys->base(2);
  auto lhs = index(*sys, u, v);
  auto rhs = index(*q, sys->project(spec, u), sys->project(spec, v)) *
             index(*r, sys->to_restricted(spec, intersect(*sys, u, h)), sys->to_restricted(spec, intersect(*sys, v, h)));
  CHECK(lhs == rhs);
  CHECK(sys->project(spec, sys->base(3)) == q->base(3));
}

TEST_CASE("closedness of the union of forward images") {
  auto compact = z_mod(2, 1, TailMode::compact);
  auto u = compact->window(compact->alphabet().full, 0, {compact->alphabet().zero}, compact->alphabet().full);
  auto plus = compact->structural_plus(u);
  CHECK(compact->plus_plus_closed(*plus, 16).status == ClosureStatus::not_closed);
  CHECK(compact->plus_plus_closed(compact->whole(), 16).status == ClosureStatus::closed);
  auto laurent = z_mod(2, 1, TailMode::laurent);
  auto lp = laurent->structural_plus(laurent->base(0));
  CHECK(laurent->plus_plus_closed(*lp, 16).status == ClosureStatus::closed);
}
