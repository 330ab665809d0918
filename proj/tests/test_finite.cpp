#include <doctest.h>

#include "tdlc/finite.hpp"

using namespace tdlc;
using namespace tdlc::finite;

TEST_CASE("catalog groups have the textbook orders and subgroup counts") {
  struct Row {
    Group g;
    int order, subgroups, endos;
  };
  std::vector<Row> rows{{Group::symmetric3(), 6, 6, 10},  {Group::dihedral(4), 8, 10, 36},
                        {Group::quaternion(), 8, 6, 28},  {Group::alternating4(), 12, 10, 33},
                        {Group::cyclic(12), 12, 6, 12},   {Group::trivial(), 1, 1, 1}};
  for (auto& r : rows) {
    CHECK(r.g.order() == r.order);
    CHECK(static_cast<int>(r.g.subgroups().size()) == r.subgroups);
    CHECK(static_cast<int>(all_endomorphisms(r.g).size()) == r.endos);
  }
  CHECK_FALSE(Group::quaternion().is_abelian());
  CHECK(Group::abelian({2, 2}).is_abelian());
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS_AS(Group({{0, 1}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Group({{0, 1}, {1}}), InvalidInput);
}

TEST_CASE("finite system operations agree with raw enumeration") {
  auto g = Group::alternating4();
  for (const auto& phi : all_endomorphisms(g)) {
    auto sys = make_system(g, phi, "A4");
    for (const auto& a : g.subgroups()) {
      auto ua = sys->handle(a);
      Elements img;
      for (int x = 0; x < g.order(); ++x)
        if (a.test(x)) img.set(phi[x]);
      CHECK(sys->image(ua).as<FiniteSubgroup>().elements == img);
      CHECK(g.is_subgroup(sys->preimage(ua).as<FiniteSubgroup>().elements));
      for (const auto& b : g.subgroups()) {
        auto ub = sys->handle(b);
        CHECK(intersect(*sys, ua, ub).as<FiniteSubgroup>().elements == (a & b));
        if ((b & ~a).none()) CHECK(index(*sys, ua, ub).value() == a.count() / b.count());
      }
    }
  }
}

TEST_CASE("quotients and restrictions") {
  auto g = Group::alternating4();
  auto sys = make_system(g, identity_map(g), "A4");
  // Klein four subgroup: the unique normal subgroup of order 4
  Elements v4;
  for (const auto& s : g.subgroups())
    if (s.count() == 4) v4 = s;
  auto spec = describe_subgroup(*sys, sys->handle(v4));
  CHECK(spec.normal);
  CHECK(spec.phi_stable);
  auto q = sys->quotient(spec);
  CHECK(q->whole().as<FiniteSubgroup>().elements.count() == 3);
  auto r = sys->restrict_to(spec);
  CHECK(r->whole().as<FiniteSubgroup>().elements.count() == 4);
  // a non-normal subgroup gives a coset space without images
  Elements c3;
  for (const auto& s : g.subgroups())
    if (s.count() == 3) { c3 = s; break; }
  auto spec3 = describe_subgroup(*sys, sys->handle(c3));
  CHECK_FALSE(spec3.normal);
  auto cq = sys->quotient(spec3);
  CHECK_FALSE(cq->capabilities().images);
  CHECK(index(*cq, cq->whole(), cq->trivial()).value() == 4);
}

TEST_CASE("mixed handles are rejected") {
  auto a = make_system(Group::cyclic(4), identity_map(Group::cyclic(4)), "Z4");
  Subgroup foreign;
  foreign.payload = Profile{};
  CHECK_THROWS_AS(intersect(*a, a->whole(), foreign), BackendMismatch);
  CHECK_THROWS_AS(index(*a, a->trivial(), a->whole()), PreconditionError);
}
