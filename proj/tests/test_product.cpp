#include <doctest.h>

#include "tdlc/finite.hpp"
#include "tdlc/padic.hpp"
#include "tdlc/product.hpp"

using namespace tdlc;

namespace {

std::shared_ptr<finite::FiniteSystem> s3_with(const finite::Map& phi) {
  return finite::make_system(finite::Group::symmetric3(), phi, "S3");
}

std::shared_ptr<padic::PAdicSystem> halving() {
  return padic::make_system(Integer(2), linalg::Matrix::from_rows({{Rational(1, 2)}}), "Q2/2");
}

}  // namespace

TEST_CASE("product handles act componentwise and indices multiply") {
  auto g = finite::Group::symmetric3();
  auto ends = finite::all_endomorphisms(g);
  auto f = s3_with(ends.back());
  auto q = halving();
  auto sys = product::make_system(f, q);
  CHECK(sys->name() == "S3 x Q2/2");
  auto u = sys->base(0), v = sys->base(3);
  CHECK(contains(*sys, u, v));
  CHECK(index(*sys, u, v) == index(*f, f->base(0), f->base(3)) * index(*q, q->base(0), q->base(3)));
  CHECK(image(*sys, u) == make_pair(image(*f, f->base(0)), image(*q, q->base(0))));
  CHECK(preimage(*sys, v) == make_pair(preimage(*f, f->base(3)), preimage(*q, q->base(3))));
  CHECK(intersect(*sys, u, v) == v);
  CHECK(index(*sys, sys->whole(), u).is_infinite());
  CHECK_THROWS_AS(index(*sys, q->base(0), q->base(1)), BackendMismatch);
  CHECK(sys->describe(sys->trivial()) == "(" + f->describe(f->trivial()) + ", " + q->describe(q->trivial()) + ")");
}

TEST_CASE("product oracles multiply") {
  auto sys = product::make_system(halving(), halving());
  REQUIRE(sys->entropy_oracle());
  CHECK(*sys->entropy_oracle() == 4);
  CHECK(*sys->scale_oracle() == 4);
  auto plus = sys->structural_plus(sys->base(0));
  REQUIRE(plus);
  CHECK(*plus == sys->base(0));
  CHECK(sys->plus_plus_closed(*plus, 16).status == ClosureStatus::closed);
}

TEST_CASE("quotient and restriction of a product keep the untouched factor") {
  auto g = finite::Group::symmetric3();
  auto f = s3_with(finite::identity_map(g));
  auto q = halving();
  auto sys = product::make_system(f, q);
  auto h = describe_subgroup(*sys, make_pair(f->whole(), q->trivial()));
  auto quo = std::dynamic_pointer_cast<const product::ProductSystem>(sys->quotient(h));
  REQUIRE(quo);
  CHECK(quo->first()->whole() == quo->first()->trivial());
  CHECK(quo->second() == q);
  CHECK(sys->project(h, sys->base(2)) == make_pair(quo->first()->trivial(), q->base(2)));
  auto res = std::dynamic_pointer_cast<const product::ProductSystem>(sys->restrict_to(h));
  REQUIRE(res);
  CHECK(res->first() == f);
  CHECK(res->second()->whole() == res->second()->trivial());
  CHECK(sys->to_restricted(h, sys->base(1)) == make_pair(f->base(1), res->second()->trivial()));
}
