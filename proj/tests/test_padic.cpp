#include <doctest.h>

#include "tdlc/padic.hpp"

#include <random>

using namespace tdlc;
using namespace tdlc::padic;

static Matrix M(std::vector<std::vector<Rational>> rows) { return Matrix::from_rows(rows); }
static const Rational half(1, 2);

TEST_CASE("newton polygon reports root valuations") {
  Integer two(2);
  auto a = newton_polygon(M({{half}}), two);
  REQUIRE(a.slopes.size() == 1);
  CHECK(a.slopes[0].root_valuation == -1);
  CHECK(a.predicted_alpha == 2);
  CHECK(newton_polygon(M({{half, 1}, {0, half}}), two).predicted_alpha == 4);
  auto mixed = newton_polygon(M({{2, 0}, {0, half}}), two);
  CHECK(mixed.slopes.size() == 2);
  CHECK(mixed.predicted_alpha == 2);
  auto sing = newton_polygon(M({{half, 1}, {0, 0}}), two);
  CHECK(sing.zero_roots == 1);
  CHECK(sing.predicted_alpha == 2);
  CHECK(newton_polygon(M({{1, 0}, {0, 1}}), two).predicted_alpha == 1);
  // x^2 - 2 over Q_2: irrational roots of valuation 1/2
  auto ram = newton_polygon(std::vector<Rational>{-2, 0, 1}, two);
  REQUIRE(ram.slopes.size() == 1);
  CHECK(ram.slopes[0].root_valuation == Rational(1, 2));
  CHECK(ram.slopes[0].multiplicity == 2);
}

TEST_CASE("rational roots are found with multiplicity") {
  auto rs = split_roots(M({{half, 1, 0}, {0, half, 0}, {0, 0, 3}}), Integer(2));
  REQUIRE(rs.rational_roots.size() == 2);
  CHECK(rs.remainder.size() == 1);
}

TEST_CASE("basic handle algebra on Q_2^2") {
  auto sys = make_system(Integer(2), M({{half, 0}, {0, half}}), "diag");
  auto z = sys->base(0);
  CHECK(z.compact);
  CHECK(z.open);
  CHECK(index(*sys, z, sys->base(1)).value() == 4);
  CHECK(image(*sys, sys->base(1)) == z);
  CHECK(preimage(*sys, z) == sys->base(1));
  auto line = sys->subspace(M({{1}, {0}}));
  CHECK_FALSE(line.compact);
  auto cut = intersect(*sys, line, z);
  CHECK(cut == sys->lattice(M({{1}, {0}})));
  CHECK(index(*sys, set_product(*sys, line, z), z).is_infinite());
  CHECK(contains(*sys, sys->whole(), line));
  CHECK_FALSE(contains(*sys, z, line));
}

TEST_CASE("preimage under a singular map contains the kernel") {
  auto sys = make_system(Integer(2), M({{half, 0}, {0, 0}}), "sing");
  auto pre = preimage(*sys, sys->base(0));
  CHECK_FALSE(pre.compact);
  CHECK(pre == sys->make(M({{0}, {1}}), M({{2}, {0}})));
  CHECK(sys->kernel() == sys->subspace(M({{0}, {1}})));
}

TEST_CASE("different generating sets give identical handles") {
  auto sys = make_system(Integer(3), Matrix::identity(3), "id");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = d(rng);
    if (linalg::rank(g) < 3) continue;
    // unimodular change of generators over Z
    Matrix u = Matrix::identity(3);
    u(0, 1) = d(rng), u(0, 2) = d(rng), u(1, 2) = d(rng);
    Matrix u2 = Matrix::identity(3);
    u2(1, 0) = d(rng), u2(2, 0) = d(rng), u2(2, 1) = d(rng);
    CHECK(sys->lattice(g) == sys->lattice(g * u * u2));
    CHECK(sys->lattice(g) == sys->lattice(g.hconcat(g * u)));
  }
}

// lattices between 8Z_2^2 and Z_2^2 checked against counting residues mod 8
TEST_CASE("intersection and index agree with enumeration mod 8") {
  auto sys = make_system(Integer(2), Matrix::identity(2), "id");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 7);
  auto random_lattice = [&] {
    Matrix g = M({{8, 0}, {0, 8}});
    g = g.hconcat(M({{d(rng)}, {d(rng)}}));
    g = g.hconcat(M({{d(rng)}, {d(rng)}}));
    return sys->lattice(g);
  };
  auto count = [&](const Subgroup& l) {
    int n = 0;
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        if (contains(*sys, l, sys->lattice(M({{x}, {y}})))) ++n;
    return n;
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_lattice(), b = random_lattice();
    auto c = intersect(*sys, a, b);
    CHECK(index(*sys, sys->base(0), c).value() == 64 / count(c));
    CHECK(index(*sys, sys->base(0), a).value() == 64 / count(a));
    auto s = set_product(*sys, a, b);
    CHECK(index(*sys, s, c) * index(*sys, sys->base(0), s) == index(*sys, sys->base(0), c));
  }
}

TEST_CASE("quotient by an invariant line") {
  auto sys = make_system(Integer(2), M({{half, 0}, {0, half}}), "diag");
  auto spec = describe_subgroup(*sys, sys->subspace(M({{1}, {0}})));
  CHECK(spec.phi_stable);
  auto q = std::dynamic_pointer_cast<const PAdicSystem>(sys->quotient(spec));
  REQUIRE(q);
  CHECK(q->matrix() == M({{half}}));
  auto r = std::dynamic_pointer_cast<const PAdicSystem>(sys->restrict_to(spec));
  CHECK(r->matrix() == M({{half}}));
  CHECK(sys->project(spec, sys->base(2)) == q->base(2));
}

TEST_CASE("plus and minus groups in closed form") {
  auto sys = make_system(Integer(2), M({{2, 0}, {0, half}}), "mixed");
  auto plus = sys->structural_plus(sys->base(0));
  REQUIRE(plus);
  CHECK(*plus == sys->lattice(M({{0}, {1}})));
  auto minus = sys->structural_minus(sys->base(0));
  CHECK(*minus == sys->lattice(M({{1}, {0}})));
}
