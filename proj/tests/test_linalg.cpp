#include <doctest.h>

#include "tdlc/linalg.hpp"

using namespace tdlc;
using namespace tdlc::linalg;

static Matrix M(std::vector<std::vector<Rational>> rows) { return Matrix::from_rows(rows); }

TEST_CASE("valuations") {
  CHECK(valuation(Integer(24), Integer(2)) == 3);
  CHECK(valuation(Rational(3, 8), Integer(2)) == -3);
  CHECK(valuation(Rational(9, 5), Integer(3)) == 2);
}

TEST_CASE("rational nullspace and solve") {
  auto a = M({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(a) == 1);
  auto n = nullspace(a);
  CHECK(n.cols() == 2);
  CHECK((a * n).is_zero());
  auto x = solve(M({{1, 1}, {1, -1}}), {Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK(!solve(M({{1, 1}, {1, 1}}), {Rational(1), Rational(2)}));
}

TEST_CASE("characteristic polynomial") {
  auto c = char_poly(M({{Rational(1, 2), 1}, {0, Rational(1, 2)}}));
  // (x - 1/2)^2 = x^2 - x + 1/4
  CHECK(c[0] == Rational(1, 4));
  CHECK(c[1] == -1);
  CHECK(c[2] == 1);
  CHECK(poly_eval(c, M({{Rational(1, 2), 1}, {0, Rational(1, 2)}})).is_zero());
}

TEST_CASE("hermite form is canonical") {
  Integer p(2);
  // two generating sets of the lattice 2Z_2 + Z_2 (1,1)
  auto a = hermite(M({{2, 1}, {0, 1}}), p);
  auto b = hermite(M({{1, 3, 4}, {1, 3, 2}}), p);
  CHECK(a.basis == b.basis);
  CHECK(a.exponent == b.exponent);
  auto c = hermite(M({{Rational(1, 4), 0}, {0, Rational(1, 2)}}), p);
  CHECK(c.exponent == -2);
  CHECK(c.pivot_vals == std::vector<long>{0, 1});
}

TEST_CASE("lattice kernel over Z_p") {
  Integer p(3);
  auto k = lattice_kernel(M({{1, 3}}), p);
  REQUIRE(k.cols() == 1);
  CHECK((M({{1, 3}}) * k).is_zero());
  // kernel is saturated: the generator has a unit entry
  bool unit = false;
  for (std::size_t r = 0; r < k.rows(); ++r)
    if (k(r, 0) != 0 && valuation(k(r, 0), p) == 0) unit = true;
  CHECK(unit);
}

TEST_CASE("residue representatives") {
  Integer p(5);
  CHECK(residue(Rational(7), 1, p) == 2);
  CHECK(residue(Rational(1, 2), 1, p) == 3);
  CHECK(residue(Rational(-1), 2, p) == 24);
  CHECK(residue(Rational(3), 0, p) == 0);
}
