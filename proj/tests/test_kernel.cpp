#include <doctest.h>

#include "tdlc/kernel.hpp"

using namespace tdlc;

TEST_CASE("index values multiply and compare") {
  auto a = IndexValue::finite(4), b = IndexValue::finite(6);
  CHECK((a * b).value() == 24);
  CHECK((a * IndexValue::infinite()).is_infinite());
  CHECK(a < b);
  CHECK(b < IndexValue::infinite());
  CHECK(divides(IndexValue::finite(2), b));
  CHECK_FALSE(divides(a, b));
  CHECK(exact_quotient(b, IndexValue::finite(3)).value() == 2);
  CHECK_THROWS_AS(exact_quotient(b, a), InvariantViolation);
  CHECK_THROWS_AS(IndexValue(Integer(0)), PreconditionError);
  CHECK_THROWS_AS(IndexValue::infinite().value(), PreconditionError);
}

TEST_CASE("entropy addition multiplies alphas") {
  auto h = ExactEntropy::log_of(Integer(2)) + ExactEntropy::log_of(Integer(2));
  CHECK(h == ExactEntropy::log_of(Integer(4)));
  CHECK(h.alpha_string() == "4");
  CHECK((h + ExactEntropy::infinite()).is_infinite());
  CHECK(ExactEntropy::zero() < h);
  CHECK(ExactEntropy::zero().display_value() == 0.0);
  CHECK(h.display_value() == doctest::Approx(1.3862943611));
}

TEST_CASE("huge alphas stay exact") {
  Integer big = ipow(Integer(3), 400);
  auto h = ExactEntropy::log_of(big);
  CHECK(h.alpha_string() == big.get_str());
  CHECK(h.display_value() == doctest::Approx(400 * 1.0986122887));
  CHECK(h != ExactEntropy::log_of(Integer(big + 1)));
}
