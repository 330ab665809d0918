#include "tdlc/kernel.hpp"

#include <cmath>

namespace tdlc {

IndexValue::IndexValue(Integer v) : value_(std::move(v)) {
  if (value_ < 1) throw PreconditionError("index must be a positive integer, got " + value_.get_str());
}

IndexValue IndexValue::infinite() {
  IndexValue v;
  v.infinite_ = true;
  v.value_ = 0;
  return v;
}

const Integer& IndexValue::value() const {
  if (infinite_) throw PreconditionError("index is infinite");
  return value_;
}

std::string IndexValue::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

IndexValue operator*(const IndexValue& a, const IndexValue& b) {
  if (a.infinite_ || b.infinite_) return IndexValue::infinite();
  return IndexValue(a.value_ * b.value_);
}

bool operator==(const IndexValue& a, const IndexValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool divides(const IndexValue& a, const IndexValue& b) {
  if (b.infinite_) return true;
  if (a.infinite_) return false;
  return mpz_divisible_p(b.value_.get_mpz_t(), a.value_.get_mpz_t()) != 0;
}

IndexValue exact_quotient(const IndexValue& b, const IndexValue& a) {
  if (a.infinite_) throw PreconditionError("cannot divide by an infinite index");
  if (b.infinite_) return IndexValue::infinite();
  if (!divides(a, b)) throw InvariantViolation(a.to_string() + " does not divide " + b.to_string());
  return IndexValue(Integer(b.value_ / a.value_));
}

ExactEntropy ExactEntropy::log_of(const IndexValue& v) {
  if (v.is_infinite()) return infinite();
  return log_of(v.value());
}

ExactEntropy ExactEntropy::log_of(const Integer& alpha) {
  if (alpha < 1) throw PreconditionError("entropy alpha must be a positive integer");
  ExactEntropy e;
  e.alpha_ = alpha;
  return e;
}

ExactEntropy ExactEntropy::infinite() {
  ExactEntropy e;
  e.infinite_ = true;
  e.alpha_ = 0;
  return e;
}

const Integer& ExactEntropy::alpha() const {
  if (infinite_) throw PreconditionError("entropy is infinite");
  return alpha_;
}

std::string ExactEntropy::alpha_string() const { return infinite_ ? "inf" : alpha_.get_str(); }

double ExactEntropy::display_value() const {
  if (infinite_) return INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, alpha_.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

ExactEntropy ExactEntropy::operator+(const ExactEntropy& o) const {
  if (infinite_ || o.infinite_) return infinite();
  return log_of(Integer(alpha_ * o.alpha_));
}

bool operator==(const ExactEntropy& a, const ExactEntropy& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.alpha_ == b.alpha_;
}

std::strong_ordering operator<=>(const ExactEntropy& a, const ExactEntropy& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.alpha_, b.alpha_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace tdlc
