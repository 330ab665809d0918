#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace tdlc {

using Integer = mpz_class;
using Rational = mpq_class;

// Error kinds shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BackendMismatch : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct CapabilityError : Error {
  using Error::Error;
};
struct InvariantViolation : Error {
  using Error::Error;
};
// A bounded computation ran out of budget without reaching a certified answer.
struct Unresolved : Error {
  using Error::Error;
};
struct InvalidInput : Error {
  using Error::Error;
};

// Index of a closed subgroup: a positive integer or infinity.
class IndexValue {
 public:
  IndexValue() : value_(1) {}
  explicit IndexValue(Integer v);
  static IndexValue infinite();
  static IndexValue finite(long v) { return IndexValue(Integer(v)); }

  bool is_infinite() const { return infinite_; }
  const Integer& value() const;  // throws if infinite
  std::string to_string() const;

  friend IndexValue operator*(const IndexValue& a, const IndexValue& b);
  friend bool operator==(const IndexValue& a, const IndexValue& b);
  friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b);
  // a divides b (infinite divides only infinite; everything finite divides infinite)
  friend bool divides(const IndexValue& a, const IndexValue& b);
  // exact quotient b / a, requires divides(a, b) and a finite
  friend IndexValue exact_quotient(const IndexValue& b, const IndexValue& a);

 private:
  Integer value_;
  bool infinite_ = false;
};

// Entropy stored as log(alpha) with alpha a positive integer, or infinite.
// Two entropies are equal exactly when their alphas are equal.
class ExactEntropy {
 public:
  ExactEntropy() : alpha_(1) {}
  static ExactEntropy zero() { return ExactEntropy(); }
  static ExactEntropy log_of(const IndexValue& v);
  static ExactEntropy log_of(const Integer& alpha);
  static ExactEntropy infinite();

  bool is_infinite() const { return infinite_; }
  const Integer& alpha() const;  // throws if infinite
  std::string alpha_string() const;
  // natural log, for display only; never used in comparisons
  double display_value() const;

  ExactEntropy operator+(const ExactEntropy& o) const;
  friend bool operator==(const ExactEntropy& a, const ExactEntropy& b);
  friend std::strong_ordering operator<=>(const ExactEntropy& a, const ExactEntropy& b);

 private:
  Integer alpha_;
  bool infinite_ = false;
};

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Integer ipow(const Integer& base, unsigned long exp);

}  // namespace tdlc
