#pragma once

#include "tdlc/linalg.hpp"

#include <bitset>
#include <memory>
#include <variant>
#include <vector>

namespace tdlc {

constexpr std::size_t kMaxFiniteOrder = 256;

enum class Backend { finite, padic, shift, product };
const char* backend_name(Backend b);

struct FiniteSubgroup {
  std::bitset<kMaxFiniteOrder> elements;
  friend bool operator==(const FiniteSubgroup&, const FiniteSubgroup&) = default;
};

// W + M with W a rational subspace (canonical reduced basis) and M a
// Z_p-module reduced modulo W and put in Hermite form.
struct PAdicSubgroup {
  linalg::Matrix subspace;
  linalg::Matrix module;
  long exponent = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<long> pivot_vals;
  friend bool operator==(const PAdicSubgroup& a, const PAdicSubgroup& b) {
    return a.subspace == b.subspace && a.module == b.module && a.exponent == b.exponent;
  }
};

// Coordinatewise subgroup of a sequence group. Coordinate i lies in the
// alphabet subgroup with id:
//   left[i mod left.size()]    for i < start
//   window[i - start]          for start <= i < start + window.size()
//   right[i mod right.size()]  beyond the window
struct Profile {
  std::vector<int> left{0};
  long start = 0;
  std::vector<int> window;
  std::vector<int> right{0};

  long end() const { return start + static_cast<long>(window.size()); }
  int at(long i) const;
  int left_at(long i) const;
  int right_at(long i) const;
  friend bool operator==(const Profile&, const Profile&) = default;
};

struct Subgroup;

struct ProductSubgroup {
  std::shared_ptr<const Subgroup> first;
  std::shared_ptr<const Subgroup> second;
};

// Type-erased handle to a closed subgroup. Only the system that produced it
// can interpret the payload.
struct Subgroup {
  std::variant<FiniteSubgroup, PAdicSubgroup, Profile, ProductSubgroup> payload;
  bool compact = true;
  bool open = true;

  Backend backend() const { return static_cast<Backend>(payload.index()); }
  template <class T>
  const T& as() const {
    if (!std::holds_alternative<T>(payload)) throw BackendMismatch("subgroup handle from a different backend");
    return std::get<T>(payload);
  }
};

bool operator==(const ProductSubgroup& a, const ProductSubgroup& b);
bool operator==(const Subgroup& a, const Subgroup& b);

Subgroup make_pair(Subgroup a, Subgroup b);

}  // namespace tdlc
