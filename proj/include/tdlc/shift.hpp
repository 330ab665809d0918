#pragma once

#include "tdlc/finite.hpp"

namespace tdlc::shift {

// compact: F^Z, laurent: F((t)) (finitely many nonzero negative coordinates),
// discrete: the direct sum of copies of F
enum class TailMode { compact, laurent, discrete };
const char* mode_name(TailMode m);

// A finite abelian alphabet with its subgroup lattice tabulated.
struct Alphabet {
  std::shared_ptr<const finite::Group> group;
  finite::Map sigma;
  std::vector<finite::Elements> subs;
  int zero = 0, full = 0;
  std::vector<std::vector<int>> meet, join;
  std::vector<int> img, pre;
  std::vector<long> size;

  static Alphabet build(finite::Group g, finite::Map sigma);
  int id(const finite::Elements& s) const;
  std::string describe(int id) const;
  // eventual image of sigma
  int eventual_image() const;
};

class ShiftSystem final : public System, public std::enable_shared_from_this<ShiftSystem> {
 public:
  // (phi x)_i = sigma(x_{i+k})
  ShiftSystem(Alphabet alphabet, long k, TailMode mode, std::string name);

  const Alphabet& alphabet() const { return alpha_; }
  long shift() const { return k_; }
  TailMode mode() const { return mode_; }
  Subgroup handle(Profile p) const;
  // profile constant equal to the alphabet subgroup c
  Subgroup constant(int c) const;
  // coordinates i with values[i - start], tails given as constant subgroups
  Subgroup window(int left, long start, std::vector<int> values, int right) const;
  Subgroup translate(const Subgroup& u, long t) const;  // coordinate i <- coordinate i + t

  Backend backend() const override { return Backend::shift; }
  std::string name() const override { return name_; }
  Capabilities capabilities() const override;
  Subgroup whole() const override { return constant(alpha_.full); }
  Subgroup trivial() const override { return constant(alpha_.zero); }
  Subgroup base(std::size_t k) const override;
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
  Subgroup image(const Subgroup& u) const override;
  Subgroup preimage(const Subgroup& u) const override;
  Subgroup set_product(const Subgroup& a, const Subgroup& b) const override;
  bool contains(const Subgroup& outer, const Subgroup& inner) const override;
  IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const override;
  Subgroup kernel() const override { return preimage(trivial()); }
  std::string describe(const Subgroup& u) const override;

  SystemPtr quotient(const ClosedSubgroupSpec& h) const override;
  SystemPtr restrict_to(const ClosedSubgroupSpec& h) const override;
  Subgroup project(const ClosedSubgroupSpec& h, const Subgroup& k) const override;
  Subgroup to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const override;

  std::optional<Subgroup> structural_plus(const Subgroup& u) const override;
  std::optional<Subgroup> structural_minus(const Subgroup& u) const override;
  std::optional<std::size_t> alpha_bound(const Subgroup& u, const std::optional<Subgroup>& plus,
                                         std::span<const Subgroup> minus) const override;
  ClosureCertificate plus_plus_closed(const Subgroup& plus, std::size_t probe) const override;
  std::optional<Integer> entropy_oracle() const override;
  std::optional<Integer> scale_oracle() const override;
  std::vector<Subgroup> scale_candidates(std::size_t depth) const override;
  std::vector<Subgroup> nub_candidates(std::size_t resolution) const override;
  NubClosure nub_closure(const std::vector<Subgroup>& minimizing, const Integer& scale) const override;

 private:
  int constant_tail(const Subgroup& h) const;  // -1 unless h is a constant profile

  Alphabet alpha_;
  long k_;
  TailMode mode_;
  std::string name_;
};

// helpers exposed for tests
Profile normalize(Profile p);
Profile reflect(const Profile& p);

std::shared_ptr<ShiftSystem> make_system(finite::Group g, finite::Map sigma, long k, TailMode mode, std::string name);

}  // namespace tdlc::shift
