#pragma once

#include "tdlc/system.hpp"

namespace tdlc::product {

// G1 x G2 with phi1 x phi2. Handles are pairs; every subgroup operation and
// index is computed factor by factor.
class ProductSystem final : public System {
 public:
  ProductSystem(SystemPtr first, SystemPtr second, std::string name);

  const SystemPtr& first() const { return a_; }
  const SystemPtr& second() const { return b_; }
  Subgroup pair(const Subgroup& x, const Subgroup& y) const;
  static const Subgroup& part(const Subgroup& u, int which);

  Backend backend() const override { return Backend::product; }
  std::string name() const override { return name_; }
  Capabilities capabilities() const override;
  Subgroup whole() const override { return pair(a_->whole(), b_->whole()); }
  Subgroup trivial() const override { return pair(a_->trivial(), b_->trivial()); }
  Subgroup base(std::size_t k) const override { return pair(a_->base(k), b_->base(k)); }
  Subgroup intersect(const Subgroup& x, const Subgroup& y) const override;
  Subgroup image(const Subgroup& u) const override;
  Subgroup preimage(const Subgroup& u) const override;
  Subgroup set_product(const Subgroup& x, const Subgroup& y) const override;
  bool contains(const Subgroup& outer, const Subgroup& inner) const override;
  IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const override;
  bool is_normal(const Subgroup& h) const override;
  bool commutes(const Subgroup& x, const Subgroup& y) const override;
  Subgroup kernel() const override { return pair(a_->kernel(), b_->kernel()); }
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

 private:
  std::pair<ClosedSubgroupSpec, ClosedSubgroupSpec> split(const ClosedSubgroupSpec& h) const;

  SystemPtr a_, b_;
  std::string name_;
};

std::shared_ptr<ProductSystem> make_system(SystemPtr first, SystemPtr second, std::string name = "");

}  // namespace tdlc::product
