#pragma once

#include "tdlc/system.hpp"

#include <string>
#include <vector>

namespace tdlc::finite {

using Elements = std::bitset<kMaxFiniteOrder>;

class Group {
 public:
  // table[a][b] = a*b; validated (closure, identity, inverses, associativity)
  explicit Group(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

  static Group trivial();
  static Group cyclic(int n);
  static Group from_permutations(const std::vector<std::vector<int>>& generators);
  static Group symmetric3();
  static Group dihedral(int n);  // order 2n
  static Group quaternion();
  static Group alternating4();
  static Group product(const Group& a, const Group& b);
  // direct product of cyclic groups of the given orders, elements in mixed radix
  static Group abelian(const std::vector<int>& orders);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& element_name(int a) const { return names_[a]; }
  bool is_abelian() const;

  Elements all() const;
  Elements unit() const;
  Elements generated(const Elements& gens) const;
  bool is_subgroup(const Elements& s) const;
  bool is_normal(const Elements& s) const;
  // a minimal-ish generating set chosen greedily
  std::vector<int> generators() const;
  // all subgroups, sorted by order then by element set
  const std::vector<Elements>& subgroups() const;
  int subgroup_id(const Elements& s) const;  // -1 if absent
  Elements product_set(const Elements& a, const Elements& b) const;
  std::string describe(const Elements& s) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  int identity_ = 0;
  mutable std::vector<Elements> subgroups_;
};

using Map = std::vector<int>;

bool is_homomorphism(const Group& g, const Map& m);
Map identity_map(const Group& g);
Map compose(const Map& outer, const Map& inner);
// every endomorphism, in a deterministic order
std::vector<Map> all_endomorphisms(const Group& g);
Elements image_set(const Map& m, const Elements& s);
Elements preimage_set(const Map& m, const Elements& s);

class FiniteSystem final : public System, public std::enable_shared_from_this<FiniteSystem> {
 public:
  FiniteSystem(std::shared_ptr<const Group> group, Map phi, std::string name);

  const Group& group() const { return *group_; }
  const Map& map() const { return phi_; }
  Subgroup handle(const Elements& s) const;

  Backend backend() const override { return Backend::finite; }
  std::string name() const override { return name_; }
  Capabilities capabilities() const override;
  Subgroup whole() const override { return handle(group_->all()); }
  Subgroup trivial() const override { return handle(group_->unit()); }
  Subgroup base(std::size_t k) const override { return k == 0 ? whole() : trivial(); }
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
  Subgroup image(const Subgroup& u) const override;
  Subgroup preimage(const Subgroup& u) const override;
  Subgroup set_product(const Subgroup& a, const Subgroup& b) const override;
  bool contains(const Subgroup& outer, const Subgroup& inner) const override;
  IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const override;
  bool is_normal(const Subgroup& h) const override;
  bool commutes(const Subgroup& a, const Subgroup& b) const override;
  Subgroup kernel() const override;
  std::string describe(const Subgroup& u) const override;

  SystemPtr quotient(const ClosedSubgroupSpec& h) const override;
  SystemPtr restrict_to(const ClosedSubgroupSpec& h) const override;
  Subgroup project(const ClosedSubgroupSpec& h, const Subgroup& k) const override;
  Subgroup to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const override;

  ClosureCertificate plus_plus_closed(const Subgroup& plus, std::size_t probe) const override;
  std::optional<Integer> entropy_oracle() const override { return Integer(1); }
  std::optional<Integer> scale_oracle() const override { return Integer(1); }
  std::vector<Subgroup> scale_candidates(std::size_t depth) const override;
  NubClosure nub_closure(const std::vector<Subgroup>& minimizing, const Integer& scale) const override;

 private:
  std::shared_ptr<const Group> group_;
  Map phi_;
  std::string name_;
};

// The coset space G/H for a phi-invariant subgroup H that need not be
// normal. Handles are subgroups K of G containing H, standing for K/H.
// Images of such sets need not be subgroups, so only preimages are offered.
class CosetSystem final : public System {
 public:
  CosetSystem(std::shared_ptr<const FiniteSystem> parent, Elements h);

  Backend backend() const override { return Backend::finite; }
  std::string name() const override;
  Capabilities capabilities() const override;
  Subgroup whole() const override;
  Subgroup trivial() const override;
  Subgroup base(std::size_t k) const override { return k == 0 ? whole() : trivial(); }
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
  Subgroup image(const Subgroup& u) const override;
  Subgroup preimage(const Subgroup& u) const override;
  Subgroup set_product(const Subgroup& a, const Subgroup& b) const override;
  bool contains(const Subgroup& outer, const Subgroup& inner) const override;
  IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const override;
  Subgroup kernel() const override;
  std::string describe(const Subgroup& u) const override;
  std::optional<Integer> entropy_oracle() const override { return Integer(1); }
  std::vector<Subgroup> scale_candidates(std::size_t depth) const override;

 private:
  std::shared_ptr<const FiniteSystem> parent_;
  Elements h_;
};

std::shared_ptr<FiniteSystem> make_system(Group g, Map phi, std::string name);
// the one-element group, used for quotients by G and restrictions to {1}
std::shared_ptr<FiniteSystem> trivial_system();

}  // namespace tdlc::finite
