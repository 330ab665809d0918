#include "tdlc/product.hpp"

#include "tdlc/finite.hpp"

namespace tdlc::product {

namespace {
constexpr std::size_t kFixpointCap = 256;
constexpr std::size_t kPairCap = 400;
}  // namespace

std::shared_ptr<ProductSystem> make_system(SystemPtr first, SystemPtr second, std::string name) {
  if (name.empty()) name = first->name() + " x " + second->name();
  return std::make_shared<ProductSystem>(std::move(first), std::move(second), std::move(name));
}

ProductSystem::ProductSystem(SystemPtr first, SystemPtr second, std::string name)
    : a_(std::move(first)), b_(std::move(second)), name_(std::move(name)) {}

Capabilities ProductSystem::capabilities() const {
  Capabilities x = a_->capabilities(), y = b_->capabilities(), c;
  c.quotient = x.quotient && y.quotient;
  c.restriction = x.restriction && y.restriction;
  c.set_product = x.set_product && y.set_product;
  c.images = x.images && y.images;
  c.plus_plus_certificate = x.plus_plus_certificate && y.plus_plus_certificate;
  c.structural_plus = true;
  c.entropy_oracle = x.entropy_oracle && y.entropy_oracle;
  return c;
}

Subgroup ProductSystem::pair(const Subgroup& x, const Subgroup& y) const {
  require_same(*a_, x);
  require_same(*b_, y);
  return make_pair(x, y);
}

const Subgroup& ProductSystem::part(const Subgroup& u, int which) {
  const auto& p = u.as<ProductSubgroup>();
  return which == 0 ? *p.first : *p.second;
}

Subgroup ProductSystem::intersect(const Subgroup& x, const Subgroup& y) const {
  return make_pair(a_->intersect(part(x, 0), part(y, 0)), b_->intersect(part(x, 1), part(y, 1)));
}

Subgroup ProductSystem::image(const Subgroup& u) const {
  return make_pair(a_->image(part(u, 0)), b_->image(part(u, 1)));
}

Subgroup ProductSystem::preimage(const Subgroup& u) const {
  return make_pair(a_->preimage(part(u, 0)), b_->preimage(part(u, 1)));
}

Subgroup ProductSystem::set_product(const Subgroup& x, const Subgroup& y) const {
  return make_pair(a_->set_product(part(x, 0), part(y, 0)), b_->set_product(part(x, 1), part(y, 1)));
}

bool ProductSystem::contains(const Subgroup& outer, const Subgroup& inner) const {
  return a_->contains(part(outer, 0), part(inner, 0)) && b_->contains(part(outer, 1), part(inner, 1));
}

IndexValue ProductSystem::raw_index(const Subgroup& outer, const Subgroup& inner) const {
  return a_->raw_index(part(outer, 0), part(inner, 0)) * b_->raw_index(part(outer, 1), part(inner, 1));
}

bool ProductSystem::is_normal(const Subgroup& h) const { return a_->is_normal(part(h, 0)) && b_->is_normal(part(h, 1)); }

bool ProductSystem::commutes(const Subgroup& x, const Subgroup& y) const {
  return a_->commutes(part(x, 0), part(y, 0)) && b_->commutes(part(x, 1), part(y, 1));
}

std::string ProductSystem::describe(const Subgroup& u) const {
  return "(" + a_->describe(part(u, 0)) + ", " + b_->describe(part(u, 1)) + ")";
}

std::pair<ClosedSubgroupSpec, ClosedSubgroupSpec> ProductSystem::split(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  return {describe_subgroup(*a_, part(h.subgroup, 0)), describe_subgroup(*b_, part(h.subgroup, 1))};
}

namespace {

// the factor system after quotienting or restricting; the trivial subgroup
// and the whole group are handled without asking the backend
SystemPtr factor_quotient(const SystemPtr& s, const ClosedSubgroupSpec& h) {
  if (h.subgroup == s->trivial()) return s;
  return s->quotient(h);
}

SystemPtr factor_restrict(const SystemPtr& s, const ClosedSubgroupSpec& h) {
  if (h.subgroup == s->whole()) return s;
  if (h.subgroup == s->trivial()) return finite::trivial_system();
  return s->restrict_to(h);
}

Subgroup factor_project(const SystemPtr& s, const ClosedSubgroupSpec& h, const Subgroup& k) {
  if (h.subgroup == s->trivial()) return k;
  return s->project(h, k);
}

Subgroup factor_to_restricted(const SystemPtr& s, const ClosedSubgroupSpec& h, const Subgroup& k) {
  if (h.subgroup == s->whole()) return k;
  if (h.subgroup == s->trivial()) return finite::trivial_system()->whole();
  return s->to_restricted(h, k);
}

}  // namespace

SystemPtr ProductSystem::quotient(const ClosedSubgroupSpec& h) const {
  auto [x, y] = split(h);
  return make_system(factor_quotient(a_, x), factor_quotient(b_, y));
}

SystemPtr ProductSystem::restrict_to(const ClosedSubgroupSpec& h) const {
  auto [x, y] = split(h);
  return make_system(factor_restrict(a_, x), factor_restrict(b_, y));
}

Subgroup ProductSystem::project(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  auto [x, y] = split(h);
  return make_pair(factor_project(a_, x, part(k, 0)), factor_project(b_, y, part(k, 1)));
}

Subgroup ProductSystem::to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  auto [x, y] = split(h);
  return make_pair(factor_to_restricted(a_, x, part(k, 0)), factor_to_restricted(b_, y, part(k, 1)));
}

std::optional<Subgroup> ProductSystem::structural_plus(const Subgroup& u) const {
  auto x = plus_group_of(*a_, part(u, 0), kFixpointCap);
  auto y = plus_group_of(*b_, part(u, 1), kFixpointCap);
  if (!x || !y) return std::nullopt;
  return make_pair(*x, *y);
}

std::optional<Subgroup> ProductSystem::structural_minus(const Subgroup& u) const {
  auto x = minus_group_of(*a_, part(u, 0), kFixpointCap);
  auto y = minus_group_of(*b_, part(u, 1), kFixpointCap);
  if (!x || !y) return std::nullopt;
  return make_pair(*x, *y);
}

std::optional<std::size_t> ProductSystem::alpha_bound(const Subgroup& u, const std::optional<Subgroup>& plus,
                                                      std::span<const Subgroup> minus) const {
  std::vector<Subgroup> ma, mb;
  for (const auto& m : minus) ma.push_back(part(m, 0)), mb.push_back(part(m, 1));
  std::optional<Subgroup> pa, pb;
  if (plus) pa = part(*plus, 0), pb = part(*plus, 1);
  auto na = alpha_start(*a_, part(u, 0), pa, ma);
  auto nb = alpha_start(*b_, part(u, 1), pb, mb);
  if (!na || !nb) return std::nullopt;
  return std::max(*na, *nb);
}

ClosureCertificate ProductSystem::plus_plus_closed(const Subgroup& plus, std::size_t probe) const {
  auto x = a_->plus_plus_closed(part(plus, 0), probe);
  auto y = b_->plus_plus_closed(part(plus, 1), probe);
  if (x.status == ClosureStatus::not_closed) return x;
  if (y.status == ClosureStatus::not_closed) return y;
  if (x.status == ClosureStatus::closed && y.status == ClosureStatus::closed)
    return {ClosureStatus::closed, x.reason + "; " + y.reason};
  return {ClosureStatus::unknown, x.status == ClosureStatus::unknown ? x.reason : y.reason};
}

std::optional<Integer> ProductSystem::entropy_oracle() const {
  auto x = a_->entropy_oracle(), y = b_->entropy_oracle();
  if (!x || !y) return std::nullopt;
  return Integer(*x * *y);
}

std::optional<Integer> ProductSystem::scale_oracle() const {
  auto x = a_->scale_oracle(), y = b_->scale_oracle();
  if (!x || !y) return std::nullopt;
  return Integer(*x * *y);
}

std::vector<Subgroup> ProductSystem::scale_candidates(std::size_t depth) const {
  auto xs = a_->scale_candidates(depth), ys = b_->scale_candidates(depth);
  std::vector<Subgroup> out;
  for (std::size_t k = 0; k <= depth; ++k) out.push_back(base(k));
  for (const auto& x : xs)
    for (const auto& y : ys) {
      if (out.size() >= kPairCap) return out;
      out.push_back(make_pair(x, y));
    }
  return out;
}

}  // namespace tdlc::product
