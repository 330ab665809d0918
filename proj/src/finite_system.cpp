#include "tdlc/finite.hpp"

namespace tdlc::finite {

std::shared_ptr<FiniteSystem> make_system(Group g, Map phi, std::string name) {
  return std::make_shared<FiniteSystem>(std::make_shared<const Group>(std::move(g)), std::move(phi), std::move(name));
}

FiniteSystem::FiniteSystem(std::shared_ptr<const Group> group, Map phi, std::string name)
    : group_(std::move(group)), phi_(std::move(phi)), name_(std::move(name)) {
  if (!is_homomorphism(*group_, phi_)) throw InvalidInput(name_ + ": map is not an endomorphism");
}

Capabilities FiniteSystem::capabilities() const {
  Capabilities c;
  c.quotient = c.restriction = true;
  c.plus_plus_certificate = true;
  c.entropy_oracle = true;
  return c;
}

Subgroup FiniteSystem::handle(const Elements& s) const {
  if (!group_->is_subgroup(s)) throw PreconditionError(name_ + ": element set is not a subgroup");
  Subgroup u;
  u.payload = FiniteSubgroup{s};
  return u;
}

static Subgroup raw(const Elements& s) {
  Subgroup u;
  u.payload = FiniteSubgroup{s};
  return u;
}

static const Elements& els(const Subgroup& u) { return u.as<FiniteSubgroup>().elements; }

Subgroup FiniteSystem::intersect(const Subgroup& a, const Subgroup& b) const { return raw(els(a) & els(b)); }
Subgroup FiniteSystem::image(const Subgroup& u) const { return raw(image_set(phi_, els(u))); }
Subgroup FiniteSystem::preimage(const Subgroup& u) const { return raw(preimage_set(phi_, els(u))); }

Subgroup FiniteSystem::set_product(const Subgroup& a, const Subgroup& b) const {
  Elements s = group_->product_set(els(a), els(b));
  if (!group_->is_subgroup(s)) throw PreconditionError("set product is not a subgroup");
  return raw(s);
}

bool FiniteSystem::contains(const Subgroup& outer, const Subgroup& inner) const {
  return (els(inner) & ~els(outer)).none();
}

IndexValue FiniteSystem::raw_index(const Subgroup& outer, const Subgroup& inner) const {
  return IndexValue(Integer(static_cast<unsigned long>(els(outer).count() / els(inner).count())));
}

bool FiniteSystem::is_normal(const Subgroup& h) const { return group_->is_normal(els(h)); }

bool FiniteSystem::commutes(const Subgroup& a, const Subgroup& b) const {
  return group_->product_set(els(a), els(b)) == group_->product_set(els(b), els(a));
}

Subgroup FiniteSystem::kernel() const { return raw(preimage_set(phi_, group_->unit())); }

std::string FiniteSystem::describe(const Subgroup& u) const { return group_->describe(els(u)); }

namespace {

struct Cosets {
  std::vector<int> id_of;  // element -> coset index
  std::vector<int> rep;    // coset index -> smallest element
};

Cosets left_cosets(const Group& g, const Elements& h) {
  Cosets c;
  c.id_of.assign(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (c.id_of[a] >= 0) continue;
    int id = static_cast<int>(c.rep.size());
    c.rep.push_back(a);
    for (int x = 0; x < g.order(); ++x)
      if (h.test(x)) c.id_of[g.mul(a, x)] = id;
  }
  return c;
}

}  // namespace

SystemPtr FiniteSystem::quotient(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  if (!h.phi_invariant) throw PreconditionError("quotient needs a phi-invariant subgroup");
  const Elements& hs = els(h.subgroup);
  auto self = shared_from_this();
  if (!h.normal) return std::make_shared<CosetSystem>(self, hs);
  Cosets c = left_cosets(*group_, hs);
  const int n = static_cast<int>(c.rep.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  Map phi(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = c.id_of[group_->mul(c.rep[a], c.rep[b])];
    phi[a] = c.id_of[phi_[c.rep[a]]];
    names.push_back(group_->element_name(c.rep[a]) + "H");
  }
  return std::make_shared<FiniteSystem>(std::make_shared<const Group>(Group(std::move(t), std::move(names))),
                                        std::move(phi), name_ + "/" + describe(h.subgroup));
}

Subgroup FiniteSystem::project(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  const Elements& hs = els(h.subgroup);
  if (!h.normal) {
    Elements kh = group_->product_set(els(k), hs);
    if (!group_->is_subgroup(kh)) throw PreconditionError("KH is not a subgroup");
    return raw(kh);
  }
  Cosets c = left_cosets(*group_, hs);
  Elements out;
  for (int a = 0; a < group_->order(); ++a)
    if (els(k).test(a)) out.set(c.id_of[a]);
  return raw(out);
}

SystemPtr FiniteSystem::restrict_to(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  if (!h.phi_invariant) throw PreconditionError("restriction needs a phi-invariant subgroup");
  const Elements& hs = els(h.subgroup);
  std::vector<int> members, where(group_->order(), -1);
  for (int a = 0; a < group_->order(); ++a)
    if (hs.test(a)) where[a] = static_cast<int>(members.size()), members.push_back(a);
  const int n = static_cast<int>(members.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  Map phi(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = where[group_->mul(members[i], members[j])];
    phi[i] = where[phi_[members[i]]];
    names.push_back(group_->element_name(members[i]));
  }
  return std::make_shared<FiniteSystem>(std::make_shared<const Group>(Group(std::move(t), std::move(names))),
                                        std::move(phi), name_ + "|" + describe(h.subgroup));
}

Subgroup FiniteSystem::to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  const Elements& hs = els(h.subgroup);
  if ((els(k) & ~hs).any()) throw PreconditionError("subgroup is not inside the restriction target");
  Elements out;
  int pos = 0;
  for (int a = 0; a < group_->order(); ++a) {
    if (!hs.test(a)) continue;
    if (els(k).test(a)) out.set(pos);
    ++pos;
  }
  return raw(out);
}

ClosureCertificate FiniteSystem::plus_plus_closed(const Subgroup&, std::size_t) const {
  return {ClosureStatus::closed, "finite group"};
}

std::vector<Subgroup> FiniteSystem::scale_candidates(std::size_t) const {
  std::vector<Subgroup> out;
  for (const auto& s : group_->subgroups()) out.push_back(raw(s));
  return out;
}

NubClosure FiniteSystem::nub_closure(const std::vector<Subgroup>& minimizing, const Integer&) const {
  Elements acc = group_->all();
  for (const auto& m : minimizing) acc &= els(m);
  return {raw(acc), true, "exhaustive over all subgroups"};
}

// ---- coset space ----

CosetSystem::CosetSystem(std::shared_ptr<const FiniteSystem> parent, Elements h)
    : parent_(std::move(parent)), h_(h) {}

std::string CosetSystem::name() const { return parent_->name() + "/" + parent_->group().describe(h_); }

Capabilities CosetSystem::capabilities() const {
  Capabilities c;
  c.images = false;
  c.set_product = false;
  c.entropy_oracle = true;
  return c;
}

Subgroup CosetSystem::whole() const { return raw(parent_->group().all()); }
Subgroup CosetSystem::trivial() const { return raw(h_); }

Subgroup CosetSystem::intersect(const Subgroup& a, const Subgroup& b) const { return raw(els(a) & els(b)); }

Subgroup CosetSystem::image(const Subgroup&) const {
  throw CapabilityError(name() + ": images in a coset space are not subgroups");
}

Subgroup CosetSystem::preimage(const Subgroup& u) const { return raw(preimage_set(parent_->map(), els(u))); }

Subgroup CosetSystem::set_product(const Subgroup&, const Subgroup&) const {
  throw CapabilityError(name() + ": set products are not supported in a coset space");
}

bool CosetSystem::contains(const Subgroup& outer, const Subgroup& inner) const {
  return (els(inner) & ~els(outer)).none();
}

IndexValue CosetSystem::raw_index(const Subgroup& outer, const Subgroup& inner) const {
  return IndexValue(Integer(static_cast<unsigned long>(els(outer).count() / els(inner).count())));
}

Subgroup CosetSystem::kernel() const { return raw(preimage_set(parent_->map(), h_)); }

std::string CosetSystem::describe(const Subgroup& u) const { return parent_->group().describe(els(u)) + "/H"; }

std::vector<Subgroup> CosetSystem::scale_candidates(std::size_t) const {
  std::vector<Subgroup> out;
  for (const auto& s : parent_->group().subgroups())
    if ((h_ & ~s).none()) out.push_back(raw(s));
  return out;
}

std::shared_ptr<FiniteSystem> trivial_system() { return make_system(Group::trivial(), {0}, "1"); }

}  // namespace tdlc::finite
