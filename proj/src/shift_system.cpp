#include "shift_internal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tdlc::shift {

const char* mode_name(TailMode m) {
  switch (m) {
    case TailMode::compact: return "compact";
    case TailMode::laurent: return "laurent";
    case TailMode::discrete: return "discrete";
  }
  return "?";
}

Alphabet Alphabet::build(finite::Group g, finite::Map sigma) {
  if (!g.is_abelian()) throw InvalidInput("shift alphabet must be abelian");
  if (!finite::is_homomorphism(g, sigma)) throw InvalidInput("alphabet map is not an endomorphism");
  Alphabet a;
  a.group = std::make_shared<const finite::Group>(std::move(g));
  a.sigma = std::move(sigma);
  a.subs = a.group->subgroups();
  const int n = static_cast<int>(a.subs.size());
  a.zero = a.id(a.group->unit());
  a.full = a.id(a.group->all());
  a.meet.assign(n, std::vector<int>(n));
  a.join.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.meet[x][y] = a.id(a.subs[x] & a.subs[y]);
      a.join[x][y] = a.id(a.group->generated(a.subs[x] | a.subs[y]));
    }
  for (int x = 0; x < n; ++x) {
    a.img.push_back(a.id(finite::image_set(a.sigma, a.subs[x])));
    a.pre.push_back(a.id(finite::preimage_set(a.sigma, a.subs[x])));
    a.size.push_back(static_cast<long>(a.subs[x].count()));
  }
  return a;
}

int Alphabet::id(const finite::Elements& s) const {
  int i = group->subgroup_id(s);
  if (i < 0) throw InvariantViolation("element set is not an alphabet subgroup");
  return i;
}

std::string Alphabet::describe(int i) const {
  if (i == full) return "F";
  if (i == zero) return "0";
  return group->describe(subs[i]);
}

int Alphabet::eventual_image() const {
  int c = full;
  while (img[c] != c) c = img[c];
  return c;
}

std::shared_ptr<ShiftSystem> make_system(finite::Group g, finite::Map sigma, long k, TailMode mode, std::string name) {
  return std::make_shared<ShiftSystem>(Alphabet::build(std::move(g), std::move(sigma)), k, mode, std::move(name));
}

ShiftSystem::ShiftSystem(Alphabet alphabet, long k, TailMode mode, std::string name)
    : alpha_(std::move(alphabet)), k_(k), mode_(mode), name_(std::move(name)) {}

Capabilities ShiftSystem::capabilities() const {
  Capabilities c;
  c.quotient = c.restriction = true;
  c.plus_plus_certificate = c.structural_plus = c.entropy_oracle = true;
  return c;
}

static bool all_of(const std::vector<int>& pat, int v) {
  return std::all_of(pat.begin(), pat.end(), [v](int x) { return x == v; });
}

static const Profile& prof(const Subgroup& u) { return u.as<Profile>(); }

Subgroup ShiftSystem::handle(Profile p) const {
  Subgroup u;
  p = normalize(std::move(p));
  bool lz = all_of(p.left, alpha_.zero), rz = all_of(p.right, alpha_.zero);
  bool lf = all_of(p.left, alpha_.full), rf = all_of(p.right, alpha_.full);
  switch (mode_) {
    case TailMode::compact: u.compact = true, u.open = lf && rf; break;
    case TailMode::laurent: u.compact = lz, u.open = rf; break;
    case TailMode::discrete: u.compact = lz && rz, u.open = true; break;
  }
  u.payload = std::move(p);
  return u;
}

Subgroup ShiftSystem::constant(int c) const { return handle(Profile{{c}, 0, {}, {c}}); }

Subgroup ShiftSystem::window(int left, long start, std::vector<int> values, int right) const {
  return handle(Profile{{left}, start, std::move(values), {right}});
}

Subgroup ShiftSystem::translate(const Subgroup& u, long t) const {
  std::vector<int> same(alpha_.subs.size());
  std::iota(same.begin(), same.end(), 0);
  return handle(transform(prof(u), t, same));
}

Subgroup ShiftSystem::base(std::size_t k) const {
  const long kk = static_cast<long>(k);
  switch (mode_) {
    case TailMode::compact: return window(alpha_.full, -kk, std::vector<int>(2 * k + 1, alpha_.zero), alpha_.full);
    case TailMode::laurent: return window(alpha_.zero, kk, {}, alpha_.full);
    case TailMode::discrete: return trivial();
  }
  return trivial();
}

Subgroup ShiftSystem::intersect(const Subgroup& a, const Subgroup& b) const {
  return handle(combine(prof(a), prof(b), alpha_.meet));
}

Subgroup ShiftSystem::set_product(const Subgroup& a, const Subgroup& b) const {
  return handle(combine(prof(a), prof(b), alpha_.join));
}

Subgroup ShiftSystem::image(const Subgroup& u) const { return handle(transform(prof(u), k_, alpha_.img)); }
Subgroup ShiftSystem::preimage(const Subgroup& u) const { return handle(transform(prof(u), -k_, alpha_.pre)); }

bool ShiftSystem::contains(const Subgroup& outer, const Subgroup& inner) const {
  return combine(prof(outer), prof(inner), alpha_.meet) == prof(inner);
}

IndexValue ShiftSystem::raw_index(const Subgroup& outer, const Subgroup& inner) const {
  const Profile &o = prof(outer), &i = prof(inner);
  long ll = std::lcm(static_cast<long>(o.left.size()), static_cast<long>(i.left.size()));
  long lr = std::lcm(static_cast<long>(o.right.size()), static_cast<long>(i.right.size()));
  for (long r = 0; r < ll; ++r)
    if (o.left_at(r) != i.left_at(r)) return IndexValue::infinite();
  for (long r = 0; r < lr; ++r)
    if (o.right_at(r) != i.right_at(r)) return IndexValue::infinite();
  Integer v = 1;
  for (long x = std::min(o.start, i.start); x < std::max(o.end(), i.end()); ++x)
    v *= alpha_.size[o.at(x)] / alpha_.size[i.at(x)];
  return IndexValue(v);
}

std::string ShiftSystem::describe(const Subgroup& u) const {
  const Profile& p = prof(u);
  auto pat = [&](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + alpha_.describe(v[i]);
    return s + ")";
  };
  std::ostringstream os;
  if (p.window.empty() && p.left == p.right) return pat(p.left) + "^Z";
  os << pat(p.left) << "^- ";
  if (p.window.empty()) os << "|" << p.start << "| ";
  else {
    os << "[" << p.start << ":";
    for (int v : p.window) os << " " << alpha_.describe(v);
    os << "] ";
  }
  os << pat(p.right) << "^+";
  return os.str();
}

int ShiftSystem::constant_tail(const Subgroup& h) const {
  const Profile& p = prof(h);
  if (!p.window.empty() || p.left != p.right || p.left.size() != 1) return -1;
  return p.left[0];
}

namespace {

struct AlphabetMove {
  std::shared_ptr<const finite::FiniteSystem> target;
  std::vector<int> ids;  // alphabet subgroup id -> target alphabet subgroup id, -1 if undefined
};

AlphabetMove move_alphabet(const ShiftSystem& sys, int f0, bool to_quotient) {
  const Alphabet& a = sys.alphabet();
  auto fs = std::make_shared<finite::FiniteSystem>(a.group, a.sigma, "alphabet");
  auto spec = describe_subgroup(*fs, fs->handle(a.subs[f0]));
  if (!spec.phi_invariant) throw PreconditionError("alphabet subgroup is not sigma-invariant");
  AlphabetMove m;
  m.target = std::dynamic_pointer_cast<const finite::FiniteSystem>(to_quotient ? fs->quotient(spec) : fs->restrict_to(spec));
  for (std::size_t c = 0; c < a.subs.size(); ++c) {
    if (!to_quotient && (a.subs[c] & ~a.subs[f0]).any()) {
      m.ids.push_back(-1);
      continue;
    }
    Subgroup moved = to_quotient ? fs->project(spec, fs->handle(a.subs[c])) : fs->to_restricted(spec, fs->handle(a.subs[c]));
    m.ids.push_back(m.target->group().subgroup_id(moved.as<FiniteSubgroup>().elements));
  }
  return m;
}

}  // namespace

SystemPtr ShiftSystem::quotient(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  int f0 = constant_tail(h.subgroup);
  if (f0 < 0) throw CapabilityError(name_ + ": quotients only by constant profiles F0^Z");
  auto m = move_alphabet(*this, f0, true);
  return std::make_shared<ShiftSystem>(Alphabet::build(m.target->group(), m.target->map()), k_, mode_,
                                       name_ + "/" + describe(h.subgroup));
}

SystemPtr ShiftSystem::restrict_to(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  int f0 = constant_tail(h.subgroup);
  if (f0 < 0) throw CapabilityError(name_ + ": restriction only to constant profiles F0^Z");
  auto m = move_alphabet(*this, f0, false);
  return std::make_shared<ShiftSystem>(Alphabet::build(m.target->group(), m.target->map()), k_, mode_,
                                       name_ + "|" + describe(h.subgroup));
}

Subgroup ShiftSystem::project(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  auto q = std::dynamic_pointer_cast<const ShiftSystem>(quotient(h));
  auto m = move_alphabet(*this, constant_tail(h.subgroup), true);
  return q->handle(transform(prof(k), 0, m.ids));
}

Subgroup ShiftSystem::to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  if (!contains(h.subgroup, k)) throw PreconditionError("subgroup is not inside the restriction target");
  auto r = std::dynamic_pointer_cast<const ShiftSystem>(restrict_to(h));
  auto m = move_alphabet(*this, constant_tail(h.subgroup), false);
  return r->handle(transform(prof(k), 0, m.ids));
}

std::optional<Subgroup> ShiftSystem::structural_plus(const Subgroup& u) const {
  return handle(solve_recursion(prof(u), k_, alpha_.img, alpha_.meet));
}

std::optional<Subgroup> ShiftSystem::structural_minus(const Subgroup& u) const {
  return handle(solve_recursion(prof(u), -k_, alpha_.pre, alpha_.meet));
}

std::optional<std::size_t> ShiftSystem::alpha_bound(const Subgroup& u, const std::optional<Subgroup>& plus,
                                                    std::span<const Subgroup> minus) const {
  // alpha_n = [phi U_n + U : U] only reads U_n on the coordinates i + k with
  // U_i != F; once U_n agrees with U_+ there it agrees forever
  if (!plus || !u.compact) return std::nullopt;
  const Profile& p = prof(u);
  auto relevant = [&](long i) { return p.at(i) != alpha_.full && p.at(i + k_) != alpha_.zero; };
  const long span = std::lcm(static_cast<long>(p.left.size()), static_cast<long>(p.right.size())) + std::labs(k_) + 1;
  for (long r = 0; r < span; ++r)
    if (relevant(p.start - 2 * span + r) || relevant(p.end() + span + r)) return std::nullopt;
  std::vector<long> coords;
  for (long i = p.start - span; i < p.end() + span; ++i)
    if (relevant(i)) coords.push_back(i + k_);
  const Profile& target = prof(*plus);
  Subgroup un = u;
  for (std::size_t n = 0; n < minus.size(); ++n) {
    const Profile& q = prof(un);
    if (std::all_of(coords.begin(), coords.end(), [&](long j) { return q.at(j) == target.at(j); })) return n;
    un = intersect(u, image(un));
  }
  return std::nullopt;
}

ClosureCertificate ShiftSystem::plus_plus_closed(const Subgroup& plus, std::size_t probe) const {
  if (mode_ == TailMode::discrete) return {ClosureStatus::closed, "discrete group"};
  std::vector<Subgroup> chain{plus};
  for (std::size_t m = 1; m <= probe; ++m) {
    chain.push_back(image(chain.back()));
    if (chain[m] == chain[m - 1])
      return {ClosureStatus::closed, "phi^n U+ stabilizes at n=" + std::to_string(m - 1)};
    for (std::size_t n = 0; n < m; ++n) {
      long t = prof(chain[n]).start - prof(chain[m]).start;
      if (t == 0 || translate(chain[n], t) != chain[m]) continue;
      // the chain moves by translation; the union fills the side it moves away from
      bool left_fills = t > 0;
      bool restricted = left_fills && mode_ == TailMode::laurent;
      if (restricted) return {ClosureStatus::closed, "translation chain filling a restricted direction"};
      return {ClosureStatus::not_closed, "translation chain filling an unrestricted direction"};
    }
  }
  return {ClosureStatus::unknown, "no stabilization or translation recurrence within the probe"};
}

std::optional<Integer> ShiftSystem::entropy_oracle() const {
  Integer e(alpha_.size[alpha_.eventual_image()]);
  switch (mode_) {
    case TailMode::compact: return ipow(e, static_cast<unsigned long>(std::labs(k_)));
    case TailMode::laurent: return k_ > 0 ? ipow(e, static_cast<unsigned long>(k_)) : Integer(1);
    case TailMode::discrete: return Integer(1);
  }
  return std::nullopt;
}

std::optional<Integer> ShiftSystem::scale_oracle() const {
  if (mode_ == TailMode::laurent && k_ > 0)
    return ipow(Integer(alpha_.size[alpha_.eventual_image()]), static_cast<unsigned long>(k_));
  return Integer(1);
}

std::vector<Subgroup> ShiftSystem::scale_candidates(std::size_t depth) const {
  std::vector<Subgroup> out = System::scale_candidates(depth);
  if (mode_ == TailMode::compact) out.push_back(whole());
  if (mode_ == TailMode::laurent && k_ > 0)
    for (std::size_t m = 1; m <= depth; ++m) {
      std::vector<int> vals(m);
      for (std::size_t i = 0; i < m; ++i) {
        int c = alpha_.full;
        for (std::size_t j = i; j < m; ++j) c = alpha_.img[c];
        vals[i] = c;
      }
      out.push_back(window(alpha_.zero, 0, vals, alpha_.full));
    }
  return out;
}

std::vector<Subgroup> ShiftSystem::nub_candidates(std::size_t resolution) const {
  std::vector<Subgroup> out = scale_candidates(resolution);
  const std::size_t n = alpha_.subs.size();
  constexpr std::size_t kCap = 4096;
  long r = static_cast<long>(resolution);
  auto count = [&](long rr) {
    std::size_t c = 1;
    for (long i = 0; i < 2 * rr + 1 && c <= kCap; ++i) c *= n;
    return c;
  };
  while (r > 0 && count(r) > kCap) --r;
  int left = mode_ == TailMode::compact ? alpha_.full : alpha_.zero;
  int right = mode_ == TailMode::discrete ? alpha_.zero : alpha_.full;
  std::vector<int> vals(static_cast<std::size_t>(2 * r + 1), 0);
  while (true) {
    out.push_back(window(left, -r, vals, right));
    std::size_t j = 0;
    while (j < vals.size() && ++vals[j] == static_cast<int>(n)) vals[j++] = 0;
    if (j == vals.size()) break;
  }
  return out;
}

NubClosure ShiftSystem::nub_closure(const std::vector<Subgroup>& minimizing, const Integer& scale) const {
  if (minimizing.empty()) throw Unresolved(name_ + ": no minimizing subgroup among the candidates");
  int c = alpha_.full;
  for (const auto& m : minimizing) {
    const Profile& p = prof(m);
    for (int v : p.left) c = alpha_.meet[c][v];
    for (int v : p.window) c = alpha_.meet[c][v];
    for (int v : p.right) c = alpha_.meet[c][v];
  }
  auto minimizing_index = [&](const Subgroup& m) {
    Subgroup img = image(m);
    return raw_index(img, intersect(m, img)) == IndexValue(scale);
  };
  bool ok = true;
  const std::size_t lim = std::min<std::size_t>(minimizing.size(), 24);
  for (std::size_t i = 0; i < lim && ok; ++i) {
    ok = minimizing_index(intersect(minimizing[i], translate(minimizing[i], 1)));
    for (std::size_t j = i + 1; j < lim && ok; ++j) ok = minimizing_index(intersect(minimizing[i], minimizing[j]));
  }
  return {constant(c), ok, "translation closure of the probed minimizing profiles"};
}

}  // namespace tdlc::shift
