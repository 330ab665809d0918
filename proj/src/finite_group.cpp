#include "tdlc/finite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tdlc::finite {

Group::Group(std::vector<std::vector<int>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (n < 1 || n > static_cast<int>(kMaxFiniteOrder))
    throw InvalidInput("group order must be between 1 and " + std::to_string(kMaxFiniteOrder));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InvalidInput("multiplication table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidInput("multiplication table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw InvalidInput("element " + std::to_string(a) + " has no inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InvalidInput("multiplication is not associative");
  if (names_.empty())
    for (int a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  if (static_cast<int>(names_.size()) != n) throw InvalidInput("element name count does not match the order");
}

Group Group::trivial() { return Group({{0}}, {"e"}); }

Group Group::cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group(std::move(t));
}

Group Group::abelian(const std::vector<int>& orders) {
  Group g = trivial();
  for (int m : orders) g = product(g, cyclic(m));
  return g;
}

static std::string cycle_name(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Group Group::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) return trivial();
  const std::size_t deg = generators[0].size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> where{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<int> c(deg);
      for (std::size_t k = 0; k < deg; ++k) c[k] = g[static_cast<std::size_t>(elems[i][k])];
      if (where.emplace(c, static_cast<int>(elems.size())).second) elems.push_back(c);
      if (elems.size() > kMaxFiniteOrder) throw InvalidInput("permutation group too large");
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a*b)(x) = a(b(x))
      std::vector<int> c(deg);
      for (std::size_t k = 0; k < deg; ++k) c[k] = elems[a][static_cast<std::size_t>(elems[b][k])];
      t[a][b] = where.at(c);
    }
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(cycle_name(e));
  return Group(std::move(t), std::move(names));
}

Group Group::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}); }

Group Group::dihedral(int n) {
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n, ref[i] = (n - i) % n;
  return from_permutations({rot, ref});
}

Group Group::alternating4() { return from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

Group Group::quaternion() {
  // element 4*s + u is (-1)^s * unit u, units 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s = (a / 4 + b / 4 + unit_sign[a % 4][b % 4]) % 2;
      t[a][b] = 4 * s + unit_mul[a % 4][b % 4];
    }
  return Group(std::move(t), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

Group Group::product(const Group& a, const Group& b) {
  const int na = a.order(), nb = b.order();
  if (na * nb > static_cast<int>(kMaxFiniteOrder)) throw InvalidInput("direct product too large");
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  std::vector<std::string> names;
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    if (na == 1) names.push_back(b.element_name(x % nb));
    else if (nb == 1) names.push_back(a.element_name(x / nb));
    else names.push_back("(" + a.element_name(x / nb) + "," + b.element_name(x % nb) + ")");
  }
  return Group(std::move(t), std::move(names));
}

int Group::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Elements Group::all() const {
  Elements s;
  for (int a = 0; a < order(); ++a) s.set(a);
  return s;
}

Elements Group::unit() const {
  Elements s;
  s.set(identity_);
  return s;
}

Elements Group::generated(const Elements& gens) const {
  Elements s = unit();
  std::vector<int> g, queue{identity_};
  for (int a = 0; a < order(); ++a)
    if (gens.test(a)) g.push_back(a);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int x : g) {
      int y = mul(queue[i], x);
      if (!s.test(y)) s.set(y), queue.push_back(y);
    }
  return s;
}

bool Group::is_subgroup(const Elements& s) const {
  if (!s.test(identity_)) return false;
  for (int a = 0; a < order(); ++a) {
    if (!s.test(a)) continue;
    for (int b = 0; b < order(); ++b)
      if (s.test(b) && !s.test(mul(a, inv(b)))) return false;
  }
  return true;
}

bool Group::is_normal(const Elements& s) const {
  for (int g = 0; g < order(); ++g)
    for (int h = 0; h < order(); ++h)
      if (s.test(h) && !s.test(mul(mul(g, h), inv(g)))) return false;
  return true;
}

std::vector<int> Group::generators() const {
  std::vector<int> gens;
  Elements cur = unit();
  // prefer elements of large order so cyclic groups get one generator
  std::vector<int> order_of(order());
  std::vector<int> idx;
  for (int a = 0; a < order(); ++a) order_of[a] = element_order(a), idx.push_back(a);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return order_of[x] > order_of[y]; });
  for (int a : idx) {
    if (cur.test(a)) continue;
    gens.push_back(a);
    Elements g;
    for (int x : gens) g.set(x);
    cur = generated(g);
  }
  return gens;
}

static bool elements_less(const Elements& a, const Elements& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  for (std::size_t i = 0; i < kMaxFiniteOrder; ++i)
    if (a.test(i) != b.test(i)) return a.test(i);
  return false;
}

const std::vector<Elements>& Group::subgroups() const {
  if (!subgroups_.empty()) return subgroups_;
  constexpr std::size_t kLimit = 20000;
  std::vector<Elements> cyclic;
  for (int a = 0; a < order(); ++a) {
    Elements g;
    g.set(a);
    cyclic.push_back(generated(g));
  }
  std::set<std::string> seen;
  std::vector<Elements> found;
  auto add = [&](const Elements& s) {
    if (seen.insert(s.to_string()).second) {
      found.push_back(s);
      if (found.size() > kLimit) throw Unresolved("subgroup enumeration exceeded " + std::to_string(kLimit));
    }
  };
  add(unit());
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& c : cyclic) {
      if ((c & ~found[i]).none()) continue;
      add(generated(found[i] | c));
    }
  std::sort(found.begin(), found.end(), elements_less);
  subgroups_ = std::move(found);
  return subgroups_;
}

int Group::subgroup_id(const Elements& s) const {
  const auto& subs = subgroups();
  auto it = std::lower_bound(subs.begin(), subs.end(), s, elements_less);
  if (it == subs.end() || *it != s) return -1;
  return static_cast<int>(it - subs.begin());
}

Elements Group::product_set(const Elements& a, const Elements& b) const {
  Elements out;
  for (int x = 0; x < order(); ++x) {
    if (!a.test(x)) continue;
    for (int y = 0; y < order(); ++y)
      if (b.test(y)) out.set(mul(x, y));
  }
  return out;
}

std::string Group::describe(const Elements& s) const {
  if (s == all() && order() > 1) return "G";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int a = 0; a < order(); ++a) {
    if (!s.test(a)) continue;
    if (!first) os << ",";
    os << names_[a];
    first = false;
  }
  os << "}";
  return os.str();
}

bool is_homomorphism(const Group& g, const Map& m) {
  if (static_cast<int>(m.size()) != g.order()) return false;
  for (int a = 0; a < g.order(); ++a) {
    if (m[a] < 0 || m[a] >= g.order()) return false;
    for (int b = 0; b < g.order(); ++b)
      if (m[g.mul(a, b)] != g.mul(m[a], m[b])) return false;
  }
  return true;
}

Map identity_map(const Group& g) {
  Map m(g.order());
  for (int a = 0; a < g.order(); ++a) m[a] = a;
  return m;
}

Map compose(const Map& outer, const Map& inner) {
  Map m(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) m[a] = outer[inner[a]];
  return m;
}

std::vector<Map> all_endomorphisms(const Group& g) {
  const auto gens = g.generators();
  std::vector<std::vector<int>> choices;
  for (int x : gens) {
    std::vector<int> c;
    int ox = g.element_order(x);
    for (int y = 0; y < g.order(); ++y)
      if (ox % g.element_order(y) == 0) c.push_back(y);
    choices.push_back(c);
  }
  std::vector<Map> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    Map m(g.order(), -1);
    m[g.identity()] = g.identity();
    std::vector<int> queue{g.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        int y = g.mul(queue[i], gens[j]);
        int img = g.mul(m[queue[i]], choices[j][pick[j]]);
        if (m[y] < 0) m[y] = img, queue.push_back(y);
        else if (m[y] != img) ok = false;
      }
    if (ok && is_homomorphism(g, m)) out.push_back(m);
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elements image_set(const Map& m, const Elements& s) {
  Elements out;
  for (std::size_t a = 0; a < m.size(); ++a)
    if (s.test(a)) out.set(m[a]);
  return out;
}

Elements preimage_set(const Map& m, const Elements& s) {
  Elements out;
  for (std::size_t a = 0; a < m.size(); ++a)
    if (s.test(m[a])) out.set(a);
  return out;
}

}  // namespace tdlc::finite
