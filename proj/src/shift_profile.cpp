#include "shift_internal.hpp"

#include <map>
#include <numeric>

namespace tdlc::shift {

namespace {

long floor_mod(long i, long m) {
  long r = i % m;
  return r < 0 ? r + m : r;
}

std::vector<int> minimal_period(const std::vector<int>& pat) {
  const std::size_t n = pat.size();
  for (std::size_t q = 1; q < n; ++q) {
    if (n % q) continue;
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) ok = pat[r] == pat[r % q];
    if (ok) return std::vector<int>(pat.begin(), pat.begin() + static_cast<long>(q));
  }
  return pat;
}

std::vector<int> repeat_to(const std::vector<int>& pat, std::size_t len) {
  std::vector<int> out(len);
  for (std::size_t r = 0; r < len; ++r) out[r] = pat[r % pat.size()];
  return out;
}

}  // namespace

Profile normalize(Profile p) {
  if (p.left.empty() || p.right.empty()) throw InvariantViolation("profile with an empty tail pattern");
  p.left = minimal_period(p.left);
  p.right = minimal_period(p.right);
  const Profile raw = p;
  if (p.left == p.right) {
    bool flat = true;
    for (long i = raw.start; i < raw.end() && flat; ++i) flat = raw.at(i) == raw.right_at(i);
    if (flat) return Profile{p.left, 0, {}, p.right};
  }
  const long span = std::lcm(static_cast<long>(p.left.size()), static_cast<long>(p.right.size()));
  long b = raw.end() - 1;
  while (raw.at(b) == raw.right_at(b)) {
    if (b < raw.start - span) throw InvariantViolation("profile normalization did not terminate");
    --b;
  }
  ++b;
  long s = raw.start;
  if (b < s) s = b;
  while (s < b && raw.at(s) == raw.left_at(s)) ++s;
  Profile out{p.left, s, {}, p.right};
  for (long i = s; i < b; ++i) out.window.push_back(raw.at(i));
  return out;
}

Profile reflect(const Profile& p) {
  Profile q;
  const long pl = static_cast<long>(p.left.size()), pr = static_cast<long>(p.right.size());
  q.left.resize(pr);
  for (long r = 0; r < pr; ++r) q.left[r] = p.right[floor_mod(-1 - r, pr)];
  q.right.resize(pl);
  for (long r = 0; r < pl; ++r) q.right[r] = p.left[floor_mod(-1 - r, pl)];
  q.start = -p.end();
  for (long i = q.start; i < -p.start; ++i) q.window.push_back(p.at(-1 - i));
  return normalize(q);
}

Profile combine(const Profile& a, const Profile& b, const std::vector<std::vector<int>>& op) {
  Profile out;
  std::size_t ll = std::lcm(a.left.size(), b.left.size()), lr = std::lcm(a.right.size(), b.right.size());
  out.left.resize(ll);
  for (std::size_t r = 0; r < ll; ++r)
    out.left[r] = op[a.left_at(static_cast<long>(r))][b.left_at(static_cast<long>(r))];
  out.right.resize(lr);
  for (std::size_t r = 0; r < lr; ++r)
    out.right[r] = op[a.right_at(static_cast<long>(r))][b.right_at(static_cast<long>(r))];
  out.start = std::min(a.start, b.start);
  long hi = std::max(a.end(), b.end());
  for (long i = out.start; i < hi; ++i) out.window.push_back(op[a.at(i)][b.at(i)]);
  return normalize(out);
}

Profile transform(const Profile& a, long s, const std::vector<int>& g) {
  Profile out;
  out.left.resize(a.left.size());
  for (std::size_t r = 0; r < a.left.size(); ++r) out.left[r] = g[a.left_at(static_cast<long>(r) + s)];
  out.right.resize(a.right.size());
  for (std::size_t r = 0; r < a.right.size(); ++r) out.right[r] = g[a.right_at(static_cast<long>(r) + s)];
  out.start = a.start - s;
  for (long i = out.start; i < a.end() - s; ++i) out.window.push_back(g[a.at(i + s)]);
  return normalize(out);
}

namespace {

// s > 0 case of solve_recursion
Profile solve_forward(const Profile& u, long s, const std::vector<int>& g, const std::vector<std::vector<int>>& meet) {
  // right tail: periodic fixpoint, period a multiple of s's orbit structure
  const long pr = static_cast<long>(u.right.size());
  std::vector<int> y = u.right;
  for (bool changed = true; changed;) {
    changed = false;
    for (long r = 0; r < pr; ++r) {
      int v = meet[u.right[r]][g[y[floor_mod(r + s, pr)]]];
      if (v != y[r]) y[r] = v, changed = true;
    }
  }
  std::map<long, int> w;  // solved coordinates below the right tail
  auto value = [&](long i) { return i >= u.end() ? y[floor_mod(i, pr)] : w.at(i); };
  for (long i = u.end() - 1; i >= u.start; --i) w[i] = meet[u.at(i)][g[value(i + s)]];
  // left region: walk down until the state repeats
  const long pl = static_cast<long>(u.left.size());
  std::map<std::vector<int>, long> seen;
  constexpr long kCap = 1000000;
  for (long i = u.start - 1;; --i) {
    std::vector<int> state{static_cast<int>(floor_mod(i, pl))};
    for (long j = 1; j <= s; ++j) state.push_back(value(i + j));
    auto [it, fresh] = seen.emplace(state, i);
    if (!fresh) {
      long prev = it->second, q = prev - i;
      Profile out;
      out.left.resize(q);
      for (long j = prev + s - q + 1; j <= prev + s; ++j) out.left[floor_mod(j, q)] = value(j);
      out.start = i + 1;
      for (long j = i + 1; j < u.end(); ++j) out.window.push_back(value(j));
      out.right = y;
      return normalize(out);
    }
    if (u.start - i > kCap) throw Unresolved("tail recursion did not become periodic");
    w[i] = meet[u.left_at(i)][g[value(i + s)]];
  }
}

}  // namespace

Profile solve_recursion(const Profile& u, long s, const std::vector<int>& g, const std::vector<std::vector<int>>& meet) {
  if (s > 0) return solve_forward(u, s, g, meet);
  if (s < 0) return reflect(solve_forward(reflect(u), -s, g, meet));
  auto fix = [&](int top) {
    int x = top;
    for (int next = meet[top][g[x]]; next != x; next = meet[top][g[x]]) x = next;
    return x;
  };
  Profile out = u;
  for (auto& v : out.left) v = fix(v);
  for (auto& v : out.window) v = fix(v);
  for (auto& v : out.right) v = fix(v);
  return normalize(out);
}

}  // namespace tdlc::shift
