#include "tdlc/index_lemmas.hpp"

namespace tdlc::finite {

Elements normalized_core(const Group& g, const Elements& k, const Elements& c) {
  Elements out = g.all();
  for (int x = 0; x < g.order(); ++x) {
    if (!c[x]) continue;
    Elements conj;
    for (int y = 0; y < g.order(); ++y)
      if (k[y]) conj.set(g.mul(g.mul(g.inv(x), y), x));
    out &= conj;
  }
  return out;
}

std::size_t LemmaCounts::total() const {
  std::size_t n = 0;
  for (const auto& [name, c] : checked) n += c;
  return n;
}

namespace {

bool normalizes(const Group& g, const Elements& c, const Elements& l) {
  for (int x = 0; x < g.order(); ++x) {
    if (!c[x]) continue;
    for (int y = 0; y < g.order(); ++y)
      if (l[y] && !l[g.mul(g.mul(g.inv(x), y), x)]) return false;
  }
  return true;
}

}  // namespace

LemmaCounts check_index_identities(const Group& g) {
  LemmaCounts out;
  const auto& subs = g.subgroups();
  auto sz = [](const Elements& s) { return static_cast<long>(s.count()); };
  auto sub = [](const Elements& a, const Elements& b) { return (a & ~b).none(); };  // a ≤ b
  auto check = [&](const char* name, bool ok, const std::string& detail) {
    ++out.checked[name];
    if (!ok) out.failures.push_back(std::string(name) + ": " + detail);
  };
  auto d = [&](const Elements& s) { return g.describe(s); };
  const Elements whole = g.all();

  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (!sub(h, k)) continue;
      check("index-tower", sz(whole) / sz(h) == (sz(whole) / sz(k)) * (sz(k) / sz(h)), d(h) + " ≤ " + d(k));
      for (const auto& l : subs) {
        check("meet-index", sz(k) / sz(h) >= sz(k & l) / sz(h & l), d(h) + " ≤ " + d(k) + ", L=" + d(l));
        Elements hl = g.product_set(h, l), kl = g.product_set(k, l);
        if (hl != g.product_set(l, h)) continue;
        // HL = LH makes HL a subgroup; KL need not be one, so count it as a set
        check("join-index", g.is_subgroup(hl) && sz(k) / sz(h) >= sz(kl) / sz(hl),
              d(h) + " ≤ " + d(k) + ", L=" + d(l));
      }
    }
  for (const auto& l : subs)
    for (const auto& h : subs) {
      Elements lh = g.product_set(l, h);
      check("product-index", sz(lh) % sz(h) == 0 && sz(lh) / sz(h) == sz(l) / sz(h & l), d(l) + ", " + d(h));
    }
  for (const auto& b : subs)
    for (const auto& a : subs) {
      if (!sub(a, b)) continue;
      for (const auto& bp : subs) {
        if (!sub(bp, b)) continue;
        Elements ba = g.product_set(bp, a);
        if (ba != g.product_set(a, bp)) continue;
        check("snake", sz(b) / sz(bp) == (sz(a) / sz(a & bp)) * (sz(b) / sz(ba)),
              "B=" + d(b) + ", A=" + d(a) + ", B'=" + d(bp));
      }
    }
  for (const auto& k : subs)
    for (const auto& c : subs) {
      Elements l = normalized_core(g, k, c);
      check("normalized-core", g.is_subgroup(l) && sub(l, k) && normalizes(g, c, l), "K=" + d(k) + ", C=" + d(c));
    }

  for (const auto& phi : all_endomorphisms(g)) {
    const Elements im = image_set(phi, whole), ker = preimage_set(phi, g.unit());
    for (const auto& h : subs)
      for (const auto& k : subs) {
        if (!sub(h, k)) continue;
        const std::string where = d(h) + " ≤ " + d(k);
        Elements ph = preimage_set(phi, h), pk = preimage_set(phi, k);
        long lhs = sz(pk) / sz(ph);
        check("preimage-index", lhs == sz(k & im) / sz(h & im) && lhs <= sz(k) / sz(h), where);
        Elements ih = image_set(phi, h), ik = image_set(phi, k);
        long rhs = sz(ik) / sz(ih);
        check("image-index", sz(g.product_set(k, ker)) / sz(g.product_set(h, ker)) == rhs && rhs <= sz(k) / sz(h),
              where);
        if (sub(h, ih) && sub(k, ik)) check("image-monotone", sz(ih) / sz(h) >= sz(ik) / sz(k), where);
      }
  }
  return out;
}

}  // namespace tdlc::finite
