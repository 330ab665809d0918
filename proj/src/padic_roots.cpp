#include "tdlc/padic.hpp"

#include <algorithm>

namespace tdlc::padic {

using linalg::valuation;

NewtonPolygon newton_polygon(const std::vector<Rational>& poly, const Integer& p) {
  NewtonPolygon np;
  std::vector<std::pair<long, long>> pts;  // (degree, valuation)
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(poly[i], p));
  if (pts.empty()) throw PreconditionError("Newton polygon of the zero polynomial");
  np.zero_roots = static_cast<std::size_t>(pts.front().first);
  // lower convex hull, left to right
  std::vector<std::pair<long, long>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b when it lies on or above segment a-q
      if ((b.second - a.second) * (q.first - a.first) >= (q.second - a.second) * (b.first - a.first)) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  long e = 0;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    long dx = hull[i + 1].first - hull[i].first, dy = hull[i + 1].second - hull[i].second;
    Rational v(-dy, dx);
    v.canonicalize();
    np.slopes.push_back({v, static_cast<std::size_t>(dx)});
    if (v < 0) e += dy;  // -v * dx
  }
  std::sort(np.slopes.begin(), np.slopes.end(),
            [](const Slope& a, const Slope& b) { return a.root_valuation < b.root_valuation; });
  np.expansion_exponent = static_cast<unsigned long>(e);
  np.predicted_alpha = ipow(p, np.expansion_exponent);
  return np;
}

NewtonPolygon newton_polygon(const Matrix& a, const Integer& p) { return newton_polygon(linalg::char_poly(a), p); }

namespace {

Rational eval(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// divide by (x - r), exact
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& r) {
  std::vector<Rational> q(poly.size() - 1);
  Rational carry = 0;
  for (std::size_t i = poly.size(); i-- > 1;) {
    carry = carry * r + poly[i];
    q[i - 1] = carry;
  }
  return q;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> fac;
  for (Integer d = 2; d * d <= n && d < 1000000; ++d) {
    int k = 0;
    while (n % d == 0) n /= d, ++k;
    if (k) fac.emplace_back(d, k);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [q, k] : fac) {
    std::size_t cur = out.size();
    Integer pw = 1;
    for (int j = 1; j <= k; ++j) {
      pw *= q;
      for (std::size_t i = 0; i < cur; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

}  // namespace

RootSplit split_roots(const Matrix& a, const Integer& p) {
  RootSplit rs;
  auto poly = linalg::char_poly(a);
  while (poly.size() > 1 && poly[0] == 0) poly.erase(poly.begin()), ++rs.zero_roots;
  if (poly.size() > 1) {
    Integer lcm = 1;
    for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer a0 = Integer(poly.front() * lcm), an = Integer(poly.back() * lcm);
    auto num = divisors(a0), den = divisors(an);
    std::vector<Rational> candidates;
    for (const auto& n : num)
      for (const auto& d : den)
        for (int s : {1, -1}) {
          Rational c(Integer(s * n), d);
          c.canonicalize();
          candidates.push_back(c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
      std::size_t mult = 0;
      while (poly.size() > 1 && eval(poly, c) == 0) poly = deflate(poly, c), ++mult;
      if (mult) rs.rational_roots.push_back({c, mult});
    }
  }
  rs.remainder = poly;
  if (poly.size() > 1) rs.remainder_slopes = newton_polygon(poly, p).slopes;
  return rs;
}

}  // namespace tdlc::padic
