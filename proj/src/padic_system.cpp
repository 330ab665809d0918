#include "tdlc/padic.hpp"

#include "tdlc/finite.hpp"

#include <sstream>

namespace tdlc::padic {

using namespace linalg;

namespace {

constexpr std::size_t kIterationCap = 4096;

Subgroup canonical(const Integer& p, std::size_t d, const Matrix& wgens, const Matrix& mgens) {
  std::vector<std::size_t> piv;
  Matrix w = span_basis(wgens.cols() ? wgens : Matrix(d, 0), &piv);
  Matrix m = mgens.cols() ? mgens : Matrix(d, 0);
  for (std::size_t t = 0; t < w.cols(); ++t)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational f = m(piv[t], c);
      if (f == 0) continue;
      for (std::size_t r = 0; r < d; ++r) m(r, c) -= f * w(r, t);
    }
  Hermite h = hermite(m, p);
  Subgroup u;
  u.compact = w.cols() == 0;
  u.open = w.cols() + h.basis.cols() == d;
  u.payload = PAdicSubgroup{w, h.basis, h.exponent, h.pivot_rows, h.pivot_vals};
  return u;
}

Rational p_power(const Integer& p, long e) {
  return e >= 0 ? Rational(ipow(p, static_cast<unsigned long>(e))) : Rational(1) / Rational(ipow(p, static_cast<unsigned long>(-e)));
}

bool negative(const Rational& v) { return v < 0; }
bool non_positive(const Rational& v) { return v <= 0; }
bool non_negative(const Rational& v) { return v >= 0; }
bool zero_val(const Rational& v) { return v == 0; }
bool positive(const Rational& v) { return v > 0; }

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::shared_ptr<PAdicSystem> make_system(const Integer& p, const Matrix& a, std::string name) {
  return std::make_shared<PAdicSystem>(p, a, std::move(name));
}

PAdicSystem::PAdicSystem(Integer p, Matrix a, std::string name) : p_(std::move(p)), a_(std::move(a)), name_(std::move(name)) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0) throw InvalidInput(name_ + ": p must be prime");
  if (a_.rows() == 0 || a_.rows() != a_.cols()) throw InvalidInput(name_ + ": matrix must be square and nonempty");
  polygon_ = newton_polygon(a_, p_);
  roots_ = split_roots(a_, p_);
}

Capabilities PAdicSystem::capabilities() const {
  Capabilities c;
  c.quotient = c.restriction = true;
  c.plus_plus_certificate = c.structural_plus = c.entropy_oracle = true;
  return c;
}

Subgroup PAdicSystem::make(const Matrix& wgens, const Matrix& mgens) const {
  if (wgens.rows() != dim() || mgens.rows() != dim()) throw PreconditionError("generator dimension mismatch");
  return canonical(p_, dim(), wgens, mgens);
}

Matrix PAdicSystem::generators(const Subgroup& u) const {
  const auto& s = u.as<PAdicSubgroup>();
  Matrix m = s.module;
  Rational f = p_power(p_, s.exponent);
  for (std::size_t c = 0; c < m.cols(); ++c) m.scale_column(c, f);
  return m;
}

Subgroup PAdicSystem::whole() const { return subspace(Matrix::identity(dim())); }
Subgroup PAdicSystem::trivial() const { return make(Matrix(dim(), 0), Matrix(dim(), 0)); }

Subgroup PAdicSystem::base(std::size_t k) const {
  Matrix m = Matrix::identity(dim());
  Rational f = p_power(p_, static_cast<long>(k));
  for (std::size_t c = 0; c < dim(); ++c) m.scale_column(c, f);
  return lattice(m);
}

Subgroup PAdicSystem::intersect(const Subgroup& a, const Subgroup& b) const {
  const Matrix& w1 = a.as<PAdicSubgroup>().subspace;
  const Matrix& w2 = b.as<PAdicSubgroup>().subspace;
  Matrix b1 = generators(a), b2 = generators(b);
  Matrix n = w1.hconcat(-w2);
  // common subspace
  Matrix ker = nullspace(n);
  Matrix v = w1 * ker.block(0, 0, w1.cols(), ker.cols());
  // module part: pairs (x, y) with b1 x - b2 y in the span of n
  Matrix proj = left_nullspace(n);
  Matrix c = (proj * b1).hconcat(-(proj * b2));
  if (proj.rows() == 0) c = Matrix(0, b1.cols() + b2.cols());
  Matrix lam = lattice_kernel(c, p_);
  std::vector<std::vector<Rational>> xs;
  for (std::size_t g = 0; g < lam.cols(); ++g) {
    std::vector<Rational> x(b1.cols()), y(b2.cols());
    for (std::size_t i = 0; i < b1.cols(); ++i) x[i] = lam(i, g);
    for (std::size_t i = 0; i < b2.cols(); ++i) y[i] = lam(b1.cols() + i, g);
    auto z = b1.apply(x), z2 = b2.apply(y);
    for (std::size_t r = 0; r < dim(); ++r) z[r] = z2[r] - z[r];
    auto sol = solve(n, z);
    if (!sol) throw InvariantViolation("intersection: inconsistent module equation");
    std::vector<Rational> s(w1.cols());
    for (std::size_t i = 0; i < w1.cols(); ++i) s[i] = (*sol)[i];
    auto pt = w1.apply(s);
    auto bx = b1.apply(x);
    for (std::size_t r = 0; r < dim(); ++r) pt[r] += bx[r];
    xs.push_back(pt);
  }
  return make(v, Matrix::from_columns(xs, dim()));
}

Subgroup PAdicSystem::image(const Subgroup& u) const {
  return make(a_ * u.as<PAdicSubgroup>().subspace, a_ * generators(u));
}

Subgroup PAdicSystem::preimage(const Subgroup& u) const {
  Subgroup img = subspace(a_);
  Subgroup x = intersect(u, img);
  Matrix wx = x.as<PAdicSubgroup>().subspace, mx = generators(x);
  auto lift = [&](const Matrix& m) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto s = solve(a_, m.column(c));
      if (!s) throw InvariantViolation("preimage: vector outside the image");
      cols.push_back(*s);
    }
    return Matrix::from_columns(cols, dim());
  };
  return make(nullspace(a_).hconcat(lift(wx)), lift(mx));
}

Subgroup PAdicSystem::set_product(const Subgroup& a, const Subgroup& b) const {
  return make(a.as<PAdicSubgroup>().subspace.hconcat(b.as<PAdicSubgroup>().subspace), generators(a).hconcat(generators(b)));
}

bool PAdicSystem::contains(const Subgroup& outer, const Subgroup& inner) const {
  return set_product(outer, inner) == outer;
}

IndexValue PAdicSystem::raw_index(const Subgroup& outer, const Subgroup& inner) const {
  const auto& o = outer.as<PAdicSubgroup>();
  const auto& i = inner.as<PAdicSubgroup>();
  if (o.subspace.cols() != i.subspace.cols() || o.module.cols() != i.module.cols()) return IndexValue::infinite();
  long e = 0;
  for (std::size_t k = 0; k < i.pivot_vals.size(); ++k) e += (i.exponent + i.pivot_vals[k]) - (o.exponent + o.pivot_vals[k]);
  if (e < 0) throw InvariantViolation("negative index exponent");
  return IndexValue(ipow(p_, static_cast<unsigned long>(e)));
}

Subgroup PAdicSystem::kernel() const { return subspace(nullspace(a_)); }

std::string PAdicSystem::describe(const Subgroup& u) const {
  const auto& s = u.as<PAdicSubgroup>();
  auto vec = [](const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + ")";
  };
  std::ostringstream os;
  if (s.subspace.cols() == 0 && s.module.cols() == 0) return "0";
  if (s.subspace.cols() == dim()) return "G";
  bool first = true;
  if (s.subspace.cols()) {
    os << "Q" << p_ << "<";
    for (std::size_t c = 0; c < s.subspace.cols(); ++c) os << (c ? "," : "") << vec(s.subspace.column(c));
    os << ">";
    first = false;
  }
  if (s.module.cols()) {
    if (!first) os << " + ";
    if (s.exponent != 0) os << p_ << "^" << s.exponent << "*";
    os << "Z" << p_ << "<";
    for (std::size_t c = 0; c < s.module.cols(); ++c) os << (c ? "," : "") << vec(s.module.column(c));
    os << ">";
  }
  return os.str();
}

Matrix PAdicSystem::eigen_subspace(bool (*pred)(const Rational&), bool with_zero) const {
  std::vector<Rational> f{Rational(1)};
  for (const auto& r : roots_.rational_roots) {
    if (!pred(linalg::valuation(r.value, p_))) continue;
    for (std::size_t k = 0; k < r.multiplicity; ++k) f = poly_mul(f, {-r.value, Rational(1)});
  }
  if (with_zero)
    for (std::size_t k = 0; k < roots_.zero_roots; ++k) f = poly_mul(f, {Rational(0), Rational(1)});
  if (!roots_.remainder_slopes.empty()) {
    std::size_t hit = 0, total = 0;
    for (const auto& s : roots_.remainder_slopes) {
      total += s.multiplicity;
      if (pred(s.root_valuation)) hit += s.multiplicity;
    }
    if (hit == total) f = poly_mul(f, roots_.remainder);
    else if (hit != 0)
      throw Unresolved(name_ + ": an irreducible factor of the characteristic polynomial has roots on both sides of the split");
  }
  return span_basis(nullspace(poly_eval(f, a_)));
}

std::optional<Subgroup> PAdicSystem::structural_plus(const Subgroup& u) const {
  Subgroup w = intersect(u, subspace(eigen_subspace(non_positive, false)));
  Subgroup x = w;
  for (std::size_t n = 0; n < kIterationCap; ++n) {
    Subgroup next = intersect(w, image(x));
    if (next == x) return x;
    x = next;
  }
  throw Unresolved(name_ + ": plus group iteration did not stabilize");
}

std::optional<Subgroup> PAdicSystem::structural_minus(const Subgroup& u) const {
  Subgroup w = intersect(u, subspace(eigen_subspace(non_negative, true)));
  Subgroup y = w;
  for (std::size_t n = 0; n < kIterationCap; ++n) {
    Subgroup next = intersect(w, preimage(y));
    if (next == y) return y;
    y = next;
  }
  throw Unresolved(name_ + ": minus group iteration did not stabilize");
}

std::optional<std::size_t> PAdicSystem::alpha_bound(const Subgroup& u, const std::optional<Subgroup>&,
                                                    std::span<const Subgroup> minus) const {
  // alpha_n is non-increasing with limit p^e on compact open U, so the first
  // n with alpha_n = p^e starts the constant tail
  if (!u.open || !u.compact) return std::nullopt;
  for (std::size_t n = 0; n + 1 < minus.size(); ++n)
    if (raw_index(minus[n], minus[n + 1]) == IndexValue(polygon_.predicted_alpha)) return n;
  return std::nullopt;
}

ClosureCertificate PAdicSystem::plus_plus_closed(const Subgroup& plus, std::size_t probe) const {
  Matrix vneg;
  try {
    vneg = eigen_subspace(negative, false);
  } catch (const Unresolved& e) {
    return {ClosureStatus::unknown, e.what()};
  }
  Subgroup vn = subspace(vneg);
  const auto& core = intersect(plus, vn).as<PAdicSubgroup>();
  if (core.module.cols() != vneg.cols())
    return {ClosureStatus::unknown, "U+ does not meet the expanding subspace in a lattice of full rank"};
  Subgroup y = set_product(plus, vn);
  for (std::size_t n = 0; n <= probe; ++n) {
    Subgroup next = set_product(image(y), vn);
    if (next == y) return {ClosureStatus::closed, "phi^n U+ + V_expanding stabilizes at n=" + std::to_string(n)};
    y = next;
  }
  return {ClosureStatus::unknown, "union did not stabilize within the probe"};
}

std::vector<Subgroup> PAdicSystem::scale_candidates(std::size_t depth) const {
  std::vector<Subgroup> out = System::scale_candidates(depth);
  try {
    Subgroup z = base(0);
    Subgroup adapted = trivial();
    for (auto [pred, zero] : {std::pair{negative, false}, std::pair{zero_val, false}, std::pair{positive, true}})
      adapted = set_product(adapted, intersect(z, subspace(eigen_subspace(pred, zero))));
    if (adapted.open) {
      Matrix g = generators(adapted);
      for (std::size_t k = 0; k <= depth; ++k) {
        out.push_back(lattice(g));
        for (std::size_t c = 0; c < g.cols(); ++c) g.scale_column(c, Rational(p_));
      }
    }
  } catch (const Unresolved&) {
  }
  return out;
}

NubClosure PAdicSystem::nub_closure(const std::vector<Subgroup>& minimizing, const Integer&) const {
  for (const auto& m : minimizing)
    if (m.compact && m.open)
      return {trivial(), true, "p-scaling of a minimizing lattice stays minimizing"};
  throw Unresolved(name_ + ": no minimizing lattice found");
}

Matrix PAdicSystem::adapted_basis(const Subgroup& h) const {
  const auto& s = h.as<PAdicSubgroup>();
  if (s.module.cols() != 0) throw CapabilityError(name_ + ": only subspaces are supported as quotient or restriction targets");
  Matrix proj = left_nullspace(s.subspace);
  if (proj.rows() == 0) return Matrix::identity(dim());
  return column_echelon(proj, p_).transform;
}

Subgroup PAdicSystem::change_coordinates(const Subgroup& u, const Matrix& m, std::size_t first, std::size_t count) const {
  Matrix w = m * u.as<PAdicSubgroup>().subspace;
  Matrix g = m * generators(u);
  return canonical(p_, count, w.block(first, 0, count, w.cols()), g.block(first, 0, count, g.cols()));
}

SystemPtr PAdicSystem::quotient(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  if (!h.phi_invariant) throw PreconditionError("quotient needs a phi-invariant subgroup");
  Matrix t = adapted_basis(h.subgroup);
  std::size_t k = h.subgroup.as<PAdicSubgroup>().subspace.cols();
  if (k == 0) return shared_from_this();
  if (k == dim()) return finite::trivial_system();
  Matrix b = *inverse(t) * a_ * t;
  return make_system(p_, b.block(0, 0, dim() - k, dim() - k), name_ + "/" + describe(h.subgroup));
}

SystemPtr PAdicSystem::restrict_to(const ClosedSubgroupSpec& h) const {
  require_same(*this, h.subgroup);
  if (!h.phi_invariant) throw PreconditionError("restriction needs a phi-invariant subgroup");
  Matrix t = adapted_basis(h.subgroup);
  std::size_t k = h.subgroup.as<PAdicSubgroup>().subspace.cols();
  if (k == dim()) return shared_from_this();
  if (k == 0) return finite::trivial_system();
  Matrix b = *inverse(t) * a_ * t;
  return make_system(p_, b.block(dim() - k, dim() - k, k, k), name_ + "|" + describe(h.subgroup));
}

Subgroup PAdicSystem::project(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  std::size_t hk = h.subgroup.as<PAdicSubgroup>().subspace.cols();
  if (hk == 0) return k;
  if (hk == dim()) return finite::trivial_system()->whole();
  Matrix t = adapted_basis(h.subgroup);
  return change_coordinates(k, *inverse(t), 0, dim() - hk);
}

Subgroup PAdicSystem::to_restricted(const ClosedSubgroupSpec& h, const Subgroup& k) const {
  if (!contains(h.subgroup, k)) throw PreconditionError("subgroup is not inside the restriction target");
  std::size_t hk = h.subgroup.as<PAdicSubgroup>().subspace.cols();
  if (hk == dim()) return k;
  if (hk == 0) return finite::trivial_system()->whole();
  Matrix t = adapted_basis(h.subgroup);
  return change_coordinates(k, *inverse(t), dim() - hk, hk);
}

}  // namespace tdlc::padic
