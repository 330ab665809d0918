#pragma once

#include "tdlc/system.hpp"

namespace tdlc::padic {

using linalg::Matrix;

// A segment of the Newton polygon of the characteristic polynomial, reported
// by the p-adic valuation of the roots it accounts for (x/2 on Q_2 gives -1).
struct Slope {
  Rational root_valuation;
  std::size_t multiplicity = 0;
};

struct NewtonPolygon {
  std::vector<Slope> slopes;  // ascending root valuation
  std::size_t zero_roots = 0;
  unsigned long expansion_exponent = 0;  // sum of -valuation * multiplicity over negative valuations
  Integer predicted_alpha;              // p^expansion_exponent
};

NewtonPolygon newton_polygon(const std::vector<Rational>& poly, const Integer& p);
NewtonPolygon newton_polygon(const Matrix& a, const Integer& p);

// Root valuations of a matrix, split into rational roots (exact) and a
// remainder factor whose roots are only known through its Newton polygon.
struct RootSplit {
  struct Root {
    Rational value;
    std::size_t multiplicity;
  };
  std::vector<Root> rational_roots;  // nonzero
  std::size_t zero_roots = 0;
  std::vector<Rational> remainder;   // monic, no rational roots
  std::vector<Slope> remainder_slopes;
};
RootSplit split_roots(const Matrix& a, const Integer& p);

class PAdicSystem final : public System, public std::enable_shared_from_this<PAdicSystem> {
 public:
  PAdicSystem(Integer p, Matrix a, std::string name);

  const Integer& prime() const { return p_; }
  const Matrix& matrix() const { return a_; }
  std::size_t dim() const { return a_.rows(); }
  // W + M from generators of W (subspace) and of M (Z_p-module)
  Subgroup make(const Matrix& subspace_gens, const Matrix& module_gens) const;
  Subgroup subspace(const Matrix& gens) const { return make(gens, Matrix(dim(), 0)); }
  Subgroup lattice(const Matrix& gens) const { return make(Matrix(dim(), 0), gens); }
  // span of generalized eigenvectors whose eigenvalue valuation satisfies pred;
  // zero eigenvalues included when with_zero. Throws Unresolved when an
  // irreducible factor straddles the split.
  Matrix eigen_subspace(bool (*pred)(const Rational&), bool with_zero) const;
  const NewtonPolygon& polygon() const { return polygon_; }

  Backend backend() const override { return Backend::padic; }
  std::string name() const override { return name_; }
  Capabilities capabilities() const override;
  Subgroup whole() const override;
  Subgroup trivial() const override;
  Subgroup base(std::size_t k) const override;
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
  Subgroup image(const Subgroup& u) const override;
  Subgroup preimage(const Subgroup& u) const override;
  Subgroup set_product(const Subgroup& a, const Subgroup& b) const override;
  bool contains(const Subgroup& outer, const Subgroup& inner) const override;
  IndexValue raw_index(const Subgroup& outer, const Subgroup& inner) const override;
  Subgroup kernel() const override;
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
  std::optional<Integer> entropy_oracle() const override { return polygon_.predicted_alpha; }
  std::optional<Integer> scale_oracle() const override { return polygon_.predicted_alpha; }
  std::vector<Subgroup> scale_candidates(std::size_t depth) const override;
  NubClosure nub_closure(const std::vector<Subgroup>& minimizing, const Integer& scale) const override;

 private:
  // basis adapted to an invariant subspace: last columns span it over Z_p
  Matrix adapted_basis(const Subgroup& h) const;
  Subgroup change_coordinates(const Subgroup& u, const Matrix& m, std::size_t first, std::size_t count) const;
  Matrix generators(const Subgroup& u) const;

  Integer p_;
  Matrix a_;
  std::string name_;
  NewtonPolygon polygon_;
  RootSplit roots_;
};

std::shared_ptr<PAdicSystem> make_system(const Integer& p, const Matrix& a, std::string name);

}  // namespace tdlc::padic
