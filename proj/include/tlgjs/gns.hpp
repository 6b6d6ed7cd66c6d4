#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "tlgjs/graded.hpp"
#include "tlgjs/morphism.hpp"

namespace tlgjs {

// Left regular representation of the endomorphism algebra at one level, in
// the inner product <u, v> = Tr(u† ∘ v). The trace is faithful for
// delta > 2, so operator norms computed here are the C*-norms.
class EndomorphismGns {
 public:
  EndomorphismGns(const Rational& delta, int level);  // throws if the Gram matrix is not positive definite

  int level() const { return level_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  double min_gram_eigenvalue() const { return min_gram_eig_; }

  Eigen::MatrixXd left_multiplication(const Morphism& f) const;
  double operator_norm(const Morphism& f) const;
  // Smallest spectral point of a self-adjoint endomorphism; >= 0 means positive.
  double min_eigenvalue(const Morphism& f) const;

 private:
  Eigen::MatrixXd conjugated(const Morphism& f) const;  // Lᵀ A Lᵀ⁻¹, orthonormal coordinates

  Rational delta_;
  int level_;
  std::vector<PlanarPairing> basis_;
  std::map<PlanarPairing, int> index_;
  Eigen::MatrixXd chol_lt_;  // Lᵀ with gram = L Lᵀ
  double min_gram_eig_ = 0.0;
};

double operator_norm(const Rational& delta, const Morphism& f, int level);

// Same construction over the full ground algebra at level n (all diagrams
// with b = 0 and l, r <= n), with inner product Phi(u* ∧ v). Used for norms
// of mixed-corner ground elements.
class GroundAlgebraGns {
 public:
  GroundAlgebraGns(const Rational& delta, int level);

  int dimension() const { return static_cast<int>(basis_.size()); }
  double operator_norm(const GradedElement& a) const;
  double min_gram_eigenvalue() const { return min_gram_eig_; }

 private:
  Rational delta_;
  int level_;
  std::vector<std::pair<GradedKey, PlanarPairing>> basis_;
  std::map<std::pair<GradedKey, PlanarPairing>, int> index_;
  Eigen::MatrixXd chol_lt_;
  double min_gram_eig_ = 0.0;
};

}  // namespace tlgjs
