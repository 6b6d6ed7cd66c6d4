#include "tlgjs/gns.hpp"

#include <stdexcept>

namespace tlgjs {

namespace {

// Cholesky of the Gram matrix plus its smallest eigenvalue; rejects
// non-positive-definite forms (the signature of a loop parameter <= 2).
std::pair<Eigen::MatrixXd, double> factor_gram(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const double min_eig = gram.rows() == 0 ? 1.0 : eig.eigenvalues().minCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (min_eig <= 0.0 || llt.info() != Eigen::Success)
    throw std::runtime_error("Gram matrix is not positive definite; the trace form degenerates at this loop parameter");
  return {Eigen::MatrixXd(llt.matrixL().transpose()), min_eig};
}

double largest_singular_value(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.transpose() * m);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

}  // namespace

EndomorphismGns::EndomorphismGns(const Rational& delta, int level)
    : delta_(delta), level_(level), basis_(enumerate_nc_pairings(level, level)) {
  const int d = dimension();
  for (int i = 0; i < d; ++i) index_.emplace(basis_[i], i);
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i) {
    const Morphism ui_dag = dagger(Morphism::single(basis_[i]));
    for (int j = 0; j < d; ++j) {
      const Morphism prod = compose(delta_, ui_dag, Morphism::single(basis_[j]));
      gram(i, j) = to_double(categorical_trace(delta_, prod, TraceSide::right));
    }
  }
  std::tie(chol_lt_, min_gram_eig_) = factor_gram(gram);
}

Eigen::MatrixXd EndomorphismGns::left_multiplication(const Morphism& f) const {
  if (f.source() != level_ || f.target() != level_)
    throw std::invalid_argument("left multiplication needs an endomorphism at the realization level");
  const int d = dimension();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const Morphism image = compose(delta_, f, Morphism::single(basis_[j]));
    for (const auto& [p, c] : image.terms()) a(index_.at(p), j) = to_double(c);
  }
  return a;
}

Eigen::MatrixXd EndomorphismGns::conjugated(const Morphism& f) const {
  const Eigen::MatrixXd a = left_multiplication(f);
  return chol_lt_ * a * chol_lt_.inverse();
}

double EndomorphismGns::operator_norm(const Morphism& f) const { return largest_singular_value(conjugated(f)); }

double EndomorphismGns::min_eigenvalue(const Morphism& f) const {
  Eigen::MatrixXd b = conjugated(f);
  b = ((b + b.transpose()) / 2.0).eval();
  if (b.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
  return eig.eigenvalues().minCoeff();
}

double operator_norm(const Rational& delta, const Morphism& f, int level) {
  return EndomorphismGns(delta, level).operator_norm(f);
}

GroundAlgebraGns::GroundAlgebraGns(const Rational& delta, int level) : delta_(delta), level_(level) {
  for (int l = 0; l <= level; ++l) {
    for (int r = 0; r <= level; ++r) {
      if ((l + r) % 2 != 0) continue;
      for (const auto& p : enumerate_nc_pairings(0, l + r)) basis_.emplace_back(GradedKey{0, l, r}, p);
    }
  }
  const int d = dimension();
  for (int i = 0; i < d; ++i) index_.emplace(basis_[i], i);
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i) {
    const GradedElement ui_star = star(GradedElement::term(basis_[i].first, Morphism::single(basis_[i].second)));
    for (int j = 0; j < d; ++j) {
      const GradedElement uj = GradedElement::term(basis_[j].first, Morphism::single(basis_[j].second));
      gram(i, j) = to_double(ground_weight(delta_, wedge(delta_, ui_star, uj)));
    }
  }
  std::tie(chol_lt_, min_gram_eig_) = factor_gram(gram);
}

double GroundAlgebraGns::operator_norm(const GradedElement& a) const {
  if (!a.ground_only()) throw std::invalid_argument("ground algebra norm needs a b = 0 element");
  const int d = dimension();
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const GradedElement uj = GradedElement::term(basis_[j].first, Morphism::single(basis_[j].second));
    const GradedElement image = wedge(delta_, a, uj);
    for (const auto& [k, f] : image.terms()) {
      if (k.l > level_ || k.r > level_)
        throw std::invalid_argument("element does not preserve the ground algebra at this level");
      for (const auto& [p, c] : f.terms()) mat(index_.at({k, p}), j) = to_double(c);
    }
  }
  return largest_singular_value(chol_lt_ * mat * chol_lt_.inverse());
}

}  // namespace tlgjs
