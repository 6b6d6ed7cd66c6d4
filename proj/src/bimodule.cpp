#include "tlgjs/bimodule.hpp"

#include <stdexcept>
#include <string>

namespace tlgjs {

namespace {

std::string shape_str(const CornerShape& s) { return "(" + std::to_string(s.l) + "," + std::to_string(s.r) + ")"; }

void require_shape(const CornerElement& x, const CornerShape& s, const char* what) {
  if (x.shape() != s)
    throw std::invalid_argument(std::string(what) + ": expected shape " + shape_str(s) + ", got " +
                                shape_str(x.shape()));
}

}  // namespace

CornerElement::CornerElement(CornerShape shape, GradedElement payload)
    : shape_(shape), payload_(std::move(payload)) {
  if (shape_.l < 0 || shape_.r < 0) throw std::invalid_argument("negative corner shape");
  if (!payload_.in_corner(shape_.l, shape_.r))
    throw std::invalid_argument("payload does not lie in corner " + shape_str(shape_));
}

CornerElement act(const Rational& delta, const GradedElement& b, const CornerElement& xi, const GradedElement& bp) {
  if (!b.in_corner(0, 0) || !bp.in_corner(0, 0))
    throw std::invalid_argument("corner actions need ground-corner (0,0) coefficients");
  const auto [l, r] = xi.shape();
  GradedElement moved = wedge(delta, iota(b, l), wedge(delta, xi.payload(), iota(bp, r)));
  return CornerElement(xi.shape(), std::move(moved));
}

GradedElement right_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta) {
  require_shape(eta, xi.shape(), "right inner product");
  const int r = xi.shape().r;
  const GradedElement prod = wedge(delta, star(xi.payload()), eta.payload());
  return pow(delta, r) * iota_preimage(tower_expectation(delta, prod, r), r);
}

GradedElement left_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta) {
  require_shape(eta, xi.shape(), "left inner product");
  const int l = xi.shape().l;
  const GradedElement prod = wedge(delta, xi.payload(), star(eta.payload()));
  return pow(delta, l) * iota_preimage(tower_expectation(delta, prod, l), l);
}

CornerElement dot_shift(const CornerElement& xi, int steps) {
  const CornerShape target{xi.shape().l + steps, xi.shape().r - steps};
  if (target.l < 0 || target.r < 0)
    throw std::invalid_argument("dot shift by " + std::to_string(steps) + " leaves shape " + shape_str(target) +
                                " negative");
  GradedElement out;
  for (const auto& [k, f] : xi.payload().terms()) out.add(GradedKey{k.b, target.l, target.r}, f);
  return CornerElement(target, std::move(out));
}

CornerElement conjugate(const CornerElement& xi) {
  if (xi.shape().l != 0) throw std::invalid_argument("conjugation is defined on (0, n) corners");
  const int n = xi.shape().r;
  GradedElement starred = star(xi.payload());
  return dot_shift(CornerElement(CornerShape{n, 0}, std::move(starred)), -n);
}

CornerElement tensorator(const CornerElement& xi, const CornerElement& eta) {
  if (xi.shape().l != 0 || eta.shape().l != 0)
    throw std::invalid_argument("tensorator is defined on (0, n) corners");
  GradedElement out;
  for (const auto& [kx, fx] : xi.payload().terms())
    for (const auto& [ky, fy] : eta.payload().terms())
      out.add(GradedKey{kx.b + ky.b, 0, kx.r + ky.r}, tensor(fx, fy));
  return CornerElement(CornerShape{0, xi.shape().r + eta.shape().r}, std::move(out));
}

CornerElement fuse(const std::vector<CornerElement>& word) {
  if (word.empty()) throw std::invalid_argument("fuse needs a nonempty word");
  CornerElement acc = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) acc = tensorator(acc, word[i]);
  return acc;
}

CornerElement morphism_action(const Rational& delta, const Morphism& f, const CornerElement& xi) {
  if (xi.shape().l != 0 || xi.shape().r != f.source())
    throw std::invalid_argument("morphism action: level mismatch between " + shape_str(xi.shape()) +
                                " and a morphism with source " + std::to_string(f.source()));
  GradedElement out = wedge(delta, xi.payload(), frobenius(f));
  return CornerElement(CornerShape{0, f.target()}, std::move(out));
}

CornerElement conj_structure(const CornerElement& xi) { return conjugate(xi); }

Rational l2_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta) {
  return voiculescu_trace(delta, right_inner(delta, xi, eta));
}

namespace {

// xi ≟ Σ u_i ◁ <u_i | xi>  (right basis reproduction)
bool reproduces_right(const Rational& delta, const std::vector<CornerElement>& basis, const CornerElement& xi) {
  GradedElement sum;
  for (const auto& u : basis) sum += act(delta, GradedElement::unit(), u, right_inner(delta, u, xi)).payload();
  return sum == xi.payload();
}

// xi ≟ Σ <xi, v_j>_left ▷ v_j  (left basis reproduction)
bool reproduces_left(const Rational& delta, const std::vector<CornerElement>& basis, const CornerElement& xi) {
  GradedElement sum;
  for (const auto& v : basis) sum += act(delta, left_inner(delta, xi, v), v, GradedElement::unit()).payload();
  return sum == xi.payload();
}

Rational scalar_multiple_of_unit(const GradedElement& x, const char* what) {
  if (x.is_zero()) return Rational(0);
  const Morphism* empty = x.find(GradedKey{0, 0, 0});
  if (!empty || x.terms().size() != 1 || empty->terms().size() != 1)
    throw BasisCheckError(std::string(what) + " is not a scalar multiple of the empty diagram");
  return empty->terms().begin()->second;
}

}  // namespace

std::pair<Rational, Rational> index_from_bases(const Rational& delta, const std::vector<CornerElement>& left_basis,
                                               const std::vector<CornerElement>& right_basis,
                                               const std::vector<CornerElement>& samples) {
  for (const auto& s : samples) {
    if (!reproduces_right(delta, right_basis, s))
      throw BasisCheckError("right basis fails the reproducing identity on a sample");
    if (!reproduces_left(delta, left_basis, s))
      throw BasisCheckError("left basis fails the reproducing identity on a sample");
  }
  GradedElement r_ind, l_ind;
  for (const auto& u : right_basis) r_ind += left_inner(delta, u, u);
  for (const auto& v : left_basis) l_ind += right_inner(delta, v, v);
  return {scalar_multiple_of_unit(r_ind, "right index sum"), scalar_multiple_of_unit(l_ind, "left index sum")};
}

}  // namespace tlgjs
