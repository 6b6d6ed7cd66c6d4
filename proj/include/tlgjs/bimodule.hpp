#pragma once

#include <utility>
#include <vector>

#include "tlgjs/graded.hpp"

namespace tlgjs {

struct CornerShape {
  int l = 0, r = 0;
  auto operator<=>(const CornerShape&) const = default;
};

// An element of the (l, r) corner bimodule over the ground corner: a graded
// element all of whose keys carry that top split.
class CornerElement {
 public:
  CornerElement(CornerShape shape, GradedElement payload);

  const CornerShape& shape() const { return shape_; }
  const GradedElement& payload() const { return payload_; }

  bool operator==(const CornerElement&) const = default;

 private:
  CornerShape shape_;
  GradedElement payload_;
};

// b ▷ xi ◁ b': the two ground-corner actions by inclusion and wedge.
// The arguments b, b' must lie in the (0, 0) corner.
CornerElement act(const Rational& delta, const GradedElement& b, const CornerElement& xi, const GradedElement& bp);

// delta^r E_r(xi* ∧ eta), pulled back along iota to the (0, 0) corner.
// Conjugate-linear in xi.
GradedElement right_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta);

// delta^l E_l(xi ∧ eta*), pulled back along iota. Conjugate-linear in eta.
GradedElement left_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta);

// Moves the marked point: (l, r) -> (l + steps, r - steps), diagrams unchanged.
CornerElement dot_shift(const CornerElement& xi, int steps);

// Conjugation on the (0, n) corner: star followed by the dot shift by -n.
// A conjugate-linear involution.
CornerElement conjugate(const CornerElement& xi);

// Bimodule tensor product of (0, n) corners: bottoms and tops concatenate.
CornerElement tensorator(const CornerElement& xi, const CornerElement& eta);

// Iterated tensorator over a nonempty word of (0, n_i)-corner factors.
CornerElement fuse(const std::vector<CornerElement>& word);

// The represented morphism action: xi ∧ FR(f), sending the (0, n) corner to
// the (0, m) corner for f: n -> m.
CornerElement morphism_action(const Rational& delta, const Morphism& f, const CornerElement& xi);

// Conjugation structure of the representation; coincides with `conjugate`.
CornerElement conj_structure(const CornerElement& xi);

// Scalar pairing Tr(right_inner(xi, eta)).
Rational l2_inner(const Rational& delta, const CornerElement& xi, const CornerElement& eta);

struct BasisCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index sums of caller-supplied module bases. Validates the reproducing
// identity on the sample set first (throws BasisCheckError when it fails or
// when an inner-product sum is not a multiple of the empty diagram), then
// returns (sum of left_inner over the right basis, sum of right_inner over
// the left basis) as scalars.
std::pair<Rational, Rational> index_from_bases(const Rational& delta, const std::vector<CornerElement>& left_basis,
                                               const std::vector<CornerElement>& right_basis,
                                               const std::vector<CornerElement>& samples);

}  // namespace tlgjs
