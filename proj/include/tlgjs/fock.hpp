#pragma once

#include <map>

#include "tlgjs/graded.hpp"

namespace tlgjs {

// A vector in the truncated full Fock module over the ground algebra: one
// graded element per tensor degree b, kept for 0 <= b < depth. Operators are
// total; sectors pushed past the truncation frontier are dropped and the drop
// is recorded in the `truncated` flag of the result.
class FockVector {
 public:
  explicit FockVector(int depth = 6) : depth_(depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  }

  // Degree-0 vector holding the empty diagram.
  static FockVector vacuum(int depth = 6);

  int depth() const { return depth_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  const std::map<int, GradedElement>& sectors() const { return sectors_; }
  GradedElement sector(int b) const;
  void add_sector(int b, const GradedElement& x);  // validates bottom counts, drops past depth

  bool operator==(const FockVector& o) const { return depth_ == o.depth_ && sectors_ == o.sectors_; }

 private:
  int depth_;
  std::map<int, GradedElement> sectors_;
  bool truncated_ = false;
};

// A creation-operator symbol: every term has exactly one bottom strand.
// The self-adjoint flag identifies the real (star-fixed) symbols whose
// creation-plus-annihilation sum realizes the Walker action.
struct CreationSymbol {
  GradedElement xi;
  bool self_adjoint = false;

  explicit CreationSymbol(GradedElement value);
};

// Sector identification U: wedge of a degree-b and a degree-b' element, landing
// in degree b + b'. Associative.
GradedElement identify_sectors(const Rational& delta, const GradedElement& xi, const GradedElement& eta);

// Ground-valued inner product: contracts the bottom strands and the left top
// strands of star(xi) against eta. Conjugate-linear in xi, linear in eta;
// vanishes across different degrees or left-grades.
GradedElement module_inner(const Rational& delta, const GradedElement& xi, const GradedElement& eta);

// Creation: degree shift +1 by left wedge with the symbol.
FockVector create(const Rational& delta, const CreationSymbol& xi, const FockVector& v);

// Annihilation: degree shift -1, the adjoint of creation; kills degree 0.
FockVector annihilate(const Rational& delta, const CreationSymbol& xi, const FockVector& v);

// Degree-wise scalar pairing Tr ∘ module_inner, conjugate-linear in v.
Rational fock_inner(const Rational& delta, const FockVector& v, const FockVector& w);

}  // namespace tlgjs
