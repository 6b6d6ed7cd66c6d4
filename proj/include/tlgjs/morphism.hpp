#pragma once

#include <map>

#include "tlgjs/pairing.hpp"
#include "tlgjs/rational.hpp"

namespace tlgjs {

// A morphism between tensor powers of the generating strand: a finite linear
// combination of non-crossing pairings with `source` bottom points and
// `target` top points. Zero coefficients are never stored, so equality is
// term-wise.
class Morphism {
 public:
  Morphism() = default;
  Morphism(int source, int target) : source_(source), target_(target) {}

  static Morphism zero(int source, int target) { return Morphism(source, target); }
  static Morphism identity(int n);
  static Morphism ev(int n);    // nested cap, 2n -> 0
  static Morphism coev(int n);  // nested cup, 0 -> 2n
  static Morphism single(const PlanarPairing& p, Rational coeff = Rational(1));

  int source() const { return source_; }
  int target() const { return target_; }
  const std::map<PlanarPairing, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PlanarPairing& p, const Rational& coeff);

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const Rational& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const Rational& c, Morphism f) { return f *= c; }

  bool operator==(const Morphism&) const = default;

 private:
  int source_ = 0;
  int target_ = 0;
  std::map<PlanarPairing, Rational> terms_;
};

// Vertical stacking g after f, each closed loop contributing a delta factor.
Morphism compose(const Rational& delta, const Morphism& g, const Morphism& f);

// Horizontal juxtaposition; sources and targets add.
Morphism tensor(const Morphism& f, const Morphism& g);

Morphism dagger(const Morphism& f);

enum class TraceSide { left, right };

// Closes all strands of an endomorphism to the chosen side with nested arcs.
Rational categorical_trace(const Rational& delta, const Morphism& f, TraceSide side);

// (ev ⊗ id) ∘ (id ⊗ f ⊗ id) ∘ (id ⊗ coev); an involution here since the
// canonical pivotal structure of the strand backend is the identity.
Morphism dual_morphism(const Rational& delta, const Morphism& f);

// Coefficient of the empty diagram; requires a scalar (0 -> 0) morphism.
Rational scalar_part(const Morphism& f);

}  // namespace tlgjs
