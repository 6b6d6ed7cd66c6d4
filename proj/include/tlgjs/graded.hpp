#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tlgjs/morphism.hpp"

namespace tlgjs {

// Grading triple: b bottom strands, top strands split by the marked point
// into l on the left and r on the right.
struct GradedKey {
  int b = 0, l = 0, r = 0;
  auto operator<=>(const GradedKey&) const = default;
};

// A finitely supported family key -> morphism, the working representation of
// elements of the graded algebra, its corners and the module sectors. The
// morphism under key (b,l,r) has b bottom and l+r top points; keys with an
// odd total never occur (those hom spaces vanish) and zero morphisms are
// never stored.
class GradedElement {
 public:
  GradedElement() = default;

  static GradedElement unit();                        // the empty diagram
  static GradedElement p(int n);                      // nested n-cup with split (n, n)
  static GradedElement term(const GradedKey& key, const Morphism& f);

  const std::map<GradedKey, Morphism>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Morphism* find(const GradedKey& key) const;

  void add(const GradedKey& key, const Morphism& f);

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& c);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Rational& c, GradedElement x) { return x *= c; }

  bool operator==(const GradedElement&) const = default;

  bool in_corner(int l, int r) const;  // every key carries that (l, r)
  bool ground_only() const;            // every key has b = 0
  int max_bottom() const;

 private:
  std::map<GradedKey, Morphism> terms_;
};

// Graded product: contracts the right top strands of x against the left top
// strands of y with nested arcs, bottoms concatenated. Terms with
// r(x) != l(y) vanish.
GradedElement wedge(const Rational& delta, const GradedElement& x, const GradedElement& y);

// One partial-contraction summand of the Walker product: additionally joins
// the last k bottom strands of x to the first k of y with nested cups.
GradedElement walker_term(const Rational& delta, const GradedElement& x, const GradedElement& y, int k);

// Walker product, the operator composition picture: sum of walker_term over
// k = 0..min(b, b') in every term pair.
GradedElement walker(const Rational& delta, const GradedElement& x, const GradedElement& y);

// Involution: horizontal mirror of every diagram, (b,l,r) -> (b,r,l),
// coefficients conjugated.
GradedElement star(const GradedElement& x);

// Tracial weight: rainbow-closes the top of every l = r term and sums over
// all non-crossing pairings of the bottom strands; other terms contribute 0.
Rational voiculescu_trace(const Rational& delta, const GradedElement& x);

// tr_n = delta^{-n} Tr restricted to the (n, n) corner.
Rational normalized_trace(const Rational& delta, const GradedElement& x, int n);

// Rainbow closure of a ground (b = 0) element; throws on bottom strands.
Rational ground_weight(const Rational& delta, const GradedElement& x);

// Compression to the ground algebra: keeps the b = 0 terms.
GradedElement ground_expectation(const GradedElement& x);

// Trace-preserving expectation of the (n, n) corner onto the included copy of
// the ground corner: delta^{-n} times the top rainbow cap, re-tensored with a
// fresh nested n-cup.
GradedElement tower_expectation(const Rational& delta, const GradedElement& x, int n);

// Corner inclusion: a fresh nested n-cup over the top of a (0, 0)-corner
// element. A *-homomorphism for the graded product with tr_0 = tr_n ∘ iota.
GradedElement iota(const GradedElement& x, int n);

// Inverse of iota on its image; throws if the element is not of that form.
GradedElement iota_preimage(const GradedElement& x, int n);

// Level inclusion of the ground algebra: m nested arcs below and around,
// sending the key (0, l, r) to (0, l+m, r+m). Isometric *-homomorphism.
GradedElement level_embedding(const Rational& delta, const GradedElement& x, int m);

// p_n ∧ x ∧ p_m; keeps exactly the (n, m)-keyed part.
GradedElement project_corner(const Rational& delta, const GradedElement& x, int n, int m);

// Bending the source strands of f up to the left: an element with the single
// key (0, source, target). Anti-multiplicative: FR(f∘g) = FR(g) ∧ FR(f).
GradedElement frobenius(const Morphism& f);

// Recovers the morphism l -> r from a ground element concentrated in one
// corner key (0, l, r).
Morphism frobenius_preimage(const Rational& delta, const GradedElement& x, int l, int r);

struct BottomBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lower estimates tr_n((a* ∧ a)^p)^(1/2p) of the operator norm for
// p = 1, 2, 4, ..., p_max; nondecreasing in p. The element must lie in the
// (n, n) corner and p_max must be a power of two. Throws BottomBudgetError
// once intermediate powers would exceed `bottom_budget` bottom strands.
std::vector<double> moment_norm_estimates(const Rational& delta, const GradedElement& a, int n, int p_max,
                                          int bottom_budget = 24);

}  // namespace tlgjs
