#include "tlgjs/graded.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tlgjs {

namespace {

std::string key_str(const GradedKey& k) {
  return "(" + std::to_string(k.b) + "," + std::to_string(k.l) + "," + std::to_string(k.r) + ")";
}

}  // namespace

GradedElement GradedElement::unit() { return term(GradedKey{0, 0, 0}, Morphism::single(PlanarPairing())); }

GradedElement GradedElement::p(int n) { return term(GradedKey{0, n, n}, Morphism::coev(n)); }

GradedElement GradedElement::term(const GradedKey& key, const Morphism& f) {
  GradedElement x;
  x.add(key, f);
  return x;
}

const Morphism* GradedElement::find(const GradedKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? nullptr : &it->second;
}

void GradedElement::add(const GradedKey& key, const Morphism& f) {
  if (key.b < 0 || key.l < 0 || key.r < 0) throw std::invalid_argument("negative grading " + key_str(key));
  if ((key.b + key.l + key.r) % 2 != 0)
    throw std::invalid_argument("odd grading " + key_str(key) + " labels a vanishing hom space");
  if (f.source() != key.b || f.target() != key.l + key.r)
    throw std::invalid_argument("morphism type does not match grading " + key_str(key));
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  for (const auto& [k, f] : o.terms_) add(k, f);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  for (const auto& [k, f] : o.terms_) add(k, Rational(-1) * f);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, f] : terms_) f *= c;
  return *this;
}

bool GradedElement::in_corner(int l, int r) const {
  for (const auto& [k, f] : terms_)
    if (k.l != l || k.r != r) return false;
  return true;
}

bool GradedElement::ground_only() const {
  for (const auto& [k, f] : terms_)
    if (k.b != 0) return false;
  return true;
}

int GradedElement::max_bottom() const {
  int m = 0;
  for (const auto& [k, f] : terms_) m = std::max(m, k.b);
  return m;
}

namespace {

// Shared top contraction of the graded and Walker products:
// (id_l ⊗ cap_c ⊗ id_r') over xi ⊗ eta, where c strands are joined.
Morphism contract_tops(const Rational& delta, const Morphism& joined, int l, int c, int rp) {
  const Morphism cap = tensor(tensor(Morphism::identity(l), Morphism::ev(c)), Morphism::identity(rp));
  return compose(delta, cap, joined);
}

}  // namespace

GradedElement wedge(const Rational& delta, const GradedElement& x, const GradedElement& y) {
  GradedElement out;
  for (const auto& [kx, fx] : x.terms()) {
    for (const auto& [ky, fy] : y.terms()) {
      if (kx.r != ky.l) continue;
      const Morphism prod = contract_tops(delta, tensor(fx, fy), kx.l, kx.r, ky.r);
      out.add(GradedKey{kx.b + ky.b, kx.l, ky.r}, prod);
    }
  }
  return out;
}

GradedElement walker_term(const Rational& delta, const GradedElement& x, const GradedElement& y, int k) {
  GradedElement out;
  for (const auto& [kx, fx] : x.terms()) {
    for (const auto& [ky, fy] : y.terms()) {
      if (kx.r != ky.l || k > std::min(kx.b, ky.b)) continue;
      // Join the last k bottoms of x to the first k of y with nested cups.
      const Morphism cups =
          tensor(tensor(Morphism::identity(kx.b - k), Morphism::coev(k)), Morphism::identity(ky.b - k));
      const Morphism joined = compose(delta, tensor(fx, fy), cups);
      out.add(GradedKey{kx.b + ky.b - 2 * k, kx.l, ky.r}, contract_tops(delta, joined, kx.l, kx.r, ky.r));
    }
  }
  return out;
}

GradedElement walker(const Rational& delta, const GradedElement& x, const GradedElement& y) {
  GradedElement out;
  int kmax = 0;
  for (const auto& [kx, fx] : x.terms()) kmax = std::max(kmax, kx.b);
  for (int k = 0; k <= kmax; ++k) out += walker_term(delta, x, y, k);
  return out;
}

GradedElement star(const GradedElement& x) {
  GradedElement out;
  for (const auto& [k, f] : x.terms()) {
    Morphism mirrored(f.source(), f.target());
    for (const auto& [p, c] : f.terms()) mirrored.add_term(mirror(p), conj(c));
    out.add(GradedKey{k.b, k.r, k.l}, mirrored);
  }
  return out;
}

Rational voiculescu_trace(const Rational& delta, const GradedElement& x) {
  Rational total(0);
  for (const auto& [k, f] : x.terms()) {
    if (k.l != k.r) continue;
    const Morphism closed_top = compose(delta, Morphism::ev(k.l), f);  // source k.b -> 0
    for (const auto& cup : enumerate_nc_pairings(0, k.b)) {
      total += scalar_part(compose(delta, closed_top, Morphism::single(cup)));
    }
  }
  return total;
}

Rational normalized_trace(const Rational& delta, const GradedElement& x, int n) {
  if (!x.in_corner(n, n)) throw std::invalid_argument("normalized trace needs a (" + std::to_string(n) + "," +
                                                      std::to_string(n) + ") corner element");
  return voiculescu_trace(delta, x) * pow(delta, -n);
}

Rational ground_weight(const Rational& delta, const GradedElement& x) {
  for (const auto& [k, f] : x.terms())
    if (k.b != 0) throw std::invalid_argument("ground weight applied to a term with bottom strands");
  return voiculescu_trace(delta, x);
}

GradedElement ground_expectation(const GradedElement& x) {
  GradedElement out;
  for (const auto& [k, f] : x.terms())
    if (k.b == 0) out.add(k, f);
  return out;
}

GradedElement tower_expectation(const Rational& delta, const GradedElement& x, int n) {
  if (!x.in_corner(n, n))
    throw std::invalid_argument("tower expectation needs a (" + std::to_string(n) + "," + std::to_string(n) +
                                ") corner element");
  GradedElement out;
  const Rational scale = pow(delta, -n);
  for (const auto& [k, f] : x.terms()) {
    const Morphism capped = compose(delta, Morphism::ev(n), f);  // k.b -> 0
    out.add(GradedKey{k.b, n, n}, scale * tensor(capped, Morphism::coev(n)));
  }
  return out;
}

GradedElement iota(const GradedElement& x, int n) {
  if (!x.in_corner(0, 0)) throw std::invalid_argument("iota needs a (0,0) corner element");
  GradedElement out;
  for (const auto& [k, f] : x.terms()) out.add(GradedKey{k.b, n, n}, tensor(f, Morphism::coev(n)));
  return out;
}

GradedElement iota_preimage(const GradedElement& x, int n) {
  if (!x.in_corner(n, n)) throw std::invalid_argument("iota preimage needs a (n,n) corner element");
  const PlanarPairing cup = PlanarPairing::rainbow_cup(n);
  GradedElement out;
  for (const auto& [k, f] : x.terms()) {
    Morphism dropped(k.b, 0);
    for (const auto& [p, c] : f.terms()) {
      // Split off the trailing nested cup; every chord must stay on its side.
      std::vector<int> lower(k.b);
      for (int i = 0; i < k.b; ++i) {
        const int j = p.partner(i);
        if (j >= k.b) throw std::invalid_argument("element is not in the image of iota");
        lower[i] = j;
      }
      for (int i = 0; i < 2 * n; ++i) {
        if (p.partner(k.b + i) != k.b + (2 * n - 1 - i))
          throw std::invalid_argument("element is not in the image of iota");
      }
      dropped.add_term(PlanarPairing(k.b, 0, std::move(lower)), c);
    }
    out.add(GradedKey{k.b, 0, 0}, dropped);
  }
  return out;
}

GradedElement level_embedding(const Rational& delta, const GradedElement& x, int m) {
  if (!x.ground_only()) throw std::invalid_argument("level embedding needs a ground (b = 0) element");
  GradedElement out;
  for (const auto& [k, f] : x.terms()) {
    const Morphism wrapped = tensor(tensor(Morphism::identity(m), f), Morphism::identity(m));
    out.add(GradedKey{0, k.l + m, k.r + m}, compose(delta, wrapped, Morphism::coev(m)));
  }
  return out;
}

GradedElement project_corner(const Rational& delta, const GradedElement& x, int n, int m) {
  return wedge(delta, GradedElement::p(n), wedge(delta, x, GradedElement::p(m)));
}

GradedElement frobenius(const Morphism& f) {
  const int b = f.source(), n = f.target();
  const Rational one(1);  // bending creates no loops, any delta works
  const Morphism bent = compose(one, tensor(Morphism::identity(b), f), Morphism::coev(b));
  return GradedElement::term(GradedKey{0, b, n}, bent);
}

Morphism frobenius_preimage(const Rational& delta, const GradedElement& x, int l, int r) {
  Morphism out(l, r);
  for (const auto& [k, f] : x.terms()) {
    if (k.b != 0 || k.l != l || k.r != r)
      throw std::invalid_argument("frobenius preimage needs a ground element in corner (" + std::to_string(l) + "," +
                                  std::to_string(r) + ")");
    const Morphism unbent =
        compose(delta, tensor(Morphism::ev(l), Morphism::identity(r)), tensor(Morphism::identity(l), f));
    out += unbent;
  }
  return out;
}

std::vector<double> moment_norm_estimates(const Rational& delta, const GradedElement& a, int n, int p_max,
                                          int bottom_budget) {
  if (p_max < 1 || (p_max & (p_max - 1)) != 0) throw std::invalid_argument("p_max must be a power of two");
  if (!a.in_corner(n, n))
    throw std::invalid_argument("moment estimates need a (" + std::to_string(n) + "," + std::to_string(n) +
                                ") corner element");
  GradedElement s = wedge(delta, star(a), a);  // positive, same corner
  if (s.max_bottom() > bottom_budget)
    throw BottomBudgetError("moment computation exceeds bottom-string budget of " + std::to_string(bottom_budget));

  std::vector<double> estimates;
  int p = 1;
  for (;;) {
    const Rational t = normalized_trace(delta, s, n);
    estimates.push_back(std::pow(to_double(t), 1.0 / (2.0 * p)));
    if (p == p_max) break;
    if (2 * s.max_bottom() > bottom_budget)
      throw BottomBudgetError("moment computation exceeds bottom-string budget of " + std::to_string(bottom_budget));
    s = wedge(delta, s, s);
    p *= 2;
  }
  return estimates;
}

}  // namespace tlgjs
