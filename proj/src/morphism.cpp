#include "tlgjs/morphism.hpp"

#include <stdexcept>
#include <string>

namespace tlgjs {

Morphism Morphism::identity(int n) { return single(PlanarPairing::identity(n)); }
Morphism Morphism::ev(int n) { return single(PlanarPairing::rainbow_cap(n)); }
Morphism Morphism::coev(int n) { return single(PlanarPairing::rainbow_cup(n)); }

Morphism Morphism::single(const PlanarPairing& p, Rational coeff) {
  Morphism f(p.bottom(), p.top());
  f.add_term(p, coeff);
  return f;
}

void Morphism::add_term(const PlanarPairing& p, const Rational& coeff) {
  if (p.bottom() != source_ || p.top() != target_)
    throw std::invalid_argument("pairing boundary does not match morphism type");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.source_ != source_ || o.target_ != target_) throw std::invalid_argument("morphism type mismatch in sum");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  if (o.source_ != source_ || o.target_ != target_) throw std::invalid_argument("morphism type mismatch in sum");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

Morphism& Morphism::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

Morphism compose(const Rational& delta, const Morphism& g, const Morphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("cannot compose: inner strand counts " + std::to_string(g.source()) + " vs " +
                                std::to_string(f.target()));
  Morphism out(f.source(), g.target());
  for (const auto& [pg, cg] : g.terms()) {
    for (const auto& [pf, cf] : f.terms()) {
      const GluingResult glued = glue_vertical(pg, pf);
      out.add_term(glued.pairing, cg * cf * pow(delta, glued.loops));
    }
  }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism out(f.source() + g.source(), f.target() + g.target());
  for (const auto& [pf, cf] : f.terms())
    for (const auto& [pg, cg] : g.terms()) out.add_term(juxtapose(pf, pg), cf * cg);
  return out;
}

Morphism dagger(const Morphism& f) {
  Morphism out(f.target(), f.source());
  for (const auto& [p, c] : f.terms()) out.add_term(flip_vertical(p), conj(c));
  return out;
}

Rational categorical_trace(const Rational& delta, const Morphism& f, TraceSide side) {
  const int n = f.source();
  if (f.target() != n) throw std::invalid_argument("categorical trace requires an endomorphism");
  const Morphism padded = side == TraceSide::left ? tensor(Morphism::identity(n), f) : tensor(f, Morphism::identity(n));
  return scalar_part(compose(delta, Morphism::ev(n), compose(delta, padded, Morphism::coev(n))));
}

Morphism dual_morphism(const Rational& delta, const Morphism& f) {
  const int a = f.source(), b = f.target();
  const Morphism lower = tensor(Morphism::identity(b), Morphism::coev(a));
  const Morphism middle = tensor(tensor(Morphism::identity(b), f), Morphism::identity(a));
  const Morphism upper = tensor(Morphism::ev(b), Morphism::identity(a));
  return compose(delta, upper, compose(delta, middle, lower));
}

Rational scalar_part(const Morphism& f) {
  if (f.source() != 0 || f.target() != 0) throw std::invalid_argument("scalar part of a non-scalar morphism");
  if (f.terms().empty()) return Rational(0);
  return f.terms().begin()->second;
}

}  // namespace tlgjs
