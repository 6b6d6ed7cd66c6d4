#include "tlgjs/fock.hpp"

#include <stdexcept>
#include <string>

namespace tlgjs {

namespace {

void check_uniform_bottom(const GradedElement& x, int b, const char* what) {
  for (const auto& [k, f] : x.terms())
    if (k.b != b) throw std::invalid_argument(std::string(what) + ": term has bottom count " + std::to_string(k.b) +
                                              ", expected " + std::to_string(b));
}

}  // namespace

FockVector FockVector::vacuum(int depth) {
  FockVector v(depth);
  v.add_sector(0, GradedElement::unit());
  return v;
}

GradedElement FockVector::sector(int b) const {
  auto it = sectors_.find(b);
  return it == sectors_.end() ? GradedElement() : it->second;
}

void FockVector::add_sector(int b, const GradedElement& x) {
  if (b < 0) throw std::invalid_argument("negative sector degree");
  if (x.is_zero()) return;
  check_uniform_bottom(x, b, "fock sector");
  if (b >= depth_) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = sectors_.try_emplace(b, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) sectors_.erase(it);
  }
}

CreationSymbol::CreationSymbol(GradedElement value) : xi(std::move(value)) {
  check_uniform_bottom(xi, 1, "creation symbol");
  self_adjoint = (star(xi) == xi);
}

GradedElement identify_sectors(const Rational& delta, const GradedElement& xi, const GradedElement& eta) {
  return wedge(delta, xi, eta);
}

GradedElement module_inner(const Rational& delta, const GradedElement& xi, const GradedElement& eta) {
  return ground_expectation(walker(delta, star(xi), eta));
}

FockVector create(const Rational& delta, const CreationSymbol& xi, const FockVector& v) {
  FockVector out(v.depth());
  if (v.truncated()) out.mark_truncated();
  for (const auto& [b, x] : v.sectors()) out.add_sector(b + 1, wedge(delta, xi.xi, x));
  return out;
}

FockVector annihilate(const Rational& delta, const CreationSymbol& xi, const FockVector& v) {
  FockVector out(v.depth());
  if (v.truncated()) out.mark_truncated();
  const GradedElement conj_sym = star(xi.xi);
  for (const auto& [b, x] : v.sectors()) {
    if (b == 0) continue;
    out.add_sector(b - 1, walker_term(delta, conj_sym, x, 1));
  }
  return out;
}

Rational fock_inner(const Rational& delta, const FockVector& v, const FockVector& w) {
  Rational total(0);
  for (const auto& [b, x] : v.sectors()) total += voiculescu_trace(delta, module_inner(delta, x, w.sector(b)));
  return total;
}

}  // namespace tlgjs
