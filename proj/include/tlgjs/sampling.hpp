#pragma once

#include <cstdint>
#include <random>

#include "tlgjs/bimodule.hpp"
#include "tlgjs/graded.hpp"

namespace tlgjs {

// Seeded diagram sampler. Coefficients are drawn uniformly from the rationals
// {-2, ..., 2}; draws avoid std::uniform_int_distribution so that equal seeds
// give identical elements on every platform.
class DiagramSampler {
 public:
  explicit DiagramSampler(std::uint64_t seed) : rng_(seed) {}

  int coefficient() { return static_cast<int>(rng_() % 5) - 2; }
  std::uint64_t pick(std::uint64_t bound) { return rng_() % bound; }  // bound > 0

  Morphism morphism(int source, int target);
  Morphism endomorphism(int level) { return morphism(level, level); }

  // Dense element of one grading component.
  GradedElement component(const GradedKey& key);

  // Sparse combination over gradings with b <= max_b, l, r <= max_lr.
  GradedElement graded(int max_b, int max_lr, int terms);

  GradedElement ground_level(int level, int terms);  // b = 0, l, r <= level

  CornerElement corner(CornerShape shape, int max_b, int terms);

  GradedElement creation_symbol(int max_lr);               // bottom count 1
  GradedElement self_adjoint_symbol(int max_lr);           // bottom count 1, star-fixed

 private:
  std::mt19937_64 rng_;
};

}  // namespace tlgjs
