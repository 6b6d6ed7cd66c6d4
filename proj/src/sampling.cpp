#include "tlgjs/sampling.hpp"

namespace tlgjs {

Morphism DiagramSampler::morphism(int source, int target) {
  Morphism f(source, target);
  if ((source + target) % 2 != 0) return f;
  for (const auto& p : enumerate_nc_pairings(source, target)) f.add_term(p, Rational(coefficient()));
  return f;
}

GradedElement DiagramSampler::component(const GradedKey& key) {
  GradedElement x;
  x.add(key, morphism(key.b, key.l + key.r));
  return x;
}

GradedElement DiagramSampler::graded(int max_b, int max_lr, int terms) {
  GradedElement x;
  for (int t = 0; t < terms; ++t) {
    const int b = static_cast<int>(pick(max_b + 1));
    int l = static_cast<int>(pick(max_lr + 1));
    int r = static_cast<int>(pick(max_lr + 1));
    if ((b + l + r) % 2 != 0) {
      if (r > 0)
        --r;
      else if (l < max_lr)
        ++l;
      else
        ++r;
    }
    x += component(GradedKey{b, l, r});
  }
  return x;
}

GradedElement DiagramSampler::ground_level(int level, int terms) {
  GradedElement x;
  for (int t = 0; t < terms; ++t) {
    int l = static_cast<int>(pick(level + 1));
    int r = static_cast<int>(pick(level + 1));
    if ((l + r) % 2 != 0) r = (r > 0) ? r - 1 : r + 1;
    x += component(GradedKey{0, l, r});
  }
  return x;
}

CornerElement DiagramSampler::corner(CornerShape shape, int max_b, int terms) {
  GradedElement x;
  for (int t = 0; t < terms; ++t) {
    int b = static_cast<int>(pick(max_b + 1));
    if ((b + shape.l + shape.r) % 2 != 0) b = (b > 0) ? b - 1 : b + 1;
    x += component(GradedKey{b, shape.l, shape.r});
  }
  return CornerElement(shape, std::move(x));
}

GradedElement DiagramSampler::creation_symbol(int max_lr) {
  GradedElement x;
  for (int attempts = 0; attempts < 4 && x.is_zero(); ++attempts) {
    int l = static_cast<int>(pick(max_lr + 1));
    int r = static_cast<int>(pick(max_lr + 1));
    if ((1 + l + r) % 2 != 0) r = (r > 0) ? r - 1 : r + 1;
    x += component(GradedKey{1, l, r});
  }
  return x;
}

GradedElement DiagramSampler::self_adjoint_symbol(int max_lr) {
  const GradedElement x = creation_symbol(max_lr);
  return x + star(x);
}

}  // namespace tlgjs
