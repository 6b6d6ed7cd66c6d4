#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace tlgjs {

// A non-crossing perfect matching of the boundary points of a rectangle:
// `bottom` points on the lower edge and `top` points on the upper edge, both
// numbered left to right (0-based internally, 1-based in JSON).
//
// Planarity convention: walking the disk boundary one meets the bottom points
// left to right and then the top points right to left; a pairing is admitted
// iff no two chords interleave in that cyclic order.
class PlanarPairing {
 public:
  PlanarPairing() = default;  // the empty diagram

  // Validates involutivity, absence of fixed points and the non-crossing
  // condition; throws std::invalid_argument otherwise.
  PlanarPairing(int bottom, int top, std::vector<int> match);

  static PlanarPairing identity(int n);     // n through-strands
  static PlanarPairing rainbow_cap(int n);  // 2n bottom points, nested arcs
  static PlanarPairing rainbow_cup(int n);  // 2n top points, nested arcs

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int points() const { return bottom_ + top_; }
  int partner(int i) const { return match_[i]; }
  const std::vector<int>& match() const { return match_; }

  bool operator==(const PlanarPairing&) const = default;
  std::strong_ordering operator<=>(const PlanarPairing& o) const;

 private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> match_;
};

struct GluingResult {
  PlanarPairing pairing;
  int loops = 0;  // closed components removed by the gluing, each worth one delta factor
};

// Stacks `upper` on top of `lower`, joining lower's top edge to upper's
// bottom edge strand by strand. Requires upper.bottom() == lower.top().
GluingResult glue_vertical(const PlanarPairing& upper, const PlanarPairing& lower);

// Side-by-side placement; bottom and top counts add, right's indices shift.
PlanarPairing juxtapose(const PlanarPairing& left, const PlanarPairing& right);

// Horizontal reflection (left-right within each edge). An involution.
PlanarPairing mirror(const PlanarPairing& p);

// Vertical reflection (bottom and top edges exchanged). An involution.
PlanarPairing flip_vertical(const PlanarPairing& p);

// All non-crossing pairings of the given boundary, each exactly once, in
// lexicographic order of the match table. Throws on odd point count
// ("odd boundary").
std::vector<PlanarPairing> enumerate_nc_pairings(int bottom, int top);

// Convenience overload: all points on one edge (a circle cut open).
inline std::vector<PlanarPairing> enumerate_nc_pairings(int points) {
  return enumerate_nc_pairings(points, 0);
}

std::uint64_t catalan(int n);

}  // namespace tlgjs
