#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynn/coords.hpp"

namespace dynn {

// Component-counting oracle that rebuilds the curve diagram from the
// intersection numbers and literally walks it. It is pseudo-polynomial
// (O(sum of beta) per call), slow but independent of the reduction: the two
// share no update formulas, so agreement is strong evidence of correctness.
//
// The vertical arcs beta_1 .. beta_{n-1} cut the disk into regions
// Delta_0 .. Delta_{n-1}; region Delta_i for 1 <= i <= n-2 contains puncture
// i+1. Inside that region the lamination consists of
//   - strands passing above the puncture,
//   - strands passing below the puncture, and
//   - |b_i| loops around the puncture, attached to the left bounding arc
//     when b_i > 0 (the left arc carries the extra crossings) and to the
//     right bounding arc when b_i < 0.

enum class LoopSide { None, Left, Right };

struct RegionProfile {
  std::int64_t above;
  std::int64_t below;
  std::int64_t loops;
  LoopSide side;
};

// Profile of each interior region Delta_1 .. Delta_{n-2}, derived from the
// crossing numbers: loops = |b_i|, above = alpha_{2i-1} - loops, below =
// alpha_{2i} - loops. Throws InconsistentDiagramError if any strand count
// would be negative.
std::vector<RegionProfile> region_profiles(const DynnikovCoordinates& c);

// The diagram: beta_i labeled points on arc i (1-based positions, ordered
// top to bottom), and for every point its partner through the region on each
// side. Points are stored flat; arc i occupies ids offset[i-1] ..
// offset[i-1] + beta[i-1] - 1.
struct CurveDiagram {
  std::vector<std::int64_t> beta;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> left_match;
  std::vector<std::size_t> right_match;

  int arcs() const { return static_cast<int>(beta.size()); }
  std::size_t total_points() const { return left_match.size(); }
  int arc_of(std::size_t id) const;

  // Number of closed curves: each point has degree two, so the diagram is a
  // disjoint union of cycles and a marked walk visits each exactly once.
  std::int64_t cycle_count() const;

  // Per-region matched pairs as text, for debugging.
  std::string dump() const;
};

// Assembles the matchings. Ordering inside region Delta_i along either
// bounding arc is: above strands, then the loop block (present only on the
// side the loops attach to), then below strands. Above and below strands
// connect position-to-position across the region; loops nest, pairing
// position j with position 2*loops+1-j of the loop block. The outermost
// regions Delta_0 and Delta_{n-1} turn strands around: position j pairs with
// beta+1-j on the same arc.
CurveDiagram build_matchings(const std::vector<RegionProfile>& profiles,
                             const std::vector<std::int64_t>& beta);

// Components of the lamination, by building and walking the diagram.
std::int64_t oracle_count(const DynnikovCoordinates& c);

}  // namespace dynn
