#include "dynn/tracer.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

#include "dynn/checked.hpp"

namespace dynn {

namespace {

constexpr std::size_t kNoMatch = std::numeric_limits<std::size_t>::max();

// Upper bound on diagram size; the oracle is a test-scale instrument and
// refusing early beats thrashing on inputs meant for the reduction.
constexpr std::uint64_t kMaxPoints = 50'000'000;

}  // namespace

std::vector<RegionProfile> region_profiles(const DynnikovCoordinates& c) {
  const std::vector<std::int64_t> alpha = alpha_numbers(c);
  std::vector<RegionProfile> out;
  out.reserve(static_cast<std::size_t>(c.pairs()));
  for (int i = 1; i <= c.pairs(); ++i) {
    RegionProfile p;
    p.loops = checked::abs(c.b(i));
    p.side = c.b(i) > 0 ? LoopSide::Left
                        : (c.b(i) < 0 ? LoopSide::Right : LoopSide::None);
    p.above = checked::sub(alpha[static_cast<std::size_t>(2 * i) - 2], p.loops);
    p.below = checked::sub(alpha[static_cast<std::size_t>(2 * i) - 1], p.loops);
    if (p.above < 0 || p.below < 0)
      throw InconsistentDiagramError(
          "negative strand count in region " + std::to_string(i) +
          ": above=" + std::to_string(p.above) +
          " below=" + std::to_string(p.below));
    out.push_back(p);
  }
  return out;
}

int CurveDiagram::arc_of(std::size_t id) const {
  auto it = std::upper_bound(offset.begin(), offset.end(), id);
  return static_cast<int>(it - offset.begin());
}

CurveDiagram build_matchings(const std::vector<RegionProfile>& profiles,
                             const std::vector<std::int64_t>& beta) {
  if (beta.size() != profiles.size() + 1)
    throw InconsistentDiagramError("arc/region count mismatch");

  CurveDiagram d;
  d.beta = beta;
  d.offset.resize(beta.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] < 0 || beta[i] % 2 != 0)
      throw InconsistentDiagramError("arc " + std::to_string(i + 1) +
                                     " has invalid crossing count " +
                                     std::to_string(beta[i]));
    d.offset[i] = static_cast<std::size_t>(total);
    total += static_cast<std::uint64_t>(beta[i]);
    if (total > kMaxPoints)
      throw InternalError("curve diagram too large for the tracing oracle");
  }
  if (total == 0)
    throw InconsistentDiagramError("empty diagram for a nonzero vector");

  d.left_match.assign(static_cast<std::size_t>(total), kNoMatch);
  d.right_match.assign(static_cast<std::size_t>(total), kNoMatch);

  // id of position pos (1-based, top to bottom) on 1-based arc.
  auto id = [&d](int arc, std::int64_t pos) {
    return d.offset[static_cast<std::size_t>(arc) - 1] +
           static_cast<std::size_t>(pos) - 1;
  };

  const int arcs = d.arcs();

  // Outermost regions: nested chords turning every strand around.
  for (std::int64_t j = 1; j <= beta.front(); ++j)
    d.left_match[id(1, j)] = id(1, beta.front() + 1 - j);
  for (std::int64_t j = 1; j <= beta.back(); ++j)
    d.right_match[id(arcs, j)] = id(arcs, beta.back() + 1 - j);

  // Interior region r lies between arc r (left) and arc r+1 (right); it is
  // the right region of arc r and the left region of arc r+1.
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const int r = static_cast<int>(k) + 1;
    const RegionProfile& p = profiles[k];
    const std::int64_t left_loop = p.side == LoopSide::Left ? p.loops : 0;
    const std::int64_t right_loop = p.side == LoopSide::Right ? p.loops : 0;

    if (p.above + p.below + 2 * left_loop != beta[static_cast<std::size_t>(r) - 1] ||
        p.above + p.below + 2 * right_loop != beta[static_cast<std::size_t>(r)])
      throw InconsistentDiagramError("strand blocks do not fill arc " +
                                     std::to_string(r) + "/" +
                                     std::to_string(r + 1));

    for (std::int64_t s = 1; s <= p.above; ++s) {
      d.right_match[id(r, s)] = id(r + 1, s);
      d.left_match[id(r + 1, s)] = id(r, s);
    }
    for (std::int64_t s = 1; s <= p.below; ++s) {
      d.right_match[id(r, p.above + 2 * left_loop + s)] =
          id(r + 1, p.above + 2 * right_loop + s);
      d.left_match[id(r + 1, p.above + 2 * right_loop + s)] =
          id(r, p.above + 2 * left_loop + s);
    }
    for (std::int64_t j = 1; j <= 2 * left_loop; ++j)
      d.right_match[id(r, p.above + j)] = id(r, p.above + 2 * left_loop + 1 - j);
    for (std::int64_t j = 1; j <= 2 * right_loop; ++j)
      d.left_match[id(r + 1, p.above + j)] =
          id(r + 1, p.above + 2 * right_loop + 1 - j);
  }

  // Every edge must be fixed-point free and symmetric through its region:
  // the partner lies on one of the region's two arcs and records the same
  // edge on the matching side facing that region.
  auto edge_ok = [&d](std::size_t q, bool via_left) {
    const std::size_t p = via_left ? d.left_match[q] : d.right_match[q];
    if (p == kNoMatch || p == q) return false;
    const int region = via_left ? d.arc_of(q) - 1 : d.arc_of(q);
    if (d.arc_of(p) == region) return d.right_match[p] == q;
    if (d.arc_of(p) == region + 1) return d.left_match[p] == q;
    return false;
  };
  for (std::size_t q = 0; q < d.total_points(); ++q) {
    if (!edge_ok(q, true) || !edge_ok(q, false))
      throw InconsistentDiagramError(
          "matching is not a fixed-point-free region involution at point " +
          std::to_string(q));
  }
  return d;
}

std::int64_t CurveDiagram::cycle_count() const {
  std::vector<bool> visited(total_points(), false);
  std::int64_t cycles = 0;
  for (std::size_t start = 0; start < total_points(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    std::size_t cur = start;
    bool via_left = true;
    do {
      visited[cur] = true;
      const int region = via_left ? arc_of(cur) - 1 : arc_of(cur);
      const std::size_t nxt = via_left ? left_match[cur] : right_match[cur];
      // Arrived through nxt's right region exactly when region == arc(nxt);
      // always leave through the other side.
      via_left = (region == arc_of(nxt));
      cur = nxt;
    } while (cur != start);
  }
  return cycles;
}

std::string CurveDiagram::dump() const {
  const int regions = arcs() + 1;
  std::string out;
  auto pos_of = [this](std::size_t q) {
    return q - offset[static_cast<std::size_t>(arc_of(q)) - 1] + 1;
  };
  for (int r = 0; r < regions; ++r) {
    out += "region " + std::to_string(r) + ":";
    for (std::size_t q = 0; q < total_points(); ++q) {
      const int arc = arc_of(q);
      // The pair through q's left region belongs to region arc-1, through
      // its right region to region arc.
      std::size_t partner = kNoMatch;
      if (arc - 1 == r) partner = left_match[q];
      if (arc == r) partner = right_match[q];
      if (partner == kNoMatch || partner < q) continue;
      out += " (" + std::to_string(arc) + ":" + std::to_string(pos_of(q)) +
             ")-(" + std::to_string(arc_of(partner)) + ":" +
             std::to_string(pos_of(partner)) + ")";
    }
    out += '\n';
  }
  return out;
}

std::int64_t oracle_count(const DynnikovCoordinates& c) {
  return build_matchings(region_profiles(c), beta_numbers(c)).cycle_count();
}

}  // namespace dynn
