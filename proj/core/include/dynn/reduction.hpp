#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynn/coords.hpp"

namespace dynn {

// Component counting by monotone reduction. After extending the input, the
// state is simplified by three kinds of moves until only three coordinate
// pairs remain, where a closed formula finishes:
//
//   - fill: a vanished b entry means no curve separates two neighbouring
//     punctures from the rest, so the pair of punctures merges and the
//     coordinate pair drops out;
//   - erase: at the twist site, equal neighbouring a entries mean the
//     innermost min(-b_{i-1}, b_i) curves are ovals around punctures i and
//     i+1; they are removed and tallied;
//   - untwist: otherwise a half-twist (one braid generator, chosen by sign)
//     strictly simplifies the state.
//
// Every move strictly decreases the complexity triple, so the loop
// terminates; the component count and the erased tally are conserved.

enum class MoveKind {
  Extend,
  FillPuncture,
  EraseElementary,
  UntwistIa,
  UntwistIb,
  UntwistIIa,
  UntwistIIb,
  FinalFormula,
};

const char* to_string(MoveKind kind);

// Lexicographic measure of remaining work. Compared member order matters:
// pairs, then total loops, then the twist site.
struct Complexity {
  int pairs;
  std::int64_t loop_total;  // sum of |b_i| over all entries
  int twist_index;

  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

// 0 when some b entry vanishes (a fill is pending); otherwise the smallest
// index i >= 1 with b_i > 0, which is where the next erase or untwist acts
// (b_{i-1} < 0 there, the dummy entry keeping b_0 <= 0).
int twist_index(const ExtendedCoordinates& e);

Complexity complexity(const ExtendedCoordinates& e);

// Removes coordinate pair `index` (0-based; b[index] must be 0 and more
// than three pairs must remain). The component count is unchanged.
ExtendedCoordinates fill_puncture(const ExtendedCoordinates& e, int index);

struct EraseResult {
  ExtendedCoordinates coords;
  std::int64_t erased;
  int index;
};

// Removes the elementary ovals at the twist site; requires every b entry
// nonzero and equal a entries flanking the site. The component count drops
// by exactly `erased`.
EraseResult erase_elementary(const ExtendedCoordinates& e);

// Same move with the site given explicitly; only the local guards are
// enforced (min(-b_{index-1}, b_index) > 0 and matching a entries), so it
// also applies to states that still have vanished b entries elsewhere.
EraseResult erase_elementary_at(const ExtendedCoordinates& e, int index);

enum class UntwistCase { Ia, Ib, IIa, IIb };

MoveKind untwist_move_kind(UntwistCase c);

struct UntwistResult {
  ExtendedCoordinates coords;
  UntwistCase kind;
  int index;
};

// Applies the simplifying half-twist at the twist site: case I (the inverse
// generator) when a_{i-1} > a_i, case II (the generator) when a_{i-1} < a_i.
// Subcase a swaps the b pair and moves the twist site one step left; subcase
// b strictly reduces the loop total.
UntwistResult untwist(const ExtendedCoordinates& e);

// Closed-form count for the three-pair end state (0, a_1, 0; b_0, b_1, b_2)
// plus the running erased tally:
//   gcd(a_1, b_1) + erased + min(-b_0, b_2, -|a_1| - b_0 - max(b_1, 0)).
// The last term counts the curves around all three remaining punctures.
std::int64_t final_count(const ExtendedCoordinates& e, std::int64_t erased);

// gcd(|a|, |b|): components of the three-puncture lamination (a; b); 0 only
// for the excluded zero vector.
std::int64_t gcd_count(std::int64_t a, std::int64_t b);

// One trace entry: the state right after the move. For FinalFormula the
// state is the unchanged end state and the trace's count field holds the
// result.
struct MoveRecord {
  MoveKind kind;
  int index;  // move site; -1 when not applicable
  ExtendedCoordinates after;
  std::int64_t erased_total;
};

struct ReductionTrace {
  std::vector<MoveRecord> records;
  std::int64_t count = 0;
};

// One line per record: "step_k: <MoveKind>@i  coords=extended <text>  Y=<y>"
// and a closing "step_k: FinalFormula  count=<count>".
std::string to_text(const ReductionTrace& trace);

// Running state while reducing; the component count of coords plus erased
// stays constant.
struct ReductionState {
  ExtendedCoordinates coords;
  std::int64_t erased = 0;
};

struct RunStats {
  std::uint64_t moves = 0;          // fills + erases + untwists
  std::int64_t max_entry = 0;       // largest |coordinate| seen in any state
};

struct CountResult {
  std::int64_t count;
  RunStats stats;
  std::optional<ReductionTrace> trace;
};

// Number of components of the lamination (a; b). Three-puncture inputs
// short-circuit to gcd_count; larger ones run the reduction. Pass
// record_trace to capture every intermediate state.
CountResult count_components(const DynnikovCoordinates& c,
                             bool record_trace = false);

}  // namespace dynn
