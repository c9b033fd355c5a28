#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynn/coords.hpp"

namespace dynn {

// Action of the braid group B_n on coordinate vectors. The generator sigma_i
// swaps punctures i and i+1 by a counterclockwise half-twist; its effect on
// (a; b) is piecewise-linear in max-plus form. Generators near the boundary
// (i = 1 and i = n-1) have their own update rules on standard coordinates;
// on extended coordinates every generator acts by the interior rules on the
// entry pair (i-1, i).

struct BraidGenerator {
  int index;  // i of sigma_i, 1-based
  int sign;   // +1 for sigma_i, -1 for its inverse

  BraidGenerator inverse() const { return {index, -sign}; }

  friend bool operator==(const BraidGenerator&, const BraidGenerator&) = default;
};

struct BraidWord {
  std::vector<BraidGenerator> gens;

  std::size_t size() const { return gens.size(); }

  // Reversed order with every generator inverted.
  BraidWord inverse() const;

  std::string to_text() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Words are whitespace- or comma-separated signed integers, k for sigma_k
// and -k for its inverse; "1 -2 1" reads left to right. Zero or malformed
// tokens raise ParseError.
BraidWord parse_word(std::string_view text);

// Applies one generator; index must satisfy 1 <= index <= punctures-1.
DynnikovCoordinates apply_generator(const DynnikovCoordinates& c,
                                    BraidGenerator g);

// Extended action: index pairs (i-1, i) for 1 <= index <= pairs()-1, always
// by the interior rules. Preserves centrality.
ExtendedCoordinates apply_generator(const ExtendedCoordinates& e,
                                    BraidGenerator g);

// Left-to-right composition: the first letter of the word acts first.
DynnikovCoordinates apply_word(const DynnikovCoordinates& c, const BraidWord& w);
ExtendedCoordinates apply_word(const ExtendedCoordinates& e, const BraidWord& w);

}  // namespace dynn
