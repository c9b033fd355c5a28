#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynn/errors.hpp"

namespace dynn {

// Dynnikov coordinates for integral laminations of the n-punctured disk.
//
// Place the punctures 1..n on a horizontal line. The reference arcs are:
// for each interior puncture k (2 <= k <= n-1) an arc from the boundary
// above down to the puncture and an arc from the puncture down to the
// boundary below, and between consecutive punctures a vertical arc joining
// the two boundary sides. A lamination L meets the vertical arcs beta_1 ..
// beta_{n-1} and the puncture arcs alpha_1 .. alpha_{2n-4}; writing the same
// symbols for the minimal crossing numbers, its coordinate vector is
//
//   a_i = (alpha_{2i} - alpha_{2i-1}) / 2,
//   b_i = (beta_i - beta_{i+1}) / 2,        1 <= i <= n-2.
//
// The map L -> (a; b) is a bijection onto Z^{2n-4} minus the origin; the
// all-zero vector corresponds to the empty lamination and is excluded.

class DynnikovCoordinates {
 public:
  // Throws BadShapeError unless both vectors have equal size >= 1, and
  // ZeroVectorError when every entry is zero.
  DynnikovCoordinates(std::vector<std::int64_t> a, std::vector<std::int64_t> b);

  int punctures() const { return static_cast<int>(a_.size()) + 2; }
  int pairs() const { return static_cast<int>(a_.size()); }

  // Entries under the conventional 1-based labels, i in [1, pairs()].
  std::int64_t a(int i) const { return a_[static_cast<std::size_t>(i) - 1]; }
  std::int64_t b(int i) const { return b_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<std::int64_t>& a_all() const { return a_; }
  const std::vector<std::int64_t>& b_all() const { return b_; }

  // Text form "a_1,...,a_{n-2};b_1,...,b_{n-2}".
  std::string to_text() const;
  static DynnikovCoordinates parse(std::string_view text);

  friend bool operator==(const DynnikovCoordinates&,
                         const DynnikovCoordinates&) = default;

 private:
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
};

// Checks that (a; b) is a well-formed nonzero coordinate vector for a disk
// with the given number of punctures and returns it.
DynnikovCoordinates validate(int punctures, std::vector<std::int64_t> a,
                             std::vector<std::int64_t> b);

// Coordinates extended by one dummy puncture on each side of the disk. The
// entries are indexed 0..n-1 where n = pairs(); the underlying disk has n+2
// punctures. A lamination that stays clear of both dummy punctures' outermost
// vertical arcs is "central": a_0 = a_{n-1} = 0, b_0 <= 0, b_{n-1} >= 0.
struct ExtendedCoordinates {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  int pairs() const { return static_cast<int>(a.size()); }
  bool central() const;

  // Text form "a_0,...,a_{n-1};b_0,...,b_{n-1}".
  std::string to_text() const;

  friend bool operator==(const ExtendedCoordinates&,
                         const ExtendedCoordinates&) = default;
};

// Minimal crossing numbers of the lamination with the vertical arcs,
// beta_1 .. beta_{n-1} (returned 0-based: result[i-1] = beta_i). All entries
// are even and nonnegative.
std::vector<std::int64_t> beta_numbers(const DynnikovCoordinates& c);

// Minimal crossing numbers with the puncture arcs, alpha_1 .. alpha_{2n-4}
// (returned 0-based). All entries are nonnegative.
std::vector<std::int64_t> alpha_numbers(const DynnikovCoordinates& c);

struct IntersectionNumbers {
  std::vector<std::int64_t> beta;
  std::vector<std::int64_t> alpha;
};

IntersectionNumbers intersection_numbers(const DynnikovCoordinates& c);

// Embeds the lamination in the disk with one extra puncture on each side.
// The new outer entries are forced: a_0 = a_{n-1} = 0, b_0 = -beta_1/2 and
// b_{n-1} = -b_0 - sum(b); the interior entries are copied unchanged. The
// result is central and represents the same lamination.
ExtendedCoordinates extend(const DynnikovCoordinates& c);

// Inverse of extend for central states: drops the dummy entries, leaving the
// standard coordinates of the essential part on the n-puncture disk. Throws
// ZeroVectorError when nothing essential remains (every curve of the
// extended state encloses all the central punctures).
DynnikovCoordinates interior_coordinates(const ExtendedCoordinates& e);

// The same central state read as ordinary coordinates of the full disk with
// the two dummy punctures counted as punctures (n+2 in total). No entries
// change; only the labeling does. Unlike interior_coordinates this loses
// nothing, so component counts over the full disk agree exactly.
DynnikovCoordinates whole_disk_coordinates(const ExtendedCoordinates& e);

}  // namespace dynn
