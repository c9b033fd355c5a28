#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "dynn/braid.hpp"
#include "dynn/coords.hpp"
#include "dynn/errors.hpp"
#include "dynn/random.hpp"
#include "dynn/reduction.hpp"
#include "dynn/tracer.hpp"
#include "helpers.hpp"

using dynn::Complexity;
using dynn::ExtendedCoordinates;
using dynn::MoveKind;
using dynn::UntwistCase;

namespace {

const char* kGoldenTrace =
    "step_1: Extend  coords=extended 0,-1,-2,-2,1,0;-3,-1,2,-2,2,2  Y=0\n"
    "step_2: UntwistIb@2  coords=extended 0,-1,-2,-2,1,0;-3,0,1,-2,2,2  Y=0\n"
    "step_3: FillPuncture@1  coords=extended 0,-2,-2,1,0;-3,1,-2,2,2  Y=0\n"
    "step_4: UntwistIb@1  coords=extended 0,-1,-2,1,0;-1,-1,-2,2,2  Y=0\n"
    "step_5: UntwistIIb@3  coords=extended 0,-1,-1,0,0;-1,-1,1,-1,2  Y=0\n"
    "step_6: EraseElementary@2  coords=extended 0,-1,-1,0,0;-1,0,0,-1,2  Y=1\n"
    "step_7: FillPuncture@1  coords=extended 0,-1,0,0;-1,0,-1,2  Y=1\n"
    "step_8: FillPuncture@1  coords=extended 0,0,0;-1,-1,2  Y=1\n"
    "step_9: FinalFormula  count=3\n";

}  // namespace

TEST_CASE("twist site and complexity") {
  const auto e = dynn::extend(testutil::golden());
  CHECK(dynn::twist_index(e) == 2);
  const Complexity cx = dynn::complexity(e);
  CHECK(cx.pairs == 6);
  CHECK(cx.loop_total == 12);
  CHECK(cx.twist_index == 2);

  // A vanished b entry parks the twist site at zero: a fill is pending.
  CHECK(dynn::twist_index(testutil::ext({0, 0, 0, 0}, {-3, 0, 1, 2})) == 0);
  CHECK(dynn::twist_index(testutil::ext({0, 0, 0}, {-1, -1, 2})) == 2);

  CHECK(Complexity{5, 10, 1} < Complexity{6, 0, 0});
  CHECK(Complexity{6, 10, 3} < Complexity{6, 12, 1});
  CHECK(Complexity{6, 10, 1} < Complexity{6, 10, 3});
}

TEST_CASE("filling a merged puncture pair") {
  const auto e = testutil::ext({0, -2, -2, 1, 0}, {-3, 0, 1, -2, 4});
  const auto filled = dynn::fill_puncture(e, 1);
  CHECK(filled == testutil::ext({0, -2, 1, 0}, {-3, 1, -2, 4}));

  CHECK_THROWS_AS(dynn::fill_puncture(e, 2), dynn::PreconditionError);
  CHECK_THROWS_AS(dynn::fill_puncture(e, -1), dynn::PreconditionError);
  CHECK_THROWS_AS(dynn::fill_puncture(e, 5), dynn::PreconditionError);
  // Three pairs is the terminal size; no further fills.
  CHECK_THROWS_AS(
      dynn::fill_puncture(testutil::ext({0, 0, 0}, {0, -1, 1}), 0),
      dynn::PreconditionError);
}

TEST_CASE("erasing elementary ovals") {
  SUBCASE("at the twist site of a zero-free state") {
    const auto e = testutil::ext({0, -1, -1, 0, 0}, {-1, -1, 1, -1, 2});
    const auto r = dynn::erase_elementary(e);
    CHECK(r.index == 2);
    CHECK(r.erased == 1);
    CHECK(r.coords == testutil::ext({0, -1, -1, 0, 0}, {-1, 0, 0, -1, 2}));
  }

  SUBCASE("explicit site, other b entries may vanish") {
    const auto e = testutil::ext({0, 0, 0, 0, 0}, {-2, -3, 3, 0, 2});
    // The auto-sited form insists on a zero-free state.
    CHECK_THROWS_AS(dynn::erase_elementary(e), dynn::PreconditionError);

    const auto r = dynn::erase_elementary_at(e, 2);
    CHECK(r.erased == 3);
    CHECK(r.coords == testutil::ext({0, 0, 0, 0, 0}, {-2, 0, 0, 0, 2}));

    // The erased tally is exactly the drop in the component count.
    const std::int64_t before =
        dynn::oracle_count(dynn::whole_disk_coordinates(e));
    const std::int64_t after =
        dynn::oracle_count(dynn::whole_disk_coordinates(r.coords));
    CHECK(before == 5);
    CHECK(after == 2);
    CHECK(before - after == r.erased);
  }

  SUBCASE("guards") {
    // Unequal a entries at the site: an untwist applies instead.
    CHECK_THROWS_AS(
        dynn::erase_elementary_at(
            testutil::ext({0, 1, 0, 0}, {-1, -1, 1, 1}), 2),
        dynn::PreconditionError);
    // No loops to remove at the site.
    CHECK_THROWS_AS(
        dynn::erase_elementary_at(
            testutil::ext({0, 0, 1, 0}, {-1, 1, 1, -1}), 2),
        dynn::PreconditionError);
  }
}

TEST_CASE("untwist resolves into the four subcases") {
  SUBCASE("Ia swaps the b pair") {
    const auto e = testutil::ext({0, 5, 0, 0}, {-1, -1, 1, 1});
    const auto r = dynn::untwist(e);
    CHECK(r.kind == UntwistCase::Ia);
    CHECK(r.index == 2);
    CHECK(r.coords == testutil::ext({0, 1, 4, 0}, {-1, 1, -1, 1}));
    CHECK(dynn::untwist_move_kind(r.kind) == MoveKind::UntwistIa);
  }

  SUBCASE("Ib transfers loops across the site") {
    const auto e = testutil::ext({0, -1, -2, -2, 1, 0}, {-3, -1, 2, -2, 2, 2});
    const auto r = dynn::untwist(e);
    CHECK(r.kind == UntwistCase::Ib);
    CHECK(r.index == 2);
    CHECK(r.coords ==
          testutil::ext({0, -1, -2, -2, 1, 0}, {-3, 0, 1, -2, 2, 2}));
  }

  SUBCASE("IIa swaps the b pair") {
    const auto e = testutil::ext({0, 0, 5, 0}, {-1, -1, 1, 1});
    const auto r = dynn::untwist(e);
    CHECK(r.kind == UntwistCase::IIa);
    CHECK(r.index == 2);
    CHECK(r.coords == testutil::ext({0, 4, 1, 0}, {-1, 1, -1, 1}));
  }

  SUBCASE("IIb transfers loops across the site") {
    const auto e = testutil::ext({0, -1, -2, 1, 0}, {-1, -1, -2, 2, 2});
    const auto r = dynn::untwist(e);
    CHECK(r.kind == UntwistCase::IIb);
    CHECK(r.index == 3);
    CHECK(r.coords == testutil::ext({0, -1, -1, 0, 0}, {-1, -1, 1, -1, 2}));
  }

  SUBCASE("equal a entries belong to erase, not untwist") {
    CHECK_THROWS_AS(
        dynn::untwist(testutil::ext({0, 1, 1, 0}, {-1, -1, 1, 1})),
        dynn::PreconditionError);
  }

  SUBCASE("a pending fill blocks the untwist") {
    CHECK_THROWS_AS(
        dynn::untwist(testutil::ext({0, 1, 0, 0}, {-1, 0, 1, 1})),
        dynn::PreconditionError);
  }
}

TEST_CASE("the untwist agrees with the braid action it encodes") {
  // Case I is one application of the inverse generator at the site, case II
  // of the generator itself; the two implementations share no formulas.
  dynn::Sampler s(24680);
  int checked_moves = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(s.uniform(4, 8));
    auto state = dynn::extend(s.lamination(n, 12));
    for (int step = 0; step < 200; ++step) {
      const Complexity cx = dynn::complexity(state);
      if (cx.pairs == 3) break;
      if (cx.twist_index == 0) {
        int z = 0;
        while (state.b[static_cast<std::size_t>(z)] != 0) ++z;
        state = dynn::fill_puncture(state, z);
        continue;
      }
      const std::size_t i = static_cast<std::size_t>(cx.twist_index);
      if (state.a[i - 1] == state.a[i]) {
        state = dynn::erase_elementary(state).coords;
        continue;
      }
      const auto r = dynn::untwist(state);
      const int sign =
          (r.kind == UntwistCase::Ia || r.kind == UntwistCase::Ib) ? -1 : 1;
      const auto via_braid =
          dynn::apply_generator(state, dynn::BraidGenerator{r.index, sign});
      CHECK(r.coords == via_braid);
      ++checked_moves;
      state = r.coords;
    }
  }
  // Make sure the corpus actually exercised the comparison.
  CHECK(checked_moves > 1000);
}

TEST_CASE("closed form for the three-pair end state") {
  CHECK(dynn::final_count(testutil::ext({0, 0, 0}, {-1, -1, 2}), 1) == 3);
  CHECK(dynn::final_count(testutil::ext({0, 2, 0}, {-6, 4, 2}), 0) == 2);
  CHECK(dynn::final_count(testutil::ext({0, 0, 0}, {-2, 0, 2}), 0) == 2);
  CHECK_THROWS_AS(
      dynn::final_count(testutil::ext({0, 0, 0, 0}, {-1, 0, 0, 1}), 0),
      dynn::PreconditionError);

  // The closed form reads the same state the tracing oracle sees when the
  // dummy punctures are counted as ordinary ones.
  const auto end = testutil::ext({0, 0, 0}, {-1, -1, 2});
  CHECK(dynn::final_count(end, 0) ==
        dynn::oracle_count(dynn::whole_disk_coordinates(end)));
  const auto wide = testutil::ext({0, 2, 0}, {-6, 4, 2});
  CHECK(dynn::final_count(wide, 0) ==
        dynn::oracle_count(dynn::whole_disk_coordinates(wide)));
}

TEST_CASE("gcd count") {
  CHECK(dynn::gcd_count(4, 6) == 2);
  CHECK(dynn::gcd_count(0, 9) == 9);
  CHECK(dynn::gcd_count(-3, 0) == 3);
  CHECK(dynn::gcd_count(-4, -10) == 2);
  CHECK(dynn::gcd_count(0, 0) == 0);
}

TEST_CASE("the worked six-puncture example") {
  const auto res = dynn::count_components(testutil::golden(), true);
  CHECK(res.count == 3);
  CHECK(res.stats.moves == 7);
  CHECK(res.stats.max_entry == 3);
  REQUIRE(res.trace.has_value());
  CHECK(dynn::to_text(*res.trace) == kGoldenTrace);
}

TEST_CASE("three punctures short-circuit to the gcd") {
  const auto res = dynn::count_components(testutil::coords("4;6"), true);
  CHECK(res.count == 2);
  CHECK(res.stats.moves == 0);
  REQUIRE(res.trace.has_value());
  REQUIRE(res.trace->records.size() == 1);
  CHECK(res.trace->records[0].kind == MoveKind::FinalFormula);
  CHECK(dynn::to_text(*res.trace) == "step_1: FinalFormula  count=2\n");
}

TEST_CASE("no trace is recorded unless requested") {
  CHECK_FALSE(dynn::count_components(testutil::golden()).trace.has_value());
}

TEST_CASE("reduction count matches the oracle on random laminations") {
  dynn::Sampler s(13579);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = static_cast<int>(s.uniform(3, 8));
    const auto c = s.lamination(n, 20);
    const auto res = dynn::count_components(c);
    CHECK(res.count >= 1);
    CHECK(res.count == dynn::oracle_count(c));
  }
}

TEST_CASE("count is invariant under scaling up to multiplicity") {
  dynn::Sampler s(86420);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(s.uniform(3, 8));
    const auto c = s.lamination(n, 15);
    const std::int64_t base = dynn::count_components(c).count;
    std::vector<std::int64_t> ka = c.a_all();
    std::vector<std::int64_t> kb = c.b_all();
    for (auto& v : ka) v *= 3;
    for (auto& v : kb) v *= 3;
    const dynn::DynnikovCoordinates scaled(std::move(ka), std::move(kb));
    CHECK(dynn::count_components(scaled).count == 3 * base);
  }
}

namespace {

// Re-applies a recorded move through the public single-step operations and
// checks that it lands on the recorded state.
void replay_record(const ExtendedCoordinates& prev, const dynn::MoveRecord& r,
                   std::int64_t prev_erased) {
  switch (r.kind) {
    case MoveKind::FillPuncture: {
      REQUIRE(r.index >= 0);
      CHECK(prev.b[static_cast<std::size_t>(r.index)] == 0);
      CHECK(dynn::fill_puncture(prev, r.index) == r.after);
      CHECK(r.erased_total == prev_erased);
      break;
    }
    case MoveKind::EraseElementary: {
      const auto e = dynn::erase_elementary(prev);
      CHECK(e.index == r.index);
      CHECK(e.coords == r.after);
      CHECK(r.erased_total == prev_erased + e.erased);
      break;
    }
    case MoveKind::UntwistIa:
    case MoveKind::UntwistIb:
    case MoveKind::UntwistIIa:
    case MoveKind::UntwistIIb: {
      const auto u = dynn::untwist(prev);
      CHECK(dynn::untwist_move_kind(u.kind) == r.kind);
      CHECK(u.index == r.index);
      CHECK(u.coords == r.after);
      CHECK(r.erased_total == prev_erased);
      break;
    }
    default:
      FAIL("unexpected move kind in a replayed trace");
  }
}

}  // namespace

TEST_CASE("recorded traces replay step by step") {
  dynn::Sampler s(99887);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = static_cast<int>(s.uniform(4, 8));
    const auto c = s.lamination(n, 12);
    const auto res = dynn::count_components(c, true);
    REQUIRE(res.trace.has_value());
    const auto& records = res.trace->records;
    REQUIRE(records.size() >= 2);

    CHECK(records.front().kind == MoveKind::Extend);
    CHECK(records.front().after == dynn::extend(c));
    CHECK(records.back().kind == MoveKind::FinalFormula);
    CHECK(records.back().after == records[records.size() - 2].after);

    Complexity cx = dynn::complexity(records.front().after);
    for (std::size_t k = 1; k + 1 < records.size(); ++k) {
      replay_record(records[k - 1].after, records[k],
                    records[k - 1].erased_total);
      // Every move strictly shrinks the lexicographic measure.
      const Complexity next = dynn::complexity(records[k].after);
      CHECK(next < cx);
      cx = next;
      CHECK(records[k].after.central());
    }

    const auto& end = records[records.size() - 2];
    CHECK(end.after.pairs() == 3);
    CHECK(dynn::final_count(end.after, end.erased_total) == res.count);
  }
}

TEST_CASE("every step conserves the component count plus the erased tally") {
  dynn::Sampler s(55443);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(s.uniform(4, 7));
    const auto c = s.lamination(n, 10);
    const auto res = dynn::count_components(c, true);
    REQUIRE(res.trace.has_value());
    for (const auto& r : res.trace->records) {
      if (r.kind == MoveKind::FinalFormula) continue;
      const std::int64_t visible =
          dynn::oracle_count(dynn::whole_disk_coordinates(r.after));
      CHECK(visible + r.erased_total == res.count);
    }
  }
}

TEST_CASE("a closing example with interleaved signs") {
  const auto c = testutil::coords("-1,-2,-1,0;-1,2,1,-1");
  const auto res = dynn::count_components(c);
  CHECK(res.count == dynn::oracle_count(c));
}
