#include "dynn/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "dynn/checked.hpp"

namespace dynn {

namespace {

using checked::add;
using checked::sub;

void require_central(const ExtendedCoordinates& e, const char* op) {
  if (!e.central())
    throw PreconditionError(std::string(op) + " needs a central state");
}

int raw_twist_index(const std::vector<std::int64_t>& b) {
  for (std::int64_t v : b)
    if (v == 0) return 0;
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] > 0) return static_cast<int>(i);
  throw PreconditionError("no positive b entry in a zero-free state");
}

std::int64_t abs_sum(const std::vector<std::int64_t>& v) {
  std::int64_t total = 0;
  for (std::int64_t x : v) total = add(total, checked::abs(x));
  return total;
}

struct TwistOutcome {
  UntwistCase kind;
  std::int64_t ap, ac, bp, bc;
};

// The resolved forms of the simplifying half-twist at a site with
// b_{i-1} < 0 < b_i and distinct neighbouring a entries. With
// d = |a_{i-1} - a_i|: when the b gap b_i - b_{i-1} is at most d the twist
// swaps the b pair (subcase a); otherwise it transfers d loops across the
// site (subcase b). Case I is the inverse generator, case II the generator.
TwistOutcome resolve_untwist(std::int64_t ap, std::int64_t ac, std::int64_t bp,
                             std::int64_t bc) {
  const std::int64_t diff = sub(ap, ac);
  const std::int64_t gap = sub(bc, bp);
  TwistOutcome r;
  if (diff > 0) {
    if (gap <= diff) {
      r.kind = UntwistCase::Ia;
      r.ap = sub(ac, bp);
      r.ac = sub(ap, bc);
      r.bp = bc;
      r.bc = bp;
    } else {
      r.kind = UntwistCase::Ib;
      r.ap = std::min(sub(ac, bp), ap);
      r.ac = std::max(sub(ap, bc), ac);
      r.bp = add(bp, diff);
      r.bc = sub(bc, diff);
    }
  } else {
    const std::int64_t rise = checked::neg(diff);
    if (gap <= rise) {
      r.kind = UntwistCase::IIa;
      r.ap = add(ac, bp);
      r.ac = add(ap, bc);
      r.bp = bc;
      r.bc = bp;
    } else {
      r.kind = UntwistCase::IIb;
      r.ap = std::max(ap, add(ac, bp));
      r.ac = std::min(ac, add(ap, bc));
      r.bp = add(bp, rise);
      r.bc = sub(bc, rise);
    }
  }
  return r;
}

void require_no_zero(const ExtendedCoordinates& e, const char* op) {
  for (std::int64_t v : e.b)
    if (v == 0)
      throw PreconditionError(std::string(op) +
                              " needs every b entry nonzero (fill first)");
}

}  // namespace

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Extend: return "Extend";
    case MoveKind::FillPuncture: return "FillPuncture";
    case MoveKind::EraseElementary: return "EraseElementary";
    case MoveKind::UntwistIa: return "UntwistIa";
    case MoveKind::UntwistIb: return "UntwistIb";
    case MoveKind::UntwistIIa: return "UntwistIIa";
    case MoveKind::UntwistIIb: return "UntwistIIb";
    case MoveKind::FinalFormula: return "FinalFormula";
  }
  throw PreconditionError("unknown move kind");
}

MoveKind untwist_move_kind(UntwistCase c) {
  switch (c) {
    case UntwistCase::Ia: return MoveKind::UntwistIa;
    case UntwistCase::Ib: return MoveKind::UntwistIb;
    case UntwistCase::IIa: return MoveKind::UntwistIIa;
    case UntwistCase::IIb: return MoveKind::UntwistIIb;
  }
  throw PreconditionError("unknown untwist case");
}

int twist_index(const ExtendedCoordinates& e) {
  require_central(e, "twist_index");
  return raw_twist_index(e.b);
}

Complexity complexity(const ExtendedCoordinates& e) {
  require_central(e, "complexity");
  return Complexity{e.pairs(), abs_sum(e.b), raw_twist_index(e.b)};
}

ExtendedCoordinates fill_puncture(const ExtendedCoordinates& e, int index) {
  require_central(e, "fill_puncture");
  if (e.pairs() <= 3)
    throw PreconditionError("fill_puncture needs more than three pairs");
  if (index < 0 || index >= e.pairs())
    throw PreconditionError("fill_puncture index " + std::to_string(index) +
                            " out of range");
  if (e.b[static_cast<std::size_t>(index)] != 0)
    throw PreconditionError("fill_puncture needs b = 0 at the index");
  ExtendedCoordinates out = e;
  out.a.erase(out.a.begin() + index);
  out.b.erase(out.b.begin() + index);
  return out;
}

EraseResult erase_elementary_at(const ExtendedCoordinates& e, int index) {
  require_central(e, "erase_elementary");
  if (e.pairs() <= 3)
    throw PreconditionError("erase_elementary needs more than three pairs");
  if (index < 1 || index >= e.pairs())
    throw PreconditionError("erase site " + std::to_string(index) +
                            " out of range");
  const std::size_t i = static_cast<std::size_t>(index);
  if (e.a[i - 1] != e.a[i])
    throw PreconditionError("erase needs equal a entries at the site");
  const std::int64_t m = std::min(checked::neg(e.b[i - 1]), e.b[i]);
  if (m < 1)
    throw PreconditionError("erase needs b_{i-1} < 0 < b_i at the site");
  EraseResult out{e, m, index};
  out.coords.b[i - 1] = add(out.coords.b[i - 1], m);
  out.coords.b[i] = sub(out.coords.b[i], m);
  return out;
}

EraseResult erase_elementary(const ExtendedCoordinates& e) {
  require_central(e, "erase_elementary");
  require_no_zero(e, "erase_elementary");
  return erase_elementary_at(e, raw_twist_index(e.b));
}

UntwistResult untwist(const ExtendedCoordinates& e) {
  require_central(e, "untwist");
  if (e.pairs() <= 3)
    throw PreconditionError("untwist needs more than three pairs");
  require_no_zero(e, "untwist");
  const int index = raw_twist_index(e.b);
  const std::size_t i = static_cast<std::size_t>(index);
  if (e.a[i - 1] == e.a[i])
    throw PreconditionError("untwist needs distinct a entries (erase applies)");
  const TwistOutcome t =
      resolve_untwist(e.a[i - 1], e.a[i], e.b[i - 1], e.b[i]);
  UntwistResult out{e, t.kind, index};
  out.coords.a[i - 1] = t.ap;
  out.coords.a[i] = t.ac;
  out.coords.b[i - 1] = t.bp;
  out.coords.b[i] = t.bc;
  return out;
}

std::int64_t gcd_count(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(
      std::gcd(static_cast<std::uint64_t>(checked::abs(a)),
               static_cast<std::uint64_t>(checked::abs(b))));
}

std::int64_t final_count(const ExtendedCoordinates& e, std::int64_t erased) {
  require_central(e, "final_count");
  if (e.pairs() != 3)
    throw PreconditionError("final_count needs exactly three pairs");
  const std::int64_t middle = gcd_count(e.a[1], e.b[1]);
  // Curves around all three punctures: limited by the outer loop counts and
  // by the strands the middle part already pins against the arcs.
  const std::int64_t around =
      std::min({checked::neg(e.b[0]), e.b[2],
                sub(sub(checked::neg(checked::abs(e.a[1])), e.b[0]),
                    pos_part(e.b[1]))});
  return add(add(middle, erased), around);
}

namespace {

class Engine {
 public:
  Engine(ExtendedCoordinates start, bool record_trace)
      : a_(std::move(start.a)), b_(std::move(start.b)) {
    if (record_trace) trace_.emplace();
    loop_total_ = abs_sum(b_);
    const std::int64_t a_total = abs_sum(a_);
    budget_ = 64 * static_cast<unsigned __int128>(a_.size()) *
                  (static_cast<unsigned __int128>(loop_total_) +
                   static_cast<unsigned __int128>(a_total) + 1) +
              1024;
    for (std::int64_t v : a_) note_entry(v);
    for (std::int64_t v : b_) note_entry(v);
    record(MoveKind::Extend, -1);
  }

  CountResult run() {
    while (true) {
      int z = first_zero();
      while (z >= 0) {
        fill(z);
        if (pairs() == 3) return finish();
        z = first_zero();
      }
      int i = raw_twist_index(b_);
      while (true) {
        if (a_[static_cast<std::size_t>(i) - 1] ==
            a_[static_cast<std::size_t>(i)]) {
          erase(i);
          break;
        }
        const UntwistCase kind = untwist_at(i);
        if (kind == UntwistCase::Ia || kind == UntwistCase::IIa) {
          // The twist site moved one step left; no rescan is needed.
          --i;
          if (i < 1) throw DivergedError("twist site left the valid range");
          continue;
        }
        break;
      }
    }
  }

 private:
  int pairs() const { return static_cast<int>(a_.size()); }

  void note_entry(std::int64_t v) {
    stats_.max_entry = std::max(stats_.max_entry, checked::abs(v));
  }

  void bump_moves() {
    ++stats_.moves;
    if (static_cast<unsigned __int128>(stats_.moves) > budget_)
      throw DivergedError("move budget exhausted; complexity is not falling");
  }

  void record(MoveKind kind, int index) {
    if (!trace_) return;
    trace_->records.push_back(
        MoveRecord{kind, index, ExtendedCoordinates{a_, b_}, erased_});
  }

  int first_zero() const {
    for (std::size_t i = 0; i < b_.size(); ++i)
      if (b_[i] == 0) return static_cast<int>(i);
    return -1;
  }

  void fill(int z) {
    a_.erase(a_.begin() + z);
    b_.erase(b_.begin() + z);
    bump_moves();
    record(MoveKind::FillPuncture, z);
  }

  void erase(int i) {
    std::int64_t& bp = b_[static_cast<std::size_t>(i) - 1];
    std::int64_t& bc = b_[static_cast<std::size_t>(i)];
    const std::int64_t m = std::min(checked::neg(bp), bc);
    if (m < 1) throw DivergedError("erase site lost its loops");
    bp = add(bp, m);
    bc = sub(bc, m);
    erased_ = add(erased_, m);
    loop_total_ = sub(loop_total_, checked::twice(m));
    bump_moves();
    record(MoveKind::EraseElementary, i);
  }

  UntwistCase untwist_at(int i) {
    std::int64_t& ap = a_[static_cast<std::size_t>(i) - 1];
    std::int64_t& ac = a_[static_cast<std::size_t>(i)];
    std::int64_t& bp = b_[static_cast<std::size_t>(i) - 1];
    std::int64_t& bc = b_[static_cast<std::size_t>(i)];
    const std::int64_t old_abs = add(checked::abs(bp), checked::abs(bc));
    const TwistOutcome t = resolve_untwist(ap, ac, bp, bc);
    const std::int64_t new_abs = add(checked::abs(t.bp), checked::abs(t.bc));
    if (t.kind == UntwistCase::Ia || t.kind == UntwistCase::IIa) {
      if (new_abs != old_abs)
        throw DivergedError("swap subcase changed the loop total");
    } else if (new_abs >= old_abs) {
      throw DivergedError("transfer subcase failed to reduce the loop total");
    }
    loop_total_ = add(loop_total_, sub(new_abs, old_abs));
    ap = t.ap;
    ac = t.ac;
    bp = t.bp;
    bc = t.bc;
    note_entry(ap);
    note_entry(ac);
    note_entry(bp);
    note_entry(bc);
    bump_moves();
    record(untwist_move_kind(t.kind), i);
    return t.kind;
  }

  CountResult finish() {
    const std::int64_t count =
        final_count(ExtendedCoordinates{a_, b_}, erased_);
    if (count < 1)
      throw DivergedError("component count came out nonpositive");
    record(MoveKind::FinalFormula, -1);
    CountResult res;
    res.count = count;
    res.stats = stats_;
    if (trace_) {
      trace_->count = count;
      res.trace = std::move(trace_);
    }
    return res;
  }

  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  std::int64_t erased_ = 0;
  std::int64_t loop_total_ = 0;
  unsigned __int128 budget_ = 0;
  RunStats stats_;
  std::optional<ReductionTrace> trace_;
};

}  // namespace

std::string to_text(const ReductionTrace& trace) {
  std::string out;
  int step = 1;
  for (const MoveRecord& r : trace.records) {
    out += "step_" + std::to_string(step++) + ": " + to_string(r.kind);
    if (r.kind == MoveKind::FinalFormula) {
      out += "  count=" + std::to_string(trace.count) + "\n";
      continue;
    }
    if (r.index >= 0) out += "@" + std::to_string(r.index);
    out += "  coords=extended " + r.after.to_text() +
           "  Y=" + std::to_string(r.erased_total) + "\n";
  }
  if (trace.records.empty())
    out += "step_1: FinalFormula  count=" + std::to_string(trace.count) + "\n";
  return out;
}

CountResult count_components(const DynnikovCoordinates& c, bool record_trace) {
  if (c.punctures() == 3) {
    // One pair: the lamination is gcd(|a|, |b|) parallel copies of one curve.
    CountResult res;
    res.count = gcd_count(c.a(1), c.b(1));
    res.stats.max_entry = std::max(checked::abs(c.a(1)), checked::abs(c.b(1)));
    if (record_trace) {
      ReductionTrace t;
      t.records.push_back(
          MoveRecord{MoveKind::FinalFormula, -1, ExtendedCoordinates{}, 0});
      t.count = res.count;
      res.trace = std::move(t);
    }
    return res;
  }
  Engine engine(extend(c), record_trace);
  return engine.run();
}

}  // namespace dynn
