#include "dynn/braid.hpp"

#include <charconv>

#include "dynn/checked.hpp"

namespace dynn {

namespace {

using checked::add;
using checked::sub;

// Four entries touched by an interior twist: p = i-1, c = i.
struct EntryPair {
  std::int64_t ap, ac, bp, bc;
};

EntryPair twist_interior(const EntryPair& e, int sign) {
  const std::int64_t bp_pos = pos_part(e.bp);
  const std::int64_t bc_pos = pos_part(e.bc);
  EntryPair r;
  if (sign > 0) {
    // t realizes the larger of the two ways strands can route past the
    // swapped punctures; both b updates share it.
    const std::int64_t t =
        std::max(add(add(e.ap, bp_pos), bc_pos), add(e.ac, e.bp));
    r.ap = std::max(add(e.ap, bp_pos), add(e.ac, e.bp));
    r.ac = sub(e.bc, std::max(checked::neg(e.ap), sub(bc_pos, e.ac)));
    r.bp = sub(add(add(e.ac, e.bp), e.bc), t);
    r.bc = sub(t, e.ac);
  } else {
    const std::int64_t u =
        std::max(sub(add(bp_pos, bc_pos), e.ap), sub(e.bp, e.ac));
    r.ap = std::min(sub(e.ap, bp_pos), sub(e.ac, e.bp));
    r.ac = sub(std::max(e.ap, add(e.ac, bc_pos)), e.bc);
    r.bp = sub(sub(add(e.bp, e.bc), e.ac), u);
    r.bc = add(e.ac, u);
  }
  return r;
}

void check_sign(BraidGenerator g) {
  if (g.sign != 1 && g.sign != -1)
    throw PreconditionError("generator sign must be +1 or -1");
}

}  // namespace

BraidWord BraidWord::inverse() const {
  BraidWord w;
  w.gens.reserve(gens.size());
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    w.gens.push_back(it->inverse());
  return w;
}

std::string BraidWord::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(gens[i].sign * gens[i].index);
  }
  return out;
}

BraidWord parse_word(std::string_view text) {
  BraidWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t' || ch == ',') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != ',')
      ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("bad braid letter '" + std::string(tok) + "'");
    if (value == 0)
      throw ParseError("braid letter must be a nonzero generator index");
    w.gens.push_back({value < 0 ? -value : value, value < 0 ? -1 : 1});
    pos = end;
  }
  return w;
}

DynnikovCoordinates apply_generator(const DynnikovCoordinates& c,
                                    BraidGenerator g) {
  check_sign(g);
  const int n = c.punctures();
  if (g.index < 1 || g.index > n - 1)
    throw IndexOutOfRangeError("sigma_" + std::to_string(g.index) +
                               " does not act on " + std::to_string(n) +
                               " punctures");
  std::vector<std::int64_t> a = c.a_all();
  std::vector<std::int64_t> b = c.b_all();

  if (g.index == 1) {
    // Boundary twist on the left: only the first pair moves.
    const std::int64_t a1 = a[0], b1 = b[0];
    if (g.sign > 0) {
      a[0] = sub(b1, std::max<std::int64_t>(0, sub(pos_part(b1), a1)));
      b[0] = sub(pos_part(b1), a1);
    } else {
      a[0] = sub(std::max<std::int64_t>(0, add(a1, pos_part(b1))), b1);
      b[0] = add(a1, pos_part(b1));
    }
  } else if (g.index == n - 1) {
    // Boundary twist on the right: only the last pair moves.
    const std::size_t k = a.size() - 1;
    const std::int64_t ak = a[k], bk = b[k];
    if (g.sign > 0) {
      a[k] = std::max(add(ak, pos_part(bk)), bk);
      b[k] = sub(sub(bk, ak), pos_part(bk));
    } else {
      a[k] = std::min(sub(ak, pos_part(bk)), checked::neg(bk));
      b[k] = sub(add(ak, bk), pos_part(bk));
    }
  } else {
    const std::size_t p = static_cast<std::size_t>(g.index) - 2;
    const EntryPair r =
        twist_interior({a[p], a[p + 1], b[p], b[p + 1]}, g.sign);
    a[p] = r.ap;
    a[p + 1] = r.ac;
    b[p] = r.bp;
    b[p + 1] = r.bc;
  }
  return DynnikovCoordinates(std::move(a), std::move(b));
}

ExtendedCoordinates apply_generator(const ExtendedCoordinates& e,
                                    BraidGenerator g) {
  check_sign(g);
  if (!e.central())
    throw PreconditionError("extended action needs a central state");
  if (g.index < 1 || g.index >= e.pairs())
    throw IndexOutOfRangeError("sigma_" + std::to_string(g.index) +
                               " does not act on a state with " +
                               std::to_string(e.pairs()) + " pairs");
  ExtendedCoordinates out = e;
  const std::size_t p = static_cast<std::size_t>(g.index) - 1;
  const EntryPair r =
      twist_interior({out.a[p], out.a[p + 1], out.b[p], out.b[p + 1]}, g.sign);
  out.a[p] = r.ap;
  out.a[p + 1] = r.ac;
  out.b[p] = r.bp;
  out.b[p + 1] = r.bc;
  return out;
}

DynnikovCoordinates apply_word(const DynnikovCoordinates& c,
                               const BraidWord& w) {
  DynnikovCoordinates out = c;
  for (BraidGenerator g : w.gens) out = apply_generator(out, g);
  return out;
}

ExtendedCoordinates apply_word(const ExtendedCoordinates& e,
                               const BraidWord& w) {
  ExtendedCoordinates out = e;
  for (BraidGenerator g : w.gens) out = apply_generator(out, g);
  return out;
}

}  // namespace dynn
