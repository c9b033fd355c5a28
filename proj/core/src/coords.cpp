#include "dynn/coords.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dynn/checked.hpp"

namespace dynn {

namespace {

bool all_zero(const std::vector<std::int64_t>& a,
              const std::vector<std::int64_t>& b) {
  auto is_zero = [](std::int64_t v) { return v == 0; };
  return std::all_of(a.begin(), a.end(), is_zero) &&
         std::all_of(b.begin(), b.end(), is_zero);
}

void append_joined(std::string& out, const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos));
    if (tok.empty())
      throw ParseError("empty entry in coordinate list");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("bad integer '" + std::string(tok) + "' in coordinate list");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Half of beta_1: the largest crossing offset realized by any coordinate
// pair, max over i of |a_i| + max(b_i, 0) + b_1 + ... + b_{i-1}.
std::int64_t max_offset(const DynnikovCoordinates& c) {
  std::int64_t best = 0;
  std::int64_t prefix = 0;
  for (int i = 1; i <= c.pairs(); ++i) {
    std::int64_t term =
        checked::add(checked::add(checked::abs(c.a(i)), pos_part(c.b(i))), prefix);
    if (i == 1 || term > best) best = term;
    prefix = checked::add(prefix, c.b(i));
  }
  return best;
}

}  // namespace

DynnikovCoordinates::DynnikovCoordinates(std::vector<std::int64_t> a,
                                         std::vector<std::int64_t> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size())
    throw BadShapeError("coordinate halves differ in length (" +
                        std::to_string(a_.size()) + " vs " +
                        std::to_string(b_.size()) + ")");
  if (a_.empty())
    throw BadShapeError("coordinate vector needs at least one pair (3 punctures)");
  if (all_zero(a_, b_))
    throw ZeroVectorError("all-zero vector does not describe a lamination");
}

std::string DynnikovCoordinates::to_text() const {
  std::string out;
  append_joined(out, a_);
  out += ';';
  append_joined(out, b_);
  return out;
}

DynnikovCoordinates DynnikovCoordinates::parse(std::string_view text) {
  std::size_t sep = text.find(';');
  if (sep == std::string_view::npos)
    throw ParseError("coordinate text needs one ';' between the halves");
  if (text.find(';', sep + 1) != std::string_view::npos)
    throw ParseError("coordinate text has more than one ';'");
  return DynnikovCoordinates(parse_int_list(text.substr(0, sep)),
                             parse_int_list(text.substr(sep + 1)));
}

DynnikovCoordinates validate(int punctures, std::vector<std::int64_t> a,
                             std::vector<std::int64_t> b) {
  if (punctures < 3)
    throw BadShapeError("disk needs at least 3 punctures, got " +
                        std::to_string(punctures));
  if (static_cast<std::size_t>(punctures - 2) != a.size() ||
      static_cast<std::size_t>(punctures - 2) != b.size())
    throw BadShapeError("expected " + std::to_string(punctures - 2) +
                        " coordinate pairs for " + std::to_string(punctures) +
                        " punctures, got " + std::to_string(a.size()) + ";" +
                        std::to_string(b.size()));
  return DynnikovCoordinates(std::move(a), std::move(b));
}

bool ExtendedCoordinates::central() const {
  if (a.size() != b.size() || a.size() < 3) return false;
  if (a.front() != 0 || a.back() != 0) return false;
  if (b.front() > 0 || b.back() < 0) return false;
  return true;
}

std::string ExtendedCoordinates::to_text() const {
  std::string out;
  append_joined(out, a);
  out += ';';
  append_joined(out, b);
  return out;
}

std::vector<std::int64_t> beta_numbers(const DynnikovCoordinates& c) {
  // beta_i = 2 * max_offset - 2 * (b_1 + ... + b_{i-1}); the offset term
  // dominates every prefix sum, so all entries come out nonnegative, and
  // consecutive entries differ by 2 b_i as required.
  const std::int64_t peak = max_offset(c);
  std::vector<std::int64_t> beta(static_cast<std::size_t>(c.punctures()) - 1);
  std::int64_t prefix = 0;
  for (int i = 1; i <= c.punctures() - 1; ++i) {
    beta[static_cast<std::size_t>(i) - 1] = checked::twice(checked::sub(peak, prefix));
    if (i <= c.pairs()) prefix = checked::add(prefix, c.b(i));
  }
  return beta;
}

std::vector<std::int64_t> alpha_numbers(const DynnikovCoordinates& c) {
  // alpha_{2i-1} and alpha_{2i} sit above and below puncture i+1; their
  // half-sum is beta_i/2 when b_i >= 0 (the loops hug the left arc) and
  // beta_{i+1}/2 otherwise, while their half-difference is a_i.
  const std::vector<std::int64_t> beta = beta_numbers(c);
  std::vector<std::int64_t> alpha(2 * static_cast<std::size_t>(c.pairs()));
  for (int idx = 1; idx <= 2 * c.pairs(); ++idx) {
    const int i = static_cast<int>(ceil_half(idx));
    const std::int64_t base =
        (c.b(i) >= 0 ? beta[static_cast<std::size_t>(i) - 1]
                     : beta[static_cast<std::size_t>(i)]) / 2;
    const std::int64_t signed_a = (idx % 2 == 0) ? c.a(i) : checked::neg(c.a(i));
    alpha[static_cast<std::size_t>(idx) - 1] = checked::add(signed_a, base);
  }
  return alpha;
}

IntersectionNumbers intersection_numbers(const DynnikovCoordinates& c) {
  return IntersectionNumbers{beta_numbers(c), alpha_numbers(c)};
}

ExtendedCoordinates extend(const DynnikovCoordinates& c) {
  const int n = c.pairs() + 2;
  ExtendedCoordinates e;
  e.a.reserve(static_cast<std::size_t>(n));
  e.b.reserve(static_cast<std::size_t>(n));
  e.a.push_back(0);
  e.a.insert(e.a.end(), c.a_all().begin(), c.a_all().end());
  e.a.push_back(0);
  const std::int64_t b0 = checked::neg(max_offset(c));
  e.b.push_back(b0);
  std::int64_t sum = 0;
  for (std::int64_t v : c.b_all()) sum = checked::add(sum, v);
  e.b.insert(e.b.end(), c.b_all().begin(), c.b_all().end());
  e.b.push_back(checked::sub(checked::neg(b0), sum));
  return e;
}

DynnikovCoordinates interior_coordinates(const ExtendedCoordinates& e) {
  if (!e.central())
    throw PreconditionError("interior_coordinates needs a central state");
  std::vector<std::int64_t> a(e.a.begin() + 1, e.a.end() - 1);
  std::vector<std::int64_t> b(e.b.begin() + 1, e.b.end() - 1);
  return DynnikovCoordinates(std::move(a), std::move(b));
}

DynnikovCoordinates whole_disk_coordinates(const ExtendedCoordinates& e) {
  if (!e.central())
    throw PreconditionError("whole_disk_coordinates needs a central state");
  return DynnikovCoordinates(e.a, e.b);
}

}  // namespace dynn
