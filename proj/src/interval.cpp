#include "tranent/interval.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) {
    throw Error(ErrorCode::InvalidArgument, "interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
}

Interval hull(const Interval& a, const Interval& b) { return Interval(min(a.lo, b.lo), max(a.hi, b.hi)); }

Interval intersect(const Interval& a, const Interval& b) { return Interval(max(a.lo, b.lo), min(a.hi, b.hi)); }

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::ParseError, "window must be 'lo:hi', got '" + text + "'");
  }
  Rational lo = parse_rational(text.substr(0, colon));
  Rational hi = parse_rational(text.substr(colon + 1));
  if (hi < lo) throw Error(ErrorCode::ParseError, "window has lo > hi: '" + text + "'");
  return Interval(lo, hi);
}

std::string to_string(const Interval& i) { return "[" + to_string(i.lo) + ", " + to_string(i.hi) + "]"; }

IntervalUnion normalize(IntervalUnion parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalUnion out;
  for (auto& p : parts) {
    if (!out.empty() && p.lo <= out.back().hi) {
      out.back().hi = max(out.back().hi, p.hi);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

Rational measure(const IntervalUnion& u) {
  Rational total = 0;
  for (const auto& i : normalize(u)) total += i.length();
  return total;
}

bool covers(const IntervalUnion& outer, const Interval& inner) {
  for (const auto& o : normalize(outer)) {
    if (o.contains(inner)) return true;
  }
  return false;
}

bool covers(const IntervalUnion& outer, const IntervalUnion& inner) {
  const auto merged = normalize(outer);
  return std::all_of(inner.begin(), inner.end(), [&](const Interval& i) { return covers(merged, i); });
}

}  // namespace tranent
