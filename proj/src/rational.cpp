#include "tranent/rational.hpp"

#include <cmath>
#include <limits>

#include "tranent/error.hpp"

namespace tranent {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

long floor_log2(const Rational& q) {
  if (q <= 0) throw Error(ErrorCode::InvalidArgument, "floor_log2 of non-positive value");
  // Initial guess from bit lengths, then correct by at most one step each way.
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  while (pow2(e) > q) --e;
  while (pow2(e + 1) <= q) ++e;
  return e;
}

Rational pow(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational from_double(double d) {
  Rational r(d);
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

double to_double_down(const Rational& q) {
  double d = q.get_d();  // truncates toward zero
  while (from_double(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

double to_double_up(const Rational& q) {
  double d = q.get_d();
  while (from_double(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace tranent
