#include "carnot/rat.hpp"

#include <cmath>
#include <cctype>
#include <limits>

namespace carnot {

namespace {

mpz_class mpz_from_ll(long long n) {
  // mpz_class has no long long constructor on LP64 this is exact anyway,
  // but go through a string to stay portable.
  if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max())
    return mpz_class(static_cast<long>(n));
  return mpz_class(std::to_string(n));
}

}  // namespace

Rat::Rat(long long n) : v_(mpz_from_ll(n)) {}

Rat::Rat(long long num, long long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(mpz_from_ll(num), mpz_from_ll(den));
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(const std::string& s) {
  // strict format: -?digits(/digits)?
  auto bad = [&]() -> Error { return Error("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = 0;
  if (s[0] == '-') i = 1;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
  if (digits == 0) throw bad();
  if (i < s.size()) {
    if (s[i] != '/') throw bad();
    ++i;
    std::size_t den_digits = 0;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den_digits; }
    if (den_digits == 0 || i != s.size()) throw bad();
    if (mpz_class(s.substr(den_start)) == 0) throw Error("rational with zero denominator: '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw bad();
  v.canonicalize();
  return Rat(std::move(v));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(unsigned e) const {
  Rat r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Rat rationalize(double x, std::uint64_t max_den) {
  if (!std::isfinite(x)) throw Error("cannot rationalize non-finite value");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction convergents p/q until the denominator cap
  std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    std::uint64_t a = static_cast<std::uint64_t>(fl);
    // next convergent
    if (q1 != 0 && a > (max_den - q0) / q1) break;  // would exceed cap
    std::uint64_t p2 = a * p1 + p0;
    std::uint64_t q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(static_cast<long long>(p1), static_cast<long long>(q1));
  return neg ? -r : r;
}

}  // namespace carnot
