#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace carnot {

/// Error thrown on violated preconditions, dimension mismatches and bad input.
/// The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact rational scalar. Always in lowest terms with positive denominator.
/// All arithmetic is exact; there is no implicit conversion to floating point.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long long n);
  Rat(long long num, long long den);
  explicit Rat(mpq_class v);
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// Parses "p/q" or "p" with an optional leading minus. Rejects q = 0.
  static Rat parse(const std::string& s);

  /// Serializes as "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  double to_double() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat reciprocal() const;

  /// r^e for small non-negative integer exponents.
  Rat pow(unsigned e) const;

private:
  mpq_class v_;  // canonical at all times
};

/// Nearest rational to x with denominator at most max_den, via continued
/// fractions. Used to lift floating-point search candidates back into exact
/// arithmetic; the result is always re-verified exactly by callers.
Rat rationalize(double x, std::uint64_t max_den);

}  // namespace carnot
