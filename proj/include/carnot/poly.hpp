#pragma once

#include <vector>

#include "carnot/rat.hpp"

namespace carnot {

/// Univariate polynomial with exact rational coefficients, c[i] on x^i.
/// Used by the inaccessibility checker to analyze Pfaffian pencils exactly.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& c) { return Poly({c}); }
  /// x - root
  static Poly linear_root(const Rat& root) { return Poly({-root, Rat(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  /// Leading coefficient scaled to 1.
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Exact euclidean division; quotient and remainder with deg r < deg d.
  struct DivMod { Poly quot, rem; };
  DivMod divmod(const Poly& d) const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// p / gcd(p, p'), i.e. the polynomial with the same roots, all simple.
Poly squarefree_part(const Poly& p);

/// Number of distinct real roots, by Sturm's theorem.
int count_real_roots(const Poly& p);

}  // namespace carnot
