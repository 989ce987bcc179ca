#include "carnot/poly.hpp"

namespace carnot {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  Rat inv = leading().reciprocal();
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= inv;
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly::DivMod Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  Poly r = *this;
  std::vector<Rat> q;
  int dd = d.degree();
  if (r.degree() >= dd) q.assign(r.degree() - dd + 1, Rat(0));
  Rat lead_inv = d.leading().reciprocal();
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    Rat f = r.leading() * lead_inv;
    q[static_cast<std::size_t>(k)] = f;
    std::vector<Rat> nc(r.c_);
    for (int i = 0; i <= dd; ++i) nc[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
    r = Poly(std::move(nc));
  }
  return {Poly(std::move(q)), r};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return p.divmod(g).quot;
}

namespace {

int sign_at_inf(const Poly& p, bool positive_inf) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  if (!positive_inf && p.degree() % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<Poly>& chain, bool positive_inf) {
  int count = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sign_at_inf(p, positive_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const Poly& p) {
  Poly q = squarefree_part(p);
  if (q.is_zero()) throw Error("root count of the zero polynomial");
  if (q.degree() == 0) return 0;
  std::vector<Poly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    chain.push_back(-a.divmod(b).rem);
  }
  chain.pop_back();
  return variations(chain, false) - variations(chain, true);
}

}  // namespace carnot
