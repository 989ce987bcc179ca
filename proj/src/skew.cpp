#include "carnot/skew.hpp"

#include <functional>
#include <map>

namespace carnot {

bool is_antisymmetric(const RatMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a.at(i, j) != -a.at(j, i)) return false;
  return true;
}

std::vector<std::pair<RatVec, RatVec>> skew_decompose(const RatMatrix& a) {
  if (!is_antisymmetric(a)) throw Error("skew_decompose: matrix is not antisymmetric");
  const std::size_t n = a.rows();
  RatMatrix rest = a;
  std::vector<std::pair<RatVec, RatVec>> pairs;
  for (;;) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!rest.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    const Rat p = rest.at(pi, pj);
    RatVec ci(n), cj(n);
    for (std::size_t r = 0; r < n; ++r) {
      ci[r] = rest.at(r, pi);
      cj[r] = rest.at(r, pj);
    }
    // peel the rank-2 piece (1/p)(ci cj^T - cj ci^T) = u w^T - w u^T
    RatVec u = vec_scale(p.reciprocal(), cj);
    RatVec w = vec_neg(ci);
    rest -= RatMatrix::wedge(u, w);
    pairs.emplace_back(std::move(u), std::move(w));
  }
  return pairs;
}

namespace {

// Pfaffian over an index subset encoded as a bitmask, with memoization.
// Expansion along the lowest set index s_1:
//   Pf(S) = sum_k (-1)^k A[s_1][s_k] Pf(S \ {s_1, s_k})
Rat pf_mask(const RatMatrix& a, std::uint64_t mask, std::map<std::uint64_t, Rat>& memo) {
  if (mask == 0) return Rat(1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::size_t lo = static_cast<std::size_t>(__builtin_ctzll(mask));
  Rat acc;
  int pos = 1;
  for (std::size_t j = lo + 1; j < 64; ++j) {
    if (!(mask >> j & 1u)) continue;
    ++pos;
    const Rat& entry = a.at(lo, j);
    if (!entry.is_zero()) {
      Rat sub = pf_mask(a, mask & ~(1ULL << lo) & ~(1ULL << j), memo);
      if (!sub.is_zero()) {
        if (pos % 2 == 0)
          acc += entry * sub;
        else
          acc -= entry * sub;
      }
    }
  }
  memo.emplace(mask, acc);
  return acc;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(std::uint64_t)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= 1ULL << i;
    if (!f(mask)) return;
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

void require_skew(const RatMatrix& a) {
  if (!is_antisymmetric(a)) throw Error("pfaffian: matrix is not antisymmetric");
  if (a.rows() > 63) throw Error("pfaffian: matrix too large");
}

}  // namespace

Rat pfaffian(const RatMatrix& a) {
  require_skew(a);
  if (a.rows() % 2 == 1) return Rat(0);
  std::map<std::uint64_t, Rat> memo;
  std::uint64_t mask = a.rows() == 64 ? ~0ULL : (1ULL << a.rows()) - 1;
  return pf_mask(a, mask, memo);
}

Rat pfaffian_of_subset(const RatMatrix& a, const std::vector<std::size_t>& idx) {
  require_skew(a);
  if (idx.size() % 2 == 1) return Rat(0);
  std::uint64_t mask = 0;
  for (std::size_t i : idx) {
    if (i >= a.rows()) throw Error("pfaffian subset index out of range");
    mask |= 1ULL << i;
  }
  std::map<std::uint64_t, Rat> memo;
  return pf_mask(a, mask, memo);
}

bool principal_pfaffians_vanish(const RatMatrix& a, std::size_t order) {
  require_skew(a);
  if (order % 2 == 1) throw Error("principal Pfaffians are indexed by even orders");
  if (order > a.rows()) return true;
  std::map<std::uint64_t, Rat> memo;
  bool all_zero = true;
  for_each_subset(a.rows(), order, [&](std::uint64_t mask) {
    if (!pf_mask(a, mask, memo).is_zero()) {
      all_zero = false;
      return false;
    }
    return true;
  });
  return all_zero;
}

std::size_t pfaffian_rank(const RatMatrix& a) {
  require_skew(a);
  std::size_t best = 0;
  std::map<std::uint64_t, Rat> memo;
  for (std::size_t order = 2; order <= a.rows(); order += 2) {
    bool found = false;
    for_each_subset(a.rows(), order, [&](std::uint64_t mask) {
      if (!pf_mask(a, mask, memo).is_zero()) {
        found = true;
        return false;
      }
      return true;
    });
    if (!found) break;
    best = order;
  }
  return best;
}

}  // namespace carnot
