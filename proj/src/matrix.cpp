#include "carnot/matrix.hpp"

namespace carnot {

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_neg(const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RatVec vec_zero(std::size_t n) { return RatVec(n); }

RatVec vec_unit(std::size_t n, std::size_t i) {
  if (i >= n) throw Error("unit vector index out of range");
  RatVec r(n);
  r[i] = Rat(1);
  return r;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

std::vector<RatVec> RatMatrix::row_list() const {
  std::vector<RatVec> rows;
  rows.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
  return rows;
}

void RatMatrix::set_row(std::size_t r, const RatVec& v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  RatMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

RatMatrix operator*(const Rat& c, RatMatrix a) {
  for (auto& x : a.e_) x *= c;
  return a;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s;
    for (std::size_t c = 0; c < cols_; ++c) s += at(i, c) * v[c];
    r[i] = s;
  }
  return r;
}

RatMatrix RatMatrix::wedge(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("wedge of vectors of different dimension");
  std::size_t n = a.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a[i] * b[j] - b[i] * a[j];
  return m;
}

std::size_t rank(const RatMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  // clear denominators per row; row scaling preserves rank
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) {
      mpz_class d = m.at(r, c).den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (std::size_t c = 0; c < C; ++c) {
      const Rat& x = m.at(r, c);
      a[r][c] = x.num() * (l / x.den());
    }
  }
  // Bareiss fraction-free elimination with column skipping
  mpz_class prev = 1;
  std::size_t piv = 0;
  for (std::size_t col = 0; col < C && piv < R; ++col) {
    std::size_t sel = piv;
    while (sel < R && a[sel][col] == 0) ++sel;
    if (sel == R) continue;
    std::swap(a[piv], a[sel]);
    for (std::size_t i = piv + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        mpz_class t = a[i][j] * a[piv][col] - a[i][col] * a[piv][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[piv][col];
    ++piv;
  }
  return piv;
}

Rref rref(const RatMatrix& m) {
  Rref out;
  out.mat = m;
  RatMatrix& a = out.mat;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t piv = 0;
  for (std::size_t col = 0; col < C && piv < R; ++col) {
    std::size_t sel = piv;
    while (sel < R && a.at(sel, col).is_zero()) ++sel;
    if (sel == R) continue;
    a.swap_rows(piv, sel);
    Rat inv = a.at(piv, col).reciprocal();
    for (std::size_t j = col; j < C; ++j) a.at(piv, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == piv || a.at(i, col).is_zero()) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = col; j < C; ++j) a.at(i, j) -= f * a.at(piv, j);
    }
    out.pivots.push_back(col);
    ++piv;
  }
  return out;
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
  Rref r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(C);
    v[f] = Rat(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw Error("solve: rhs dimension mismatch");
  const std::size_t R = m.rows(), C = m.cols();
  RatMatrix aug(R, C + 1);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, C) = b[r];
  }
  Rref re = rref(aug);
  for (std::size_t p : re.pivots)
    if (p == C) return std::nullopt;  // inconsistent
  RatVec x(C);
  for (std::size_t i = 0; i < re.pivots.size(); ++i) x[re.pivots[i]] = re.mat.at(i, C);
  return x;
}

}  // namespace carnot
