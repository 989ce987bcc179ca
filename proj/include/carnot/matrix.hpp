#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "carnot/rat.hpp"

namespace carnot {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_neg(const RatVec& a);
RatVec vec_scale(const Rat& c, const RatVec& a);
Rat vec_dot(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& a);
RatVec vec_zero(std::size_t n);
/// Standard basis vector e_i (0-based) in dimension n.
RatVec vec_unit(std::size_t n, std::size_t i);

/// Dense exact rational matrix, row-major.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  std::vector<RatVec> row_list() const;
  void set_row(std::size_t r, const RatVec& v);
  void swap_rows(std::size_t a, std::size_t b);

  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { a += b; return a; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { a -= b; return a; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, RatMatrix a);

  /// Matrix-vector product.
  RatVec apply(const RatVec& v) const;

  /// a b^T - b a^T (the rank-2 skew building block).
  static RatMatrix wedge(const RatVec& a, const RatVec& b);

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const RatMatrix& m);

/// Canonical reduced row echelon form: leading entries 1, zeros above and
/// below each pivot, pivots at the leftmost possible columns. Zero rows are
/// kept at the bottom. Also reports the pivot columns.
struct Rref {
  RatMatrix mat;
  std::vector<std::size_t> pivots;
};
Rref rref(const RatMatrix& m);

/// Rows spanning the kernel {x : m x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& m);

/// One exact solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

}  // namespace carnot
