#pragma once

#include <vector>

#include "carnot/matrix.hpp"

namespace carnot {

/// Linear subspace of Q^n in canonical form: the stored basis is the reduced
/// row echelon form of any spanning set, so two equal subspaces always hold
/// identical bases.
class Subspace {
public:
  /// The zero subspace of the given ambient dimension.
  static Subspace zero(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<RatVec>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  RatVec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  /// Columns without a pivot; they index the canonical complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  bool is_proper_subspace_of(const Subspace& other) const;

  /// Reduces v modulo the subspace: the remainder has zero entries at all
  /// pivot columns and v - remainder lies in the subspace.
  RatVec reduce(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Subspace(std::size_t ambient, RatMatrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  std::size_t ambient_;
  RatMatrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

/// Projection V -> V/kernel in the coordinates of the canonical complement
/// (the non-pivot coordinates of the kernel's echelon basis).
class QuotientMap {
public:
  static QuotientMap modulo(const Subspace& kernel);

  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  std::size_t quotient_dim() const { return proj_.rows(); }
  const Subspace& kernel() const { return kernel_; }
  const RatMatrix& projection() const { return proj_; }
  /// Ambient indices of the representative coordinates, in order.
  const std::vector<std::size_t>& representative_columns() const { return rep_cols_; }

  RatVec apply(const RatVec& v) const;
  /// Canonical lift: class coordinates back to the representative in V.
  RatVec section(const RatVec& w) const;

private:
  QuotientMap(Subspace kernel, RatMatrix proj, std::vector<std::size_t> rep_cols)
      : kernel_(std::move(kernel)), proj_(std::move(proj)), rep_cols_(std::move(rep_cols)) {}
  Subspace kernel_;
  RatMatrix proj_;
  std::vector<std::size_t> rep_cols_;
};

class LinearFunctional {
public:
  LinearFunctional(RatVec covector) : covector_(std::move(covector)) {}
  std::size_t ambient_dim() const { return covector_.size(); }
  const RatVec& covector() const { return covector_; }
  Rat apply(const RatVec& v) const {
    if (v.size() != covector_.size()) throw Error("functional dimension mismatch");
    return vec_dot(covector_, v);
  }

private:
  RatVec covector_;
};

}  // namespace carnot
