#include "carnot/subspace.hpp"

namespace carnot {

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RatMatrix(0, ambient_dim), {});
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw Error("spanning vector has wrong ambient dimension");
  Rref r = rref(RatMatrix::from_rows(vectors, ambient_dim));
  RatMatrix basis(r.pivots.size(), ambient_dim);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) basis.set_row(i, r.mat.row(i));
  return Subspace(ambient_dim, std::move(basis), std::move(r.pivots));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, RatMatrix::identity(ambient_dim), std::move(pivots));
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  return free_cols;
}

RatVec Subspace::reduce(const RatVec& v) const {
  if (v.size() != ambient_) throw Error("subspace membership: ambient dimension mismatch");
  RatVec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rat& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rat f = c;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const RatVec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace containment: ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool Subspace::is_proper_subspace_of(const Subspace& other) const {
  return other.contains(*this) && dim() < other.dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("subspace sum: ambient dimension mismatch");
  std::vector<RatVec> rows = basis_.row_list();
  for (const auto& r : other.basis_.row_list()) rows.push_back(r);
  return span(ambient_, rows);
}

QuotientMap QuotientMap::modulo(const Subspace& kernel) {
  const std::size_t n = kernel.ambient_dim();
  std::vector<std::size_t> rep = kernel.free_columns();
  RatMatrix proj(rep.size(), n);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    proj.at(i, rep[i]) = Rat(1);
    for (std::size_t j = 0; j < kernel.dim(); ++j)
      proj.at(i, kernel.pivot_columns()[j]) -= kernel.basis().at(j, rep[i]);
  }
  return QuotientMap(kernel, std::move(proj), std::move(rep));
}

RatVec QuotientMap::apply(const RatVec& v) const {
  if (v.size() != ambient_dim()) throw Error("quotient map: ambient dimension mismatch");
  return proj_.apply(v);
}

RatVec QuotientMap::section(const RatVec& w) const {
  if (w.size() != quotient_dim()) throw Error("quotient section: class dimension mismatch");
  RatVec v(ambient_dim());
  for (std::size_t i = 0; i < rep_cols_.size(); ++i) v[rep_cols_[i]] = w[i];
  return v;
}

}  // namespace carnot
