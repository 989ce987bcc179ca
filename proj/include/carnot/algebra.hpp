#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/subspace.hpp"

namespace carnot {

/// Sparse coefficient vector on the global basis: index -> nonzero coefficient.
using SparseVec = std::map<int, Rat>;

using BracketTable = std::map<std::pair<int, int>, SparseVec>;

/// Graded nilpotent Lie algebra given by structure constants on a graded
/// basis. Layer i spans basis indices [layer_offset(i), layer_offset(i) +
/// layer_dim(i)). Constructors store structure constants only for ordered
/// pairs a < b; the antisymmetric mirror is implicit. Parsed data may carry
/// redundant mirror entries, which validate() cross-checks.
class GradedLieAlgebra {
public:
  GradedLieAlgebra(int step, std::vector<int> layer_dims,
                   std::vector<std::string> labels, BracketTable brackets);

  int step() const { return step_; }
  int total_dim() const { return total_dim_; }
  int layer_dim(int layer) const { return layer_dims_.at(static_cast<std::size_t>(layer - 1)); }
  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int layer_offset(int layer) const { return layer_offset_.at(static_cast<std::size_t>(layer - 1)); }
  /// 1-based layer (= degree) of a basis index.
  int degree(int index) const { return degree_.at(static_cast<std::size_t>(index)); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  int index_of(const std::string& label) const;

  bool is_step2() const { return step_ <= 2; }
  int v1_dim() const { return layer_dims_[0]; }
  int v2_dim() const { return step_ >= 2 ? layer_dims_[1] : 0; }

  /// Raw structure constants exactly as provided (mirrors included).
  const BracketTable& raw_table() const { return raw_; }
  /// Canonical table: one entry per unordered pair, keyed a < b.
  const BracketTable& table() const { return canon_; }

  /// [e_a, e_b] as a sparse vector, resolving the implicit mirror.
  SparseVec bracket_basis(int a, int b) const;

  /// Bilinear bracket of full coordinate vectors.
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  /// Bracket of two first-layer vectors, returned in layer-2 coordinates.
  RatVec bracket_v1(const RatVec& x1, const RatVec& y1) const;

  RatVec layer_part(const RatVec& coords, int layer) const;

  friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
    return a.step_ == b.step_ && a.layer_dims_ == b.layer_dims_ &&
           a.labels_ == b.labels_ && a.raw_ == b.raw_;
  }

private:
  int step_;
  int total_dim_;
  std::vector<int> layer_dims_;
  std::vector<int> layer_offset_;
  std::vector<int> degree_;
  std::vector<std::string> labels_;
  std::map<std::string, int> label_index_;
  BracketTable raw_;
  BracketTable canon_;
};

struct AlgebraElement {
  const GradedLieAlgebra* algebra;
  RatVec coords;
};

AlgebraElement element(const GradedLieAlgebra& g, RatVec coords);
AlgebraElement zero_element(const GradedLieAlgebra& g);
bool same_algebra(const GradedLieAlgebra& a, const GradedLieAlgebra& b);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Free nilpotent Lie algebra of step 2 on k generators: layers of dimension
/// (k, k(k-1)/2), basis e_1..e_k and e_{i,j} for i < j, [e_i, e_j] = e_{i,j}.
GradedLieAlgebra free_step2(int k);

bool is_free_step2(const GradedLieAlgebra& g);
/// 0-based index of e_{i+1,j+1} within layer 2 of the free algebra, i < j.
int free_pair_index(int k, int i, int j);

struct ValidationItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Checks antisymmetry of redundant entries, grading additivity, the Jacobi
/// identity on all basis triples, and the generation condition
/// [V_1, V_i] = V_{i+1}. Failures are report entries, never exceptions.
ValidationReport validate(const GradedLieAlgebra& g);

struct Quotient {
  GradedLieAlgebra algebra;
  QuotientMap projection;
};

/// Step-2 quotient by a central subspace U of V_2. Basis labels of the new
/// layer 2 are representative-based, e.g. "[e_{1,2}]".
Quotient quotient_step2(const GradedLieAlgebra& g, const Subspace& u);

/// A step-2 algebra presented as base/U, with the projection to the quotient.
struct QuotientPresentation {
  GradedLieAlgebra base;
  Subspace u;
  GradedLieAlgebra quotient;
  QuotientMap projection;
};

QuotientPresentation make_presentation(GradedLieAlgebra base, const Subspace& u);

/// Re-presents an arbitrary step-2 Carnot algebra as free/U, with U the
/// kernel of e_{i,j} -> [e_i, e_j]. Requires the generation condition
/// [V_1, V_1] = V_2 (checked).
QuotientPresentation present_as_quotient(const GradedLieAlgebra& g);

/// Central product of m copies of the quotient algebra: W_1 = V_1^m,
/// W_2 = V_2/U, with component-wise brackets summed in V_2 and projected.
GradedLieAlgebra central_product_algebra(const QuotientPresentation& pres, int m);

/// The V_2-valued bracket of two W_1 = V_1^m vectors: the sum of the
/// component brackets, before projection.
RatVec central_bracket_v2(const QuotientPresentation& pres, int m,
                          const RatVec& w, const RatVec& wp);

}  // namespace carnot
