#pragma once

#include <map>
#include <string>
#include <vector>

#include "wavegc/liealg/linear.hpp"
#include "wavegc/vecfield/vector_field.hpp"

namespace wavegc {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite-dimensional Lie algebra over Q given by structure constants c^k_ij.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // entries[(i,j)] = coordinates of [e_i, e_j] for i < j; the rest follows by antisymmetry.
  LieAlgebra(std::vector<std::string> labels, const std::map<std::pair<int, int>, QVec>& entries);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const QVec& structure(int i, int j) const { return c_[i][j]; }
  QVec bracket(const QVec& x, const QVec& y) const;
  QVec unit(int i) const;

  // ad(x) as a matrix acting on coordinate columns
  QMat ad(const QVec& x) const;
  Rational killing(const QVec& x, const QVec& y) const;

  // First failing Jacobi triple as "i j k", empty when the identity holds.
  std::string jacobi_violation() const;

  // Same algebra in the basis given by the rows of b.
  LieAlgebra rebase(const QMat& b, std::vector<std::string> labels) const;

  // Lines "i j k c" (1-based) meaning c^k_ij = c, for i < j and nonzero c.
  std::string export_table() const;
  static LieAlgebra import_table(const std::string& text, std::vector<std::string> labels);

  // Fields realising the basis, when the algebra came from close_or_fail.
  std::vector<VectorField> fields;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<QVec>> c_;
};

struct ClosureResult {
  bool closed = false;
  LieAlgebra algebra;
  std::vector<int> kept;     // indices of input fields forming the basis
  std::vector<int> pruned;   // linearly dependent inputs
  std::string witness;       // escaping bracket when !closed
};

ClosureResult close_or_fail(const std::vector<std::string>& labels, const std::vector<VectorField>& fields);

// Coordinates of v in the span of fields (over Q), or nullopt.
std::optional<QVec> field_coordinates(const std::vector<VectorField>& fields, const VectorField& v);

Subspace lie_product(const LieAlgebra& a, const Subspace& s, const Subspace& t);
std::vector<Subspace> derived_series(const LieAlgebra& a);
std::vector<Subspace> lower_central_series(const LieAlgebra& a);
Subspace centralizer(const LieAlgebra& a, const Subspace& s);
Subspace center(const LieAlgebra& a);
bool is_ideal(const LieAlgebra& a, const Subspace& s);
bool is_subalgebra(const LieAlgebra& a, const Subspace& s);
bool is_solvable(const LieAlgebra& a, const Subspace& s);
// Maximal solvable ideal via the Killing form; throws PresentationError if the post-check fails.
Subspace radical(const LieAlgebra& a);

}  // namespace wavegc
