#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavegc/expr/rational.hpp"

namespace wavegc {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major

// Reduced row echelon form; zero rows dropped. Pivot columns in *pivots when given.
QMat rref(QMat m, std::vector<int>* pivots = nullptr);
int rank(const QMat& m);
// Basis of {v : m v = 0}; n is the number of columns (needed when m has no rows).
QMat nullspace(const QMat& m, int n);
// Some solution of m v = b, if any.
std::optional<QVec> solve(const QMat& m, const QVec& b);
QMat transpose(const QMat& m, int cols);
bool is_zero(const QVec& v);

class Subspace {
 public:
  explicit Subspace(int ambient = 0) : n_(ambient) {}
  static Subspace span(int ambient, const QMat& vectors);
  static Subspace coordinate(int ambient, const std::vector<int>& indices);
  static Subspace whole(int ambient);

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const QMat& rows() const { return rows_; }
  bool contains(const QVec& v) const;
  bool contains(const Subspace& s) const;
  Subspace operator+(const Subspace& s) const;
  Subspace intersect(const Subspace& s) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

  std::string str() const;  // one bracketed row per line

 private:
  int n_;
  QMat rows_;
};

}  // namespace wavegc
