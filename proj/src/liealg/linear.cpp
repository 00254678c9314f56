#include "wavegc/liealg/linear.hpp"

#include <stdexcept>

namespace wavegc {

QMat rref(QMat m, std::vector<int>* pivots) {
  std::vector<int> piv;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  if (pivots) *pivots = std::move(piv);
  return m;
}

int rank(const QMat& m) { return static_cast<int>(rref(m).size()); }

QMat nullspace(const QMat& m, int n) {
  std::vector<int> piv;
  QMat r = rref(m, &piv);
  std::vector<bool> is_pivot(n, false);
  for (int p : piv) is_pivot[p] = true;
  QMat out;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVec v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t n = m.empty() ? 0 : m[0].size();
  QMat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> piv;
  QMat r = rref(aug, &piv);
  QVec x(n, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (static_cast<std::size_t>(piv[i]) == n) return std::nullopt;
    x[piv[i]] = r[i][n];
  }
  return x;
}

QMat transpose(const QMat& m, int cols) {
  QMat t(cols, QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Subspace Subspace::span(int ambient, const QMat& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("vector length differs from ambient dimension");
  s.rows_ = rref(vectors);
  return s;
}

Subspace Subspace::coordinate(int ambient, const std::vector<int>& indices) {
  QMat vs;
  for (int i : indices) {
    QVec v(ambient, Rational(0));
    v.at(i) = 1;
    vs.push_back(std::move(v));
  }
  return span(ambient, vs);
}

Subspace Subspace::whole(int ambient) {
  std::vector<int> all(ambient);
  for (int i = 0; i < ambient; ++i) all[i] = i;
  return coordinate(ambient, all);
}

bool Subspace::contains(const QVec& v) const {
  QMat m = rows_;
  m.push_back(v);
  return rank(m) == dim();
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& r : s.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& s) const {
  QMat m = rows_;
  m.insert(m.end(), s.rows_.begin(), s.rows_.end());
  return span(n_, m);
}

Subspace Subspace::intersect(const Subspace& s) const {
  // v = sum a_i r_i = sum b_j s_j  <=>  [R^T | -S^T] (a,b) = 0
  int k = dim(), l = s.dim();
  QMat sys(n_, QVec(k + l));
  for (int c = 0; c < n_; ++c) {
    for (int i = 0; i < k; ++i) sys[c][i] = rows_[i][c];
    for (int j = 0; j < l; ++j) sys[c][k + j] = -s.rows_[j][c];
  }
  QMat vs;
  for (const auto& sol : nullspace(sys, k + l)) {
    QVec v(n_, Rational(0));
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < n_; ++c) v[c] += sol[i] * rows_[i][c];
    vs.push_back(std::move(v));
  }
  return span(n_, vs);
}

std::string Subspace::str() const {
  std::string out;
  for (const auto& r : rows_) {
    out += "[";
    for (std::size_t j = 0; j < r.size(); ++j) out += (j ? " " : "") + to_string(r[j]);
    out += "]\n";
  }
  return out;
}

}  // namespace wavegc
