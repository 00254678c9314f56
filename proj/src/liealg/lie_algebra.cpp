#include "wavegc/liealg/lie_algebra.hpp"

#include <set>
#include <sstream>

#include "wavegc/expr/zero_test.hpp"

namespace wavegc {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::map<std::pair<int, int>, QVec>& entries)
    : labels_(std::move(labels)) {
  int n = dim();
  c_.assign(n, std::vector<QVec>(n, QVec(n, Rational(0))));
  for (const auto& [ij, v] : entries) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= n || j >= n) throw PresentationError("bracket index out of range");
    if (static_cast<int>(v.size()) != n) throw PresentationError("bracket vector has wrong length");
    if (i == j) {
      if (!is_zero(v)) throw PresentationError("[e_i, e_i] must vanish");
      continue;
    }
    QVec neg(n);
    for (int k = 0; k < n; ++k) neg[k] = -v[k];
    auto check = [&](int a, int b, const QVec& w) {
      if (!is_zero(c_[a][b]) && c_[a][b] != w) throw PresentationError("table is not antisymmetric");
      c_[a][b] = w;
    };
    check(i, j, v);
    check(j, i, neg);
  }
  std::string bad = jacobi_violation();
  if (!bad.empty()) throw PresentationError("Jacobi identity fails for " + bad);
}

QVec LieAlgebra::unit(int i) const {
  QVec v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  int n = dim();
  QVec r(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      Rational s = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) r[k] += s * c_[i][j][k];
    }
  }
  return r;
}

QMat LieAlgebra::ad(const QVec& x) const {
  int n = dim();
  QMat m(n, QVec(n));
  for (int j = 0; j < n; ++j) {
    QVec col = bracket(x, unit(j));
    for (int k = 0; k < n; ++k) m[k][j] = col[k];
  }
  return m;
}

Rational LieAlgebra::killing(const QVec& x, const QVec& y) const {
  QMat a = ad(x), b = ad(y);
  Rational tr = 0;
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) tr += a[i][k] * b[k][i];
  return tr;
}

std::string LieAlgebra::jacobi_violation() const {
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        QVec a = unit(i), b = unit(j), c = unit(k);
        QVec s = bracket(a, bracket(b, c));
        QVec t = bracket(b, bracket(c, a));
        QVec u = bracket(c, bracket(a, b));
        for (int m = 0; m < n; ++m)
          if (s[m] + t[m] + u[m] != 0)
            return std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(k + 1);
      }
  return {};
}

LieAlgebra LieAlgebra::rebase(const QMat& b, std::vector<std::string> labels) const {
  int n = dim();
  if (static_cast<int>(b.size()) != n || rank(b) != n) throw PresentationError("rebase needs an invertible basis");
  QMat cols = transpose(b, n);
  std::map<std::pair<int, int>, QVec> entries;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto x = solve(cols, bracket(b[i], b[j]));
      entries[{i, j}] = *x;
    }
  return LieAlgebra(std::move(labels), entries);
}

std::string LieAlgebra::export_table() const {
  std::ostringstream os;
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c_[i][j][k] != 0) os << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << to_string(c_[i][j][k]) << '\n';
  return os.str();
}

LieAlgebra LieAlgebra::import_table(const std::string& text, std::vector<std::string> labels) {
  int n = static_cast<int>(labels.size());
  std::map<std::pair<int, int>, QVec> entries;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int i, j, k;
    std::string c;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> k >> c)) throw PresentationError("malformed table line " + std::to_string(lineno));
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
      throw PresentationError("index out of range on line " + std::to_string(lineno));
    Rational q;
    if (q.set_str(c, 10) != 0) throw PresentationError("bad rational on line " + std::to_string(lineno));
    q.canonicalize();
    int a = i - 1, b = j - 1;
    if (a > b) {
      std::swap(a, b);
      q = -q;
    }
    auto& v = entries.try_emplace({a, b}, QVec(n, Rational(0))).first->second;
    v[k - 1] += q;
  }
  return LieAlgebra(std::move(labels), entries);
}

namespace {

using Key = std::pair<int, Expr>;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (a.first != b.first) return a.first < b.first;
    return ExprLess()(a.second, b.second);
  }
};

using Sparse = std::map<Key, Rational, KeyLess>;

Sparse sparse_of(const VectorField& v) {
  Sparse s;
  for (std::size_t i = 0; i < v.coeffs().size(); ++i)
    for (const auto& t : terms_of(normalize(v.coeff(i)))) {
      if (t.is_zero()) continue;
      auto [q, mono] = split_coefficient(t);
      s[{static_cast<int>(i), mono}] += q;
    }
  return s;
}

bool residual_vanishes(const VectorField& r) {
  for (const auto& c : r.coeffs()) {
    if (numerator(c).is_zero()) continue;
    if (is_zero(c) != Verdict::Zero) return false;
  }
  return true;
}

}  // namespace

std::optional<QVec> field_coordinates(const std::vector<VectorField>& fields, const VectorField& v) {
  std::vector<Sparse> sp;
  std::map<Key, int, KeyLess> index;
  for (const auto& f : fields) {
    sp.push_back(sparse_of(f));
    for (const auto& [k, q] : sp.back()) index.try_emplace(k, static_cast<int>(index.size()));
  }
  Sparse target = sparse_of(v);
  for (const auto& [k, q] : target)
    if (q != 0 && !index.count(k)) return std::nullopt;
  int rows = static_cast<int>(index.size()), n = static_cast<int>(fields.size());
  QMat m(rows, QVec(n, Rational(0)));
  QVec b(rows, Rational(0));
  for (int j = 0; j < n; ++j)
    for (const auto& [k, q] : sp[j]) m[index[k]][j] = q;
  for (const auto& [k, q] : target) b[index[k]] = q;
  auto x = solve(m, b);
  if (!x) return std::nullopt;
  VectorField r = v;
  for (int j = 0; j < n; ++j) r = r - Expr((*x)[j]) * fields[j];
  if (!residual_vanishes(r)) return std::nullopt;
  return x;
}

ClosureResult close_or_fail(const std::vector<std::string>& labels, const std::vector<VectorField>& fields) {
  if (labels.size() != fields.size()) throw PresentationError("label count differs from field count");
  ClosureResult res;
  std::vector<VectorField> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!basis.empty() && fields[i].chart() != basis[0].chart()) throw ChartError("fields on different charts");
    if (fields[i].is_zero() || (!basis.empty() && field_coordinates(basis, fields[i]))) {
      res.pruned.push_back(static_cast<int>(i));
      continue;
    }
    basis.push_back(fields[i]);
    names.push_back(labels[i]);
    res.kept.push_back(static_cast<int>(i));
  }
  std::map<std::pair<int, int>, QVec> entries;
  int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorField br = bracket(basis[i], basis[j]);
      auto x = field_coordinates(basis, br);
      if (!x) {
        res.witness = "[" + names[i] + ", " + names[j] + "] = " + br.str();
        return res;
      }
      entries[{i, j}] = *x;
    }
  res.algebra = LieAlgebra(names, entries);
  res.algebra.fields = basis;
  res.closed = true;
  return res;
}

Subspace lie_product(const LieAlgebra& a, const Subspace& s, const Subspace& t) {
  QMat vs;
  for (const auto& x : s.rows())
    for (const auto& y : t.rows()) vs.push_back(a.bracket(x, y));
  return Subspace::span(a.dim(), vs);
}

std::vector<Subspace> derived_series(const LieAlgebra& a) {
  std::vector<Subspace> out{Subspace::whole(a.dim())};
  while (true) {
    Subspace next = lie_product(a, out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(next);
    if (next.dim() == 0) break;
  }
  return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  Subspace all = Subspace::whole(a.dim());
  std::vector<Subspace> out{all};
  while (true) {
    Subspace next = lie_product(a, all, out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(next);
    if (next.dim() == 0) break;
  }
  return out;
}

Subspace centralizer(const LieAlgebra& a, const Subspace& s) {
  int n = a.dim();
  // x with [x, y] = 0 for each basis vector y: the columns of ad(y) give -[x,y] coefficients linearly in x
  QMat sys;
  for (const auto& y : s.rows()) {
    QMat ady = a.ad(y);
    for (auto& row : ady) sys.push_back(row);
  }
  return Subspace::span(n, nullspace(sys, n));
}

Subspace center(const LieAlgebra& a) { return centralizer(a, Subspace::whole(a.dim())); }

bool is_ideal(const LieAlgebra& a, const Subspace& s) {
  return s.contains(lie_product(a, Subspace::whole(a.dim()), s));
}

bool is_subalgebra(const LieAlgebra& a, const Subspace& s) { return s.contains(lie_product(a, s, s)); }

bool is_solvable(const LieAlgebra& a, const Subspace& s) {
  Subspace cur = s;
  while (cur.dim() > 0) {
    Subspace next = lie_product(a, cur, cur);
    if (next.dim() == cur.dim()) return false;
    cur = next;
  }
  return true;
}

Subspace radical(const LieAlgebra& a) {
  int n = a.dim();
  Subspace der = lie_product(a, Subspace::whole(n), Subspace::whole(n));
  QMat sys;
  for (const auto& y : der.rows()) {
    QVec row(n);
    for (int i = 0; i < n; ++i) row[i] = a.killing(a.unit(i), y);
    sys.push_back(std::move(row));
  }
  Subspace r = Subspace::span(n, nullspace(sys, n));
  if (!is_ideal(a, r) || !is_solvable(a, r)) throw PresentationError("radical post-check failed");
  return r;
}

}  // namespace wavegc
