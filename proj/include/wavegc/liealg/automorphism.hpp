#pragma once

#include "wavegc/liealg/lie_algebra.hpp"

namespace wavegc {

// Automorphisms preserving a full flag V_1 < V_2 < ... < V_n. In a basis adapted to the flag the
// matrix is upper triangular: A e_j = sum_{i <= j} a_ij e_i.
struct AutomorphismFamily {
  QMat basis;                                // adapted basis, rows in ambient coordinates
  std::vector<std::vector<Expr>> matrix;     // entry (i, j) after elimination
  std::vector<std::pair<Symbol, Expr>> solved;
  std::vector<Symbol> free;
  std::vector<Expr> unresolved;              // nonlinear residue left by the elimination
  std::vector<Subspace> invariant_subspaces;  // coordinate subspaces of the adapted basis, ambient coordinates

  // Substitutes the solved entries; zero result means the relation holds on the whole family.
  Expr reduce(const Expr& relation) const;
};

// The symbol for entry a_ij, 1-based as in a_{ij}.
Symbol automorphism_entry(int i, int j);

AutomorphismFamily flag_automorphism_solve(const LieAlgebra& a, const std::vector<Subspace>& flag);

}  // namespace wavegc
