#pragma once

#include "unigen/linalg.hpp"
#include "unigen/matrix.hpp"
#include "unigen/normal_forms.hpp"

namespace unigen {

// Full-dimensional lattice in Q^n, rows of `basis` are a Z-basis.
struct Lattice {
  int dim = 0;
  QMat basis;

  static Lattice standard(int n) { return {n, QMat::identity(n)}; }
};

Lattice make_lattice(const QMat& basis);

// Scales each row by the lcm of its denominators.
ZMat clear_denominators(const QMat& a);

// Z-basis of Z^n intersected with the rational row span of `a`.
// Rows of `a` must be independent.
ZMat saturate(const ZMat& a);

// Rows of `a` span the full-dimensional lattice L (rational basis accepted; the
// computation runs in L-coordinates), rows of `b` span the subspace W.
// Output: n x n matrix whose rows span L, first rows(b) rows span W ∩ L.
QMat intersect_lattice_subspace(const QMat& a, const QMat& b);

// Lattice basis adapted to V_1 ⊆ V_{n-1}: rows u_1..u_n span L, the first s
// span L ∩ V_1, the first t span L ∩ V_{n-1}. The trailing rows give bases of
// the complements W_1 = <u_{s+1}..u_n> and W_{n-1} = <u_{t+1}..u_n>, and those
// rows are bases of L ∩ W_1 and L ∩ W_{n-1}.
struct AdaptedBasis {
  QMat rows;
  int s = 0, t = 0;
};

AdaptedBasis l_complements(const QMat& lattice_basis, const QMat& v1, const QMat& vn1);

// Z-basis of { e in Z^m : e * A in Z^n }, returned as an m x m matrix.
ZMat integral_relations(const QMat& a);

}  // namespace unigen
