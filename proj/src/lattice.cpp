#include "unigen/lattice.hpp"

namespace unigen {

Lattice make_lattice(const QMat& basis) {
  if (!basis.is_square() || basis.rows() == 0)
    throw invalid_input("lattice basis must be square and non-empty");
  if (rank(basis) != basis.rows()) throw invalid_input("lattice basis is singular");
  return {basis.rows(), basis};
}

ZMat clear_denominators(const QMat& a) {
  ZMat r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < a.cols(); ++j) {
      Rat v = a(i, j) * Rat(l);
      r(i, j) = v.get_num();
    }
  }
  return r;
}

ZMat saturate(const ZMat& a) {
  const int m = a.rows(), n = a.cols();
  if (m == 0) return a;
  SmithDecomposition d = snf(a);
  if (d.rank != m) throw invalid_input("saturate: rows are dependent");
  // B = P^{-1} S' Q^{-1} with the diagonal of S replaced by ones.
  ZMat sq(m, n);  // S' * Qinv picks the first m rows of Qinv
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) sq(i, j) = d.Qinv(i, j);
  return mul(d.Pinv, sq);
}

QMat intersect_lattice_subspace(const QMat& a, const QMat& b) {
  const int n = a.rows();
  if (!a.is_square()) throw invalid_input("intersect: lattice basis must be square");
  const int m = b.rows();
  if (b.rows() > 0 && b.cols() != n) throw invalid_input("intersect: shape mismatch");
  // Coordinates of the subspace basis with respect to the lattice basis.
  QMat bcoord(m, n);
  for (int i = 0; i < m; ++i) {
    auto c = solve_left(a, b.row(i));
    if (!c) throw invalid_input("intersect: lattice basis is singular");
    bcoord.set_row(i, *c);
  }
  if (rank(bcoord) != m) throw invalid_input("intersect: subspace rows are dependent");
  ZMat c = saturate(clear_denominators(bcoord));
  SmithDecomposition d = snf(c);
  return mul(to_rational(d.Qinv), a);
}

AdaptedBasis l_complements(const QMat& lattice_basis, const QMat& v1, const QMat& vn1) {
  const int n = lattice_basis.rows();
  const int s = v1.rows(), t = vn1.rows();
  if (s > t || t > n) throw invalid_input("l_complements: need dim V_1 <= dim V_{n-1} <= dim V");
  QMat w = intersect_lattice_subspace(lattice_basis, vn1);
  // Rewrite the V_1 basis in coordinates of w_1..w_t; V_1 ⊆ V_{n-1} exactly
  // when the trailing coordinates vanish.
  QMat wt(t, n);
  for (int i = 0; i < t; ++i) wt.set_row(i, w.row(i));
  QMat aprime(s, t);
  for (int i = 0; i < s; ++i) {
    auto c = solve_left(w, v1.row(i));
    if (!c) throw internal_error("l_complements: coordinate solve failed");
    for (int j = t; j < n; ++j)
      if ((*c)[j] != 0) throw invalid_input("l_complements: V_1 not contained in V_{n-1}");
    for (int j = 0; j < t; ++j) aprime(i, j) = (*c)[j];
  }
  QMat b = intersect_lattice_subspace(QMat::identity(t), aprime);
  QMat cprime = mul(b, wt);
  AdaptedBasis ab;
  ab.rows = QMat(n, n);
  for (int i = 0; i < t; ++i) ab.rows.set_row(i, cprime.row(i));
  for (int i = t; i < n; ++i) ab.rows.set_row(i, w.row(i));
  ab.s = s;
  ab.t = t;
  return ab;
}

ZMat integral_relations(const QMat& a) {
  const int m = a.rows(), n = a.cols();
  QMat mat = vstack(a, QMat::identity(n));
  QMat ker = left_kernel(mat);
  if (ker.rows() != m) throw internal_error("integral_relations: unexpected kernel dimension");
  ZMat b = saturate(clear_denominators(ker));
  ZMat out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = b(i, j);
  return hnf(out).H;  // canonical basis; projection is full rank so no rows drop
}

}  // namespace unigen
