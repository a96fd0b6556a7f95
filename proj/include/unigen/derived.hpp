#pragma once

#include <utility>
#include <vector>

#include "unigen/lattice.hpp"
#include "unigen/nilpotent.hpp"

namespace unigen {

// Basis data for the error map: adapted lattice basis U (rows u_1..u_n with
// u_1..u_s spanning L ∩ V_1 and u_1..u_t spanning L ∩ V_{n-1}), its inverse,
// and the split indices. The lattice is the standard Z^n here; callers with a
// general lattice change coordinates first.
struct ErrorMapContext {
  QMat U, Uinv;
  int s = 0, t = 0, dim = 0;

  int tprime() const { return dim - t; }
};

// eps(phi) = pi ∘ phi |_{W_{n-1}} as an s x (dim - t) matrix: column j holds
// the V_1-coordinates (w.r.t. u_1..u_s) of the projection of phi(u_{t+j}).
QMat error_map(const QMat& phi, const ErrorMapContext& ctx);

// One recursion layer: derived space/lattice/flag, the dπ splitting of the
// Lie algebra and the ε data for the induced lattice Γ.
struct DerivedData {
  ErrorMapContext ctx;
  int vstar_dim = 0;
  Flag derived_flag;                 // on V★, in the adapted coordinates
  std::vector<QMat> g_basis;         // input basis, kept for preimage solves
  QMat dpi_rows;                     // row i = flattened dπ(g_basis[i])
  std::vector<QMat> n_basis;         // kernel of dπ (endomorphisms of V)
  std::vector<QMat> q_basis;         // independent dπ-images (acting on V★)
  std::vector<QMat> q_preimages;     // elements of 𝔤 mapping onto q_basis
  std::vector<std::pair<int, int>> support;  // ε-matrix positions kept by ψ
};

DerivedData build_derived(const LieAlgebraRep& g, const Flag& flag, bool support_opt);

// Block action of an endomorphism of V on V★ = V_{n-1} ⊕ V/V_1.
QMat derived_of(const QMat& m, const ErrorMapContext& ctx);

// x in 𝔤 with dπ(x) = y; throws if y is outside dπ(𝔤).
QMat preimage_dpi(const DerivedData& d, const QMat& y);

// Positions (row, col) of Lin(W_{n-1}, V_1) where ε of the unital associative
// algebra generated by 𝔤 can be nonzero; ε(G) is supported there.
std::vector<std::pair<int, int>> support_subspace(const LieAlgebraRep& g,
                                                  const ErrorMapContext& ctx);

// ε matrix restricted to the support positions, as a row vector. Entries off
// the support must vanish.
QVec flatten_eps(const QMat& eps, const std::vector<std::pair<int, int>>& support);

// Basis x_1..x_l of 𝔫_L = { x in 𝔫 : ε(x) ∈ Γ }, plus the ε data reused by
// the relation-lattice machinery.
struct NLatticeBasis {
  std::vector<QMat> xs;   // x_1..x_l
  QMat wprime_rows;       // rows = flattened ε(n_basis): basis of W'
  QMat gamma_basis;       // unimodular; rows are a Z-basis of Γ (= Z^M)
  QMat gamma_basis_inv;
  int m = 0;              // first m rows of gamma_basis span W' ∩ Γ
  QMat n_eps_rows;        // rows = flattened ε(x_i): Z-basis of Γ ∩ ε(𝔫)
};

NLatticeBasis n_lattice_basis(const DerivedData& d);

}  // namespace unigen
