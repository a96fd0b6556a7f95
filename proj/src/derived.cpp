#include "unigen/derived.hpp"

namespace unigen {

namespace {

QVec flatten(const QMat& m) {
  QVec v;
  v.reserve(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Row j = coordinates of phi(u_j) with respect to the adapted basis.
QMat adapted_coords(const QMat& phi, const ErrorMapContext& ctx) {
  return mul(mul(ctx.U, transpose(phi)), ctx.Uinv);
}

}  // namespace

QMat error_map(const QMat& phi, const ErrorMapContext& ctx) {
  if (phi.rows() != ctx.dim || phi.cols() != ctx.dim)
    throw invalid_input("error_map: endomorphism has wrong shape");
  QMat c = adapted_coords(phi, ctx);
  QMat eps(ctx.s, ctx.tprime());
  for (int j = 0; j < ctx.tprime(); ++j)
    for (int i = 0; i < ctx.s; ++i) eps(i, j) = c(ctx.t + j, i);
  return eps;
}

QMat derived_of(const QMat& m, const ErrorMapContext& ctx) {
  QMat c = adapted_coords(m, ctx);
  const int t = ctx.t, n = ctx.dim, s = ctx.s;
  QMat d(t + n - s, t + n - s);
  for (int j = 0; j < t; ++j) {
    for (int i = t; i < n; ++i)
      if (c(j, i) != 0) throw internal_error("derived_of: V_{n-1} is not stable");
    for (int i = 0; i < t; ++i) d(i, j) = c(j, i);
  }
  for (int j = 0; j < n - s; ++j)
    for (int i = 0; i < n - s; ++i) d(t + i, t + j) = c(s + j, s + i);
  return d;
}

QMat preimage_dpi(const DerivedData& d, const QMat& y) {
  if (d.g_basis.empty()) {
    if (!y.is_zero()) throw invalid_input("preimage_dpi: target outside the image");
    return QMat(d.ctx.dim, d.ctx.dim);
  }
  auto c = solve_left(d.dpi_rows, flatten(y));
  if (!c) throw invalid_input("preimage_dpi: target outside the image");
  QMat x(d.ctx.dim, d.ctx.dim);
  for (std::size_t i = 0; i < d.g_basis.size(); ++i)
    if ((*c)[i] != 0) x = x + scale(d.g_basis[i], (*c)[i]);
  return x;
}

std::vector<std::pair<int, int>> support_subspace(const LieAlgebraRep& g,
                                                  const ErrorMapContext& ctx) {
  // Closure of {1} under right multiplication by the generators, tracked by
  // independence of the flattened matrices.
  const int n2 = ctx.dim * ctx.dim;
  std::vector<QMat> algebra;
  QMat echelon(0, n2);
  auto try_add = [&](const QMat& a) {
    QMat cand = vstack(echelon, QMat(1, n2, flatten(a)));
    if (rank(cand) == echelon.rows()) return false;
    echelon = row_basis(cand);
    algebra.push_back(a);
    return true;
  };
  try_add(QMat::identity(ctx.dim));
  std::size_t head = 0;
  while (head < algebra.size()) {
    QMat a = algebra[head++];
    for (const QMat& x : g.basis) try_add(mul(a, x));
  }

  std::vector<std::pair<int, int>> support;
  QMat hits(ctx.s, ctx.tprime());
  for (const QMat& a : algebra) {
    QMat e = error_map(a, ctx);
    for (int i = 0; i < ctx.s; ++i)
      for (int j = 0; j < ctx.tprime(); ++j)
        if (e(i, j) != 0) hits(i, j) = 1;
  }
  for (int i = 0; i < ctx.s; ++i)
    for (int j = 0; j < ctx.tprime(); ++j)
      if (hits(i, j) != 0) support.emplace_back(i, j);
  return support;
}

QVec flatten_eps(const QMat& eps, const std::vector<std::pair<int, int>>& support) {
  QVec v;
  v.reserve(support.size());
  QMat seen(eps.rows(), eps.cols());
  for (auto [i, j] : support) {
    v.push_back(eps(i, j));
    seen(i, j) = 1;
  }
  for (int i = 0; i < eps.rows(); ++i)
    for (int j = 0; j < eps.cols(); ++j)
      if (eps(i, j) != 0 && seen(i, j) == 0)
        throw internal_error("flatten_eps: value off the support subspace");
  return v;
}

DerivedData build_derived(const LieAlgebraRep& g, const Flag& flag, bool support_opt) {
  const int n = flag.length();
  if (n < 2) throw invalid_input("build_derived: flag of length 1 has no derived space");
  const int dim = flag.dim_V;

  DerivedData d;
  AdaptedBasis adapted =
      l_complements(QMat::identity(dim), flag.subspaces[0], flag.subspaces[n - 2]);
  d.ctx = ErrorMapContext{adapted.rows, inverse(adapted.rows), adapted.s, adapted.t, dim};
  d.vstar_dim = adapted.t + dim - adapted.s;
  d.g_basis = g.basis;

  // dπ of the basis, flattened for kernel/preimage solves.
  std::vector<QMat> dpis;
  d.dpi_rows = QMat(g.dim(), d.vstar_dim * d.vstar_dim);
  for (int i = 0; i < g.dim(); ++i) {
    dpis.push_back(derived_of(g.basis[i], d.ctx));
    d.dpi_rows.set_row(i, flatten(dpis[i]));
  }

  // 𝔫 = ker dπ as combinations of the basis.
  QMat ker = left_kernel(d.dpi_rows);
  for (int r = 0; r < ker.rows(); ++r) {
    QMat x(dim, dim);
    for (int i = 0; i < g.dim(); ++i)
      if (ker(r, i) != 0) x = x + scale(g.basis[i], ker(r, i));
    d.n_basis.push_back(x);
  }

  // 𝔮 = dπ(𝔤): greedy independent subset of the images.
  QMat echelon(0, d.vstar_dim * d.vstar_dim);
  for (int i = 0; i < g.dim(); ++i) {
    QMat cand = vstack(echelon, QMat(1, d.vstar_dim * d.vstar_dim, d.dpi_rows.row(i)));
    if (rank(cand) == echelon.rows()) continue;
    echelon = row_basis(cand);
    d.q_basis.push_back(dpis[i]);
    d.q_preimages.push_back(g.basis[i]);
  }
  if (int(d.n_basis.size() + d.q_basis.size()) != g.dim())
    throw internal_error("build_derived: dim 𝔫 + dim 𝔮 != dim 𝔤");

  // Derived flag V★_i = V_i ⊕ V_{i+1}/V_1, in adapted coordinates.
  d.derived_flag.dim_V = d.vstar_dim;
  const int s = adapted.s, t = adapted.t;
  for (int i = 1; i <= n - 1; ++i) {
    const QMat& vi = flag.subspaces[i - 1];
    QMat first(vi.rows(), d.vstar_dim);
    for (int r = 0; r < vi.rows(); ++r) {
      QVec c = vec_mat(vi.row(r), d.ctx.Uinv);
      for (int j = t; j < dim; ++j)
        if (c[j] != 0) throw internal_error("build_derived: flag outside V_{n-1}");
      for (int j = 0; j < t; ++j) first(r, j) = c[j];
    }
    const QMat& vip1 = flag.subspaces[i];  // V_{i+1}
    QMat second(vip1.rows(), d.vstar_dim);
    for (int r = 0; r < vip1.rows(); ++r) {
      QVec c = vec_mat(vip1.row(r), d.ctx.Uinv);
      for (int j = s; j < dim; ++j) second(r, t + j - s) = c[j];
    }
    QMat rows = row_basis(vstack(first, second));
    const int expect = vi.rows() + vip1.rows() - s;
    if (rows.rows() != expect) throw internal_error("build_derived: derived flag dimension");
    d.derived_flag.subspaces.push_back(rows);
  }

  if (support_opt) {
    d.support = support_subspace(g, d.ctx);
  } else {
    for (int i = 0; i < d.ctx.s; ++i)
      for (int j = 0; j < d.ctx.tprime(); ++j) d.support.emplace_back(i, j);
  }
  return d;
}

NLatticeBasis n_lattice_basis(const DerivedData& d) {
  NLatticeBasis out;
  const int big = int(d.support.size());
  const int l0 = int(d.n_basis.size());
  out.wprime_rows = QMat(l0, big);
  for (int i = 0; i < l0; ++i)
    out.wprime_rows.set_row(i, flatten_eps(error_map(d.n_basis[i], d.ctx), d.support));
  if (rank(out.wprime_rows) != l0)
    throw internal_error("n_lattice_basis: ε is not injective on 𝔫");

  // Γ-basis adapted to W' ∩ Γ; its first l0 rows span Γ ∩ ε(𝔫).
  out.gamma_basis = intersect_lattice_subspace(QMat::identity(big), out.wprime_rows);
  out.gamma_basis_inv = big == 0 ? QMat(0, 0) : inverse(out.gamma_basis);
  out.m = l0;

  out.n_eps_rows = QMat(l0, big);
  for (int i = 0; i < l0; ++i) {
    QVec gamma = out.gamma_basis.row(i);
    out.n_eps_rows.set_row(i, gamma);
    auto c = solve_left(out.wprime_rows, gamma);
    if (!c) throw internal_error("n_lattice_basis: Γ ∩ ε(𝔫) outside ε(𝔫)");
    QMat x(d.ctx.dim, d.ctx.dim);
    for (int j = 0; j < l0; ++j)
      if ((*c)[j] != 0) x = x + scale(d.n_basis[j], (*c)[j]);
    out.xs.push_back(x);
  }
  return out;
}

}  // namespace unigen
