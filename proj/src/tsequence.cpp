#include "unigen/tsequence.hpp"

namespace unigen {

namespace {

QVec flatten(const QMat& m) {
  QVec v;
  v.reserve(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

QMat flatten_rows(const std::vector<QMat>& ms, int cols) {
  QMat r(int(ms.size()), cols);
  for (std::size_t i = 0; i < ms.size(); ++i) r.set_row(int(i), flatten(ms[i]));
  return r;
}

bool all_integral(const QVec& v, int from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i].get_den() != 1) return false;
  return true;
}

// Recursion with the standard lattice Z^n.
std::shared_ptr<Level> compute_level(const LieAlgebraRep& g, const Flag& flag, bool support_opt) {
  auto lvl = std::make_shared<Level>();
  lvl->flag_length = flag.length();
  if (flag.length() == 1) {
    for (const QMat& x : g.basis)
      if (!x.is_zero()) throw invalid_input("flag of length 1 requires a trivial action");
    return lvl;
  }

  lvl->data = std::make_shared<DerivedData>(build_derived(g, flag, support_opt));
  const DerivedData& d = *lvl->data;

  LieAlgebraRep q{d.vstar_dim, d.q_basis};
  lvl->sub = compute_level(q, d.derived_flag, support_opt);
  std::vector<QMat> q_seq = lvl->sub->sequence();
  const int kq = int(q_seq.size());

  lvl->nl = n_lattice_basis(d);
  lvl->l = int(lvl->nl.xs.size());
  for (const QMat& x : lvl->nl.xs) lvl->gens_n.push_back(exp_nilpotent(x));

  QMat us(kq, int(d.support.size()));
  for (int i = 0; i < kq; ++i) {
    QMat x = preimage_dpi(d, log_unipotent(q_seq[i]));
    lvl->gq.push_back(exp_nilpotent(x));
    us.set_row(i, flatten_eps(error_map(lvl->gq.back(), d.ctx), d.support));
  }

  HermiteBasis rel = kernel_relation_lattice(us, lvl->nl.wprime_rows);
  if (rel.H.rows() != kq)
    throw internal_error("relation lattice is not full: ε-images of infinite order");
  lvl->relation_hnf = rel.H;
  lvl->relation_pivots = rel.pivots;
  lvl->k = kq;

  for (int i = 0; i < kq; ++i) {
    QMat gw = QMat::identity(flag.dim_V);
    for (int j = 0; j < kq; ++j)
      if (rel.H(i, j) != 0) gw = mul(gw, unipotent_power(lvl->gq[j], rel.H(i, j)));
    lvl->gens_g.push_back(correction_step(gw, *lvl));
  }
  return lvl;
}

void collect_centrality(const Level& lvl, VerifyReport& rep) {
  auto seq = lvl.sequence();
  for (std::size_t i = 0; i < lvl.gens_n.size(); ++i)
    for (const QMat& h : seq)
      if (mul(lvl.gens_n[i], h) != mul(h, lvl.gens_n[i])) {
        rep.centrality_ok = false;
        rep.issues.push_back("central generator n_" + std::to_string(i + 1) +
                             " fails to commute");
        return;
      }
  if (lvl.sub) collect_centrality(*lvl.sub, rep);
}

std::optional<ZVec> peel(QMat g, const Level& lvl) {
  const int n = g.rows();
  if (lvl.flag_length == 1)
    return g == QMat::identity(n) ? std::optional<ZVec>(ZVec{}) : std::nullopt;
  const DerivedData& d = *lvl.data;
  ZVec exps;
  for (int j = 0; j < lvl.k; ++j) {
    auto f = peel(derived_of(g, d.ctx), *lvl.sub);
    if (!f) return std::nullopt;
    const int ij = lvl.relation_pivots[j];
    for (int i = 0; i < ij; ++i)
      if ((*f)[i] != 0) return std::nullopt;
    const Int& lead = lvl.relation_hnf(j, ij);
    if ((*f)[ij] % lead != 0) return std::nullopt;
    Int a = (*f)[ij] / lead;
    exps.push_back(a);
    if (a != 0) g = mul(unipotent_power(lvl.gens_g[j], -a), g);
  }
  {
    auto f = peel(derived_of(g, d.ctx), *lvl.sub);
    if (!f) return std::nullopt;
    for (const Int& e : *f)
      if (e != 0) return std::nullopt;
  }
  // Remaining piece lies in N(Q); its log must sit in 𝔫 with ε in the
  // integral span of the lattice basis ε(x_i).
  QMat x = log_unipotent(g);
  if (!d.n_basis.empty()) {
    QMat nrows = flatten_rows(d.n_basis, n * n);
    if (!in_row_span(nrows, flatten(x))) return std::nullopt;
  } else if (!x.is_zero()) {
    return std::nullopt;
  }
  QVec e = flatten_eps(error_map(x, d.ctx), d.support);
  auto b = solve_left(lvl.nl.n_eps_rows, e);
  if (!b || !all_integral(*b)) return std::nullopt;
  for (const Rat& c : *b) exps.push_back(c.get_num());
  return exps;
}

}  // namespace

std::vector<QMat> Level::sequence() const {
  std::vector<QMat> seq = gens_g;
  seq.insert(seq.end(), gens_n.begin(), gens_n.end());
  return seq;
}

std::vector<std::pair<int, int>> TSequenceResult::level_sizes() const {
  std::vector<std::pair<int, int>> sizes;
  for (const Level* lvl = root.get(); lvl; lvl = lvl->sub.get())
    if (lvl->flag_length > 1) sizes.emplace_back(lvl->k, lvl->l);
  return sizes;
}

HermiteBasis kernel_relation_lattice(const QMat& us, const QMat& wprime_rows) {
  const int k = us.rows(), big = us.cols();
  if (wprime_rows.cols() != big) throw invalid_input("kernel_relation_lattice: shape mismatch");
  QMat gamma = intersect_lattice_subspace(QMat::identity(big), wprime_rows);
  const int m = wprime_rows.rows();
  QMat ginv = big == 0 ? QMat(0, 0) : inverse(gamma);
  QMat psi(k, big - m);
  for (int i = 0; i < k; ++i) {
    QVec c = vec_mat(us.row(i), ginv);
    for (int j = m; j < big; ++j) psi(i, j - m) = c[j];
  }
  return hnf(integral_relations(psi));
}

QMat correction_step(const QMat& g_w, const Level& lvl) {
  const DerivedData& d = *lvl.data;
  const NLatticeBasis& nl = lvl.nl;
  QVec c = flatten_eps(error_map(g_w, d.ctx), d.support);
  QVec coords = nl.gamma_basis_inv.rows() == 0 ? QVec{} : vec_mat(c, nl.gamma_basis_inv);
  if (!all_integral(coords, nl.m))
    throw internal_error("correction_step: ε(g_w) outside Γ + W'");
  // v = W'-part of ε(g_w); its ε-preimage in 𝔫 cancels it.
  QVec v(c.size());
  for (int i = 0; i < nl.m; ++i)
    if (coords[i] != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * nl.gamma_basis(i, int(j));
  for (auto& x : v) x = -x;
  auto b = solve_left(nl.wprime_rows, v);
  if (!b) throw internal_error("correction_step: W' decomposition failed");
  QMat nw(d.ctx.dim, d.ctx.dim);
  for (std::size_t i = 0; i < b->size(); ++i)
    if ((*b)[i] != 0) nw = nw + scale(d.n_basis[i], (*b)[i]);
  return mul(g_w, exp_nilpotent(nw));
}

TSequenceResult compute_generators(const Lattice& L, const LieAlgebraRep& g, const Flag& flag,
                                   bool support_opt) {
  if (g.dim_V <= 0) throw invalid_input("compute_generators: dim V must be positive");
  if (L.dim != g.dim_V || flag.dim_V != g.dim_V)
    throw invalid_input("compute_generators: dimension mismatch");

  TSequenceResult res;
  res.dim_V = g.dim_V;
  res.lattice_basis = L.basis;
  res.rep = g;

  // Change coordinates so the lattice becomes Z^n: X -> (U^T)^{-1} X U^T.
  const bool standard = L.basis == QMat::identity(g.dim_V);
  QMat ut = transpose(L.basis);
  QMat ut_inv = standard ? ut : inverse(ut);
  LieAlgebraRep gn{g.dim_V, {}};
  for (const QMat& x : g.basis)
    gn.basis.push_back(standard ? x : mul(mul(ut_inv, x), ut));
  Flag fn{g.dim_V, {}};
  QMat uinv = standard ? L.basis : inverse(L.basis);
  for (const QMat& sub : flag.subspaces)
    fn.subspaces.push_back(standard ? sub : mul(sub, uinv));

  if (!is_flag_for(fn, gn)) throw invalid_input("compute_generators: not a flag for the action");

  res.root = compute_level(gn, fn, support_opt);
  for (const QMat& h : res.root->sequence())
    res.generators.push_back(standard ? h : mul(mul(ut, h), ut_inv));
  return res;
}

TSequenceResult compute_generators(const LieAlgebraRep& g, bool support_opt) {
  return compute_generators(Lattice::standard(g.dim_V), g, compute_flag(g), support_opt);
}

bool preserves_lattice(const QMat& g, const Lattice& L) {
  // Coordinates of the images of the basis rows: integral with det ±1.
  QMat c = mul(mul(L.basis, transpose(g)), inverse(L.basis));
  if (!is_integral(c)) return false;
  Rat dt = det(c);
  return dt == 1 || dt == -1;
}

std::optional<ZVec> member(const QMat& g, const TSequenceResult& res) {
  if (g.rows() != res.dim_V || g.cols() != res.dim_V)
    throw invalid_input("member: wrong dimension");
  if (!is_unipotent(g)) throw invalid_input("member: element is not unipotent");
  if (!preserves_lattice(g, Lattice{res.dim_V, res.lattice_basis})) return std::nullopt;

  const bool standard = res.lattice_basis == QMat::identity(res.dim_V);
  QMat gs = g;
  if (!standard) {
    QMat ut = transpose(res.lattice_basis);
    gs = mul(mul(inverse(ut), g), ut);
  }
  // g must lie in G(Q) at all: log g in the span of 𝔤.
  QMat logs = log_unipotent(gs);
  QMat grows(res.rep.dim(), res.dim_V * res.dim_V);
  for (int i = 0; i < res.rep.dim(); ++i) {
    QMat x = res.rep.basis[i];
    if (!standard) {
      QMat ut = transpose(res.lattice_basis);
      x = mul(mul(inverse(ut), x), ut);
    }
    grows.set_row(i, flatten(x));
  }
  if (res.rep.dim() == 0) {
    if (!logs.is_zero()) return std::nullopt;
  } else if (!in_row_span(grows, flatten(logs))) {
    return std::nullopt;
  }
  return peel(gs, *res.root);
}

VerifyReport verify(const TSequenceResult& res) {
  VerifyReport rep = verify_generators(res.generators, Lattice{res.dim_V, res.lattice_basis},
                                       res.rep);
  rep.centrality_ok = true;
  if (res.root) collect_centrality(*res.root, rep);
  return rep;
}

VerifyReport verify_generators(const std::vector<QMat>& gens, const Lattice& L,
                               const LieAlgebraRep& g) {
  VerifyReport rep;
  rep.preserves_lattice = true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!preserves_lattice(gens[i], L)) {
      rep.preserves_lattice = false;
      rep.issues.push_back("generator " + std::to_string(i + 1) + " does not preserve L");
    }

  rep.count_ok = int(gens.size()) == g.dim();
  if (!rep.count_ok)
    rep.issues.push_back("generator count " + std::to_string(gens.size()) +
                         " != dim 𝔤 = " + std::to_string(g.dim()));

  const int n2 = g.dim_V * g.dim_V;
  QMat logs(0, n2);
  bool logs_ok = true;
  for (const QMat& h : gens) {
    try {
      logs = vstack(logs, QMat(1, n2, flatten(log_unipotent(h))));
    } catch (const invalid_input&) {
      logs_ok = false;
      rep.issues.push_back("generator is not unipotent");
    }
  }
  QMat grows = flatten_rows(g.basis, n2);
  rep.log_span_ok = logs_ok && rank(grows) == g.dim() &&
                    rank(vstack(logs, grows)) == rank(logs) && rank(logs) == g.dim();
  if (!rep.log_span_ok && logs_ok) rep.issues.push_back("log-span of output differs from 𝔤");

  rep.centrality_ok = true;  // refined by verify() when level records exist
  return rep;
}

}  // namespace unigen
