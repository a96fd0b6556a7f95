#include "unigen/nilpotent.hpp"

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

}  // namespace

QMat bracket(const QMat& x, const QMat& y) { return mul(x, y) - mul(y, x); }

bool is_nilpotent(const QMat& x) {
  if (!x.is_square()) return false;
  QMat p = x;
  for (int i = 1; i <= x.rows(); ++i) {
    if (p.is_zero()) return true;
    p = mul(p, x);
  }
  return p.is_zero();
}

bool is_unipotent(const QMat& u) {
  if (!u.is_square()) return false;
  return is_nilpotent(u - QMat::identity(u.rows()));
}

RepDiagnostics check_rep(const LieAlgebraRep& g) {
  RepDiagnostics d;
  d.nonzero_space = g.dim_V > 0;
  if (!d.nonzero_space) d.issues.push_back("dim V must be positive");

  d.nilpotent = true;
  for (int i = 0; i < g.dim(); ++i) {
    if (g.basis[i].rows() != g.dim_V || g.basis[i].cols() != g.dim_V) {
      d.issues.push_back("basis element " + std::to_string(i + 1) + " has wrong shape");
      d.nilpotent = false;
      return d;
    }
    if (!is_nilpotent(g.basis[i])) {
      d.nilpotent = false;
      d.issues.push_back("basis element " + std::to_string(i + 1) + " is not nilpotent");
    }
  }

  QMat rows = flatten_rows(g.basis, g.dim_V * g.dim_V);
  d.independent = rank(rows) == g.dim();
  if (!d.independent) d.issues.push_back("basis elements are linearly dependent");

  d.bracket_closed = true;
  for (int i = 0; i < g.dim() && d.bracket_closed; ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      QMat b = bracket(g.basis[i], g.basis[j]);
      if (!in_row_span(rows, flatten(b))) {
        d.bracket_closed = false;
        d.issues.push_back("bracket [X" + std::to_string(i + 1) + ", X" + std::to_string(j + 1) +
                           "] lies outside the span");
        break;
      }
    }
  return d;
}

Flag compute_flag(const LieAlgebraRep& g) {
  const int n = g.dim_V;
  if (n <= 0) throw invalid_input("compute_flag: dim V must be positive");
  Flag flag;
  flag.dim_V = n;

  QMat current(0, n);  // rows span V_k
  while (current.rows() < n) {
    // V_{k+1} = { v : X v ∈ V_k for all X }. Annihilate the column span of
    // V_k^T, then intersect the kernels of (ann ∘ X).
    QMat ann = current.rows() == 0 ? QMat::identity(n) : left_kernel(transpose(current));
    QMat stacked(0, n);
    for (const QMat& x : g.basis) stacked = vstack(stacked, mul(ann, x));
    QMat next = g.basis.empty() ? QMat::identity(n) : left_kernel(transpose(stacked));
    // Re-attach V_k so the chain is increasing and in canonical form.
    next = row_basis(vstack(next, current));
    if (next.rows() == current.rows())
      throw invalid_input("compute_flag: action is not unipotent (chain stalls)");
    flag.subspaces.push_back(next);
    current = next;
  }
  return flag;
}

bool is_flag_for(const Flag& flag, const LieAlgebraRep& g) {
  if (flag.dim_V != g.dim_V || flag.length() == 0) return false;
  const int n = flag.length();
  if (flag.subspaces[n - 1].rows() != g.dim_V || rank(flag.subspaces[n - 1]) != g.dim_V)
    return false;
  int prev_dim = 0;
  for (int i = 0; i < n; ++i) {
    const QMat& vi = flag.subspaces[i];
    if (vi.cols() != g.dim_V) return false;
    if (rank(vi) != vi.rows() || vi.rows() <= prev_dim) return false;
    prev_dim = vi.rows();
    const QMat prev = i == 0 ? QMat(0, g.dim_V) : flag.subspaces[i - 1];
    for (const QMat& x : g.basis)
      for (int r = 0; r < vi.rows(); ++r) {
        QVec image = mat_vec(x, vi.row(r));
        if (i == 0) {
          for (const Rat& c : image)
            if (c != 0) return false;
        } else if (!in_row_span(prev, image)) {
          return false;
        }
      }
  }
  return true;
}

QMat exp_nilpotent(const QMat& x) {
  if (!x.is_square()) throw invalid_input("exp: not square");
  const int n = x.rows();
  QMat acc = QMat::identity(n);
  QMat term = QMat::identity(n);
  for (int i = 1; i <= n; ++i) {
    term = scale(mul(term, x), Rat(1, i));
    if (term.is_zero()) return acc;
    if (i == n) throw invalid_input("exp: matrix is not nilpotent");
    acc = acc + term;
  }
  return acc;
}

QMat log_unipotent(const QMat& u) {
  if (!u.is_square()) throw invalid_input("log: not square");
  const int n = u.rows();
  QMat nil = u - QMat::identity(n);
  QMat acc(n, n);
  QMat power = QMat::identity(n);
  for (int i = 1; i <= n; ++i) {
    power = mul(power, nil);
    if (power.is_zero()) return acc;
    if (i == n) throw invalid_input("log: matrix is not unipotent");
    acc = acc + scale(power, Rat(i % 2 == 1 ? 1 : -1, i));
  }
  return acc;
}

QMat unipotent_power(const QMat& g, const Int& e) {
  if (e == 0) return QMat::identity(g.rows());
  if (e == 1) return g;
  return exp_nilpotent(scale(log_unipotent(g), Rat(e)));
}

}  // namespace unigen
