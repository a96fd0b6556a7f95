#include "unigen/normal_forms.hpp"

namespace unigen {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Elementary operations applied to S and mirrored into the transforms so
// that S = P * A * Q and P*Pinv = Q*Qinv = I stay true throughout.
struct SnfState {
  ZMat S, P, Pinv, Q, Qinv;

  void row_swap(int i, int j) {
    S.swap_rows(i, j);
    P.swap_rows(i, j);
    Pinv.swap_cols(i, j);
  }
  void col_swap(int i, int j) {
    S.swap_cols(i, j);
    Q.swap_cols(i, j);
    Qinv.swap_rows(i, j);
  }
  void row_addmul(int i, int j, const Int& c) {  // row i += c * row j
    S.addmul_row(i, j, c);
    P.addmul_row(i, j, c);
    Pinv.addmul_col(j, i, -c);
  }
  void col_addmul(int i, int j, const Int& c) {  // col i += c * col j
    S.addmul_col(i, j, c);
    Q.addmul_col(i, j, c);
    Qinv.addmul_row(j, i, -c);
  }
  void row_negate(int i) {
    S.negate_row(i);
    P.negate_row(i);
    for (int r = 0; r < Pinv.rows(); ++r) Pinv(r, i) = -Pinv(r, i);
  }
};

}  // namespace

SmithDecomposition snf(const ZMat& a) {
  const int m = a.rows(), n = a.cols();
  SnfState st{a, ZMat::identity(m), ZMat::identity(m), ZMat::identity(n), ZMat::identity(n)};
  ZMat& S = st.S;

  int t = 0;
  while (t < m && t < n) {
    // Pivot: nonzero entry of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        Int v = abs(S(i, j));
        if (pi < 0 || v < best) { best = v; pi = i; pj = j; }
      }
    if (pi < 0) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q = floor_div(S(i, t), S(t, t));
        st.row_addmul(i, t, -q);
        if (S(i, t) != 0) { st.row_swap(t, i); clean = false; }
      }
      for (int j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q = floor_div(S(t, j), S(t, t));
        st.col_addmul(j, t, -q);
        if (S(t, j) != 0) { st.col_swap(t, j); clean = false; }
      }
      if (!clean) continue;
      // Divisibility: fold in a row holding an entry the pivot does not divide.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            st.row_addmul(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) st.row_negate(t);
    ++t;
  }

  SmithDecomposition d;
  d.S = S;
  d.P = st.P;
  d.Pinv = st.Pinv;
  d.Q = st.Q;
  d.Qinv = st.Qinv;
  for (int i = 0; i < t; ++i)
    if (S(i, i) != 0) {
      d.diagonal.push_back(S(i, i));
      ++d.rank;
    }
  return d;
}

HermiteBasis hnf(const ZMat& a) {
  ZMat h = a;
  const int m = h.rows(), n = h.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    // Euclidean elimination of the column below row r.
    for (;;) {
      int piv = -1;
      Int best;
      for (int i = r; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Int v = abs(h(i, col));
        if (piv < 0 || v < best) { best = v; piv = i; }
      }
      if (piv < 0) break;
      h.swap_rows(r, piv);
      bool residue = false;
      for (int i = r + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Int q = floor_div(h(i, col), h(r, col));
        h.addmul_row(i, r, -q);
        if (h(i, col) != 0) residue = true;
      }
      if (!residue) break;
    }
    if (r < m && h(r, col) != 0) {
      if (h(r, col) < 0) h.negate_row(r);
      for (int k = 0; k < r; ++k) {
        Int q = floor_div(h(k, col), h(r, col));
        h.addmul_row(k, r, -q);
      }
      pivots.push_back(col);
      ++r;
    }
  }
  HermiteBasis hb;
  hb.H = ZMat(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) hb.H(i, j) = h(i, j);
  hb.pivots = pivots;
  return hb;
}

}  // namespace unigen
