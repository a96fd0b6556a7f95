#include "unigen/families.hpp"

namespace unigen {

namespace {

QMat unit(int n, int i, int j) {  // 1-based e_{i,j}
  QMat m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

}  // namespace

LieAlgebraRep family_gn(int n) {
  if (n < 3) throw invalid_input("family gn needs n >= 3");
  LieAlgebraRep g{n, {}};
  for (int i = 1; i <= n - 1; ++i) g.basis.push_back(unit(n, 1, i + 1));
  QMat xn(n, n);
  for (int j = 2; j <= n - 1; ++j) xn(j - 1, j) = 1;
  g.basis.push_back(xn);
  return g;
}

LieAlgebraRep family_hn(int n) {
  if (n < 4) throw invalid_input("family hn needs n >= 4");
  LieAlgebraRep g{n, {}};
  QMat y1(n, n);
  for (int i = 1; i <= n - 1; ++i) y1(i - 1, i) = i;
  g.basis.push_back(y1);
  for (int k = 2; k <= n - 1; ++k) {
    QMat yk(n, n);
    for (int i = 1; i <= n - k; ++i) yk(i - 1, i - 1 + k) = 1;
    g.basis.push_back(yk);
  }
  return g;
}

}  // namespace unigen
