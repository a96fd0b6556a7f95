#pragma once

#include <vector>

#include "unigen/matrix.hpp"

namespace unigen {

// S = P * A * Q with P, Q unimodular, S diagonal with d_1 | d_2 | ... | d_r.
struct SmithDecomposition {
  ZMat S, P, Q, Pinv, Qinv;
  int rank = 0;
  ZVec diagonal;  // d_1 ... d_r, all positive
};

SmithDecomposition snf(const ZMat& a);

// Row-style Hermite normal form: positive pivots, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
struct HermiteBasis {
  ZMat H;
  std::vector<int> pivots;  // pivot column of each row, strictly increasing
};

HermiteBasis hnf(const ZMat& a);

}  // namespace unigen
