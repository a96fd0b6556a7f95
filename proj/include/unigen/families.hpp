#pragma once

#include "unigen/nilpotent.hpp"

namespace unigen {

// x_i = e_{1,i+1} (1 <= i <= n-1), x_n = sum_{j=2}^{n-1} e_{j,j+1}; dimension n.
LieAlgebraRep family_gn(int n);

// y_1 = sum i e_{i,i+1}, y_k = sum e_{i,i+k} (2 <= k <= n-1); dimension n-1.
LieAlgebraRep family_hn(int n);

}  // namespace unigen
