#pragma once

#include <string>
#include <vector>

#include "unigen/linalg.hpp"
#include "unigen/matrix.hpp"

namespace unigen {

// Basis X_1..X_d of a nilpotent Lie subalgebra of gl(V), acting on column
// vectors of Q^{dim_V}.
struct LieAlgebraRep {
  int dim_V = 0;
  std::vector<QMat> basis;

  int dim() const { return int(basis.size()); }
};

// Chain V_1 < ... < V_n = V with g . V_i ⊆ V_{i-1}; each subspace is stored
// as a matrix whose rows are a basis.
struct Flag {
  int dim_V = 0;
  std::vector<QMat> subspaces;

  int length() const { return int(subspaces.size()); }
};

struct RepDiagnostics {
  bool nonzero_space = false;
  bool independent = false;
  bool nilpotent = false;
  bool bracket_closed = false;
  std::vector<std::string> issues;

  bool valid() const { return nonzero_space && independent && nilpotent && bracket_closed; }
};

RepDiagnostics check_rep(const LieAlgebraRep& g);

// Greedy flag: V_1 = common kernel of the basis, then common kernels of the
// induced action on successive quotients. Throws if the chain stalls below V.
Flag compute_flag(const LieAlgebraRep& g);

bool is_flag_for(const Flag& flag, const LieAlgebraRep& g);

QMat bracket(const QMat& x, const QMat& y);

bool is_nilpotent(const QMat& x);
bool is_unipotent(const QMat& u);

QMat exp_nilpotent(const QMat& x);
QMat log_unipotent(const QMat& u);

// g^e for unipotent g and any integer e, via exp(e * log g).
QMat unipotent_power(const QMat& g, const Int& e);

}  // namespace unigen
