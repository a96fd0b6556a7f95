#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unigen/derived.hpp"

namespace unigen {

// One layer of the recursion. Base layers (flag length 1) carry no data.
struct Level {
  int flag_length = 1;
  int k = 0, l = 0;
  std::shared_ptr<DerivedData> data;
  NLatticeBasis nl;
  ZMat relation_hnf;               // 𝒲, rows e^{(i)}, Hermite normal form
  std::vector<int> relation_pivots;
  std::vector<QMat> gq;            // g_{q_i}, preimages of the q-sequence
  std::vector<QMat> gens_g;        // g_1..g_k
  std::vector<QMat> gens_n;        // n_1..n_l
  std::shared_ptr<Level> sub;      // recursion on (V★, L★, 𝔮)

  std::vector<QMat> sequence() const;  // g's then n's
};

struct TSequenceResult {
  int dim_V = 0;
  QMat lattice_basis;              // rows span L in the original coordinates
  LieAlgebraRep rep;               // original representation
  std::vector<QMat> generators;    // T-sequence in the original coordinates
  std::shared_ptr<Level> root;     // recursion record (lattice coordinates)

  int hirsch_length() const { return int(generators.size()); }
  std::vector<std::pair<int, int>> level_sizes() const;
};

// Main algorithm: a T-sequence for G_L. The lattice may have any rational
// basis; coordinates are normalized once so that internally L = Z^n.
TSequenceResult compute_generators(const Lattice& L, const LieAlgebraRep& g, const Flag& flag,
                                   bool support_opt = true);

// Convenience entry: standard lattice and greedily computed flag.
TSequenceResult compute_generators(const LieAlgebraRep& g, bool support_opt = true);

// HNF basis of { e in Z^k : Σ e_i u_i ∈ Γ + W' }, where the u_i are flattened
// ε-images, Γ = Z^M and W' is spanned by the given rows.
HermiteBasis kernel_relation_lattice(const QMat& us, const QMat& wprime_rows);

// Repairs g_w so that ε becomes integral: returns g_w · exp(n_w) ∈ G_L.
QMat correction_step(const QMat& g_w, const Level& lvl);

// Exponent vector of g over the T-sequence, or nullopt if g is not in the
// generated group. Throws on non-unipotent or wrongly sized input.
std::optional<ZVec> member(const QMat& g, const TSequenceResult& res);

struct VerifyReport {
  bool preserves_lattice = false;
  bool count_ok = false;
  bool log_span_ok = false;
  bool centrality_ok = false;
  std::vector<std::string> issues;

  bool all_ok() const { return preserves_lattice && count_ok && log_span_ok && centrality_ok; }
};

VerifyReport verify(const TSequenceResult& res);

// The four checks of verify() on a bare generator list (for re-checking
// result files without the recursion record; centrality degrades to a
// pairwise commutation check of nothing and is reported as passed).
VerifyReport verify_generators(const std::vector<QMat>& gens, const Lattice& L,
                               const LieAlgebraRep& g);

// True iff g maps L bijectively onto itself.
bool preserves_lattice(const QMat& g, const Lattice& L);

}  // namespace unigen
