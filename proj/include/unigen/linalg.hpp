#pragma once

#include <optional>
#include <vector>

#include "unigen/matrix.hpp"

namespace unigen {

// In-place reduced row echelon form. Returns rank; fills pivot columns if given.
int rref(QMat& a, std::vector<int>* pivots = nullptr);

int rank(QMat a);

// Rows form a basis of { v : v * A = 0 }.
QMat left_kernel(const QMat& a);

// Rows of `a` reduced to a basis of the row space (RREF rows, canonical).
QMat row_basis(QMat a);

// Solves x * A = b; empty if b is outside the row span. Free coordinates are
// set to zero, so the answer is the RREF pivot solution and deterministic.
std::optional<QVec> solve_left(const QMat& a, const QVec& b);

bool in_row_span(const QMat& a, const QVec& v);

QMat inverse(const QMat& a);

Rat det(QMat a);

}  // namespace unigen
