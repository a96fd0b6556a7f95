#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unigen/tsequence.hpp"

namespace unigen {

struct Options {
  bool support_optimization = true;
  bool verify = false;
};

struct ProblemFile {
  int dimension = 0;
  LieAlgebraRep rep;
  std::optional<QMat> lattice;             // default: standard Z^n
  std::optional<std::vector<QMat>> flag;   // default: computed greedily
  Options options;
};

struct PhaseTimes {
  double check = 0, flag = 0, generators = 0, verify = 0;
};

struct ResultFile {
  int dimension = 0;
  std::vector<QMat> generators;
  int hirsch_length = 0;
  std::vector<std::pair<int, int>> levels;  // (k, l) per recursion layer
  std::optional<VerifyReport> verification;
  PhaseTimes timing;
};

// Exact JSON text formats; every rational is a string "p" or "p/q".
ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& p);
ResultFile parse_result(const std::string& text);
std::string serialize_result(const ResultFile& r);

// The worked 4-dimensional fixture: 𝔤 = span{e13, e14, e23 + e34}, L = Z^4.
ProblemFile builtin_example();

}  // namespace unigen
