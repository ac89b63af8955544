#pragma once

/*
 * Smith normal form of small integer matrices with unimodular transforms:
 * U * A * V = D, D diagonal with nonnegative invariant factors d1 | d2 | ...
 * Used to solve binomial systems v^a s^b = 1 (and their inhomogeneous
 * variants) over roots of unity: the solution group of the homogeneous system
 * with exponent matrix A is Z^cols / rowlattice(A), read off from D and V.
 */

#include <vector>

namespace planeaut {

struct SnfResult {
  std::vector<std::vector<long long>> U;  // rows x rows, unimodular
  std::vector<std::vector<long long>> V;  // cols x cols, unimodular
  std::vector<long long> diag;            // size min(rows, cols), d1 | d2 | ...
  int rank = 0;                           // nonzero entries of diag
};

SnfResult smith_normal_form(const std::vector<std::vector<long long>>& A);

}  // namespace planeaut
