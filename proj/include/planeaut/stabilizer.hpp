#ifndef PLANEAUT_STABILIZER_HPP
#define PLANEAUT_STABILIZER_HPP

#include <string>
#include <vector>

#include "planeaut/forms.hpp"

namespace planeaut {

struct StabilizerError : PlaneautError {
  using PlaneautError::PlaneautError;
};
// Raised when an operation needs every coefficient pinned to a number.
struct NotSpecialized : StabilizerError {
  using StabilizerError::StabilizerError;
};
// Raised when the deduction engine would exceed its branch budget
// (PLANEAUT_BRANCH_LIMIT, default 64).
struct BranchLimitExceeded : StabilizerError {
  using StabilizerError::StabilizerError;
};

enum class Completeness {
  DiagonalOnly,
  MonomialComplete,
  ReducesToDiagonalCertified,
};
std::string to_string(Completeness c);

// Every matrix listed in a report satisfies substitute(F, E) = c*F for a
// nonzero scalar c; this is re-verified before the report is returned.
struct StabilizerReport {
  std::vector<ProjMatrix> diagonal_generators;
  std::vector<long> invariant_factors;  // nontrivial factors, each dividing the next
  std::vector<ProjMatrix> monomial_elements;  // sorted by canonical matrix key
  bool infinite = false;
  long total_order = 0;  // meaningful only when !infinite
  Completeness completeness = Completeness::DiagonalOnly;
  std::vector<std::string> assumed_nonzero;  // parameters treated as units
  std::vector<std::string> notes;
};

// Diagonal projective transformations diag(1, v, s) sending the form to a
// scalar multiple of itself.  Depends only on the support: coefficients
// (including parameters, recorded in assumed_nonzero) are treated as nonzero.
StabilizerReport diagonal_stabilizer(const TernaryForm& F);

// All permutation-times-diagonal projective transformations stabilizing F up
// to a scalar.  Requires a fully specialized form.
StabilizerReport monomial_stabilizer(const TernaryForm& F);

enum class BlockShape { FixX, FixY, FixZ };
std::string to_string(BlockShape s);

struct BlockCertificate {
  BlockShape shape;
  bool reduces_to_diagonal = false;
  std::vector<std::string> eliminations;  // rule applications, in order
  std::vector<std::string> residual;      // constraints no rule could resolve
  int branches_explored = 0;
};

// Deduction engine for one coordinate-respecting candidate shape.  FixX means
// the candidate [X; vY+wZ; sY+tZ]; the other shapes fix Y or Z instead.  Each
// coefficient of F composed with the candidate that lands outside the support
// must vanish; the engine sets unknowns to zero when a vanishing coefficient
// is a unit times a power of one unknown, branches on single products,
// prunes branches whose 2x2 block determinant or support coefficient dies,
// and reports reduces_to_diagonal when only the w = s = 0 branch survives.
BlockCertificate block_reduce(const TernaryForm& F, BlockShape shape);

// Merge of the three block certificates with the diagonal and monomial
// computations; completeness is ReducesToDiagonalCertified when all three
// shapes certify and the permutation search was exhaustive.
StabilizerReport aut_lower_bound(const TernaryForm& F);

}  // namespace planeaut

#endif  // PLANEAUT_STABILIZER_HPP
