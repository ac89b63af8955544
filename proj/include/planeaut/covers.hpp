#pragma once
// Fixed loci of diagonal cyclic actions on the projective plane, ramification
// data of the induced quotient cover, and the quotient genus forced by the
// Riemann-Hurwitz identity.
//
// A diagonal action fixes the three reference points and permutes each
// reference line.  Non-reference points of a line share one stabilizer order
// (the count of group elements acting trivially on the line), so ramification
// indices are stabilizer orders and point counts come from degrees of
// square-free parts of line restrictions -- no root is ever solved for in an
// extension field.

#include <map>
#include <string>
#include <vector>

#include "planeaut/actions.hpp"
#include "planeaut/forms.hpp"

namespace planeaut {

struct CoversError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// The Riemann-Hurwitz identity does not close with an integral non-negative
// quotient genus.  Signals singular input, a wrong action, or a miscount;
// never silently rounded.
struct NonIntegralGenus : CoversError {
  using CoversError::CoversError;
};

// The action does not preserve the curve (its support meets more than one
// weight class).
struct NotAnAutomorphism : CoversError {
  using CoversError::CoversError;
};

// Ramification data of the degree-m cyclic cover C -> C/<action>.
// entries maps ramification index e > 1 to the number of curve points with
// that index.  The constructor rejects any profile violating the exact
// Riemann-Hurwitz identity
//     2g - 2 = m(2 g0 - 2) + sum over entries of (e - 1) * count,
// an index not dividing the group order, or a non-positive count.
class RamificationProfile {
 public:
  RamificationProfile(int group_order, std::map<int, int> entries,
                      int quotient_genus, long curve_genus);

  int group_order() const { return m_; }
  const std::map<int, int>& entries() const { return entries_; }
  int quotient_genus() const { return g0_; }
  long curve_genus() const { return g_; }

  std::string str() const;

  friend bool operator==(const RamificationProfile& x,
                         const RamificationProfile& y) = default;

 private:
  int m_;
  std::map<int, int> entries_;
  int g0_;
  long g_;
};

// Fixed locus of a diagonal action, encoded as stabilizer orders: the order
// of the subgroup fixing a non-reference point of each reference line.  The
// three reference points are fixed by every power; a line is fixed pointwise
// by a power exactly when that power has a repeated eigenvalue, and the notes
// name those powers.
struct FixedLocus {
  int group_order = 0;
  int line_x0 = 1;  // {X=0}, exponent difference b-a
  int line_y0 = 1;  // {Y=0}, exponent b
  int line_z0 = 1;  // {Z=0}, exponent a
  std::vector<std::string> notes;
};

FixedLocus fixed_data(const DiagAction& act);

// Ramification profile of C -> C/<act> for the specialized curve.  The curve
// must be smooth and the action must preserve it; a violated precondition
// surfaces as NotAnAutomorphism or NonIntegralGenus.  Reference points
// contribute index group_order when they lie on the curve; each reference
// line with nontrivial stabilizer contributes its distinct non-reference
// intersection points with the line's stabilizer order as index.
RamificationProfile ramification_profile(
    const TernaryForm& F, const std::map<std::string, CycNum>& specialization,
    const DiagAction& act);

}  // namespace planeaut
