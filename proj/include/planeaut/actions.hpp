#pragma once
// Diagonal projective actions of finite order on plane-curve coordinates:
// weight classes, invariant-monomial enumeration, normal forms with fresh
// parameters, conjugacy testing for the generated cyclic subgroups, and the
// finite group of diagonal coordinate changes identifying members of a family.
//
// An action of order m with exponents (a, b) is the projective transformation
// diag(1, zeta_m^a, zeta_m^b).  A monomial X^i Y^j Z^k picks up the scalar
// zeta_m^(a*j + b*k); its weight is that exponent mod m.  A form is invariant
// up to scalar iff its support lies in a single weight class.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/forms.hpp"

namespace planeaut {

struct ActionError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// The weight class cannot carry a smooth curve: some variable has exponent
// < d-1 in every monomial of the class, so the reference point on that
// variable's axis is forced to be singular.
struct DegenerateClass : ActionError {
  using ActionError::ActionError;
};

// Every monomial of the class is divisible by one fixed variable; each member
// of the family factors and the curve is never irreducible.
struct ForcedFactor : ActionError {
  using ActionError::ActionError;
};

// The reference monomials do not pin the diagonal rescalings down to a finite
// group (exponent-difference lattice has rank < 2).
struct InfiniteNormalizer : ActionError {
  using ActionError::ActionError;
};

// diag(1, zeta_m^a, zeta_m^b) of exact projective order m.  Triples whose
// element has order < m (gcd(m, a, b) > 1) are rejected at construction.
// Table rows use the normalized shape a < b; powers of such elements may not,
// so ordering is not required here and is_table_type() reports it instead.
class DiagAction {
 public:
  DiagAction(int m, int a, int b);

  int order() const { return m_; }
  int a() const { return a_; }
  int b() const { return b_; }

  bool is_table_type() const { return a_ < b_; }
  // Fixes a line pointwise and a point off it: two of the three eigenvalues
  // 1, zeta^a, zeta^b coincide.
  bool is_homology() const { return a_ == 0 || b_ == 0 || a_ == b_; }

  int weight(const Monomial& mon) const;
  ProjMatrix matrix() const;

  // The action generated the same way by the u-th power.  Throws ActionError
  // when the power is the identity (u = 0 mod m).
  DiagAction power(long u) const;

  std::string str() const;  // "8,(1,4)"

  friend bool operator==(const DiagAction& x, const DiagAction& y) = default;

 private:
  int m_, a_, b_;
};

// All degree-d monomials of the given weight class, in graded-lex order with
// X > Y > Z descending (display order).
std::vector<Monomial> invariant_monomials(int d, const DiagAction& act, int w);

// A family of invariant curves: unit coefficients on the reference monomials,
// a fresh parameter on every other monomial of the weight class.
struct NormalForm {
  TernaryForm base;
  DiagAction action;
  int weight_class;
  std::vector<Monomial> reference;
  std::vector<std::string> parameters;  // fresh names, display order
};

// Reference monomials must be non-empty, of degree d and of one common
// weight; the class is derived from them.  The parameterless overload takes
// the weight class directly and normalizes nothing.
NormalForm normal_form(int d, const DiagAction& act,
                       const std::vector<Monomial>& reference);
NormalForm normal_form(int d, const DiagAction& act, int weight_class);

// Outcome of testing whether two actions generate conjugate subgroups of the
// projective group.  When conjugate, relabeling coordinates by `permutation`
// (slot i takes old slot permutation[i]) turns t1 into t2^power.  When not,
// `invariant` names a conjugation-stable statistic telling them apart.
struct ConjugacyResult {
  bool conjugate = false;
  std::optional<std::array<int, 3>> permutation;
  std::optional<long> power;
  std::string invariant;
};

ConjugacyResult types_conjugate(const DiagAction& t1, const DiagAction& t2);

// One diagonal change of coordinates diag(1, lambda2, lambda3) preserving the
// unit coefficients of a normal form's reference monomials, together with the
// factor it induces on each parameter (after the global rescaling restoring
// reference coefficients to 1).
struct FamilyScaling {
  CycNum lambda2, lambda3;
  std::map<std::string, CycNum> parameter_multipliers;
};

struct IdentificationReport {
  std::vector<FamilyScaling> scalings;  // the full finite solution group
  // Distinct induced actions on the parameters; the quotient that actually
  // identifies family members.
  std::vector<std::map<std::string, CycNum>> induced;
};

// Solves the root-of-unity conditions cut out by the reference monomials via
// the Smith normal form of their exponent-difference lattice.  Throws
// InfiniteNormalizer when that lattice has rank < 2.
IdentificationReport family_identifications(const NormalForm& nf);

}  // namespace planeaut
