#pragma once
// The exceptional finite subgroups of the plane projective group that a curve
// automorphism group can hit: the order-216 group generated by the classical
// quadruple S, T, U, V over Q(omega) and its primitive subgroups of orders 36
// and 72, together with the reference curves (Fermat, Klein), spaces of forms
// invariant under a set of projective transformations, descendant detection
// via the core of a form, and the Upsilon/Gamma apparatus used to rule out
// Fermat descendants in degree six.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planeaut/forms.hpp"
#include "planeaut/qpoly.hpp"

namespace planeaut {

struct SpecialGroupsError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// Breadth-first closure exceeded its element cap without closing.
struct CapExceeded : SpecialGroupsError {
  using SpecialGroupsError::SpecialGroupsError;
};

// Smallest r >= 1 with M^r a scalar matrix.  Throws SpecialGroupsError when
// no such r <= cap exists (the transformation has infinite projective order
// or the cap is too small).
int projective_order(const ProjMatrix& M, int cap = 200);

// A finite group of projective transformations, stored as the canonical
// (first-nonzero-entry-normalized) matrices sorted by their print form.  The
// constructor verifies closure under products, the presence of the identity,
// and that the order equals the element count.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(std::vector<ProjMatrix> elements,
                    std::map<std::string, ProjMatrix> generators);

  const std::vector<ProjMatrix>& elements() const { return elements_; }
  const std::map<std::string, ProjMatrix>& generators() const {
    return generators_;
  }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(const ProjMatrix& M) const;

  // order of each element -> how many elements have it
  std::map<int, int> element_order_multiset() const;

 private:
  std::vector<ProjMatrix> elements_;
  std::map<std::string, ProjMatrix> generators_;
  std::set<std::string> keys_;
};

// Breadth-first closure of the generators under products, with projective
// canonicalization.  Deterministic: the element list depends only on the
// generator set.  Throws CapExceeded past `cap` distinct elements.
FiniteMatrixGroup closure(const std::map<std::string, ProjMatrix>& generators,
                          int cap = 1000);

// Every sub-element stays in `sub` under conjugation by every element of
// `super` (and sub's elements all lie in super).
bool is_normal_in(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& super);

// The classical generators over Q(omega).
ProjMatrix hessian_S();  // diag(1, omega, omega^2)
ProjMatrix hessian_U();  // diag(1, 1, omega)
ProjMatrix hessian_V();  // the symmetric 3x3 root-of-unity matrix
ProjMatrix hessian_T();  // the 3-cycle X -> Y -> Z -> X

// The group of the requested order (36, 72 or 216) in the fixed
// representation: <S,T,V>, <S,T,V,UVU^-1>, <S,T,U,V>.
FiniteMatrixGroup hessian_group(int order);

// One space of degree-d forms on which every supplied transformation acts by
// the recorded scalar.
struct InvariantSpace {
  std::vector<std::string> characters;  // scalar per element, aligned
  std::vector<TernaryForm> basis;
};

// All spaces of degree-d forms invariant up to scalar under every element,
// one entry per character combination with a nonzero space.  Scalars range
// over roots of unity of order dividing three times each element's projective
// order.  Requires 1 <= d <= 9 and specialized elements.
std::vector<InvariantSpace> invariant_forms(
    const std::vector<ProjMatrix>& elements, int d);

enum class ReferenceKind { Fermat, Klein };

struct ReferenceCurve {
  TernaryForm form;
  long expected_order;  // of the full automorphism group
};

// X^d+Y^d+Z^d with order 6d^2, or X^{d-1}Y+Y^{d-1}Z+Z^{d-1}X with order
// 3(d^2-3d+3).  Requires d >= 4.
ReferenceCurve reference_curve(ReferenceKind kind, int d);

// The monomials of F in which some variable reaches exponent d-1 or d.
TernaryForm core(const TernaryForm& F);

struct DescendantReport {
  bool fermat_core = false;  // core(F) is the Fermat form after normalization
  bool klein_core = false;
  long fermat_order = 0;  // 6d^2
  long klein_order = 0;   // 3(d^2-3d+3)
  // set when a candidate group order was supplied
  std::optional<bool> order_divides_fermat;
  std::optional<bool> order_divides_klein;
  std::string core_str;
};

DescendantReport descendant_check(const TernaryForm& F,
                                  std::optional<long> candidate_order = {});

// The three cube roots of omega (as lambda' with lambda'^3 = omega).
std::vector<CycNum> lambda_prime_choices();

struct UpsilonValues {
  CycNum u1, u2, u3, u4;
  bool in_gamma = false;  // nonzero inputs, u1 = 1 and u2 = u3 = omega^2*u4
};

// Exact evaluation of the four degree-six obstruction polynomials at
// (b1, b2, b3) for the given cube root choice.  Throws unless
// lambda_prime^3 = omega.
UpsilonValues upsilon(const CycNum& b1, const CycNum& b2, const CycNum& b3,
                      const CycNum& lambda_prime);

// The defining conditions of Gamma as polynomials in b1, b2, b3:
// {Upsilon1 - 1, Upsilon2 - Upsilon3, Upsilon3 - omega^2*Upsilon4}.  For
// every admissible cube root the last two cancel coefficient by coefficient,
// so membership is decided by the first alone.
std::array<ParamPoly, 3> gamma_conditions(const CycNum& lambda_prime);

// First coordinates of the supplied triples that lie in Gamma.
std::vector<CycNum> gamma_first_coordinates(
    const std::vector<std::array<CycNum, 3>>& candidates,
    const CycNum& lambda_prime);

// Best-effort elimination toward a univariate polynomial whose root set
// contains every first coordinate of Gamma for this cube root choice.
// Because the two side conditions cancel identically, the locus is the
// surface Upsilon1 = 1 and its first coordinates fill all of K*; only the
// zero polynomial vanishes on that projection, so poly is zero and the label
// records the collapse.  The cap bounds intermediate sizes if the resultant
// cascade ever does run (CapExceeded).
struct GammaElimination {
  QPoly poly;  // in the first coordinate; zero when no certificate exists
  std::string label;
};

GammaElimination gamma_elimination(const CycNum& lambda_prime,
                                   int term_cap = 20000);

}  // namespace planeaut
