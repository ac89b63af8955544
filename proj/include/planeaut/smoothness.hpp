#pragma once
// Smoothness certification for plane curves over cyclotomic fields.
//
// Three routes to a verdict:
//   core_necessary     support-level necessary condition (each variable must
//                      reach exponent degree-1 somewhere)
//   is_smooth          exact: per-patch elimination of the partial-derivative
//                      system via Sylvester resultants, univariate gcds and
//                      square-free parts, with dynamic evaluation on the
//                      candidate locus
//   finite_field_check independent oracle: reduce the coefficients into a
//                      prime field and scan every projective point
//
// A singular verdict carries a witness; when the witness coordinates are
// explicit field elements, the form and all three partials vanish on them
// exactly (this is re-verified before the certificate is returned).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/forms.hpp"

namespace planeaut {

struct SmoothnessError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// Requested prime is incompatible with the cyclotomic orders of the
// coefficients (needs p = 1 mod n for every order n).
struct NoRootOfUnity : SmoothnessError {
  using SmoothnessError::SmoothnessError;
};

// Every deterministic shear produced a degenerate elimination; the caller
// receives verdict `undetermined` rather than a guess.
struct ShearExhausted : SmoothnessError {
  using SmoothnessError::SmoothnessError;
};

enum class Verdict { Smooth, Singular, Undetermined };
std::string to_string(Verdict v);

struct SingularWitness {
  // "X=1", "X=0,Y=1", "[1:0:0]", or "mod p" for finite-field witnesses.
  std::string patch;
  // Defining univariate polynomials for coordinates that are not explicit.
  std::vector<std::string> minimal_polynomials;
  // Exact coordinate values, projective, when they lie in the coefficient
  // field (finite-field witnesses list residues instead).
  std::vector<std::string> coordinates;
};

struct SmoothnessCertificate {
  Verdict verdict = Verdict::Undetermined;
  std::string method;  // "core-check" | "resultant" | "finite-field"
  std::optional<SingularWitness> witness;
  std::vector<std::string> notes;
};

// True iff every variable attains exponent >= degree-1 in some support
// monomial.  False guarantees a singular coordinate point.
bool core_necessary(const TernaryForm& F);

// Exact smoothness decision after applying `specialization`.  All parameters
// must be assigned.  Verdict `undetermined` is only returned when every
// elimination attempt (including the shear retries) degenerates; it is never
// a wrong answer.
SmoothnessCertificate is_smooth(
    const TernaryForm& F,
    const std::map<std::string, CycNum>& specialization = {});

struct FiniteFieldResult {
  SmoothnessCertificate certificate;
  long long point_count = 0;  // number of projective points on the reduction
};

// Reduce the specialized form modulo p (p = 1 mod every coefficient order)
// and scan the p^2+p+1 projective points for curve membership and singular
// points.  Throws NoRootOfUnity for incompatible p; p above the
// theory-validity threshold (degree-1)(degree-2)+1 is recorded as a note,
// a smaller p only adds a threshold warning.  The scan cap is
// PLANEAUT_MAX_PRIME (default 10000).
FiniteFieldResult finite_field_check(
    const TernaryForm& F, const std::map<std::string, CycNum>& specialization,
    long long p);

// Smallest prime p with p > (d-1)(d-2)+1 and p = 1 mod lcm(orders).
long long minimal_valid_prime(int d, const std::vector<long long>& orders);

}  // namespace planeaut
