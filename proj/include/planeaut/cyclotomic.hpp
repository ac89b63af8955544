#pragma once

/*
 * Exact arithmetic in cyclotomic fields Q(zeta_n).
 *
 * A CycNum is stored as a vector of rationals: the coordinates in the power
 * basis 1, z, ..., z^(phi(n)-1) of Q[x]/(Phi_n(x)), always reduced mod the
 * n-th cyclotomic polynomial.  Rationals are GMP mpq_class; there is no
 * floating point anywhere in this module.  Mixed-order arithmetic embeds both
 * operands into Q(zeta_lcm) first; a global ambient-order cap rejects
 * runaway orders early.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planeaut {

using Rat = mpq_class;

struct PlaneautError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// Default 2520 = lcm(1..10); every order constructed (including the lcm taken
// for mixed-order arithmetic) must stay <= this bound.
int cyclotomic_order_cap();
void set_cyclotomic_order_cap(int cap);

long euler_phi(long n);
std::vector<long> divisors(long n);

// Coefficients of Phi_n, constant term first, monic, degree phi(n).  Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

class CycNum {
 public:
  CycNum();                       // zero (order 1)
  explicit CycNum(long v);
  explicit CycNum(const Rat& v);  // rational, order 1
  CycNum(int order, std::vector<Rat> coeffs);  // reduced mod Phi_order

  static CycNum zeta(int n, long k = 1);  // zeta_n^k, stored at order n/gcd(n,k)

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // value lies in Q (not merely order()==1)
  std::optional<Rat> as_rational() const;

  // Re-expresses the value over Q(zeta_m); requires order() | m.
  CycNum embedded(int m) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  CycNum inverse() const;  // throws CycError on zero
  CycNum pow(long e) const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // If the value is a root of unity, returns (N, e) with value == zeta_N^e,
  // N minimal and gcd(e, N) = 1 (N = 1, e = 0 for the value 1).
  std::optional<std::pair<int, long>> as_root_of_unity() const;
  std::optional<int> multiplicative_order() const;

  // Re-expresses a root of unity in its minimal cyclotomic field, so that
  // equal roots computed in different ambient fields share one key(); other
  // values are returned unchanged.
  CycNum canonical() const;

  // Deterministic display / map-key string, e.g. "1/2", "zeta(8)^3", "(1 + zeta(5)^2)".
  std::string str() const;
  std::string key() const;  // compact canonical key for hashing/dedup

 private:
  int order_;
  std::vector<Rat> c_;  // size phi(order_)

  void fold_();
  void reduce_();
};

CycNum cyc_one();
CycNum cyc_zero();

long lcm_long(long a, long b);

}  // namespace planeaut
