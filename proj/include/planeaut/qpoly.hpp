#ifndef PLANEAUT_QPOLY_HPP
#define PLANEAUT_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "planeaut/cyclotomic.hpp"

namespace planeaut {

struct QPolyError : PlaneautError {
  using PlaneautError::PlaneautError;
};

// Univariate polynomial with cyclotomic coefficients, dense in the power
// basis.  Coefficient i belongs to the i-th power; trailing zeros are trimmed
// so degree() reads off the representation directly.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const CycNum& c);
  explicit QPoly(const Rat& c);
  explicit QPoly(std::vector<CycNum> coeffs);
  static QPoly monomial(int deg, const CycNum& c = cyc_one());

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const CycNum& coeff(size_t i) const;
  const CycNum& leading() const;
  const std::vector<CycNum>& coeffs() const { return c_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly scaled(const CycNum& c) const;
  QPoly shifted(int k) const;  // multiply by the k-th power of the variable
  QPoly monic() const;         // throws on the zero polynomial
  QPoly derivative() const;
  CycNum eval(const CycNum& x) const;
  QPoly pow(long e) const;

  std::string str(const std::string& var = "y") const;

 private:
  void trim_();
  std::vector<CycNum> c_;
};

// Quotient and remainder with deg(rem) < deg(divisor); divisor must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& num, const QPoly& den);

// Division known to leave no remainder (throws if it does).
QPoly exact_div(const QPoly& num, const QPoly& den);

// Monic greatest common divisor (zero when both inputs are zero).
QPoly poly_gcd(QPoly a, QPoly b);

struct ExtendedGcd {
  QPoly g, s, t;  // s*a + t*b == g, with g monic unless zero
};
ExtendedGcd poly_extended_gcd(const QPoly& a, const QPoly& b);

// Monic product of the distinct irreducible factors.
QPoly squarefree_part(const QPoly& p);

// Fraction-free determinant of a square matrix of polynomials.
QPoly det_bareiss(std::vector<std::vector<QPoly>> m);

// Resultant eliminating a second variable: a[i] and b[i] hold the coefficient
// (itself a polynomial in the kept variable) of the i-th power of the
// eliminated one.  Zero when either input collapses to the zero polynomial.
QPoly resultant(std::vector<QPoly> a, std::vector<QPoly> b);

// Resultant of two polynomials in the same variable.
CycNum resultant(const QPoly& a, const QPoly& b);

}  // namespace planeaut

#endif  // PLANEAUT_QPOLY_HPP
