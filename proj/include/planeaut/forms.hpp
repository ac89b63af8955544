#pragma once

/*
 * Sparse homogeneous ternary forms over cyclotomic coefficients with named
 * formal parameters.
 *
 *   ParamMon    multiset of parameter names with positive exponents
 *   ParamPoly   finite sum  coeff * ParamMon  with CycNum coefficients
 *   Monomial    X^i Y^j Z^k, exponents nonnegative
 *   TernaryForm degree-homogeneous map Monomial -> ParamPoly (zero pruned)
 *   ProjMatrix  3x3 matrix of ParamPoly entries; row t is substituted for
 *               variable t, so (F o P)(X,Y,Z) = F(P0, P1, P2).
 *
 * The parameter names "v", "w", "s", "t" are reserved for matrix unknowns in
 * the block-substitution machinery and rejected for user-facing parameters.
 */

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planeaut/cyclotomic.hpp"

namespace planeaut {

struct FormError : PlaneautError {
  using PlaneautError::PlaneautError;
};

bool is_reserved_parameter(const std::string& name);

using ParamMon = std::map<std::string, int>;  // name -> exponent > 0

class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(const CycNum& c);
  explicit ParamPoly(const Rat& c);

  static ParamPoly parameter(const std::string& name, int exp = 1);
  static ParamPoly term(const CycNum& c, const ParamMon& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<CycNum> as_constant() const;
  // Single term c * m: returns (c, m).
  std::optional<std::pair<CycNum, ParamMon>> as_single_term() const;

  const std::map<ParamMon, CycNum>& terms() const { return terms_; }
  std::set<std::string> parameter_names() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  ParamPoly scaled(const CycNum& c) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

  // Substitutes values for (a subset of) parameters.
  ParamPoly substituted(const std::map<std::string, CycNum>& values) const;

  std::string str() const;

 private:
  std::map<ParamMon, CycNum> terms_;  // zero coefficients pruned

  void prune_();
};

struct Monomial {
  int i = 0, j = 0, k = 0;  // exponents of X, Y, Z

  int degree() const { return i + j + k; }
  int max_exponent() const;
  auto operator<=>(const Monomial&) const = default;
  std::string str() const;  // "X^3*Z^2", "1" for the empty monomial
};

class TernaryForm {
 public:
  explicit TernaryForm(int degree);

  int degree() const { return degree_; }
  const std::map<Monomial, ParamPoly>& terms() const { return terms_; }

  void set(const Monomial& m, ParamPoly c);   // replaces; erases on zero
  void add(const Monomial& m, const ParamPoly& c);
  const ParamPoly& coeff(const Monomial& m) const;  // zero if absent

  bool is_zero() const { return terms_.empty(); }
  std::vector<Monomial> support() const;  // ascending (i,j,k)
  std::set<std::string> parameter_names() const;
  bool is_specialized() const { return parameter_names().empty(); }

  TernaryForm operator-() const;
  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  TernaryForm scaled(const ParamPoly& c) const;
  TernaryForm times_monomial(const Monomial& m) const;  // degree rises by deg m

  bool operator==(const TernaryForm& o) const;

  TernaryForm specialized(const std::map<std::string, CycNum>& values) const;

  // Graded-lex with X > Y > Z, highest first; fixes deterministic printing.
  std::string str() const;

 private:
  int degree_;
  std::map<Monomial, ParamPoly> terms_;
};

class ProjMatrix {
 public:
  ProjMatrix();  // identity

  static ProjMatrix diagonal(const CycNum& a, const CycNum& b, const CycNum& c);
  static ProjMatrix permutation(const std::array<int, 3>& p);  // row t = var p[t]
  static ProjMatrix from_rows(const std::array<std::array<ParamPoly, 3>, 3>& rows);

  const ParamPoly& at(int r, int c) const { return a_[r][c]; }
  ParamPoly& at(int r, int c) { return a_[r][c]; }

  bool is_specialized() const;
  ParamPoly det() const;
  ProjMatrix operator*(const ProjMatrix& o) const;  // composition of substitutions
  ProjMatrix inverse() const;  // specialized matrices only; throws on det == 0
  ProjMatrix scaled(const CycNum& c) const;
  // Representative of the projective class: entries divided by the first
  // nonzero entry in row-major order.  Specialized matrices only.
  ProjMatrix canonicalized() const;

  bool operator==(const ProjMatrix& o) const;

  std::string str() const;

 private:
  std::array<std::array<ParamPoly, 3>, 3> a_;
};

// F o P: substitutes row polynomials of P for the variables of F.
TernaryForm substitute(const TernaryForm& F, const ProjMatrix& P);

// exponent = max over support of max(i,j,k); core = terms attaining it.
std::pair<int, TernaryForm> core_and_exponent(const TernaryForm& F);

// (F_X, F_Y, F_Z), each of degree d-1.  Euler: d*F = X F_X + Y F_Y + Z F_Z.
std::array<TernaryForm, 3> partials(const TernaryForm& F);

}  // namespace planeaut
