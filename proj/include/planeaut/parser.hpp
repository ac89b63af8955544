#ifndef PLANEAUT_PARSER_HPP
#define PLANEAUT_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeaut/actions.hpp"
#include "planeaut/forms.hpp"

namespace planeaut {

struct ParseError : PlaneautError {
  size_t position;  // byte offset into the input
  ParseError(const std::string& what, size_t pos)
      : PlaneautError(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct NotHomogeneous : PlaneautError {
  using PlaneautError::PlaneautError;
};

// Grammar: a sum of terms, each a '*'-separated product of factors.  A factor
// is a rational (12, 1/2), a root of unity zeta(n) with an optional power, a
// parameter name, one of the variables X, Y, Z, or a parenthesized
// coefficient subexpression (no variables inside).  Any factor takes an
// optional '^' exponent; '+' and '-' separate terms; whitespace is free.
// Every string produced by TernaryForm::str() parses back to an equal form.
TernaryForm parse_form(const std::string& text);

// Same grammar restricted to coefficients: no variables, and the result must
// not mention parameters.
CycNum parse_coefficient(const std::string& text);

// "m,a,b" with integer entries, e.g. "8,1,4".
DiagAction parse_type(const std::string& text);

// A parsed curve plus the command-line annotations that travel with it.
struct CurveSpec {
  std::string source;
  TernaryForm form = TernaryForm(0);
  std::map<std::string, CycNum> assignments;  // parameter name -> value
  std::optional<DiagAction> action;

  // form with the assignments substituted
  TernaryForm specialized_form() const;
};

// Assembles a CurveSpec from raw command-line pieces: the curve text,
// "name=value" assignment strings, and an optional "m,a,b" type string.
// Assignments must name parameters that actually occur in the curve.
CurveSpec make_curve_spec(const std::string& text,
                          const std::vector<std::string>& set_args = {},
                          const std::string& type_arg = "");

}  // namespace planeaut

#endif  // PLANEAUT_PARSER_HPP
