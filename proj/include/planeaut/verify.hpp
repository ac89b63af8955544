#ifndef PLANEAUT_VERIFY_HPP
#define PLANEAUT_VERIFY_HPP

#include <string>
#include <vector>

#include "planeaut/cyclotomic.hpp"

namespace planeaut {

// One regression check: a computed value against its frozen expected value.
// Notes carry WARN-level annotations that must never be silent.
struct VerifyItem {
  std::string id;     // "scope/name"; report order is lexicographic in id
  std::string scope;  // table5|table6|theorems|ramification|hessian|charp
  bool pass = false;
  std::string expected;
  std::string computed;
  std::vector<std::string> notes;
};

struct VerifyReport {
  std::string scope;  // as requested ("all" or one scope)
  std::vector<VerifyItem> items;

  bool all_pass() const;
  // One line per item plus a summary; WARN notes on their own lines.
  std::string text() const;
  // Deterministic: {"schema":1, "scope":..., "pass":..., "items":[...]}.
  std::string json() const;
};

// Runs the items of the requested scope ("all" for every scope) concurrently
// and returns them sorted by id.  Throws PlaneautError for an unknown scope.
VerifyReport verify_paper(const std::string& scope);

// The scopes verify_paper accepts, in canonical order (without "all").
const std::vector<std::string>& verify_scopes();

}  // namespace planeaut

#endif  // PLANEAUT_VERIFY_HPP
