#include "planeaut/forms.hpp"

#include <algorithm>
#include <sstream>

namespace planeaut {

bool is_reserved_parameter(const std::string& name) {
  return name == "v" || name == "w" || name == "s" || name == "t";
}

ParamPoly::ParamPoly(const CycNum& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

ParamPoly::ParamPoly(const Rat& c) : ParamPoly(CycNum(c)) {}

ParamPoly ParamPoly::parameter(const std::string& name, int exp) {
  if (name.empty()) throw FormError("empty parameter name");
  if (exp <= 0) throw FormError("parameter exponent must be positive");
  ParamPoly p;
  p.terms_[{{name, exp}}] = cyc_one();
  return p;
}

ParamPoly ParamPoly::term(const CycNum& c, const ParamMon& m) {
  ParamPoly p;
  if (!c.is_zero()) {
    for (const auto& [name, e] : m)
      if (e <= 0) throw FormError("parameter exponent must be positive");
    p.terms_[m] = c;
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<CycNum> ParamPoly::as_constant() const {
  if (terms_.empty()) return cyc_zero();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<std::pair<CycNum, ParamMon>> ParamPoly::as_single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

std::set<std::string> ParamPoly::parameter_names() const {
  std::set<std::string> names;
  for (const auto& [mon, c] : terms_)
    for (const auto& [name, e] : mon) names.insert(name);
  return names;
}

void ParamPoly::prune_() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p = *this;
  for (auto& [mon, c] : p.terms_) c = -c;
  return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [mon, c] : o.terms_) {
    auto it = terms_.find(mon);
    if (it == terms_.end())
      terms_[mon] = c;
    else
      it->second += c;
  }
  prune_();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  std::map<ParamMon, CycNum> prod;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      ParamMon m = m1;
      for (const auto& [name, e] : m2) m[name] += e;
      CycNum c = c1 * c2;
      auto it = prod.find(m);
      if (it == prod.end())
        prod[m] = c;
      else
        it->second += c;
    }
  }
  terms_ = std::move(prod);
  prune_();
  return *this;
}

ParamPoly ParamPoly::scaled(const CycNum& c) const {
  ParamPoly p;
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (auto& [mon, v] : p.terms_) v *= c;
  return p;
}

ParamPoly ParamPoly::substituted(const std::map<std::string, CycNum>& values) const {
  ParamPoly out;
  for (const auto& [mon, c] : terms_) {
    CycNum factor = c;
    ParamMon rest;
    for (const auto& [name, e] : mon) {
      auto it = values.find(name);
      if (it == values.end())
        rest[name] = e;
      else
        factor *= it->second.pow(e);
    }
    out += ParamPoly::term(factor, rest);
  }
  return out;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mon, c] : terms_) {
    if (!first) out << " + ";
    bool unit = c == CycNum(Rat(1)) && !mon.empty();
    if (!unit) out << c.str();
    bool lead = unit;
    for (const auto& [name, e] : mon) {
      if (!lead) out << "*";
      lead = false;
      out << name;
      if (e > 1) out << "^" << e;
    }
    first = false;
  }
  if (terms_.size() > 1) return "(" + out.str() + ")";
  return out.str();
}

int Monomial::max_exponent() const { return std::max(i, std::max(j, k)); }

std::string Monomial::str() const {
  if (i == 0 && j == 0 && k == 0) return "1";
  std::ostringstream out;
  const char* names[3] = {"X", "Y", "Z"};
  int exps[3] = {i, j, k};
  bool first = true;
  for (int v = 0; v < 3; ++v) {
    if (exps[v] == 0) continue;
    if (!first) out << "*";
    out << names[v];
    if (exps[v] > 1) out << "^" << exps[v];
    first = false;
  }
  return out.str();
}

TernaryForm::TernaryForm(int degree) : degree_(degree) {
  if (degree < 0) throw FormError("negative degree");
}

void TernaryForm::set(const Monomial& m, ParamPoly c) {
  if (m.i < 0 || m.j < 0 || m.k < 0) throw FormError("negative exponent in monomial");
  if (m.degree() != degree_)
    throw FormError("monomial " + m.str() + " breaks homogeneity of degree " +
                    std::to_string(degree_));
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = std::move(c);
}

void TernaryForm::add(const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    set(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const ParamPoly& TernaryForm::coeff(const Monomial& m) const {
  static const ParamPoly zero;
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

std::vector<Monomial> TernaryForm::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

std::set<std::string> TernaryForm::parameter_names() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    auto n = c.parameter_names();
    names.insert(n.begin(), n.end());
  }
  return names;
}

TernaryForm TernaryForm::operator-() const {
  TernaryForm f(degree_);
  for (const auto& [m, c] : terms_) f.terms_[m] = -c;
  return f;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (degree_ != o.degree_) throw FormError("adding forms of different degrees");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) { return *this += -o; }

TernaryForm TernaryForm::scaled(const ParamPoly& c) const {
  TernaryForm f(degree_);
  for (const auto& [m, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) f.terms_[m] = std::move(p);
  }
  return f;
}

TernaryForm TernaryForm::times_monomial(const Monomial& m) const {
  TernaryForm f(degree_ + m.degree());
  for (const auto& [mon, c] : terms_)
    f.terms_[Monomial{mon.i + m.i, mon.j + m.j, mon.k + m.k}] = c;
  return f;
}

bool TernaryForm::operator==(const TernaryForm& o) const {
  return degree_ == o.degree_ && terms_ == o.terms_;
}

TernaryForm TernaryForm::specialized(const std::map<std::string, CycNum>& values) const {
  TernaryForm f(degree_);
  for (const auto& [m, c] : terms_) f.add(m, c.substituted(values));
  return f;
}

std::string TernaryForm::str() const {
  if (terms_.empty()) return "0";
  // graded-lex descending: higher (i, j, k) lexicographically comes first
  std::vector<Monomial> mons = support();
  std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return b < a;
  });
  std::ostringstream out;
  bool first = true;
  for (const Monomial& m : mons) {
    const ParamPoly& c = coeff(m);
    std::string cs = c.str();
    if (!first) out << " + ";
    if (cs == "1" && m.degree() > 0)
      out << m.str();
    else if (m.degree() == 0)
      out << cs;
    else
      out << cs << "*" << m.str();
    first = false;
  }
  return out.str();
}

ProjMatrix::ProjMatrix() {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a_[r][c] = ParamPoly(r == c ? Rat(1) : Rat(0));
}

ProjMatrix ProjMatrix::diagonal(const CycNum& a, const CycNum& b, const CycNum& c) {
  ProjMatrix m;
  m.a_[0][0] = ParamPoly(a);
  m.a_[1][1] = ParamPoly(b);
  m.a_[2][2] = ParamPoly(c);
  return m;
}

ProjMatrix ProjMatrix::permutation(const std::array<int, 3>& p) {
  ProjMatrix m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.a_[r][c] = ParamPoly(Rat(c == p[r] ? 1 : 0));
  return m;
}

ProjMatrix ProjMatrix::from_rows(const std::array<std::array<ParamPoly, 3>, 3>& rows) {
  ProjMatrix m;
  m.a_ = rows;
  return m;
}

bool ProjMatrix::is_specialized() const {
  for (const auto& row : a_)
    for (const auto& e : row)
      if (!e.is_constant()) return false;
  return true;
}

ParamPoly ProjMatrix::det() const {
  ParamPoly d;
  d += a_[0][0] * (a_[1][1] * a_[2][2] - a_[1][2] * a_[2][1]);
  d -= a_[0][1] * (a_[1][0] * a_[2][2] - a_[1][2] * a_[2][0]);
  d += a_[0][2] * (a_[1][0] * a_[2][1] - a_[1][1] * a_[2][0]);
  return d;
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
  // Row r of the product expresses variable r after applying *this then o:
  // substituting o into the linear rows of *this.
  ProjMatrix m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      ParamPoly sum;
      for (int k = 0; k < 3; ++k) sum += a_[r][k] * o.a_[k][c];
      m.a_[r][c] = std::move(sum);
    }
  return m;
}

ProjMatrix ProjMatrix::inverse() const {
  if (!is_specialized()) throw FormError("inverse requires a specialized matrix");
  auto val = [&](int r, int c) { return *a_[r][c].as_constant(); };
  CycNum d = *det().as_constant();
  if (d.is_zero()) throw FormError("singular matrix");
  CycNum inv = d.inverse();
  ProjMatrix m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3;  // transposed cofactor
      int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      CycNum cof = val(r1, c1) * val(r2, c2) - val(r1, c2) * val(r2, c1);
      m.a_[r][c] = ParamPoly(cof * inv);
    }
  return m;
}

ProjMatrix ProjMatrix::scaled(const CycNum& c) const {
  ProjMatrix m;
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 3; ++col) m.a_[r][col] = a_[r][col].scaled(c);
  return m;
}

ProjMatrix ProjMatrix::canonicalized() const {
  if (!is_specialized())
    throw FormError("canonicalized requires a specialized matrix");
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const ParamPoly& e = a_[r][c];
      if (e.is_zero()) continue;
      return scaled(e.as_constant()->inverse());
    }
  throw FormError("cannot canonicalize the zero matrix");
}

bool ProjMatrix::operator==(const ProjMatrix& o) const { return a_ == o.a_; }

std::string ProjMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 3; ++r) {
    out << "[";
    for (int c = 0; c < 3; ++c) {
      out << a_[r][c].str();
      if (c < 2) out << ", ";
    }
    out << "]";
    if (r < 2) out << ", ";
  }
  out << "]";
  return out.str();
}

namespace {

// Linear form sum_c coeffs[c] * var_c represented inside a TernaryForm of
// degree 1; powers cached per call to substitute.
TernaryForm linear_row(const ProjMatrix& P, int r) {
  TernaryForm f(1);
  f.add(Monomial{1, 0, 0}, P.at(r, 0));
  f.add(Monomial{0, 1, 0}, P.at(r, 1));
  f.add(Monomial{0, 0, 1}, P.at(r, 2));
  return f;
}

TernaryForm form_mul(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm f(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      f.add(Monomial{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k}, ca * cb);
  return f;
}

}  // namespace

TernaryForm substitute(const TernaryForm& F, const ProjMatrix& P) {
  std::array<TernaryForm, 3> rows = {linear_row(P, 0), linear_row(P, 1), linear_row(P, 2)};
  // powers[v][e] = rows[v]^e
  std::array<std::vector<TernaryForm>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(TernaryForm(0));
    powers[v][0].add(Monomial{0, 0, 0}, ParamPoly(Rat(1)));
  }
  auto power = [&](int v, int e) -> const TernaryForm& {
    while (static_cast<int>(powers[v].size()) <= e)
      powers[v].push_back(form_mul(powers[v].back(), rows[v]));
    return powers[v][static_cast<size_t>(e)];
  };
  TernaryForm out(F.degree());
  for (const auto& [m, c] : F.terms()) {
    TernaryForm t = form_mul(power(0, m.i), form_mul(power(1, m.j), power(2, m.k)));
    out += t.scaled(c);
  }
  return out;
}

std::pair<int, TernaryForm> core_and_exponent(const TernaryForm& F) {
  if (F.is_zero()) throw FormError("core of the zero form");
  int e = 0;
  for (const auto& [m, c] : F.terms()) e = std::max(e, m.max_exponent());
  TernaryForm core(F.degree());
  for (const auto& [m, c] : F.terms())
    if (m.max_exponent() == e) core.add(m, c);
  return {e, core};
}

std::array<TernaryForm, 3> partials(const TernaryForm& F) {
  if (F.degree() < 1) throw FormError("partials need degree >= 1");
  std::array<TernaryForm, 3> out = {TernaryForm(F.degree() - 1), TernaryForm(F.degree() - 1),
                                    TernaryForm(F.degree() - 1)};
  for (const auto& [m, c] : F.terms()) {
    if (m.i > 0) out[0].add(Monomial{m.i - 1, m.j, m.k}, c.scaled(CycNum(static_cast<long>(m.i))));
    if (m.j > 0) out[1].add(Monomial{m.i, m.j - 1, m.k}, c.scaled(CycNum(static_cast<long>(m.j))));
    if (m.k > 0) out[2].add(Monomial{m.i, m.j, m.k - 1}, c.scaled(CycNum(static_cast<long>(m.k))));
  }
  return out;
}

}  // namespace planeaut
