#include "planeaut/qpoly.hpp"

#include <sstream>

namespace planeaut {

namespace {
const CycNum& zero_cyc() {
  static const CycNum z;
  return z;
}
}  // namespace

QPoly::QPoly(const CycNum& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly::QPoly(const Rat& c) : QPoly(CycNum(c)) {}

QPoly::QPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { trim_(); }

QPoly QPoly::monomial(int deg, const CycNum& c) {
  if (deg < 0) throw QPolyError("monomial degree must be nonnegative");
  if (c.is_zero()) return QPoly();
  QPoly p;
  p.c_.assign(static_cast<size_t>(deg) + 1, CycNum());
  p.c_.back() = c;
  return p;
}

void QPoly::trim_() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const CycNum& QPoly::coeff(size_t i) const {
  if (i >= c_.size()) return zero_cyc();
  return c_[i];
}

const CycNum& QPoly::leading() const {
  if (c_.empty()) throw QPolyError("the zero polynomial has no leading coefficient");
  return c_.back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim_();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim_();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<CycNum> prod(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(prod);
  trim_();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (CycNum& v : r.c_) v = -v;
  return r;
}

QPoly QPoly::scaled(const CycNum& c) const {
  if (c.is_zero()) return QPoly();
  QPoly r = *this;
  for (CycNum& v : r.c_) v *= c;
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw QPolyError("shift amount must be nonnegative");
  if (c_.empty() || k == 0) return *this;
  QPoly r;
  r.c_.assign(c_.size() + static_cast<size_t>(k), CycNum());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

QPoly QPoly::monic() const { return scaled(leading().inverse()); }

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  QPoly r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * CycNum(Rat(static_cast<long>(i)));
  r.trim_();
  return r;
}

CycNum QPoly::eval(const CycNum& x) const {
  CycNum acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::pow(long e) const {
  if (e < 0) throw QPolyError("polynomial powers must be nonnegative");
  QPoly acc(cyc_one());
  QPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string QPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    bool unit = c_[i] == cyc_one() && i > 0;
    if (!unit) out << c_[i].str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<QPoly, QPoly> divrem(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw QPolyError("polynomial division by zero");
  QPoly q, r = num;
  const long dd = den.degree();
  const CycNum lead_inv = den.leading().inverse();
  while (!r.is_zero() && r.degree() >= dd) {
    long k = r.degree() - dd;
    CycNum c = r.leading() * lead_inv;
    QPoly t = QPoly::monomial(static_cast<int>(k), c);
    q += t;
    r -= t * den;
  }
  return {std::move(q), std::move(r)};
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  auto [q, r] = divrem(num, den);
  if (!r.is_zero()) throw QPolyError("division was expected to be exact");
  return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

ExtendedGcd poly_extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(cyc_one()), s1;
  QPoly t0, t1(cyc_one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  CycNum inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return QPoly(cyc_one());
  QPoly g = poly_gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

QPoly det_bareiss(std::vector<std::vector<QPoly>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw QPolyError("determinant needs a square matrix");
  if (n == 0) return QPoly(cyc_one());
  bool negate = false;
  QPoly prev(cyc_one());
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return QPoly();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = QPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

QPoly resultant(std::vector<QPoly> a, std::vector<QPoly> b) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  while (!b.empty() && b.back().is_zero()) b.pop_back();
  if (a.empty() || b.empty()) return QPoly();
  const size_t n = a.size() - 1, m = b.size() - 1;
  if (n == 0 && m == 0) return QPoly(cyc_one());
  // Sylvester matrix: m rows of a-coefficients, n rows of b-coefficients,
  // each row shifted one column to the right of the previous.
  std::vector<std::vector<QPoly>> syl(n + m, std::vector<QPoly>(n + m));
  for (size_t r = 0; r < m; ++r)
    for (size_t j = 0; j <= n; ++j) syl[r][r + j] = a[n - j];
  for (size_t r = 0; r < n; ++r)
    for (size_t j = 0; j <= m; ++j) syl[m + r][r + j] = b[m - j];
  return det_bareiss(std::move(syl));
}

CycNum resultant(const QPoly& a, const QPoly& b) {
  std::vector<QPoly> av, bv;
  for (const CycNum& c : a.coeffs()) av.emplace_back(c);
  for (const CycNum& c : b.coeffs()) bv.emplace_back(c);
  QPoly r = resultant(std::move(av), std::move(bv));
  return r.coeff(0);
}

}  // namespace planeaut
