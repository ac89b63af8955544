#include "planeaut/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace planeaut {

namespace {

int g_order_cap = 2520;

std::mutex g_phi_mutex;
std::map<int, std::vector<mpz_class>> g_phi_cache;

// Exact division of integer polynomials, divisor monic.  a is consumed.
std::vector<mpz_class> exact_div_monic(std::vector<mpz_class> a,
                                       const std::vector<mpz_class>& b) {
  const size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw CycError("internal: non-exact cyclotomic division");
  }
  return q;
}

}  // namespace

int cyclotomic_order_cap() { return g_order_cap; }

void set_cyclotomic_order_cap(int cap) {
  if (cap < 1) throw CycError("order cap must be positive");
  g_order_cap = cap;
}

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw CycError("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d; fill the cache bottom-up over
  // the divisors of n so the computation stays inside one lock acquisition.
  std::vector<long> divs = divisors(n);
  for (long d : divs) {
    if (g_phi_cache.count(static_cast<int>(d))) continue;
    std::vector<mpz_class> p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (long e : divisors(d)) {
      if (e == d) continue;
      p = exact_div_monic(std::move(p), g_phi_cache.at(static_cast<int>(e)));
    }
    g_phi_cache.emplace(static_cast<int>(d), std::move(p));
  }
  return g_phi_cache.at(n);
}

CycNum::CycNum() : order_(1), c_(1, Rat(0)) {}

CycNum::CycNum(long v) : order_(1), c_(1, Rat(v)) {}

CycNum::CycNum(const Rat& v) : order_(1), c_(1, v) {}

CycNum::CycNum(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw CycError("cyclotomic order must be positive");
  if (order > g_order_cap)
    throw CycError("cyclotomic order " + std::to_string(order) + " exceeds cap " +
                   std::to_string(g_order_cap));
  reduce_();
}

void CycNum::fold_() {
  const size_t deg = static_cast<size_t>(euler_phi(order_));
  if (c_.size() > deg) {
    const std::vector<mpz_class>& phi = cyclotomic_polynomial(order_);
    for (size_t i = c_.size(); i-- > deg;) {
      Rat lead = c_[i];
      if (lead == 0) continue;
      c_[i] = 0;
      for (size_t j = 0; j < deg; ++j) c_[i - deg + j] -= lead * Rat(phi[j]);
    }
  }
  c_.resize(deg, Rat(0));
  for (Rat& r : c_) r.canonicalize();
}

void CycNum::reduce_() {
  fold_();
  // A value with no zeta contribution is rational; store it at order 1 so
  // equal values share one representation regardless of the ambient field
  // they were computed in.
  if (order_ > 1 &&
      std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; })) {
    order_ = 1;
    c_.resize(1);
  }
}

CycNum CycNum::zeta(int n, long k) {
  if (n < 1) throw CycError("zeta order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return CycNum(Rat(1));
  long g = std::gcd(static_cast<long>(n), k);
  int n2 = static_cast<int>(n / g);
  long k2 = k / g;
  std::vector<Rat> c(static_cast<size_t>(k2) + 1, Rat(0));
  c[static_cast<size_t>(k2)] = 1;
  return CycNum(n2, std::move(c));
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycNum::is_rational() const {
  if (order_ == 1) return true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  // In the power basis mod Phi_n the constant coordinate alone represents a
  // rational number for every n > 1.
  return true;
}

std::optional<Rat> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

// Representation in the power basis at order m (with no collapse back to a
// smaller order, so mixed-order arithmetic can align operands exactly).
CycNum CycNum::embedded(int m) const {
  if (m % order_ != 0) throw CycError("embedding target must be a multiple of the order");
  if (m == order_) return *this;
  if (m > g_order_cap)
    throw CycError("embedding order " + std::to_string(m) + " exceeds cap");
  const long stride = m / order_;
  std::vector<Rat> big;
  big.resize(static_cast<size_t>((c_.size() - 1) * stride + 1), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) big[i * stride] = c_[i];
  CycNum r;
  r.order_ = m;
  r.c_ = std::move(big);
  r.fold_();
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rat& v : r.c_) v = -v;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (order_ != o.order_) {
    long m = lcm_long(order_, o.order_);
    *this = embedded(static_cast<int>(m));
    return *this += o.embedded(static_cast<int>(m));
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  reduce_();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (order_ != o.order_) {
    long m = lcm_long(order_, o.order_);
    *this = embedded(static_cast<int>(m));
    return *this *= o.embedded(static_cast<int>(m));
  }
  std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(prod);
  reduce_();
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw CycError("division by zero");
  if (is_rational()) return CycNum(Rat(1) / c_[0]);
  // Extended Euclid for gcd(a, Phi_n) over Q[x]; Phi_n is irreducible over Q,
  // so the gcd is 1 and the Bezout coefficient of a is the inverse.
  using Poly = std::vector<Rat>;
  auto deg = [](const Poly& p) -> long {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  const std::vector<mpz_class>& phiz = cyclotomic_polynomial(order_);
  Poly r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rat(phiz[i]);
  Poly r1 = c_;
  Poly s0{Rat(0)}, s1{Rat(1)};  // Bezout coefficients of a (the second operand)
  while (deg(r1) > 0) {
    long d0 = deg(r0), d1 = deg(r1);
    Poly q(static_cast<size_t>(d0 - d1) + 1, Rat(0));
    Poly rem = r0;
    for (long i = d0; i >= d1; --i) {
      Rat coef = rem[static_cast<size_t>(i)] / r1[static_cast<size_t>(d1)];
      if (coef == 0) continue;
      q[static_cast<size_t>(i - d1)] = coef;
      for (long j = 0; j <= d1; ++j)
        rem[static_cast<size_t>(i - d1 + j)] -= coef * r1[static_cast<size_t>(j)];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_new = s0 - q * s1
    Poly snew(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    if (r1.empty()) r1.assign(1, Rat(0));
  }
  if (deg(r1) != 0) throw CycError("internal: nonzero element not invertible mod Phi_n");
  Rat unit = r1[0];
  CycNum inv(order_, std::move(s1));
  for (Rat& v : inv.c_) v /= unit;
  return inv;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum acc(Rat(1));
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& o) const {
  if (order_ == o.order_) return c_ == o.c_;
  long m = lcm_long(order_, o.order_);
  return embedded(static_cast<int>(m)).c_ == o.embedded(static_cast<int>(m)).c_;
}

std::optional<std::pair<int, long>> CycNum::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  if (auto r = as_rational()) {
    if (*r == 1) return std::make_pair(1, 0L);
    if (*r == -1) return std::make_pair(2, 1L);
    return std::nullopt;
  }
  const int n = order_;
  const bool odd = (n % 2 == 1);
  // Roots of unity inside Q(zeta_n) are exactly mu_n for even n and
  // (+-1) * mu_n for odd n.
  CycNum p(Rat(1));
  CycNum z = zeta(n, 1).embedded(n);
  for (long k = 0; k < n; ++k) {
    if (*this == p) {
      long g = std::gcd(static_cast<long>(n), k);
      return std::make_pair(static_cast<int>(n / g), (k / g) % (n / g));
    }
    if (odd && *this == -p) {
      // value = zeta_{2n}^{n + 2k}
      long num = n + 2 * k, den = 2L * n;
      long g = std::gcd(num, den);
      return std::make_pair(static_cast<int>(den / g), (num / g) % (den / g));
    }
    p *= z;
  }
  return std::nullopt;
}

CycNum CycNum::canonical() const {
  if (order_ == 1) return *this;
  if (auto ru = as_root_of_unity()) return zeta(ru->first, ru->second);
  return *this;
}

std::optional<int> CycNum::multiplicative_order() const {
  auto r = as_root_of_unity();
  if (!r) return std::nullopt;
  return r->first;
}

std::string CycNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    bool unit = (v == 1) && i > 0;
    if (!unit) out << v.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "zeta(" << order_ << ")";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  std::string s = out.str();
  // Parenthesize sums so the result can be used as a coefficient verbatim.
  size_t terms = 0;
  for (const Rat& v : c_)
    if (v != 0) ++terms;
  if (terms > 1) return "(" + s + ")";
  return s;
}

std::string CycNum::key() const {
  std::ostringstream out;
  out << order_ << ":";
  for (const Rat& v : c_) out << v.get_str() << ",";
  return out.str();
}

CycNum cyc_one() { return CycNum(Rat(1)); }
CycNum cyc_zero() { return CycNum(); }

}  // namespace planeaut
