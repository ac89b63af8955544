#include "planeaut/covers.hpp"

#include <numeric>
#include <sstream>

#include "planeaut/qpoly.hpp"

namespace planeaut {

namespace {

int mod_pos(long v, int m) {
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// Restriction of G to the reference line where variable `axis` (0=X,1=Y,2=Z)
// vanishes, as a polynomial in the ratio of the two surviving coordinates
// with reference-point factors divided out.  Empty optional when the line
// lies in the curve.
std::optional<QPoly> line_restriction(const TernaryForm& G, int axis) {
  std::map<int, CycNum> by_exp;  // exponent of the second surviving variable
  for (const auto& [mon, c] : G.terms()) {
    const std::array<int, 3> e = {mon.i, mon.j, mon.k};
    if (e[axis] != 0) continue;
    const int key = axis == 2 ? e[1] : e[2];
    by_exp[key] = *c.as_constant();
  }
  if (by_exp.empty()) return std::nullopt;
  const int low = by_exp.begin()->first;
  QPoly b;
  for (const auto& [k, c] : by_exp) b = b + QPoly::monomial(k - low, c);
  return b;
}

const char* line_name(int axis) {
  return axis == 0 ? "{X=0}" : axis == 1 ? "{Y=0}" : "{Z=0}";
}

}  // namespace

RamificationProfile::RamificationProfile(int group_order,
                                         std::map<int, int> entries,
                                         int quotient_genus, long curve_genus)
    : m_(group_order),
      entries_(std::move(entries)),
      g0_(quotient_genus),
      g_(curve_genus) {
  if (m_ < 1) throw CoversError("group order must be positive");
  if (g0_ < 0) throw CoversError("quotient genus must be non-negative");
  long ram = 0;
  for (const auto& [e, count] : entries_) {
    if (e < 2 || m_ % e != 0)
      throw CoversError("ramification index " + std::to_string(e) +
                        " does not divide the group order " +
                        std::to_string(m_));
    if (count < 1) throw CoversError("point count must be positive");
    ram += static_cast<long>(e - 1) * count;
  }
  if (2 * g_ - 2 != m_ * (2L * g0_ - 2) + ram)
    throw CoversError("Riemann-Hurwitz identity fails: 2*" +
                      std::to_string(g_) + "-2 != " + std::to_string(m_) +
                      "*(2*" + std::to_string(g0_) + "-2) + " +
                      std::to_string(ram));
}

std::string RamificationProfile::str() const {
  std::ostringstream os;
  os << "order " << m_ << " cover:";
  if (entries_.empty()) os << " unramified";
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    os << " index " << it->first << " x " << it->second << ",";
  os << " quotient genus " << g0_ << ", curve genus " << g_;
  return os.str();
}

FixedLocus fixed_data(const DiagAction& act) {
  const int m = act.order();
  FixedLocus out;
  out.group_order = m;
  out.line_x0 = std::gcd(m, mod_pos(act.b() - act.a(), m));
  out.line_y0 = std::gcd(m, act.b());
  out.line_z0 = std::gcd(m, act.a());
  out.notes.push_back(
      "reference points [1:0:0], [0:1:0], [0:0:1] are fixed by every power");
  for (int t = 1; t < m; ++t) {
    const bool za = mod_pos(static_cast<long>(t) * act.a(), m) == 0;
    const bool yb = mod_pos(static_cast<long>(t) * act.b(), m) == 0;
    const bool xd = mod_pos(static_cast<long>(t) * (act.b() - act.a()), m) == 0;
    if (za)
      out.notes.push_back("power " + std::to_string(t) +
                          " fixes the line {Z=0} pointwise");
    else if (yb)
      out.notes.push_back("power " + std::to_string(t) +
                          " fixes the line {Y=0} pointwise");
    else if (xd)
      out.notes.push_back("power " + std::to_string(t) +
                          " fixes the line {X=0} pointwise");
  }
  return out;
}

RamificationProfile ramification_profile(
    const TernaryForm& F, const std::map<std::string, CycNum>& specialization,
    const DiagAction& act) {
  const TernaryForm G = F.specialized(specialization);
  if (!G.is_specialized())
    throw CoversError("curve has unassigned parameters: " + G.str());
  if (G.is_zero()) throw CoversError("curve is identically zero");

  const int m = act.order();
  std::optional<int> weight;
  for (const auto& [mon, c] : G.terms()) {
    (void)c;
    const int w = act.weight(mon);
    if (weight && *weight != w)
      throw NotAnAutomorphism(act.str() + " does not preserve " + G.str());
    weight = w;
  }

  const int d = G.degree();
  const long g = static_cast<long>(d - 1) * (d - 2) / 2;
  std::map<int, int> entries;

  // Reference points carry the full group as stabilizer whenever they lie on
  // the curve: [1:0:0] lies on C exactly when X^d is absent, and so on.
  const std::array<Monomial, 3> pure = {Monomial{d, 0, 0}, Monomial{0, d, 0},
                                        Monomial{0, 0, d}};
  for (const Monomial& mon : pure)
    if (G.coeff(mon).is_zero()) entries[m] += 1;

  // Non-reference points of a reference line share one stabilizer order; the
  // line contributes its distinct non-reference intersection points with the
  // curve.  A repeated intersection would mean the curve is tangent to a
  // pointwise-fixed line, which cannot happen for a smooth invariant curve.
  const std::array<int, 3> stab = {std::gcd(m, mod_pos(act.b() - act.a(), m)),
                                   std::gcd(m, act.b()),
                                   std::gcd(m, act.a())};
  for (int axis = 0; axis < 3; ++axis) {
    if (stab[axis] < 2) continue;
    const std::optional<QPoly> b = line_restriction(G, axis);
    if (!b)
      throw NonIntegralGenus("the line " + std::string(line_name(axis)) +
                             " lies in the curve; the input is not smooth "
                             "and irreducible");
    if (b->degree() <= 0) continue;
    const QPoly sf = squarefree_part(*b);
    if (sf.degree() != b->degree())
      throw NonIntegralGenus(
          "the curve meets the pointwise-fixed line " + std::string(line_name(axis)) +
          " with multiplicity; the input violates the smoothness "
          "precondition");
    entries[stab[axis]] += static_cast<int>(sf.degree());
  }

  // Points with stabilizer of order e fall in free orbits of the order-m/e
  // quotient group.
  for (const auto& [e, count] : entries)
    if (count % (m / e) != 0)
      throw NonIntegralGenus("count " + std::to_string(count) +
                             " for index " + std::to_string(e) +
                             " is not divisible by the orbit size " +
                             std::to_string(m / e));

  long ram = 0;
  for (const auto& [e, count] : entries)
    ram += static_cast<long>(e - 1) * count;
  const long lhs = 2 * g - 2 - ram;
  if (lhs % m != 0)
    throw NonIntegralGenus("2g-2 - R = " + std::to_string(lhs) +
                           " is not divisible by the group order " +
                           std::to_string(m));
  const long even = lhs / m + 2;
  if (even % 2 != 0 || even < 0)
    throw NonIntegralGenus("quotient genus would be " + std::to_string(even) +
                           "/2");
  return RamificationProfile(m, std::move(entries),
                             static_cast<int>(even / 2), g);
}

}  // namespace planeaut
