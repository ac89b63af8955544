#include "planeaut/actions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "planeaut/snf.hpp"

namespace planeaut {

namespace {

long mod_pos(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DiagAction::DiagAction(int m, int a, int b) : m_(m), a_(a), b_(b) {
  if (m < 2) throw ActionError("action order must be at least 2");
  if (a < 0 || a >= m || b < 0 || b >= m)
    throw ActionError("exponents must satisfy 0 <= a, b < m");
  if (a == 0 && b == 0) throw ActionError("the identity is not an action type");
  if (std::gcd(std::gcd(m, a), b) != 1)
    throw ActionError("projective order of " + std::to_string(m) + ",(" +
                      std::to_string(a) + "," + std::to_string(b) +
                      ") is smaller than " + std::to_string(m));
}

int DiagAction::weight(const Monomial& mon) const {
  return static_cast<int>(
      mod_pos(static_cast<long>(a_) * mon.j + static_cast<long>(b_) * mon.k,
              m_));
}

ProjMatrix DiagAction::matrix() const {
  return ProjMatrix::diagonal(cyc_one(), CycNum::zeta(m_, a_),
                              CycNum::zeta(m_, b_));
}

DiagAction DiagAction::power(long u) const {
  long au = mod_pos(static_cast<long>(a_) * mod_pos(u, m_), m_);
  long bu = mod_pos(static_cast<long>(b_) * mod_pos(u, m_), m_);
  if (au == 0 && bu == 0) throw ActionError("power is the identity");
  long g = std::gcd(static_cast<long>(m_), std::gcd(au, bu));
  return DiagAction(static_cast<int>(m_ / g), static_cast<int>(au / g),
                    static_cast<int>(bu / g));
}

std::string DiagAction::str() const {
  std::ostringstream out;
  out << m_ << ",(" << a_ << "," << b_ << ")";
  return out.str();
}

std::vector<Monomial> invariant_monomials(int d, const DiagAction& act,
                                          int w) {
  if (d < 1) throw ActionError("degree must be positive");
  int wn = static_cast<int>(mod_pos(w, act.order()));
  std::vector<Monomial> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) {
      Monomial mon{i, j, d - i - j};
      if (act.weight(mon) == wn) out.push_back(mon);
    }
  return out;
}

namespace {

std::string fresh_parameter_name(const Monomial& mon) {
  // b{j}{i} with j the total degree in the last two variables and i the
  // middle variable's exponent; bijective on the monomials of one degree.
  return "b" + std::to_string(mon.j + mon.k) + std::to_string(mon.j);
}

NormalForm build_normal_form(int d, const DiagAction& act, int w,
                             const std::vector<Monomial>& reference) {
  std::vector<Monomial> cls = invariant_monomials(d, act, w);
  for (const Monomial& r : reference)
    if (std::find(cls.begin(), cls.end(), r) == cls.end())
      throw ActionError("reference monomial " + r.str() +
                        " is not in weight class " + std::to_string(w));

  int max_i = 0, max_j = 0, max_k = 0;
  bool all_i = true, all_j = true, all_k = true;
  for (const Monomial& mon : cls) {
    max_i = std::max(max_i, mon.i);
    max_j = std::max(max_j, mon.j);
    max_k = std::max(max_k, mon.k);
    all_i = all_i && mon.i > 0;
    all_j = all_j && mon.j > 0;
    all_k = all_k && mon.k > 0;
  }
  if (cls.empty() || max_i < d - 1 || max_j < d - 1 || max_k < d - 1) {
    std::ostringstream msg;
    msg << "class " << w << " of " << act.str()
        << " has variable degrees at most (" << max_i << "," << max_j << ","
        << max_k << "); a smooth curve needs " << (d - 1) << " in each";
    throw DegenerateClass(msg.str());
  }
  if (all_i || all_j || all_k) {
    const char* var = all_i ? "X" : (all_j ? "Y" : "Z");
    throw ForcedFactor("every monomial of class " + std::to_string(w) +
                       " of " + act.str() + " is divisible by " + var);
  }

  NormalForm nf{TernaryForm(d), act, w, reference, {}};
  for (const Monomial& mon : cls) {
    bool is_ref =
        std::find(reference.begin(), reference.end(), mon) != reference.end();
    if (is_ref) {
      nf.base.set(mon, ParamPoly(Rat(1)));
    } else {
      std::string name = fresh_parameter_name(mon);
      nf.base.set(mon, ParamPoly::parameter(name));
      nf.parameters.push_back(name);
    }
  }
  return nf;
}

}  // namespace

NormalForm normal_form(int d, const DiagAction& act,
                       const std::vector<Monomial>& reference) {
  if (reference.empty())
    throw ActionError("reference monomials required; use the weight-class "
                      "overload for a fully parameterized family");
  for (const Monomial& r : reference)
    if (r.degree() != d)
      throw ActionError("reference monomial " + r.str() + " has degree " +
                        std::to_string(r.degree()) + ", expected " +
                        std::to_string(d));
  int w = act.weight(reference.front());
  for (const Monomial& r : reference)
    if (act.weight(r) != w)
      throw ActionError("reference monomials span several weight classes");
  return build_normal_form(d, act, w, reference);
}

NormalForm normal_form(int d, const DiagAction& act, int weight_class) {
  return build_normal_form(
      d, act, static_cast<int>(mod_pos(weight_class, act.order())), {});
}

namespace {

// Conjugation-stable statistic of the generated subgroup: for every
// nontrivial power, its projective order and whether it is a homology.
std::map<std::pair<int, bool>, int> subgroup_profile(const DiagAction& t) {
  std::map<std::pair<int, bool>, int> profile;
  long m = t.order();
  for (long u = 1; u < m; ++u) {
    long ea = mod_pos(static_cast<long>(t.a()) * u, m);
    long eb = mod_pos(static_cast<long>(t.b()) * u, m);
    int ord = static_cast<int>(m / std::gcd(m, std::gcd(ea, eb)));
    bool hom = ea == 0 || eb == 0 || ea == eb;
    ++profile[{ord, hom}];
  }
  return profile;
}

}  // namespace

ConjugacyResult types_conjugate(const DiagAction& t1, const DiagAction& t2) {
  ConjugacyResult res;
  if (t1.order() != t2.order()) {
    res.invariant = "group orders differ: " + std::to_string(t1.order()) +
                    " vs " + std::to_string(t2.order());
    return res;
  }
  long m = t1.order();
  const std::array<long, 3> e1 = {0, t1.a(), t1.b()};
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    // Relabeled eigenvalue exponents, normalized so slot 0 carries 1.
    long q1 = mod_pos(e1[p[1]] - e1[p[0]], m);
    long q2 = mod_pos(e1[p[2]] - e1[p[0]], m);
    for (long r = 1; r < m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      if (q1 == mod_pos(t2.a() * r, m) && q2 == mod_pos(t2.b() * r, m)) {
        res.conjugate = true;
        res.permutation = p;
        res.power = r;
        return res;
      }
    }
  }
  auto prof1 = subgroup_profile(t1), prof2 = subgroup_profile(t2);
  for (const auto& [key, count] : prof1) {
    int other = prof2.count(key) ? prof2.at(key) : 0;
    if (count != other) {
      std::ostringstream msg;
      msg << "count of order-" << key.first
          << (key.second ? " homologies" : " non-homologies") << " differs: "
          << count << " vs " << other;
      res.invariant = msg.str();
      return res;
    }
  }
  res.invariant = "element sets differ under all coordinate relabelings";
  return res;
}

IdentificationReport family_identifications(const NormalForm& nf) {
  const std::vector<Monomial>& ref = nf.reference;
  if (ref.size() < 2)
    throw InfiniteNormalizer(
        "need at least two reference monomials to cut the rescaling group "
        "down to a finite set (got " +
        std::to_string(ref.size()) + ")");
  std::vector<std::vector<long long>> rows;
  for (size_t t = 1; t < ref.size(); ++t)
    rows.push_back({static_cast<long long>(ref[t].j) - ref[0].j,
                    static_cast<long long>(ref[t].k) - ref[0].k});
  SnfResult snf = smith_normal_form(rows);
  if (snf.rank < 2)
    throw InfiniteNormalizer(
        "reference exponent lattice has rank " + std::to_string(snf.rank) +
        "; the rescaling group is infinite");

  // Solutions (lambda2, lambda3) of lambda2^dj * lambda3^dk = 1 form
  // Z^2 / row-lattice; with U*A*V = D the group is generated by
  // (zeta_{d_i}^{V[0][i]}, zeta_{d_i}^{V[1][i]}) of order d_i.
  long d0 = snf.diag[0], d1 = snf.diag[1];
  auto gen = [&](int i) {
    long di = snf.diag[i];
    return std::pair<CycNum, CycNum>(
        CycNum::zeta(static_cast<int>(di),
                     static_cast<long>(mod_pos(snf.V[0][i], di))),
        CycNum::zeta(static_cast<int>(di),
                     static_cast<long>(mod_pos(snf.V[1][i], di))));
  };
  auto [g0l2, g0l3] = gen(0);
  auto [g1l2, g1l3] = gen(1);

  IdentificationReport report;
  std::vector<std::string> induced_keys;
  for (long e0 = 0; e0 < d0; ++e0)
    for (long e1 = 0; e1 < d1; ++e1) {
      FamilyScaling fs;
      fs.lambda2 = g0l2.pow(e0) * g1l2.pow(e1);
      fs.lambda3 = g0l3.pow(e0) * g1l3.pow(e1);
      CycNum mu = fs.lambda2.pow(ref[0].j) * fs.lambda3.pow(ref[0].k);
      CycNum mu_inv = mu.inverse();
      std::string key;
      for (const Monomial& mon : nf.base.support()) {
        auto cf = nf.base.coeff(mon).as_single_term();
        if (!cf || cf->second.empty()) continue;  // reference monomial
        CycNum factor =
            (fs.lambda2.pow(mon.j) * fs.lambda3.pow(mon.k) * mu_inv)
                .canonical();
        const std::string& name = cf->second.begin()->first;
        fs.parameter_multipliers[name] = factor;
        key += name + "=" + factor.key() + ";";
      }
      if (std::find(induced_keys.begin(), induced_keys.end(), key) ==
          induced_keys.end()) {
        induced_keys.push_back(key);
        report.induced.push_back(fs.parameter_multipliers);
      }
      report.scalings.push_back(std::move(fs));
    }
  return report;
}

}  // namespace planeaut
