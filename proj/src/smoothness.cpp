#include "planeaut/smoothness.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>
#include <tuple>

#include "planeaut/qpoly.hpp"

namespace planeaut {

namespace {

// ---------------------------------------------------------------------------
// exact route: per-patch elimination

// A polynomial in the eliminated variable whose coefficients are univariate
// polynomials in the kept variable.
using BiPoly = std::vector<QPoly>;

void trim(BiPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// F(1, x, y) arranged by powers of y (coefficients are polynomials in x).
// Monomials of a fixed total degree have distinct (j, k) pairs, so nothing
// collides.
BiPoly patch_x1(const TernaryForm& F) {
  BiPoly out;
  for (const auto& [mon, c] : F.terms()) {
    if (static_cast<size_t>(mon.k) >= out.size()) out.resize(mon.k + 1);
    out[mon.k] += QPoly::monomial(mon.j, *c.as_constant());
  }
  trim(out);
  return out;
}

std::string bipoly_str(const BiPoly& f, const std::string& xv,
                       const std::string& yv) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + f[i].str(xv) + ")";
    if (i == 1) s += "*" + yv;
    if (i > 1) s += "*" + yv + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// Small deterministic search for a root inside the coefficient field:
// rational multiples of low-order roots of unity.  Finding one upgrades a
// minimal-polynomial witness to explicit coordinates.
std::optional<CycNum> probe_root(const QPoly& f) {
  if (f.is_zero() || f.degree() < 1) return std::nullopt;
  if (f.eval(CycNum()).is_zero()) return CycNum();
  static const std::vector<Rat> scales = {Rat(1),     Rat(-1),    Rat(2),
                                          Rat(-2),    Rat(1, 2),  Rat(-1, 2),
                                          Rat(3),     Rat(-3),    Rat(1, 3),
                                          Rat(-1, 3), Rat(4),     Rat(-4)};
  static const std::vector<int> orders = {1, 2, 3, 4, 6, 8, 5, 12};
  for (const Rat& a : scales)
    for (int n : orders)
      for (long k = 0; k < n; ++k) {
        if (n > 1 && std::gcd(k, static_cast<long>(n)) != 1) continue;
        CycNum cand = CycNum(a) * CycNum::zeta(n, k);
        if (f.eval(cand).is_zero()) return cand;
      }
  return std::nullopt;
}

QPoly reduce_mod(const QPoly& f, const QPoly& m) { return divrem(f, m).second; }

BiPoly reduce_mod(BiPoly f, const QPoly& m) {
  for (QPoly& c : f) c = reduce_mod(c, m);
  trim(f);
  return f;
}

// gcd of two polynomials whose coefficients live in Q(zeta)[x]/(m(x)) with m
// squarefree.  When a leading coefficient is a zero divisor the modulus
// splits and both factors are pursued (dynamic evaluation); the result is a
// list of (modulus factor, gcd over that factor).  The Euclidean row
// operations stay valid in every quotient, so splitting late loses nothing.
std::vector<std::pair<QPoly, BiPoly>> dynamic_gcd(const BiPoly& a0,
                                                  const BiPoly& b0,
                                                  const QPoly& m0) {
  std::vector<std::pair<QPoly, BiPoly>> out;
  std::vector<std::tuple<QPoly, BiPoly, BiPoly>> stack;
  stack.emplace_back(m0, a0, b0);
  while (!stack.empty()) {
    auto [m, f, g] = std::move(stack.back());
    stack.pop_back();
    f = reduce_mod(std::move(f), m);
    g = reduce_mod(std::move(g), m);
    bool split = false;
    while (true) {
      if (f.size() < g.size()) std::swap(f, g);
      if (g.empty()) break;
      ExtendedGcd eg = poly_extended_gcd(g.back(), m);
      if (eg.g.degree() > 0) {
        stack.emplace_back(eg.g.monic(), f, g);
        stack.emplace_back(exact_div(m, eg.g).monic(), f, g);
        split = true;
        break;
      }
      const QPoly inv = reduce_mod(eg.s.scaled(eg.g.coeff(0).inverse()), m);
      while (f.size() >= g.size()) {
        const QPoly q = reduce_mod(f.back() * inv, m);
        const size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
          f[shift + i] = reduce_mod(f[shift + i] - q * g[i], m);
        trim(f);  // the leading coefficient cancelled exactly
      }
      std::swap(f, g);
    }
    if (!split) out.emplace_back(m, f);
  }
  return out;
}

// Exact check of a fully explicit projective point against G and its partials.
bool verify_point(const TernaryForm& G, const std::array<TernaryForm, 3>& P,
                  const CycNum& x, const CycNum& y, const CycNum& z) {
  auto vanishes = [&](const TernaryForm& f) {
    CycNum acc;
    for (const auto& [mon, c] : f.terms())
      acc += *c.as_constant() * x.pow(mon.i) * y.pow(mon.j) * z.pow(mon.k);
    return acc.is_zero();
  };
  return vanishes(G) && vanishes(P[0]) && vanishes(P[1]) && vanishes(P[2]);
}

struct PatchOutcome {
  bool singular = false;
  SingularWitness witness;
  bool degenerate = false;  // every elimination pair had a zero resultant
};

// Patch {X != 0}: eliminate the third coordinate from the partials' system.
PatchOutcome affine_patch_check(const TernaryForm& G,
                                const std::array<TernaryForm, 3>& P) {
  PatchOutcome out;
  const std::array<BiPoly, 3> f = {patch_x1(P[0]), patch_x1(P[1]),
                                   patch_x1(P[2])};
  // Pairs of index pairs covering all three partials; the first choice whose
  // two resultants are nonzero wins.  A common zero of the system kills every
  // resultant, so any non-degenerate choice yields a complete candidate set.
  static const int pick[3][4] = {{0, 1, 0, 2}, {0, 2, 1, 2}, {0, 1, 1, 2}};
  QPoly r1, r2;
  int i0 = -1, j0 = -1, third = -1;
  for (const auto& pk : pick) {
    r1 = resultant(f[pk[0]], f[pk[1]]);
    r2 = resultant(f[pk[2]], f[pk[3]]);
    if (!r1.is_zero() && !r2.is_zero()) {
      i0 = pk[0];
      j0 = pk[1];
      third = 3 - pk[0] - pk[1];
      break;
    }
  }
  if (third < 0) {
    out.degenerate = true;
    return out;
  }
  const QPoly cand = poly_gcd(r1, r2);
  if (cand.degree() <= 0) return out;  // no candidate x-coordinates
  const QPoly m = squarefree_part(cand).monic();

  for (const auto& [m1, g1] : dynamic_gcd(f[static_cast<size_t>(i0)],
                                          f[static_cast<size_t>(j0)], m)) {
    if (g1.size() < 2) continue;  // constant gcd: no common zero over m1
    for (const auto& [m2, g2] :
         dynamic_gcd(g1, reduce_mod(f[static_cast<size_t>(third)], m1), m1)) {
      if (g2.size() < 2) continue;
      out.singular = true;
      out.witness.patch = "X=1";
      if (auto y0 = probe_root(m2)) {
        QPoly h;
        for (size_t i = 0; i < g2.size(); ++i)
          h += QPoly::monomial(static_cast<int>(i), g2[i].eval(*y0));
        if (auto z0 = probe_root(squarefree_part(h))) {
          if (verify_point(G, P, cyc_one(), *y0, *z0)) {
            out.witness.coordinates = {"1", y0->str(), z0->str()};
            return out;
          }
        }
      }
      out.witness.minimal_polynomials = {"Y: " + m2.str("Y"),
                                         "Z: " + bipoly_str(g2, "Y", "Z")};
      return out;
    }
  }
  return out;
}

// Deterministic retry frames: X -> X+Y, X -> X+Z, Y -> Y+Z.
ProjMatrix shear_matrix(int which) {
  std::array<std::array<ParamPoly, 3>, 3> rows;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          (r == c) ? ParamPoly(Rat(1)) : ParamPoly();
  if (which == 0)
    rows[0][1] = ParamPoly(Rat(1));
  else if (which == 1)
    rows[0][2] = ParamPoly(Rat(1));
  else
    rows[1][2] = ParamPoly(Rat(1));
  return ProjMatrix::from_rows(rows);
}

CycNum eval_form(const TernaryForm& f, const CycNum& x, const CycNum& y,
                 const CycNum& z) {
  CycNum acc;
  for (const auto& [mon, c] : f.terms())
    acc += *c.as_constant() * x.pow(mon.i) * y.pow(mon.j) * z.pow(mon.k);
  return acc;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth:
      return "smooth";
    case Verdict::Singular:
      return "singular";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

bool core_necessary(const TernaryForm& F) {
  const int d = F.degree();
  int mi = 0, mj = 0, mk = 0;
  for (const Monomial& m : F.support()) {
    mi = std::max(mi, m.i);
    mj = std::max(mj, m.j);
    mk = std::max(mk, m.k);
  }
  return mi >= d - 1 && mj >= d - 1 && mk >= d - 1;
}

SmoothnessCertificate is_smooth(
    const TernaryForm& F, const std::map<std::string, CycNum>& specialization) {
  const TernaryForm G = F.specialized(specialization);
  if (!G.is_specialized()) {
    std::string names;
    for (const std::string& n : G.parameter_names())
      names += (names.empty() ? "" : ", ") + n;
    throw SmoothnessError("parameters remain unassigned: " + names);
  }
  if (G.is_zero())
    throw SmoothnessError("the zero form has no smoothness verdict");

  SmoothnessCertificate cert;
  const auto P = partials(G);

  // Support-level necessary condition: a variable that never reaches
  // exponent degree-1 forces its coordinate point onto the singular locus.
  if (!core_necessary(G)) {
    const int d = G.degree();
    int mi = 0, mj = 0, mk = 0;
    for (const Monomial& m : G.support()) {
      mi = std::max(mi, m.i);
      mj = std::max(mj, m.j);
      mk = std::max(mk, m.k);
    }
    cert.verdict = Verdict::Singular;
    cert.method = "core-check";
    SingularWitness w;
    CycNum x, y, z;
    if (mi < d - 1) {
      w.patch = "[1:0:0]";
      w.coordinates = {"1", "0", "0"};
      x = cyc_one();
    } else if (mj < d - 1) {
      w.patch = "[0:1:0]";
      w.coordinates = {"0", "1", "0"};
      y = cyc_one();
    } else {
      w.patch = "[0:0:1]";
      w.coordinates = {"0", "0", "1"};
      z = cyc_one();
    }
    if (!verify_point(G, P, x, y, z))
      throw SmoothnessError("internal: reference witness fails verification");
    cert.notes.push_back(
        "a variable stays below exponent degree-1 across the support, so its "
        "coordinate point is singular");
    cert.witness = w;
    return cert;
  }

  cert.method = "resultant";

  // An identically-zero partial leaves a system of at most two curves, which
  // always intersect in the projective plane.
  for (int t = 0; t < 3; ++t)
    if (P[static_cast<size_t>(t)].is_zero()) {
      cert.verdict = Verdict::Singular;
      cert.notes.push_back(
          "a partial derivative vanishes identically; the remaining partials "
          "always share a projective zero");
      return cert;
    }

  // point [0:0:1]
  if (eval_form(P[0], CycNum(), CycNum(), cyc_one()).is_zero() &&
      eval_form(P[1], CycNum(), CycNum(), cyc_one()).is_zero() &&
      eval_form(P[2], CycNum(), CycNum(), cyc_one()).is_zero()) {
    cert.verdict = Verdict::Singular;
    SingularWitness w;
    w.patch = "[0:0:1]";
    w.coordinates = {"0", "0", "1"};
    cert.witness = w;
    return cert;
  }

  // line {X = 0, Y != 0}: a univariate system in the third coordinate
  {
    std::array<QPoly, 3> line;
    for (int t = 0; t < 3; ++t)
      for (const auto& [mon, c] : P[static_cast<size_t>(t)].terms())
        if (mon.i == 0)
          line[static_cast<size_t>(t)] +=
              QPoly::monomial(mon.k, *c.as_constant());
    QPoly g;
    for (const QPoly& q : line)
      if (!q.is_zero()) g = g.is_zero() ? q : poly_gcd(g, q);
    if (g.is_zero()) {
      // all three partials vanish on the whole line; pick the point Z = 0
      cert.verdict = Verdict::Singular;
      SingularWitness w;
      w.patch = "X=0,Y=1";
      w.coordinates = {"0", "1", "0"};
      cert.witness = w;
      if (!verify_point(G, P, CycNum(), cyc_one(), CycNum()))
        throw SmoothnessError("internal: line witness fails verification");
      return cert;
    }
    if (g.degree() > 0) {
      cert.verdict = Verdict::Singular;
      SingularWitness w;
      w.patch = "X=0,Y=1";
      const QPoly gs = squarefree_part(g);
      if (auto z0 = probe_root(gs)) {
        if (verify_point(G, P, CycNum(), cyc_one(), *z0)) {
          w.coordinates = {"0", "1", z0->str()};
          cert.witness = w;
          return cert;
        }
      }
      w.minimal_polynomials = {"Z: " + gs.str("Z")};
      cert.witness = w;
      return cert;
    }
  }

  // affine patch {X != 0}; shear and retry when the elimination degenerates
  try {
    for (int attempt = 0; attempt <= 3; ++attempt) {
      const bool sheared = attempt > 0;
      const TernaryForm H = sheared ? substitute(G, shear_matrix(attempt - 1)) : G;
      const auto PH = sheared ? partials(H) : P;
      PatchOutcome po = affine_patch_check(H, PH);
      if (po.degenerate) {
        if (attempt == 3)
          throw ShearExhausted(
              "every elimination frame degenerated: the partials share "
              "factors in all retry frames");
        continue;
      }
      if (!po.singular) {
        cert.verdict = Verdict::Smooth;
        if (sheared)
          cert.notes.push_back("affine patch analyzed after shear frame " +
                               std::to_string(attempt));
        return cert;
      }
      cert.verdict = Verdict::Singular;
      if (sheared) {
        cert.notes.push_back("witness found in shear frame " +
                             std::to_string(attempt) +
                             "; its data refers to that frame");
        po.witness.patch += " (after shear " + std::to_string(attempt) + ")";
      }
      cert.witness = po.witness;
      return cert;
    }
  } catch (const ShearExhausted& e) {
    cert.verdict = Verdict::Undetermined;
    cert.notes.push_back(e.what());
    return cert;
  }
  cert.verdict = Verdict::Undetermined;
  return cert;
}

// ---------------------------------------------------------------------------
// finite-field oracle

namespace {

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long long mod_pow_ll(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long primitive_root(long long p) {
  std::vector<long long> fac;
  long long n = p - 1;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      fac.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) fac.push_back(n);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : fac)
      if (mod_pow_ll(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  throw SmoothnessError("no primitive root found");
}

long long scan_cap() {
  if (const char* s = std::getenv("PLANEAUT_MAX_PRIME")) {
    long long v = std::atoll(s);
    if (v >= 2) return v;
  }
  return 10000;
}

struct FpTerm {
  int i, j, k;
  long long c;
};

struct ScanPart {
  long long on_curve = 0;
  bool singular = false;
  std::array<long long, 3> point{};
};

}  // namespace

FiniteFieldResult finite_field_check(
    const TernaryForm& F, const std::map<std::string, CycNum>& specialization,
    long long p) {
  const TernaryForm G = F.specialized(specialization);
  if (!G.is_specialized())
    throw SmoothnessError("parameters remain unassigned for the scan");
  if (G.is_zero()) throw SmoothnessError("the zero form has no reduction");
  if (!is_prime_ll(p)) throw SmoothnessError("scan modulus must be prime");
  if (p > scan_cap())
    throw SmoothnessError("prime exceeds the scan cap (PLANEAUT_MAX_PRIME)");

  FiniteFieldResult res;
  SmoothnessCertificate& cert = res.certificate;
  cert.method = "finite-field";

  // embed Q(zeta_n) coefficients via zeta_n -> g^((p-1)/n); all orders must
  // divide p-1 for the embedding to exist
  long long N = 1;
  for (const auto& [mon, c] : G.terms()) {
    (void)mon;
    N = std::lcm(N, static_cast<long long>(c.as_constant()->order()));
  }
  if ((p - 1) % N != 0)
    throw NoRootOfUnity("p = " + std::to_string(p) +
                        " is not 1 mod the coefficient orders (need 1 mod " +
                        std::to_string(N) + ")");
  const long long g = primitive_root(p);

  auto embed_rat = [&](const Rat& r) -> long long {
    const long long nm = mpz_class(r.get_num() % static_cast<long>(p)).get_si();
    const long long dn = mpz_class(r.get_den() % static_cast<long>(p)).get_si();
    if (dn == 0) throw SmoothnessError("coefficient denominator divisible by p");
    return mod_pow_ll(dn, p - 2, p) * ((nm % p + p) % p) % p;
  };
  auto embed = [&](const CycNum& c) {
    const long long zn = mod_pow_ll(g, (p - 1) / c.order(), p);
    long long acc = 0, zp = 1;
    for (const Rat& r : c.coeffs()) {
      acc = (acc + embed_rat(r) * zp) % p;
      zp = zp * zn % p;
    }
    return acc;
  };

  const int d = G.degree();
  std::vector<FpTerm> terms, tx, ty, tz;
  for (const auto& [mon, c] : G.terms()) {
    const long long v = embed(*c.as_constant());
    if (v == 0) continue;
    terms.push_back({mon.i, mon.j, mon.k, v});
    if (mon.i > 0) tx.push_back({mon.i - 1, mon.j, mon.k, v * mon.i % p});
    if (mon.j > 0) ty.push_back({mon.i, mon.j - 1, mon.k, v * mon.j % p});
    if (mon.k > 0) tz.push_back({mon.i, mon.j, mon.k - 1, v * mon.k % p});
  }

  const long long threshold = static_cast<long long>(d - 1) * (d - 2) + 1;
  if (p > threshold)
    cert.notes.push_back("p exceeds the validity threshold " +
                         std::to_string(threshold));
  else
    cert.notes.push_back("ThresholdViolation: p <= " +
                         std::to_string(threshold) +
                         ", scan is exploratory only");

  // power tables for every residue, shared read-only by the workers
  std::vector<std::vector<long long>> ptab(static_cast<size_t>(p));
  for (long long v = 0; v < p; ++v) {
    auto& row = ptab[static_cast<size_t>(v)];
    row.assign(static_cast<size_t>(d) + 1, 1 % p);
    for (int i = 1; i <= d; ++i)
      row[static_cast<size_t>(i)] = row[static_cast<size_t>(i - 1)] * v % p;
  }

  auto eval_terms = [p, &ptab](const std::vector<FpTerm>& ts, long long x,
                               long long y, long long z) {
    long long acc = 0;
    for (const FpTerm& t : ts)
      acc = (acc + t.c * ptab[static_cast<size_t>(x)][static_cast<size_t>(t.i)] %
                       p * ptab[static_cast<size_t>(y)][static_cast<size_t>(t.j)] %
                       p * ptab[static_cast<size_t>(z)][static_cast<size_t>(t.k)]) %
            p;
    return acc;
  };

  // scan [1:y:z] over a worker-assigned y-range; merging is order-independent
  auto scan_range = [&](long long y_from, long long y_to) {
    ScanPart part;
    for (long long y = y_from; y < y_to; ++y)
      for (long long z = 0; z < p; ++z) {
        if (eval_terms(terms, 1, y, z) != 0) continue;
        ++part.on_curve;
        if (!part.singular && eval_terms(tx, 1, y, z) == 0 &&
            eval_terms(ty, 1, y, z) == 0 && eval_terms(tz, 1, y, z) == 0) {
          part.singular = true;
          part.point = {1, y, z};
        }
      }
    return part;
  };

  const int workers = 4;
  std::vector<std::future<ScanPart>> futs;
  for (int w = 0; w < workers; ++w) {
    const long long from = p * w / workers, to = p * (w + 1) / workers;
    futs.push_back(std::async(std::launch::async, scan_range, from, to));
  }
  std::vector<ScanPart> parts;
  for (auto& fu : futs) parts.push_back(fu.get());

  // the line {X = 0}: points [0:1:z] and [0:0:1]
  ScanPart rest;
  for (long long z = 0; z < p; ++z) {
    if (eval_terms(terms, 0, 1, z) != 0) continue;
    ++rest.on_curve;
    if (!rest.singular && eval_terms(tx, 0, 1, z) == 0 &&
        eval_terms(ty, 0, 1, z) == 0 && eval_terms(tz, 0, 1, z) == 0) {
      rest.singular = true;
      rest.point = {0, 1, z};
    }
  }
  if (eval_terms(terms, 0, 0, 1) == 0) {
    ++rest.on_curve;
    if (!rest.singular && eval_terms(tx, 0, 0, 1) == 0 &&
        eval_terms(ty, 0, 0, 1) == 0 && eval_terms(tz, 0, 0, 1) == 0) {
      rest.singular = true;
      rest.point = {0, 0, 1};
    }
  }
  parts.push_back(rest);

  // deterministic merge: the reported witness is the lexicographically
  // smallest singular point seen by any worker
  bool singular = false;
  std::array<long long, 3> best{};
  for (const ScanPart& part : parts) {
    res.point_count += part.on_curve;
    if (part.singular && (!singular || part.point < best)) {
      singular = true;
      best = part.point;
    }
  }
  if (singular) {
    cert.verdict = Verdict::Singular;
    SingularWitness w;
    w.patch = "mod " + std::to_string(p);
    w.coordinates = {std::to_string(best[0]), std::to_string(best[1]),
                     std::to_string(best[2])};
    cert.witness = w;
  } else {
    cert.verdict = Verdict::Smooth;
  }
  return res;
}

long long minimal_valid_prime(int d, const std::vector<long long>& orders) {
  long long L = 1;
  for (long long n : orders) L = std::lcm(L, n);
  const long long threshold = static_cast<long long>(d - 1) * (d - 2) + 1;
  for (long long p = threshold + 1;; ++p)
    if ((p - 1) % L == 0 && is_prime_ll(p)) return p;
}

}  // namespace planeaut
