#include "planeaut/stabilizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "planeaut/snf.hpp"

namespace planeaut {

namespace {

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Exponent differences (Δj, Δk) of the support relative to its first element;
// row t-1 belongs to support monomial t.
std::vector<std::vector<long long>> support_rows(const std::vector<Monomial>& supp) {
  std::vector<std::vector<long long>> rows;
  for (size_t t = 1; t < supp.size(); ++t)
    rows.push_back({supp[t].j - supp[0].j, supp[t].k - supp[0].k});
  return rows;
}

const std::array<std::array<int, 3>, 6>& all_permutations() {
  static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                           {0, 2, 1},
                                                           {1, 0, 2},
                                                           {1, 2, 0},
                                                           {2, 0, 1},
                                                           {2, 1, 0}}};
  return perms;
}

std::string perm_str(const std::array<int, 3>& p) {
  static const char* names = "XYZ";
  std::string s = "[";
  for (int t = 0; t < 3; ++t) {
    s += names[p[t]];
    if (t < 2) s += ";";
  }
  return s + "]";
}

// Scalar c with substitute(F, E) == c*F; throws when E is not a stabilizing
// transformation (every emitted matrix passes through here).
CycNum check_element(const TernaryForm& F, const ProjMatrix& E) {
  TernaryForm image = substitute(F, E);
  if (image.support() != F.support())
    throw StabilizerError("internal: emitted matrix does not preserve the support");
  const Monomial u0 = F.support().front();
  const auto& ft = F.coeff(u0).terms();
  const auto& it = image.coeff(u0).terms();
  if (ft.empty() || it.empty() || ft.begin()->first != it.begin()->first)
    throw StabilizerError("internal: emitted matrix is not a stabilizer");
  CycNum c = it.begin()->second * ft.begin()->second.inverse();
  if (!(image == F.scaled(ParamPoly(c))))
    throw StabilizerError("internal: emitted matrix is not a stabilizer");
  return c;
}

std::string matrix_key(const ProjMatrix& m) { return m.canonicalized().str(); }

struct MonomialSearch {
  std::vector<ProjMatrix> elements;
  long total = 0;
  bool infinite = false;
  bool exhaustive = true;  // false when a permutation was skipped generically
  std::vector<std::string> notes;
};

// All permutation-times-diagonal stabilizing transformations.  Works on
// parametric forms too: a permutation whose coefficient ratios would involve
// parameters is skipped with a note (its members exist only for special
// parameter values), which clears `exhaustive`.
MonomialSearch monomial_search(const TernaryForm& F) {
  MonomialSearch out;
  const std::vector<Monomial> supp = F.support();
  if (supp.empty()) throw StabilizerError("the zero form has no stabilizer");
  const std::vector<std::vector<long long>> rows = support_rows(supp);
  if (rows.empty()) {
    out.infinite = true;
    return out;
  }
  const SnfResult snf = smith_normal_form(rows);
  if (snf.rank < 2) {
    out.infinite = true;
    return out;
  }
  const long long d0 = snf.diag[0], d1 = snf.diag[1];

  for (const auto& p : all_permutations()) {
    const ProjMatrix P = ProjMatrix::permutation(p);
    const TernaryForm G = substitute(F, P);
    if (G.support() != supp) continue;  // no transformation with this shape

    // Coefficient ratios rho_u = F_u / G_u.
    std::vector<CycNum> rho;
    bool parametric = false;
    for (const Monomial& u : supp) {
      auto fu = F.coeff(u).as_single_term();
      auto gu = G.coeff(u).as_single_term();
      if (!fu || !gu || fu->second != gu->second) {
        parametric = true;
        break;
      }
      rho.push_back(fu->first * gu->first.inverse());
    }
    if (parametric) {
      out.exhaustive = false;
      out.notes.push_back("permutation " + perm_str(p) +
                          " skipped: coefficient ratios involve parameters, so "
                          "it contributes only for special parameter values");
      continue;
    }

    // Relative ratios must be roots of unity for a finite-order solution.
    long long L0 = 1;
    std::vector<std::pair<int, long>> rus;
    bool ok = true;
    const CycNum rho0_inv = rho[0].inverse();
    for (size_t t = 1; t < rho.size(); ++t) {
      CycNum r = rho[t] * rho0_inv;
      auto ru = r.as_root_of_unity();
      if (!ru) {
        out.notes.push_back("permutation " + perm_str(p) +
                            ": coefficient ratio " + r.str() +
                            " is not a root of unity; no contribution");
        ok = false;
        break;
      }
      rus.push_back(*ru);
      L0 = std::lcm(L0, static_cast<long long>(ru->first));
    }
    if (!ok) continue;

    // Any solution's entries are roots of unity of order dividing L.
    const long long L = L0 * d1;
    std::vector<long long> target(rows.size());
    for (size_t t = 0; t < rus.size(); ++t)
      target[t] = rus[t].second * (L / rus[t].first);

    // Transform by U and solve the diagonal congruences d_i y_i = e_i (mod L).
    std::vector<long long> e(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      long long acc = 0;
      for (size_t t = 0; t < rows.size(); ++t)
        acc = mod_pos(acc + mod_pos(snf.U[i][t], L) * target[t], L);
      e[i] = acc;
    }
    bool consistent = true;
    for (size_t i = 2; i < rows.size(); ++i)
      if (e[i] != 0) consistent = false;
    if (consistent)
      for (int i = 0; i < 2; ++i)
        if (e[static_cast<size_t>(i)] % snf.diag[static_cast<size_t>(i)] != 0)
          consistent = false;
    if (!consistent) {
      out.notes.push_back("permutation " + perm_str(p) +
                          ": scaling system inconsistent; no contribution");
      continue;
    }

    for (long long t0 = 0; t0 < d0; ++t0)
      for (long long t1 = 0; t1 < d1; ++t1) {
        const long long y0 = e[0] / d0 + t0 * (L / d0);
        const long long y1 = e[1] / d1 + t1 * (L / d1);
        const long long x0 = mod_pos(snf.V[0][0] * y0 + snf.V[0][1] * y1, L);
        const long long x1 = mod_pos(snf.V[1][0] * y0 + snf.V[1][1] * y1, L);
        ProjMatrix M =
            P * ProjMatrix::diagonal(cyc_one(),
                                     CycNum::zeta(static_cast<int>(L), x0),
                                     CycNum::zeta(static_cast<int>(L), x1));
        check_element(F, M);
        out.elements.push_back(std::move(M));
        ++out.total;
      }
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const ProjMatrix& a, const ProjMatrix& b) {
              return matrix_key(a) < matrix_key(b);
            });
  return out;
}

int branch_limit() {
  if (const char* s = std::getenv("PLANEAUT_BRANCH_LIMIT")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 64;
}

const std::set<std::string>& block_unknowns() {
  static const std::set<std::string> u = {"v", "w", "s", "t"};
  return u;
}

ProjMatrix shape_matrix(BlockShape shape) {
  auto P = [](const char* n) { return ParamPoly::parameter(n); };
  ParamPoly zero, one(Rat(1));
  switch (shape) {
    case BlockShape::FixX:
      return ProjMatrix::from_rows({{{one, zero, zero},
                                     {zero, P("v"), P("w")},
                                     {zero, P("s"), P("t")}}});
    case BlockShape::FixY:
      return ProjMatrix::from_rows({{{P("v"), zero, P("w")},
                                     {zero, one, zero},
                                     {P("s"), zero, P("t")}}});
    case BlockShape::FixZ:
      return ProjMatrix::from_rows({{{P("v"), P("w"), zero},
                                     {P("s"), P("t"), zero},
                                     {zero, zero, one}}});
  }
  throw StabilizerError("unknown block shape");
}

}  // namespace

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::DiagonalOnly:
      return "diagonal-only";
    case Completeness::MonomialComplete:
      return "monomial-complete";
    case Completeness::ReducesToDiagonalCertified:
      return "reduces-to-diagonal-certified";
  }
  return "?";
}

std::string to_string(BlockShape s) {
  switch (s) {
    case BlockShape::FixX:
      return "fixX";
    case BlockShape::FixY:
      return "fixY";
    case BlockShape::FixZ:
      return "fixZ";
  }
  return "?";
}

StabilizerReport diagonal_stabilizer(const TernaryForm& F) {
  const std::vector<Monomial> supp = F.support();
  if (supp.empty()) throw StabilizerError("the zero form has no stabilizer");
  StabilizerReport rep;
  for (const std::string& p : F.parameter_names()) rep.assumed_nonzero.push_back(p);
  const std::vector<std::vector<long long>> rows = support_rows(supp);
  const SnfResult snf = rows.empty() ? SnfResult{} : smith_normal_form(rows);
  if (rows.empty() || snf.rank < 2) {
    rep.infinite = true;
    rep.notes.push_back(
        "support exponent differences span a lattice of rank < 2: a "
        "positive-dimensional family of diagonal scalings stabilizes the form");
    return rep;
  }
  rep.total_order = 1;
  for (int i = 0; i < 2; ++i) {
    const long long d = snf.diag[static_cast<size_t>(i)];
    rep.total_order *= d;
    if (d == 1) continue;
    rep.invariant_factors.push_back(d);
    ProjMatrix gen = ProjMatrix::diagonal(
        cyc_one(),
        CycNum::zeta(static_cast<int>(d), mod_pos(snf.V[0][static_cast<size_t>(i)], d)),
        CycNum::zeta(static_cast<int>(d), mod_pos(snf.V[1][static_cast<size_t>(i)], d)));
    check_element(F, gen);
    rep.diagonal_generators.push_back(std::move(gen));
  }
  rep.completeness = Completeness::DiagonalOnly;
  return rep;
}

StabilizerReport monomial_stabilizer(const TernaryForm& F) {
  if (!F.is_specialized())
    throw NotSpecialized(
        "monomial stabilizer needs a fully specialized form; assign every "
        "parameter first");
  StabilizerReport rep = diagonal_stabilizer(F);
  if (rep.infinite) return rep;
  MonomialSearch ms = monomial_search(F);
  rep.monomial_elements = std::move(ms.elements);
  rep.total_order = ms.total;
  rep.completeness = Completeness::MonomialComplete;
  for (std::string& n : ms.notes) rep.notes.push_back(std::move(n));
  return rep;
}

BlockCertificate block_reduce(const TernaryForm& F, BlockShape shape) {
  for (const std::string& p : F.parameter_names())
    if (block_unknowns().count(p))
      throw StabilizerError("curve parameter '" + p +
                            "' collides with a block unknown");
  const std::vector<Monomial> supp = F.support();
  if (supp.empty()) throw StabilizerError("the zero form has no stabilizer");
  const std::set<Monomial> supp_set(supp.begin(), supp.end());

  BlockCertificate cert;
  cert.shape = shape;
  const TernaryForm image = substitute(F, shape_matrix(shape));
  const ParamPoly det_expr = ParamPoly::parameter("v") * ParamPoly::parameter("t") -
                             ParamPoly::parameter("w") * ParamPoly::parameter("s");
  const int limit = branch_limit();

  struct Branch {
    std::set<std::string> zeroed;
  };
  std::vector<Branch> work = {Branch{}};
  // terminal branches that could not be pruned: (zeroed set, residuals)
  std::vector<std::pair<std::set<std::string>, std::vector<std::string>>> alive;
  cert.branches_explored = 1;

  auto describe = [](const std::set<std::string>& z) {
    std::string s = "{";
    for (const std::string& n : z) {
      if (s.size() > 1) s += ",";
      s += n + "=0";
    }
    return s + "}";
  };

  while (!work.empty()) {
    Branch br = std::move(work.back());
    work.pop_back();
    std::map<std::string, CycNum> zeros;
    for (const std::string& n : br.zeroed) zeros[n] = CycNum();

    if (det_expr.substituted(zeros).is_zero()) {
      cert.eliminations.push_back("branch " + describe(br.zeroed) +
                                  ": block determinant vanishes: pruned");
      continue;
    }

    bool pruned = false;
    bool progressed = true;
    std::vector<std::string> residual;
    // (monomial description, unknowns to branch on)
    std::vector<std::pair<std::string, std::vector<std::string>>> splits;
    while (progressed && !pruned) {
      progressed = false;
      residual.clear();
      splits.clear();
      for (const Monomial& u : image.support()) {
        const ParamPoly pp = image.coeff(u).substituted(zeros);
        if (pp.is_zero()) continue;
        if (supp_set.count(u)) continue;
        auto st = pp.as_single_term();
        if (st) {
          std::vector<std::string> unk;
          for (const auto& [name, e] : st->second)
            if (block_unknowns().count(name)) unk.push_back(name);
          if (unk.empty()) {
            cert.eliminations.push_back(
                "branch " + describe(br.zeroed) + ": coefficient of " + u.str() +
                " is the nonzero constant " + pp.str() + ": pruned");
            pruned = true;
            break;
          }
          if (unk.size() == 1) {
            cert.eliminations.push_back("coefficient of " + u.str() + " is " +
                                        pp.str() + ": set " + unk[0] + " = 0");
            br.zeroed.insert(unk[0]);
            zeros[unk[0]] = CycNum();
            if (det_expr.substituted(zeros).is_zero()) {
              cert.eliminations.push_back("branch " + describe(br.zeroed) +
                                          ": block determinant vanishes: pruned");
              pruned = true;
            }
            progressed = true;
            break;
          }
          splits.emplace_back("coefficient of " + u.str() + " is " + pp.str(),
                              std::move(unk));
        } else {
          residual.push_back("coefficient of " + u.str() + " is " + pp.str());
        }
      }
      if (pruned) break;
      // a support coefficient must stay nonzero for a stabilizing map
      if (!progressed)
        for (const Monomial& u : supp) {
          if (!image.coeff(u).substituted(zeros).is_zero()) continue;
          cert.eliminations.push_back("branch " + describe(br.zeroed) +
                                      ": support coefficient of " + u.str() +
                                      " vanishes: pruned");
          pruned = true;
          break;
        }
    }
    if (pruned) continue;

    if (!splits.empty()) {
      const auto& [desc, unk] = splits.front();
      std::string names;
      for (const std::string& n : unk) names += (names.empty() ? "" : ", ") + n;
      cert.eliminations.push_back(desc + ": branch on " + names);
      cert.branches_explored += static_cast<int>(unk.size());
      if (cert.branches_explored > limit)
        throw BranchLimitExceeded("deduction exceeded " + std::to_string(limit) +
                                  " branches (raise PLANEAUT_BRANCH_LIMIT)");
      for (const std::string& n : unk) {
        Branch child = br;
        child.zeroed.insert(n);
        work.push_back(std::move(child));
      }
      continue;
    }
    alive.emplace_back(br.zeroed, residual);
  }

  cert.reduces_to_diagonal = !alive.empty();
  for (const auto& [zeroed, residual] : alive) {
    const bool diagonal = zeroed.count("w") && zeroed.count("s");
    if (!diagonal || !residual.empty()) {
      cert.reduces_to_diagonal = false;
      for (const std::string& r : residual) cert.residual.push_back(r);
      if (residual.empty())
        cert.residual.push_back("surviving branch " + describe(zeroed) +
                                " is not diagonal");
    }
  }
  return cert;
}

StabilizerReport aut_lower_bound(const TernaryForm& F) {
  StabilizerReport rep = diagonal_stabilizer(F);
  if (rep.infinite) {
    rep.notes.push_back("diagonal part already infinite; no refinement attempted");
    return rep;
  }
  MonomialSearch ms = monomial_search(F);
  rep.monomial_elements = std::move(ms.elements);
  rep.total_order = ms.total;
  for (std::string& n : ms.notes) rep.notes.push_back(std::move(n));

  bool blocks_ok = true;
  for (BlockShape shape : {BlockShape::FixX, BlockShape::FixY, BlockShape::FixZ}) {
    try {
      BlockCertificate cert = block_reduce(F, shape);
      if (cert.reduces_to_diagonal) {
        rep.notes.push_back("shape " + to_string(shape) +
                            ": certified, only the diagonal branch survives");
      } else {
        blocks_ok = false;
        rep.notes.push_back("shape " + to_string(shape) + ": inconclusive");
      }
    } catch (const BranchLimitExceeded& e) {
      blocks_ok = false;
      rep.notes.push_back("shape " + to_string(shape) + ": " + e.what());
    }
  }
  if (blocks_ok && ms.exhaustive) {
    rep.completeness = Completeness::ReducesToDiagonalCertified;
    rep.notes.push_back(
        "order is exact for the transformations that preserve each coordinate "
        "point and its opposite line; primitive group actions require the "
        "separate special-group checks");
  } else if (ms.exhaustive) {
    rep.completeness = Completeness::MonomialComplete;
  } else {
    rep.completeness = Completeness::DiagonalOnly;
  }
  return rep;
}

}  // namespace planeaut
