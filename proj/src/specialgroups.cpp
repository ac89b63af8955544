#include "planeaut/specialgroups.hpp"

#include <algorithm>

namespace planeaut {

namespace {

std::string canon_key(const ProjMatrix& M) { return M.canonicalized().str(); }

const std::string& identity_key() {
  static const std::string key = canon_key(ProjMatrix());
  return key;
}

CycNum omega() { return CycNum::zeta(3, 1); }

// Kernel of the rows x cols matrix M, as column-coefficient vectors.
std::vector<std::vector<CycNum>> kernel_basis(std::vector<std::vector<CycNum>> M,
                                              size_t cols) {
  const size_t rows = M.size();
  std::vector<long> pivot_of_col(cols, -1);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && M[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(M[rank], M[p]);
    const CycNum inv = M[rank][c].inverse();
    for (size_t j = c; j < cols; ++j) M[rank][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][c].is_zero()) continue;
      const CycNum f = M[r][c];
      for (size_t j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<CycNum>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<CycNum> v(cols);
    v[c] = cyc_one();
    for (size_t j = 0; j < cols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -M[pivot_of_col[j]][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Monomial> degree_monomials(int d) {
  std::vector<Monomial> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) out.push_back(Monomial{i, j, d - i - j});
  return out;
}

// coefficients of `poly` by the exponent of parameter `name`
std::map<int, ParamPoly> coeffs_in(const ParamPoly& poly,
                                   const std::string& name) {
  std::map<int, ParamPoly> out;
  for (const auto& [mon, c] : poly.terms()) {
    ParamMon rest = mon;
    int e = 0;
    if (auto it = rest.find(name); it != rest.end()) {
      e = it->second;
      rest.erase(it);
    }
    auto [slot, fresh] = out.emplace(e, ParamPoly());
    (void)fresh;
    slot->second += ParamPoly::term(c, rest);
  }
  return out;
}

int param_degree(const std::map<int, ParamPoly>& coeffs) {
  int d = 0;
  for (const auto& [e, c] : coeffs)
    if (!c.is_zero()) d = std::max(d, e);
  return d;
}

// determinant by first-row Laplace expansion; matrices here stay tiny
ParamPoly param_det(const std::vector<std::vector<ParamPoly>>& M) {
  const size_t n = M.size();
  if (n == 1) return M[0][0];
  ParamPoly acc;
  for (size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<ParamPoly>> minor;
    minor.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<ParamPoly> row;
      row.reserve(n - 1);
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(M[r][j]);
      minor.push_back(std::move(row));
    }
    ParamPoly contrib = M[0][c] * param_det(minor);
    if (c % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

// Sylvester resultant of a and b with respect to parameter `name`
ParamPoly param_resultant(const ParamPoly& a, const ParamPoly& b,
                          const std::string& name) {
  const auto ca = coeffs_in(a, name);
  const auto cb = coeffs_in(b, name);
  const int m = param_degree(ca);
  const int n = param_degree(cb);
  if (m == 0 && n == 0) return ParamPoly(cyc_one());
  auto at = [](const std::map<int, ParamPoly>& c, int e) {
    auto it = c.find(e);
    return it == c.end() ? ParamPoly() : it->second;
  };
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<ParamPoly>> syl(size,
                                          std::vector<ParamPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int e = 0; e <= m; ++e) syl[r][r + m - e] = at(ca, e);
  for (int r = 0; r < m; ++r)
    for (int e = 0; e <= n; ++e) syl[n + r][r + n - e] = at(cb, e);
  return param_det(syl);
}

// divide out any b1^a * b3^c common to every term; roots at zero are outside
// K* anyway
ParamPoly strip_monomial_content(const ParamPoly& p,
                                 const std::vector<std::string>& names) {
  if (p.is_zero()) return p;
  std::map<std::string, int> low;
  for (const std::string& n : names) low[n] = INT32_MAX;
  for (const auto& [mon, c] : p.terms()) {
    (void)c;
    for (const std::string& n : names) {
      auto it = mon.find(n);
      low[n] = std::min(low[n], it == mon.end() ? 0 : it->second);
    }
  }
  ParamPoly out;
  for (const auto& [mon, c] : p.terms()) {
    ParamMon reduced = mon;
    for (const std::string& n : names) {
      if (low[n] == 0) continue;
      auto it = reduced.find(n);
      it->second -= low[n];
      if (it->second == 0) reduced.erase(it);
    }
    out += ParamPoly::term(c, reduced);
  }
  return out;
}

// ParamPoly in {b1, b3} -> polynomial in b3 whose coefficients are
// polynomials in b1
std::vector<QPoly> as_bivariate(const ParamPoly& p) {
  std::vector<QPoly> out;
  for (const auto& [mon, c] : p.terms()) {
    int e1 = 0, e3 = 0;
    for (const auto& [name, e] : mon) {
      if (name == "b1")
        e1 = e;
      else if (name == "b3")
        e3 = e;
      else
        throw SpecialGroupsError("unexpected parameter " + name +
                                 " in elimination");
    }
    if (out.size() <= static_cast<size_t>(e3)) out.resize(e3 + 1);
    out[e3] = out[e3] + QPoly::monomial(e1, c);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

size_t term_count(const ParamPoly& p) { return p.terms().size(); }

}  // namespace

int projective_order(const ProjMatrix& M, int cap) {
  ProjMatrix cur = M;
  for (int r = 1; r <= cap; ++r) {
    if (canon_key(cur) == identity_key()) return r;
    cur = cur * M;
  }
  throw SpecialGroupsError("no projective order up to " + std::to_string(cap));
}

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<ProjMatrix> elements,
                                     std::map<std::string, ProjMatrix> generators)
    : generators_(std::move(generators)) {
  std::map<std::string, ProjMatrix> canon;
  for (const ProjMatrix& e : elements) {
    ProjMatrix c = e.canonicalized();
    canon.emplace(c.str(), std::move(c));
  }
  if (canon.size() != elements.size())
    throw SpecialGroupsError("duplicate elements in group list");
  for (auto& [key, e] : canon) {
    keys_.insert(key);
    elements_.push_back(e);
  }
  if (!keys_.count(identity_key()))
    throw SpecialGroupsError("group does not contain the identity");
  for (const auto& [name, g] : generators_)
    if (!keys_.count(canon_key(g)))
      throw SpecialGroupsError("generator " + name +
                               " is not among the elements");
  for (const ProjMatrix& x : elements_) {
    if (!keys_.count(canon_key(x.inverse())))
      throw SpecialGroupsError("not closed under inverse");
    for (const ProjMatrix& y : elements_)
      if (!keys_.count(canon_key(x * y)))
        throw SpecialGroupsError("not closed under product");
  }
}

bool FiniteMatrixGroup::contains(const ProjMatrix& M) const {
  return keys_.count(canon_key(M)) > 0;
}

std::map<int, int> FiniteMatrixGroup::element_order_multiset() const {
  std::map<int, int> out;
  for (const ProjMatrix& e : elements_) out[projective_order(e)] += 1;
  return out;
}

FiniteMatrixGroup closure(const std::map<std::string, ProjMatrix>& generators,
                          int cap) {
  std::map<std::string, ProjMatrix> seen;
  std::vector<ProjMatrix> frontier;
  auto insert = [&](const ProjMatrix& M) {
    ProjMatrix c = M.canonicalized();
    std::string key = c.str();
    if (seen.count(key)) return;
    if (static_cast<int>(seen.size()) >= cap)
      throw CapExceeded("closure exceeds " + std::to_string(cap) +
                        " elements");
    frontier.push_back(c);
    seen.emplace(std::move(key), std::move(c));
  };
  insert(ProjMatrix());
  for (const auto& [name, g] : generators) {
    (void)name;
    insert(g);
  }
  for (size_t head = 0; head < frontier.size(); ++head) {
    const ProjMatrix e = frontier[head];
    for (const auto& [name, g] : generators) {
      (void)name;
      insert(e * g);
    }
  }
  std::vector<ProjMatrix> elements;
  elements.reserve(seen.size());
  for (const auto& [key, e] : seen) {
    (void)key;
    elements.push_back(e);
  }
  return FiniteMatrixGroup(std::move(elements), generators);
}

bool is_normal_in(const FiniteMatrixGroup& sub,
                  const FiniteMatrixGroup& super) {
  for (const ProjMatrix& h : sub.elements())
    if (!super.contains(h)) return false;
  for (const ProjMatrix& g : super.elements()) {
    const ProjMatrix gi = g.inverse();
    for (const ProjMatrix& h : sub.elements())
      if (!sub.contains(g * h * gi)) return false;
  }
  return true;
}

ProjMatrix hessian_S() {
  return ProjMatrix::diagonal(cyc_one(), omega(), omega() * omega());
}

ProjMatrix hessian_U() {
  return ProjMatrix::diagonal(cyc_one(), cyc_one(), omega());
}

ProjMatrix hessian_V() {
  const ParamPoly one(cyc_one());
  const ParamPoly w(omega());
  const ParamPoly w2(omega() * omega());
  return ProjMatrix::from_rows({{{one, one, one}, {one, w, w2}, {one, w2, w}}});
}

ProjMatrix hessian_T() { return ProjMatrix::permutation({1, 2, 0}); }

FiniteMatrixGroup hessian_group(int order) {
  std::map<std::string, ProjMatrix> gens = {{"S", hessian_S()},
                                            {"T", hessian_T()},
                                            {"V", hessian_V()}};
  if (order == 72 || order == 216) {
    const ProjMatrix U = hessian_U();
    if (order == 72)
      gens.emplace("UVU^-1", U * hessian_V() * U.inverse());
    else
      gens.emplace("U", U);
  } else if (order != 36) {
    throw SpecialGroupsError("no distinguished group of order " +
                             std::to_string(order));
  }
  FiniteMatrixGroup g = closure(gens);
  if (g.order() != order)
    throw SpecialGroupsError("closure has order " + std::to_string(g.order()) +
                             ", expected " + std::to_string(order));
  return g;
}

std::vector<InvariantSpace> invariant_forms(
    const std::vector<ProjMatrix>& elements, int d) {
  if (d < 1 || d > 9)
    throw SpecialGroupsError("degree out of range: " + std::to_string(d));
  const std::vector<Monomial> mons = degree_monomials(d);
  const size_t n = mons.size();
  std::map<Monomial, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(mons[i], i);

  struct State {
    std::vector<std::string> tags;
    // column vectors spanning the current candidate space
    std::vector<std::vector<CycNum>> basis;
  };
  std::vector<State> states(1);
  states[0].basis.resize(n, std::vector<CycNum>(n));
  for (size_t i = 0; i < n; ++i) states[0].basis[i][i] = cyc_one();

  for (const ProjMatrix& M : elements) {
    const int r = projective_order(M);
    // operator of the substitution on the coefficient space
    std::vector<std::vector<CycNum>> A(n, std::vector<CycNum>(n));
    for (size_t c = 0; c < n; ++c) {
      TernaryForm f(d);
      f.add(mons[c], ParamPoly(cyc_one()));
      const TernaryForm image = substitute(f, M);
      for (const auto& [mon, coeff] : image.terms())
        A[index.at(mon)][c] = *coeff.as_constant();
    }
    std::vector<State> next;
    for (const State& st : states) {
      const size_t k = st.basis.size();
      // AB once per state; (A - chi)B follows by a cheap subtraction
      std::vector<std::vector<CycNum>> AB(n, std::vector<CycNum>(k));
      for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
          if (A[i][l].is_zero()) continue;
          for (size_t j = 0; j < k; ++j) AB[i][j] += A[i][l] * st.basis[j][l];
        }
      for (int t = 0; t < 3 * r; ++t) {
        const CycNum chi = CycNum::zeta(3 * r, t);
        std::vector<std::vector<CycNum>> rows(n, std::vector<CycNum>(k));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < k; ++j)
            rows[i][j] = AB[i][j] - chi * st.basis[j][i];
        const auto ker = kernel_basis(std::move(rows), k);
        if (ker.empty()) continue;
        State ns;
        ns.tags = st.tags;
        ns.tags.push_back(chi.str());
        for (const std::vector<CycNum>& c : ker) {
          std::vector<CycNum> v(n);
          for (size_t j = 0; j < k; ++j) {
            if (c[j].is_zero()) continue;
            for (size_t i = 0; i < n; ++i) v[i] += c[j] * st.basis[j][i];
          }
          ns.basis.push_back(std::move(v));
        }
        next.push_back(std::move(ns));
      }
    }
    states = std::move(next);
  }

  std::vector<InvariantSpace> out;
  for (State& st : states) {
    InvariantSpace space;
    space.characters = std::move(st.tags);
    for (std::vector<CycNum>& v : st.basis) {
      CycNum lead;
      for (const CycNum& x : v)
        if (!x.is_zero()) {
          lead = x;
          break;
        }
      const CycNum inv = lead.inverse();
      TernaryForm f(d);
      for (size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) f.add(mons[i], ParamPoly(inv * v[i]));
      space.basis.push_back(std::move(f));
    }
    out.push_back(std::move(space));
  }
  return out;
}

ReferenceCurve reference_curve(ReferenceKind kind, int d) {
  if (d < 4) throw SpecialGroupsError("degree must be at least 4");
  TernaryForm f(d);
  const ParamPoly one(cyc_one());
  if (kind == ReferenceKind::Fermat) {
    f.add(Monomial{d, 0, 0}, one);
    f.add(Monomial{0, d, 0}, one);
    f.add(Monomial{0, 0, d}, one);
    return {f, 6L * d * d};
  }
  f.add(Monomial{d - 1, 1, 0}, one);
  f.add(Monomial{0, d - 1, 1}, one);
  f.add(Monomial{1, 0, d - 1}, one);
  return {f, 3L * (static_cast<long>(d) * d - 3 * d + 3)};
}

TernaryForm core(const TernaryForm& F) {
  const int d = F.degree();
  TernaryForm out(d);
  for (const auto& [mon, c] : F.terms())
    if (std::max({mon.i, mon.j, mon.k}) >= d - 1) out.add(mon, c);
  return out;
}

DescendantReport descendant_check(const TernaryForm& F,
                                  std::optional<long> candidate_order) {
  const int d = F.degree();
  DescendantReport rep;
  rep.fermat_order = 6L * d * d;
  rep.klein_order = 3L * (static_cast<long>(d) * d - 3 * d + 3);
  TernaryForm c = core(F);
  rep.core_str = c.str();
  if (!c.is_zero()) {
    const ParamPoly& lead = c.coeff(c.support().front());
    if (auto v = lead.as_constant(); v && !v->is_zero()) {
      const TernaryForm normalized = c.scaled(ParamPoly(v->inverse()));
      rep.fermat_core =
          normalized == reference_curve(ReferenceKind::Fermat, d).form;
      rep.klein_core =
          normalized == reference_curve(ReferenceKind::Klein, d).form;
    }
  }
  if (candidate_order) {
    rep.order_divides_fermat = rep.fermat_order % *candidate_order == 0;
    rep.order_divides_klein = rep.klein_order % *candidate_order == 0;
  }
  return rep;
}

std::vector<CycNum> lambda_prime_choices() {
  return {CycNum::zeta(18, 2), CycNum::zeta(18, 8), CycNum::zeta(18, 14)};
}

UpsilonValues upsilon(const CycNum& b1, const CycNum& b2, const CycNum& b3,
                      const CycNum& lambda_prime) {
  if (!(lambda_prime.pow(3) == omega()))
    throw SpecialGroupsError("lambda' must cube to the primitive cube root");
  const CycNum l = lambda_prime;
  const CycNum l3 = l.pow(3), l6 = l.pow(6);
  const CycNum one = cyc_one();
  const CycNum two(Rat(2)), three(Rat(3)), five(Rat(5));
  const CycNum b2_5 = b2.pow(5), b3_3 = b3.pow(3), b3_5 = b3.pow(5);

  UpsilonValues out;
  out.u1 = b3 * b2_5 + (b1 * b3_3 + one) * b2 + b3_5;
  out.u2 = l.pow(2) * ((five * l3 + one) * b3 * b2_5 +
                       (five * l6 + l3 + (two * l6 + l3 + three) * b1 * b3_3) *
                           b2 +
                       (l6 + five) * b3_5);
  out.u3 = l.pow(5) * ((l6 + five) * b3 * b2_5 +
                       (five * l3 + (three * l6 + two * l3 + one) * b1 * b3_3 +
                        one) *
                           b2 +
                       l3 * (five * l3 + one) * b3_5);
  out.u4 = l * (l.pow(4) * (five * l3 + one) * b3 * b2_5 +
                l * (l6 + (l6 + three * l3 + two) * b1 * b3_3 + five) * b2 +
                l * (five * l3 + one) * b3_5);
  out.in_gamma = !b1.is_zero() && !b2.is_zero() && !b3.is_zero() &&
                 out.u1 == one && out.u2 == out.u3 &&
                 out.u3 == omega() * omega() * out.u4;
  return out;
}

std::array<ParamPoly, 3> gamma_conditions(const CycNum& lambda_prime) {
  if (!(lambda_prime.pow(3) == omega()))
    throw SpecialGroupsError("lambda' must cube to the primitive cube root");
  const CycNum l = lambda_prime;
  const CycNum l3 = l.pow(3), l6 = l.pow(6);
  const CycNum one = cyc_one();
  const CycNum two(Rat(2)), three(Rat(3)), five(Rat(5));
  const ParamPoly b1 = ParamPoly::parameter("b1");
  const ParamPoly b2 = ParamPoly::parameter("b2");
  const ParamPoly b3 = ParamPoly::parameter("b3");
  const ParamPoly b2_5 = ParamPoly::parameter("b2", 5);
  const ParamPoly b3_3 = ParamPoly::parameter("b3", 3);
  const ParamPoly b3_5 = ParamPoly::parameter("b3", 5);
  auto cp = [](const CycNum& c) { return ParamPoly(c); };

  const ParamPoly u1 = b3 * b2_5 + (b1 * b3_3 + cp(one)) * b2 + b3_5;
  const ParamPoly u2 =
      (b3 * b2_5).scaled(l.pow(2) * (five * l3 + one)) +
      (b1 * b3_3 * b2).scaled(l.pow(2) * (two * l6 + l3 + three)) +
      b2.scaled(l.pow(2) * (five * l6 + l3)) +
      b3_5.scaled(l.pow(2) * (l6 + five));
  const ParamPoly u3 =
      (b3 * b2_5).scaled(l.pow(5) * (l6 + five)) +
      (b1 * b3_3 * b2).scaled(l.pow(5) * (three * l6 + two * l3 + one)) +
      b2.scaled(l.pow(5) * (five * l3 + one)) +
      b3_5.scaled(l.pow(5) * l3 * (five * l3 + one));
  const ParamPoly u4 =
      (b3 * b2_5).scaled(l * l.pow(4) * (five * l3 + one)) +
      (b1 * b3_3 * b2).scaled(l * l * (l6 + three * l3 + two)) +
      b2.scaled(l * l * (l6 + five)) + b3_5.scaled(l * l * (five * l3 + one));

  return {u1 - cp(one), u2 - u3, u3 - u4.scaled(omega() * omega())};
}

std::vector<CycNum> gamma_first_coordinates(
    const std::vector<std::array<CycNum, 3>>& candidates,
    const CycNum& lambda_prime) {
  std::vector<CycNum> out;
  for (const auto& [b1, b2, b3] : candidates)
    if (upsilon(b1, b2, b3, lambda_prime).in_gamma) out.push_back(b1);
  return out;
}

GammaElimination gamma_elimination(const CycNum& lambda_prime, int term_cap) {
  const std::array<ParamPoly, 3> cond = gamma_conditions(lambda_prime);
  int live = 0;
  for (const ParamPoly& c : cond)
    if (!c.is_zero()) ++live;
  if (live < 2) {
    // Resultants need two equations; with the side conditions gone the locus
    // is the surface Upsilon1 = 1, whose first coordinates fill all of K*
    // (b3 = 1, b2^4 = -(b1 + 1); at b1 = -1 use b3 = -1 and a root of
    // b2^5 - 2*b2 + 2).  Only the zero polynomial vanishes there.
    GammaElimination out;
    out.label =
        "the side conditions Upsilon2 - Upsilon3 and Upsilon3 - "
        "omega^2*Upsilon4 cancel identically, so the locus is cut out by "
        "Upsilon1 = 1 alone and every nonzero value occurs as a first "
        "coordinate; the best-effort elimination therefore reports no "
        "certificate";
    return out;
  }
  auto capped = [&](const ParamPoly& p, const std::string& where) {
    if (term_count(p) > static_cast<size_t>(term_cap))
      throw CapExceeded("elimination blew past " + std::to_string(term_cap) +
                        " terms at " + where);
    return p;
  };
  const std::array<std::pair<int, int>, 3> pairs = {
      std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}};
  std::vector<ParamPoly> planar;
  for (const auto& [x, y] : pairs) {
    ParamPoly r = param_resultant(cond[x], cond[y], "b2");
    r = strip_monomial_content(r, {"b1", "b3"});
    planar.push_back(capped(r, "the b2 stage"));
  }
  for (size_t x = 0; x < planar.size(); ++x)
    for (size_t y = x + 1; y < planar.size(); ++y) {
      if (planar[x].is_zero() || planar[y].is_zero()) continue;
      const QPoly res =
          resultant(as_bivariate(planar[x]), as_bivariate(planar[y]));
      if (res.is_zero()) continue;
      GammaElimination out;
      out.poly = res.monic();
      out.label = "resultants in b2 of condition pairs (" +
                  std::to_string(pairs[x].first + 1) + "," +
                  std::to_string(pairs[x].second + 1) + ") and (" +
                  std::to_string(pairs[y].first + 1) + "," +
                  std::to_string(pairs[y].second + 1) +
                  "), then a resultant in b3; best-effort superset of the "
                  "first coordinates";
      return out;
    }
  throw SpecialGroupsError(
      "every elimination route degenerated; no univariate certificate");
}

}  // namespace planeaut
