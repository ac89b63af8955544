// Command-line surface for the plane-curve automorphism toolkit.
//
// Every subcommand prints a human-readable report by default and a versioned
// JSON document ("schema": 1) with --json.  Exit status: 0 on success, 1 when
// a verification subcommand finds a failing item or a cross-check disagrees,
// 2 on usage or computation errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planeaut/actions.hpp"
#include "planeaut/covers.hpp"
#include "planeaut/forms.hpp"
#include "planeaut/parser.hpp"
#include "planeaut/smoothness.hpp"
#include "planeaut/specialgroups.hpp"
#include "planeaut/stabilizer.hpp"
#include "planeaut/verify.hpp"

namespace {

using nlohmann::json;
using namespace planeaut;

// --curve accepts either an inline expression or a path to a file holding one.
std::string curve_text(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw PlaneautError("cannot read curve file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json strings_json(const std::vector<std::string>& v) {
  return json(v);
}

json matrices_json(const std::vector<ProjMatrix>& v) {
  json a = json::array();
  for (const ProjMatrix& m : v) a.push_back(m.str());
  return a;
}

void emit_json(json j) {
  j["schema"] = 1;
  std::cout << j.dump(2) << "\n";
}

void print_list(const char* head, const std::vector<std::string>& v) {
  if (v.empty()) return;
  std::cout << head << "\n";
  for (const std::string& s : v) std::cout << "  " << s << "\n";
}

// ---------------------------------------------------------------- normal-form

int cmd_normal_form(bool json_out, int degree, const std::string& type_arg,
                    std::optional<int> weight_class,
                    const std::string& ref_arg) {
  const DiagAction act = parse_type(type_arg);
  if (weight_class.has_value() == !ref_arg.empty())
    throw PlaneautError("provide exactly one of --class or --ref");
  NormalForm nf = [&] {
    if (weight_class) return normal_form(degree, act, *weight_class);
    const TernaryForm ref = parse_form(ref_arg);
    return normal_form(degree, act, ref.support());
  }();
  std::vector<std::string> ref_strs, class_strs;
  for (const Monomial& m : nf.reference) ref_strs.push_back(m.str());
  for (const Monomial& m :
       invariant_monomials(degree, act, nf.weight_class))
    class_strs.push_back(m.str());
  if (json_out) {
    json j;
    j["type"] = act.str();
    j["degree"] = degree;
    j["weight_class"] = nf.weight_class;
    j["base"] = nf.base.str();
    j["reference"] = strings_json(ref_strs);
    j["class_monomials"] = strings_json(class_strs);
    j["parameters"] = strings_json(nf.parameters);
    emit_json(j);
    return 0;
  }
  std::cout << "type:         " << act.str() << "\n";
  std::cout << "weight class: " << nf.weight_class << "\n";
  std::cout << "base:         " << nf.base.str() << "\n";
  print_list("reference monomials:", ref_strs);
  print_list("class monomials:", class_strs);
  print_list("parameters:", nf.parameters);
  return 0;
}

// ----------------------------------------------------------------- stabilizer

int cmd_stabilizer(bool json_out, const std::string& curve_arg,
                   const std::vector<std::string>& set_args,
                   const std::string& assume_arg, const std::string& mode) {
  const CurveSpec spec = make_curve_spec(curve_text(curve_arg), set_args);
  const TernaryForm form = spec.specialized_form();
  if (!assume_arg.empty()) {
    // an explicit declaration must cover every remaining parameter
    const std::set<std::string> declared = [&] {
      std::set<std::string> s;
      for (const std::string& n : split_commas(assume_arg)) s.insert(n);
      return s;
    }();
    const std::set<std::string> params = form.parameter_names();
    for (const std::string& n : declared)
      if (!params.count(n))
        throw PlaneautError("--assume-nonzero names unknown parameter '" + n +
                            "'");
    for (const std::string& n : params)
      if (!declared.count(n))
        throw PlaneautError("parameter '" + n +
                            "' is treated as nonzero but missing from "
                            "--assume-nonzero");
  }
  const StabilizerReport rep = [&] {
    if (mode == "diagonal") return diagonal_stabilizer(form);
    if (mode == "monomial") return monomial_stabilizer(form);
    return aut_lower_bound(form);
  }();
  std::vector<std::string> diag_strs, mono_strs, factor_strs;
  for (const ProjMatrix& m : rep.diagonal_generators)
    diag_strs.push_back(m.str());
  for (const ProjMatrix& m : rep.monomial_elements)
    mono_strs.push_back(m.str());
  for (long f : rep.invariant_factors)
    factor_strs.push_back(std::to_string(f));
  if (json_out) {
    json j;
    j["curve"] = form.str();
    j["mode"] = mode;
    j["infinite"] = rep.infinite;
    if (!rep.infinite) j["total_order"] = rep.total_order;
    j["completeness"] = to_string(rep.completeness);
    j["invariant_factors"] = json(rep.invariant_factors);
    j["diagonal_generators"] = matrices_json(rep.diagonal_generators);
    j["monomial_elements"] = matrices_json(rep.monomial_elements);
    j["assumed_nonzero"] = strings_json(rep.assumed_nonzero);
    j["notes"] = strings_json(rep.notes);
    emit_json(j);
    return 0;
  }
  std::cout << "curve:        " << form.str() << "\n";
  std::cout << "mode:         " << mode << "\n";
  if (rep.infinite)
    std::cout << "order:        infinite\n";
  else
    std::cout << "order:        " << rep.total_order << "\n";
  std::cout << "completeness: " << to_string(rep.completeness) << "\n";
  print_list("invariant factors:", factor_strs);
  print_list("diagonal generators:", diag_strs);
  print_list("monomial elements:", mono_strs);
  print_list("assumed nonzero:", rep.assumed_nonzero);
  print_list("notes:", rep.notes);
  return 0;
}

// ---------------------------------------------------------------- smooth-check

json witness_json(const SingularWitness& w) {
  json j;
  j["patch"] = w.patch;
  j["minimal_polynomials"] = strings_json(w.minimal_polynomials);
  j["coordinates"] = strings_json(w.coordinates);
  return j;
}

int cmd_smooth_check(bool json_out, const std::string& curve_arg,
                     const std::vector<std::string>& set_args,
                     const std::string& type_arg, const std::string& mode,
                     std::optional<long long> prime) {
  const CurveSpec spec = make_curve_spec(curve_text(curve_arg), set_args,
                                         type_arg);
  std::optional<SmoothnessCertificate> exact;
  std::optional<FiniteFieldResult> ff;
  long long used_prime = 0;
  if (mode == "exact" || mode == "both")
    exact = is_smooth(spec.form, spec.assignments);
  if (mode == "ff" || mode == "both") {
    used_prime = prime.value_or(0);
    if (used_prime == 0) {
      // no prime requested: take the smallest one valid for the degree, the
      // declared cyclic action and the cyclotomic orders of the coefficients
      std::vector<long long> orders;
      if (spec.action) orders.push_back(spec.action->order());
      const TernaryForm specialized = spec.specialized_form();
      for (const auto& [mon, c] : specialized.terms()) {
        (void)mon;
        for (const auto& [pm, cn] : c.terms()) {
          (void)pm;
          orders.push_back(cn.order());
        }
      }
      used_prime = minimal_valid_prime(spec.form.degree(), orders);
    }
    ff = finite_field_check(spec.form, spec.assignments, used_prime);
  }
  const bool agree =
      !(exact && ff) ||
      exact->verdict == ff->certificate.verdict;
  if (json_out) {
    json j;
    j["curve"] = spec.form.str();
    j["mode"] = mode;
    if (exact) {
      json e;
      e["verdict"] = to_string(exact->verdict);
      e["method"] = exact->method;
      if (exact->witness) e["witness"] = witness_json(*exact->witness);
      e["notes"] = strings_json(exact->notes);
      j["exact"] = e;
    }
    if (ff) {
      json e;
      e["prime"] = used_prime;
      e["verdict"] = to_string(ff->certificate.verdict);
      e["point_count"] = ff->point_count;
      if (ff->certificate.witness)
        e["witness"] = witness_json(*ff->certificate.witness);
      e["notes"] = strings_json(ff->certificate.notes);
      j["finite_field"] = e;
    }
    if (exact && ff) j["agree"] = agree;
    emit_json(j);
    return agree ? 0 : 1;
  }
  std::cout << "curve: " << spec.form.str() << "\n";
  if (exact) {
    std::cout << "exact: " << to_string(exact->verdict) << " (method "
              << exact->method << ")\n";
    if (exact->witness) {
      std::cout << "  witness patch " << exact->witness->patch << "\n";
      for (const std::string& c : exact->witness->coordinates)
        std::cout << "    " << c << "\n";
      for (const std::string& p : exact->witness->minimal_polynomials)
        std::cout << "    " << p << "\n";
    }
    for (const std::string& n : exact->notes) std::cout << "  " << n << "\n";
  }
  if (ff) {
    std::cout << "mod " << used_prime << ": "
              << to_string(ff->certificate.verdict) << " ("
              << ff->point_count << " projective points)\n";
    for (const std::string& n : ff->certificate.notes)
      std::cout << "  " << n << "\n";
  }
  if (exact && ff)
    std::cout << "agree: " << (agree ? "yes" : "NO") << "\n";
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------- ramification

int cmd_ramification(bool json_out, const std::string& curve_arg,
                     const std::vector<std::string>& set_args,
                     const std::string& type_arg) {
  const CurveSpec spec = make_curve_spec(curve_text(curve_arg), set_args,
                                         type_arg);
  if (!spec.action) throw PlaneautError("--type is required");
  const RamificationProfile prof =
      ramification_profile(spec.form, spec.assignments, *spec.action);
  const FixedLocus locus = fixed_data(*spec.action);
  if (json_out) {
    json j;
    j["curve"] = spec.form.str();
    j["type"] = spec.action->str();
    j["group_order"] = prof.group_order();
    json entries = json::object();
    for (const auto& [e, count] : prof.entries())
      entries[std::to_string(e)] = count;
    j["entries"] = entries;
    j["quotient_genus"] = prof.quotient_genus();
    j["curve_genus"] = prof.curve_genus();
    j["fixed_locus_notes"] = strings_json(locus.notes);
    emit_json(j);
    return 0;
  }
  std::cout << "curve: " << spec.form.str() << "\n";
  std::cout << "type:  " << spec.action->str() << "\n";
  std::cout << prof.str() << "\n";
  print_list("fixed locus:", locus.notes);
  return 0;
}

// -------------------------------------------------------------------- hessian

int cmd_hessian(bool json_out, int subgroup) {
  if (subgroup != 0 && subgroup != 36 && subgroup != 72 && subgroup != 216)
    throw PlaneautError("--subgroup must be 36, 72 or 216");
  const FiniteMatrixGroup g216 = hessian_group(216);
  const FiniteMatrixGroup g72 = hessian_group(72);
  const FiniteMatrixGroup g36 = hessian_group(36);
  const FiniteMatrixGroup& sel = subgroup == 36  ? g36
                                 : subgroup == 72 ? g72
                                                  : g216;
  const std::map<int, int> orders = sel.element_order_multiset();
  std::vector<std::string> generator_names;
  for (const auto& [name, m] : sel.generators()) {
    (void)m;
    generator_names.push_back(name);
  }
  const bool n36 = is_normal_in(g36, g72);
  const bool n72 = is_normal_in(g72, g216);
  if (json_out) {
    json j;
    j["orders"] = {{"36", g36.order()}, {"72", g72.order()},
                   {"216", g216.order()}};
    j["selected"] = subgroup == 0 ? 216 : subgroup;
    j["selected_order"] = sel.order();
    j["generators"] = strings_json(generator_names);
    json eo = json::object();
    for (const auto& [o, count] : orders) eo[std::to_string(o)] = count;
    j["element_orders"] = eo;
    j["normal_36_in_72"] = n36;
    j["normal_72_in_216"] = n72;
    emit_json(j);
    return 0;
  }
  std::cout << "closure orders: 216 -> " << g216.order() << ", 72 -> "
            << g72.order() << ", 36 -> " << g36.order() << "\n";
  std::cout << "36 normal in 72: " << (n36 ? "yes" : "no")
            << "; 72 normal in 216: " << (n72 ? "yes" : "no") << "\n";
  std::cout << "selected group of order " << sel.order()
            << ", element orders:";
  for (const auto& [o, count] : orders)
    std::cout << " " << o << "x" << count;
  std::cout << "\n";
  std::cout << "generators:";
  for (const std::string& n : generator_names) std::cout << " " << n;
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------- gamma

int cmd_gamma(bool json_out, const std::string& b1_arg,
              const std::string& b2_arg, const std::string& b3_arg,
              std::optional<int> choice) {
  const CycNum b1 = parse_coefficient(b1_arg);
  const CycNum b2 = parse_coefficient(b2_arg);
  const CycNum b3 = parse_coefficient(b3_arg);
  const std::vector<CycNum> lambdas = lambda_prime_choices();
  if (choice && (*choice < 0 || *choice >= static_cast<int>(lambdas.size())))
    throw PlaneautError("--lambda-prime must be 0, 1 or 2");
  json results = json::array();
  std::ostringstream text;
  std::string collapse;
  for (size_t i = 0; i < lambdas.size(); ++i) {
    if (choice && static_cast<size_t>(i) != static_cast<size_t>(*choice))
      continue;
    const UpsilonValues u = upsilon(b1, b2, b3, lambdas[i]);
    if (collapse.empty()) collapse = gamma_elimination(lambdas[i]).label;
    if (json_out) {
      json r;
      r["choice"] = i;
      r["lambda_prime"] = lambdas[i].str();
      r["u1"] = u.u1.str();
      r["u2"] = u.u2.str();
      r["u3"] = u.u3.str();
      r["u4"] = u.u4.str();
      r["in_gamma"] = u.in_gamma;
      results.push_back(r);
    } else {
      text << "choice " << i << ": lambda' = " << lambdas[i].str() << "\n";
      text << "  u1 = " << u.u1.str() << "\n  u2 = " << u.u2.str()
           << "\n  u3 = " << u.u3.str() << "\n  u4 = " << u.u4.str() << "\n";
      text << "  in gamma: " << (u.in_gamma ? "yes" : "no") << "\n";
    }
  }
  if (json_out) {
    json j;
    j["b1"] = b1.str();
    j["b2"] = b2.str();
    j["b3"] = b3.str();
    j["results"] = results;
    j["elimination_note"] = collapse;
    emit_json(j);
    return 0;
  }
  std::cout << "b = (" << b1.str() << ", " << b2.str() << ", " << b3.str()
            << ")\n";
  std::cout << text.str();
  std::cout << "note: " << collapse << "\n";
  return 0;
}

// ------------------------------------------------------------- types-conjugate

int cmd_types_conjugate(bool json_out, const std::string& t1_arg,
                        const std::string& t2_arg) {
  const DiagAction t1 = parse_type(t1_arg);
  const DiagAction t2 = parse_type(t2_arg);
  const ConjugacyResult res = types_conjugate(t1, t2);
  if (json_out) {
    json j;
    j["type1"] = t1.str();
    j["type2"] = t2.str();
    j["conjugate"] = res.conjugate;
    if (res.permutation)
      j["permutation"] = {(*res.permutation)[0], (*res.permutation)[1],
                          (*res.permutation)[2]};
    if (res.power) j["power"] = *res.power;
    if (!res.invariant.empty()) j["invariant"] = res.invariant;
    emit_json(j);
    return 0;
  }
  std::cout << t1.str() << " vs " << t2.str() << ": "
            << (res.conjugate ? "conjugate" : "not conjugate") << "\n";
  if (res.permutation)
    std::cout << "  permutation: [" << (*res.permutation)[0] << ", "
              << (*res.permutation)[1] << ", " << (*res.permutation)[2]
              << "], power " << res.power.value_or(1) << "\n";
  if (!res.invariant.empty())
    std::cout << "  invariant: " << res.invariant << "\n";
  return 0;
}

// --------------------------------------------------------------- verify-paper

int cmd_verify_paper(bool json_out, const std::string& scope) {
  const VerifyReport rep = verify_paper(scope);
  if (json_out)
    std::cout << rep.json();
  else
    std::cout << rep.text();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact automorphism toolkit for smooth plane curves"};
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  PLANEAUT_MAX_PRIME     finite-field scan cap (default 10000)\n"
      "  PLANEAUT_BRANCH_LIMIT  deduction branch budget (default 64)");
  bool json_out = false;
  app.add_flag("--json", json_out, "emit versioned JSON instead of text");

  int degree = 0;
  std::string type_arg, other_type_arg, ref_arg, curve_arg, assume_arg;
  std::string mode_stab = "diagonal", mode_smooth = "exact", scope = "all";
  std::optional<int> weight_class, lambda_choice;
  std::optional<long long> prime;
  std::vector<std::string> set_args;
  std::string b1_arg, b2_arg, b3_arg;
  int subgroup = 0;

  CLI::App* nf = app.add_subcommand(
      "normal-form", "invariant-curve family of a cyclic diagonal type");
  nf->add_option("--degree", degree, "curve degree")->required();
  nf->add_option("--type", type_arg, "action as m,a,b")->required();
  nf->add_option("--class", weight_class, "weight class");
  nf->add_option("--ref", ref_arg, "reference monomials, e.g. \"X^5 + Y^4*Z\"");

  CLI::App* stab = app.add_subcommand(
      "stabilizer", "projective transformations preserving a curve");
  stab->add_option("--curve", curve_arg, "expression or file")->required();
  stab->add_option("--set", set_args, "parameter assignment name=value");
  stab->add_option("--assume-nonzero", assume_arg,
                   "comma-separated parameters declared nonzero");
  stab->add_option("--mode", mode_stab, "diagonal | monomial | lower-bound")
      ->check(CLI::IsMember({"diagonal", "monomial", "lower-bound"}));

  CLI::App* smooth = app.add_subcommand(
      "smooth-check", "exact and finite-field smoothness verdicts");
  smooth->add_option("--curve", curve_arg, "expression or file")->required();
  smooth->add_option("--set", set_args, "parameter assignment name=value");
  smooth->add_option("--type", type_arg, "cyclic action as m,a,b");
  smooth->add_option("--mode", mode_smooth, "exact | ff | both")
      ->check(CLI::IsMember({"exact", "ff", "both"}));
  smooth->add_option("--prime", prime, "prime for the finite-field check");

  CLI::App* ram = app.add_subcommand(
      "ramification", "quotient-cover ramification profile of a cyclic action");
  ram->add_option("--curve", curve_arg, "expression or file")->required();
  ram->add_option("--set", set_args, "parameter assignment name=value");
  ram->add_option("--type", type_arg, "cyclic action as m,a,b")->required();

  CLI::App* hess = app.add_subcommand(
      "hessian", "the order-216 group and its distinguished subgroups");
  hess->add_option("--subgroup", subgroup, "36, 72 or 216 (default all)");

  CLI::App* gam = app.add_subcommand(
      "gamma", "degree-six obstruction values at a coefficient triple");
  gam->add_option("--b1", b1_arg, "first coefficient")->required();
  gam->add_option("--b2", b2_arg, "second coefficient")->required();
  gam->add_option("--b3", b3_arg, "third coefficient")->required();
  gam->add_option("--lambda-prime", lambda_choice,
                  "cube-root choice 0, 1 or 2 (default all)");

  CLI::App* conj = app.add_subcommand(
      "types-conjugate", "whether two cyclic types generate conjugate groups");
  conj->add_option("--type", type_arg, "first action as m,a,b")->required();
  conj->add_option("--other", other_type_arg, "second action as m,a,b")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run the recorded-results regression suite");
  verify->add_option("--scope", scope,
                     "all | table5 | table6 | theorems | ramification | "
                     "hessian | charp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (nf->parsed())
      return cmd_normal_form(json_out, degree, type_arg, weight_class,
                             ref_arg);
    if (stab->parsed())
      return cmd_stabilizer(json_out, curve_arg, set_args, assume_arg,
                            mode_stab);
    if (smooth->parsed())
      return cmd_smooth_check(json_out, curve_arg, set_args, type_arg,
                              mode_smooth, prime);
    if (ram->parsed())
      return cmd_ramification(json_out, curve_arg, set_args, type_arg);
    if (hess->parsed()) return cmd_hessian(json_out, subgroup);
    if (gam->parsed())
      return cmd_gamma(json_out, b1_arg, b2_arg, b3_arg, lambda_choice);
    if (conj->parsed())
      return cmd_types_conjugate(json_out, type_arg, other_type_arg);
    if (verify->parsed()) return cmd_verify_paper(json_out, scope);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
