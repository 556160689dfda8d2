#include "frobgen/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobgen/generators.hpp"
#include "frobgen/module_file.hpp"

namespace frobgen::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::string output = "text";
  std::uint64_t seed = kDefaultSeed;
  bool json() const { return output == "json"; }
};

struct Reply {
  Json doc;
  std::vector<std::string> text;
  int code = kOk;
};

Json base_doc(const std::string& name, Json params, const Globals& g) {
  Json doc;
  doc["case"] = name;
  doc["params"] = std::move(params);
  doc["polynomial"] = nullptr;
  doc["metadata"] = Json{{"seed", g.seed}, {"basis", nullptr}, {"modulus", nullptr}, {"cyclic_vector", nullptr}};
  return doc;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_text(const std::vector<gf::FieldElement>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(x.to_string());
  return "(" + join(parts) + ")";
}

std::vector<std::string> ratfunc_texts(const std::vector<sym::RatFunc>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

// ---------------------------------------------------------------- cyclic2

struct Cyclic2Args {
  std::int64_t p = 0;
  unsigned m = 0;
  std::string convention = "transpose-chain";
  std::uint64_t budget = kCyclic2TermBudget;
  bool matrices = false;
};

Reply cmd_cyclic2(const Cyclic2Args& a, const Globals& g) {
  const Cyclic2Plan plan = cyclic2_plan(a.p, a.m);
  Json params{{"p", plan.p}, {"m", plan.m}};
  if (plan.kind == Cyclic2Case::kTorus) {
    params["n"] = plan.n;
    params["d"] = plan.d.str();
  }
  Reply r;
  r.doc = base_doc(to_string(plan.kind), params, g);
  if (plan.kind == Cyclic2Case::kMinusOne) {
    try {
      cyclic2_generic_poly(a.p, a.m, g.seed, a.budget);
    } catch (const ExistenceOnly& e) {
      r.doc["existence_only"] = e.what();
      r.text.push_back("existence-only: " + std::string(e.what()));
    }
    r.text.push_back("# case: minus-one");
    r.text.push_back("# p: " + std::to_string(plan.p));
    r.text.push_back("# m: " + std::to_string(plan.m));
    return r;
  }

  const Cyclic2Result res = cyclic2_generic_poly(a.p, a.m, g.seed, a.budget);
  std::string poly = res.polynomial;
  if (res.companion && a.convention == "last-column") {
    poly = extract_generic_polynomial(*res.companion, FrobeniusQ{1}, ExtractionConvention::kLastColumn).to_string();
  }
  r.doc["params"]["parameters"] = res.parameters;
  r.doc["polynomial"] = poly;
  r.text.push_back(poly);
  r.text.push_back("# case: " + to_string(plan.kind));
  r.text.push_back("# p: " + std::to_string(plan.p));
  r.text.push_back("# m: " + std::to_string(plan.m));
  if (plan.kind == Cyclic2Case::kTorus) {
    auto& meta = r.doc["metadata"];
    meta["basis"] = res.meta.basis;
    meta["modulus"] = res.meta.modulus;
    meta["cyclic_vector"] = res.meta.cyclic_vector;
    meta["field"] = res.meta.field;
    meta["convention"] = a.convention;
    meta["power_entry_degree"] = res.meta.power_entry_degree;
    r.text.push_back("# n: " + std::to_string(plan.n));
    r.text.push_back("# d: " + plan.d.str());
    r.text.push_back("# parameters: " + join(res.parameters));
    r.text.push_back("# field: " + res.meta.field);
    r.text.push_back("# modulus: " + res.meta.modulus);
    r.text.push_back("# basis: " + res.meta.basis);
    r.text.push_back("# cyclic_vector: " + res.meta.cyclic_vector);
    r.text.push_back("# convention: " + a.convention);
    r.text.push_back("# power_entry_degree: " + std::to_string(res.meta.power_entry_degree));
    if (a.matrices) {
      const Json mats{{"A", res.A->to_string()},
                      {"Ad", res.Ad->to_string()},
                      {"N", res.companion->N.to_string()},
                      {"B", res.companion->B.to_string()}};
      meta["matrices"] = mats;
      r.text.push_back("# A = " + res.A->to_string());
      r.text.push_back("# A^d = " + res.Ad->to_string());
      r.text.push_back("# N = " + res.companion->N.to_string());
      r.text.push_back("# B = " + res.companion->B.to_string());
    }
  } else {
    r.doc["metadata"]["field"] = res.meta.field;
    r.text.push_back("# parameters: t");
  }
  r.text.push_back("# seed: " + std::to_string(g.seed));
  return r;
}

// ---------------------------------------------------------------- sln

Reply cmd_sln(std::int64_t q, unsigned n, const Globals& g) {
  if (q < 2 || q > UINT32_MAX) throw InvalidArgument("q must be a prime, got " + std::to_string(q));
  const SymLinPoly f = sln_generic_poly(static_cast<std::uint32_t>(q), n);
  const std::vector<std::string> vars = f.coeffs().back().ring().vars();
  Reply r;
  r.doc = base_doc("sln", Json{{"q", q}, {"n", n}, {"parameters", vars}}, g);
  r.doc["polynomial"] = f.to_string();
  r.doc["metadata"]["basis"] = "standard";
  r.doc["metadata"]["cyclic_vector"] = "e_1";
  r.doc["metadata"]["routes"] = "closed form and elimination chain agree";
  r.text = {f.to_string(), "# case: sln", "# q: " + std::to_string(q), "# n: " + std::to_string(n),
            "# parameters: " + join(vars), "# routes: closed form and elimination chain agree",
            "# seed: " + std::to_string(g.seed)};
  return r;
}

// ---------------------------------------------------------------- q8-verify

Reply cmd_q8_verify(unsigned samples, const Globals& g) {
  const Q8Report rep = q8_reproduction(g.seed, samples);
  Reply r;
  r.doc = base_doc("q8-verify", Json{{"samples", samples}}, g);
  r.doc["polynomial"] = rep.printed_polynomial.to_string();
  r.doc["metadata"]["basis"] = "standard";
  const auto computed = ratfunc_texts(rep.computed_triple);
  const auto printed = ratfunc_texts(rep.printed_triple);
  Json pts = Json::array();
  unsigned disagree = 0;
  unsigned eliminant_disagree = 0;
  std::vector<std::string> lines;
  for (const auto& pt : rep.points) {
    if (!pt.eliminant_agrees()) ++eliminant_disagree;
    pts.push_back(Json{{"r", pt.r},
                       {"abc", point_text(pt.abc)},
                       {"system_degree", pt.system_degree},
                       {"polynomial_degree", pt.polynomial_degree},
                       {"eliminant_degree", pt.eliminant_degree},
                       {"fiber_size", pt.fiber_size},
                       {"rho_in_q8", pt.rho_in_q8},
                       {"rho_order_matches", pt.rho_order_matches},
                       {"agrees", pt.agrees()}});
    if (pt.agrees()) continue;
    ++disagree;
    std::ostringstream os;
    os << "  F_" << (1U << pt.r) << " " << point_text(pt.abc) << ": system " << pt.system_degree << ", polynomial "
       << pt.polynomial_degree << ", eliminant " << pt.eliminant_degree << ", fiber " << pt.fiber_size
       << ", rho in Q8 " << yes_no(pt.rho_in_q8) << ", rho order " << (pt.rho_order_matches ? "ok" : "wrong");
    lines.push_back(os.str());
  }
  const bool pass = rep.triple_matches && rep.all_points_agree();
  r.doc["lambda_star"] = Json{{"computed", computed}, {"printed", printed}, {"match", rep.triple_matches}};
  r.doc["eliminant"] = Json{{"polynomial", rep.eliminant_polynomial.to_string()},
                            {"disagreeing_points", eliminant_disagree}};
  r.doc["points"] = pts;
  r.doc["skipped_invalid"] = rep.skipped_invalid;
  r.doc["verdict"] = pass ? "PASS" : "FAIL";
  r.text.push_back("lambda_star computed: " + join(computed, " ; "));
  r.text.push_back("lambda_star printed:  " + join(printed, " ; "));
  r.text.push_back("lambda_star match: " + yes_no(rep.triple_matches));
  r.text.push_back("printed f: " + rep.printed_polynomial.to_string());
  r.text.push_back("eliminant: " + rep.eliminant_polynomial.to_string());
  r.text.push_back("points: " + std::to_string(rep.points.size()) + " checked (all of F_4 and F_8, " +
                   std::to_string(samples) + " seeded in F_16), " + std::to_string(rep.skipped_invalid) +
                   " invalid skipped");
  r.text.push_back("printed f disagrees at " + std::to_string(disagree) + " points");
  r.text.push_back("eliminant disagrees at " + std::to_string(eliminant_disagree) + " points");
  r.text.insert(r.text.end(), lines.begin(), lines.end());
  r.text.push_back(std::string("verdict: ") + (pass ? "PASS" : "FAIL"));
  r.code = pass ? kOk : kVerification;
  return r;
}

// ---------------------------------------------------------------- c8f5-verify

Reply cmd_c8f5_verify(const Globals& g) {
  const Cyclic2Result res = cyclic2_generic_poly(5, 3, g.seed);
  const bool poly_ok = res.polynomial == c8f5_printed_polynomial();
  const bool fact_ok = verify_factorization(*res.f, c8f5_printed_factors());
  Reply r;
  r.doc = base_doc("c8f5-verify", Json{{"p", 5}, {"m", 3}, {"parameters", res.parameters}}, g);
  r.doc["polynomial"] = res.polynomial;
  r.doc["metadata"]["basis"] = res.meta.basis;
  r.doc["metadata"]["modulus"] = res.meta.modulus;
  r.doc["metadata"]["cyclic_vector"] = res.meta.cyclic_vector;
  r.doc["polynomial_matches_printed"] = poly_ok;
  r.doc["factorization_holds"] = fact_ok;
  r.doc["verdict"] = poly_ok && fact_ok ? "PASS" : "FAIL";
  r.text = {"f(Y) = " + res.polynomial, "matches printed f(Y): " + yes_no(poly_ok),
            "Y * (printed factors) == f(Y): " + yes_no(fact_ok),
            std::string("verdict: ") + (poly_ok && fact_ok ? "PASS" : "FAIL")};
  r.code = poly_ok && fact_ok ? kOk : kVerification;
  return r;
}

// ---------------------------------------------------------------- galois

gf::FieldSpec field_for(const ModuleFile& mf, const std::string& literal) {
  if (literal.empty()) return mf.base_field();
  gf::FieldSpec f = gf::parse_field_literal(literal);
  if (f.p() != mf.p) throw DomainMismatch("field " + f.literal() + " has the wrong characteristic");
  if (f.k() % mf.k != 0) throw DomainMismatch("field " + f.literal() + " does not contain F_q");
  return f;
}

Reply cmd_galois(const std::string& path, const std::string& xi_text, unsigned mmax, const std::string& field,
                 const Globals& g) {
  const ModuleFile mf = load_module_file(path);
  const gf::FieldSpec F = field_for(mf, field);
  const sym::Assignment xi = sym::parse_assignment(xi_text, F);
  const auto fin = specialize_module(mf.module(), xi, F);
  const GaloisReport rep = galois_order_of_specialization(fin, mmax);
  Reply r;
  r.doc = base_doc("galois", Json{{"module", path}, {"xi", xi_text}, {"field", F.literal()}, {"mmax", mmax}}, g);
  r.doc["metadata"]["basis"] = "standard";
  r.doc["metadata"]["modulus"] = F.literal();
  r.doc["splitting_degree"] = rep.splitting_degree;
  r.doc["splitting_field"] = rep.U(0, 0).field().literal();
  r.doc["A"] = fin.matrix().to_string();
  r.doc["U"] = rep.U.to_string();
  r.doc["rho"] = rep.rho.to_string();
  r.doc["rho_order"] = rep.rho_order;
  r.text = {"splitting_degree: " + std::to_string(rep.splitting_degree), "field: " + F.literal(),
            "splitting_field: " + rep.U(0, 0).field().literal(), "A = " + fin.matrix().to_string(), "U = " + rep.U.to_string(), "rho = " + rep.rho.to_string(),
            "rho_order: " + std::to_string(rep.rho_order)};
  return r;
}

// ---------------------------------------------------------------- ls-fiber

bool unitriangular(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (a(i, j) != (i == j ? a(i, j).one_like() : a(i, j).zero_like())) return false;
    }
  }
  return true;
}

Reply cmd_ls_fiber(const std::string& path, const std::string& target_text, unsigned M, const std::string& field,
                   unsigned limit, const Globals& g) {
  const ModuleFile mf = load_module_file(path);
  const gf::FieldSpec F = field_for(mf, field);
  if (M < 1 || M > 64) throw InvalidArgument("--m must lie in [1, 64]");
  const GroupParam group("module", unitriangular(mf.A) ? GroupKind::kUnipotent : GroupKind::kTorus, mf.A);
  if (!group.linear()) throw InvalidArgument("the module matrix is not linear in its parameters");

  const sym::Ring gring(mf.p, {"g"});
  const SymMatrix target_sym = parse_matrix(target_text, gring);
  const FiniteMatrix target = specialize_matrix(target_sym, {{"g", F.generator_root()}}, F);
  if (!group.is_member(target)) throw InvalidArgument("target is not a point of the group over " + F.literal());

  const gf::FieldSpec L = extension_of(F, M);
  const auto emb = gf::embed_field(F, L);
  const FiniteMatrix target_l = target.map([&](const gf::FieldElement& x) { return emb.map(x); });
  const auto size = L.size();
  std::uint64_t space = 1;
  bool small = size.has_value();
  for (std::size_t i = 0; small && i < group.d(); ++i) {
    if (space > (std::uint64_t{1} << 20) / *size) small = false;
    space *= *size;
  }
  const std::string method = small ? "enumeration" : "linear solve";
  const auto fiber = small ? brute_force_fiber(target_l, group, L, mf.q()) : solve_fiber_linear(target_l, group, L, mf.q());

  Reply r;
  r.doc = base_doc("ls-fiber", Json{{"module", path}, {"target", target.to_string()}, {"m", M}, {"field", L.literal()}},
                   g);
  r.doc["metadata"]["basis"] = "standard";
  r.doc["metadata"]["modulus"] = L.literal();
  r.doc["metadata"]["method"] = method;
  r.doc["fiber_size"] = fiber.size();
  Json elems = Json::array();
  r.text = {"field: " + L.literal(), "method: " + method, "fiber_size: " + std::to_string(fiber.size())};
  for (std::size_t i = 0; i < fiber.size() && i < limit; ++i) {
    elems.push_back(fiber[i].to_string());
    r.text.push_back("  " + fiber[i].to_string());
  }
  if (fiber.size() > limit) r.text.push_back("  ... " + std::to_string(fiber.size() - limit) + " more");
  r.doc["fiber"] = elems;
  return r;
}

// ---------------------------------------------------------------- lambda-star

std::vector<std::int64_t> parse_modulus(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad modulus coefficient '" + item + "'", out.size());
    }
  }
  return out;
}

Reply cmd_lambda_star(const std::string& group, std::int64_t p, unsigned n, const std::string& modulus,
                      const Globals& g) {
  std::optional<GroupParam> param;
  Json params{{"group", group}};
  Json modulus_used = nullptr;
  if (group == "q8") {
    param = q8_param();
  } else {
    if (p < 3 || p > UINT32_MAX) throw InvalidArgument("torus needs an odd prime -p");
    std::optional<std::vector<std::int64_t>> mod;
    if (!modulus.empty()) mod = parse_modulus(modulus);
    const TorusSpec spec = weil_restriction(static_cast<std::uint32_t>(p), n, mod);
    param = torus_param(spec);
    params["p"] = p;
    params["n"] = n;
    params["field"] = spec.field.literal();
    std::vector<std::string> coeffs;
    for (auto c : spec.field.modulus()) coeffs.push_back(std::to_string(c));
    modulus_used = join(coeffs, ",");
  }
  params["parameters"] = param->ring().vars();
  const auto gens = ratfunc_texts(lambda_star_generators(*param, FrobeniusQ{1}));
  Reply r;
  r.doc = base_doc("lambda-star", params, g);
  r.doc["metadata"]["basis"] = "standard";
  r.doc["metadata"]["modulus"] = modulus_used;
  r.doc["group_matrix"] = param->matrix().to_string();
  r.doc["generators"] = gens;
  r.text.push_back("group: " + param->name());
  r.text.push_back("matrix: " + param->matrix().to_string());
  for (std::size_t i = 0; i < gens.size(); ++i) r.text.push_back("u_" + std::to_string(i + 1) + " = " + gens[i]);
  return r;
}

// ---------------------------------------------------------------- dispatch

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DomainMismatch*>(&e)) return "domain";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "singular-matrix";
  if (dynamic_cast<const DenominatorVanishes*>(&e)) return "denominator-vanishes";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget-exceeded";
  if (dynamic_cast<const NoCyclicVector*>(&e)) return "no-cyclic-vector";
  if (dynamic_cast<const ExistenceOnly*>(&e)) return "existence-only";
  if (dynamic_cast<const InternalError*>(&e)) return "internal";
  return "unexpected";
}

int error_code(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e)) return kUsage;
  if (dynamic_cast<const MathError*>(&e)) return kMath;
  return kVerification;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic polynomials from Frobenius modules over finite fields", "frobgen"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized searches");

  Cyclic2Args c2;
  auto* cyclic2 = app.add_subcommand("cyclic2", "C_{2^m} generic polynomial over F_p")->fallthrough();
  cyclic2->add_option("-p", c2.p, "Odd prime")->required();
  cyclic2->add_option("-m", c2.m, "Exponent of the cyclic group order 2^m")->required();
  cyclic2->add_option("--convention", c2.convention, "Extraction convention")
      ->check(CLI::IsMember({"transpose-chain", "last-column"}));
  cyclic2->add_option("--budget", c2.budget, "Monomial budget for the torus pipeline");
  cyclic2->add_flag("--matrices", c2.matrices, "Also print A, A^d, N and B");

  std::int64_t sln_q = 0;
  unsigned sln_n = 0;
  auto* sln = app.add_subcommand("sln", "SL_n(F_q) generic polynomial")->fallthrough();
  sln->add_option("-q", sln_q, "Prime q")->required();
  sln->add_option("-n", sln_n, "Matrix size n >= 2")->required();

  unsigned q8_samples = 16;
  auto* q8 = app.add_subcommand("q8-verify", "Check the Q_8 example")->fallthrough();
  q8->add_option("--samples", q8_samples, "Seeded points of F_16 checked after all points of F_4 and F_8");

  auto* c8f5 = app.add_subcommand("c8f5-verify", "Check the C_8 over F_5 example")->fallthrough();

  std::string module_path;
  std::string xi_text;
  std::string field_text;
  unsigned mmax = 64;
  auto* galois = app.add_subcommand("galois", "Splitting degree and Frobenius image at a specialization")->fallthrough();
  galois->add_option("--module", module_path, "Module file")->required();
  galois->add_option("--xi", xi_text, "Assignment such as \"s=1,t=2*g+1\"")->required();
  galois->add_option("--mmax", mmax, "Largest extension degree searched");
  galois->add_option("--field", field_text, "Field of the specialization values");

  std::string target_text;
  unsigned fiber_m = 1;
  unsigned limit = 16;
  auto* fiber = app.add_subcommand("ls-fiber", "Lang-Steinberg fiber of a target matrix")->fallthrough();
  fiber->add_option("--module", module_path, "Module file whose matrix parametrizes the group")->required();
  fiber->add_option("--target", target_text, "Target matrix over the base field (g = field generator)")->required();
  fiber->add_option("--m", fiber_m, "Extension degree of the field searched")->required();
  fiber->add_option("--field", field_text, "Base field of the target");
  fiber->add_option("--limit", limit, "Number of fiber elements printed");

  std::string group = "q8";
  std::int64_t torus_p = 0;
  unsigned torus_n = 2;
  std::string modulus;
  auto* lstar = app.add_subcommand("lambda-star", "Lang-Steinberg generators of a group family")->fallthrough();
  lstar->add_option("--group", group, "Group family")->check(CLI::IsMember({"q8", "torus"}))->required();
  lstar->add_option("-p", torus_p, "Torus: odd prime");
  lstar->add_option("-n", torus_n, "Torus: degree of the field extension");
  lstar->add_option("--modulus", modulus, "Torus: monic modulus coefficients c0,...,cn");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  try {
    Reply r;
    if (cyclic2->parsed()) {
      r = cmd_cyclic2(c2, g);
    } else if (sln->parsed()) {
      r = cmd_sln(sln_q, sln_n, g);
    } else if (q8->parsed()) {
      r = cmd_q8_verify(q8_samples, g);
    } else if (c8f5->parsed()) {
      r = cmd_c8f5_verify(g);
    } else if (galois->parsed()) {
      r = cmd_galois(module_path, xi_text, mmax, field_text, g);
    } else if (fiber->parsed()) {
      r = cmd_ls_fiber(module_path, target_text, fiber_m, field_text, limit, g);
    } else if (lstar->parsed()) {
      r = cmd_lambda_star(group, torus_p, torus_n, modulus, g);
    }
    if (g.json()) {
      out << r.doc.dump(2) << "\n";
    } else {
      for (const auto& line : r.text) out << line << "\n";
    }
    if (r.code == kVerification) err << "error: verification: " << r.doc["case"].get<std::string>() << " failed\n";
    return r.code;
  } catch (const std::exception& e) {
    err << "error: " << error_kind(e) << ": " << one_line(e.what()) << "\n";
    return error_code(e);
  }
}

}  // namespace frobgen::cli
