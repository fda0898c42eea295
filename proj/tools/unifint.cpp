// unifint: command-line driver over the library modules.
//
// Exit codes: 0 success, 1 property-check failure (a witness is printed),
// 2 usage/input error, 3 budget exceeded.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "unifint/interp.hpp"
#include "unifint/lgroup.hpp"
#include "unifint/mc.hpp"
#include "unifint/report.hpp"

using namespace unifint;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteAlgebra load_algebra(const std::string& path) {
  return FiniteAlgebra::from_json(
      nlohmann::ordered_json::parse(read_file(path)));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)),
                  std::stoll(s.substr(slash + 1)));
}

RationalPoint parse_point(const std::string& s) {
  RationalPoint pt;
  for (const auto& part : split_csv(s)) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("point entries must look like y1=3/2: " +
                                  part);
    pt[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
  }
  return pt;
}

void print(const RunConfig& cfg, const nlohmann::ordered_json& rep,
           const std::string& text) {
  if (cfg.json)
    std::cout << dump_report(rep);
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_alg_validate(const RunConfig& cfg, const std::string& in) {
  FiniteAlgebra A = load_algebra(in);
  nlohmann::ordered_json rep = make_report("alg validate", cfg);
  rep["name"] = A.name();
  rep["size"] = A.size();
  rep["operations"] = nlohmann::ordered_json::array();
  for (const auto& op : A.sig().ops())
    rep["operations"].push_back({{"symbol", op.symbol}, {"arity", op.arity}});
  print(cfg, rep,
        "valid algebra '" + A.name() + "': " + std::to_string(A.size()) +
            " elements, " + std::to_string(A.sig().op_count()) +
            " operations\n");
  return 0;
}

int cmd_alg_free(const RunConfig& cfg, const std::string& gen,
                 const std::string& vars_csv) {
  FiniteAlgebra G = load_algebra(gen);
  FreeAlgebra F = free_algebra(G, split_csv(vars_csv), cfg.element_budget);
  nlohmann::ordered_json rep = make_report("alg free", cfg);
  rep["generator"] = G.name();
  rep["vars"] = F.vars;
  rep["size"] = F.alg.size();
  rep["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : F.witnesses) rep["witnesses"].push_back(to_string(w));
  std::string text = "free algebra on " + std::to_string(F.vars.size()) +
                     " generators over HSP(" + G.name() +
                     "): size " + std::to_string(F.alg.size()) + "\n";
  for (const auto& w : F.witnesses) text += "  " + to_string(w) + "\n";
  print(cfg, rep, text);
  return 0;
}

int cmd_alg_cong(const RunConfig& cfg, const std::string& in) {
  FiniteAlgebra A = load_algebra(in);
  CongruenceLattice L = con_lattice(A, cfg.congruence_limit);
  LatticeCheck dist = is_distributive(L.lattice);
  LatticeCheck brouwer = is_dually_brouwerian(L.lattice);
  nlohmann::ordered_json rep = make_report("alg cong", cfg);
  rep["algebra"] = A.name();
  rep["count"] = L.congs.size();
  rep["congruences"] = nlohmann::ordered_json::array();
  for (const auto& c : L.congs) rep["congruences"].push_back(json_blocks(c));
  rep["order"] = nlohmann::ordered_json::array();
  for (int i = 0; i < L.lattice.size; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < L.lattice.size; ++j)
      row.push_back(L.lattice.le(i, j));
    rep["order"].push_back(row);
  }
  rep["flags"] = {{"distributive", dist.ok},
                  {"duallyBrouwerian", brouwer.ok}};
  std::string text = "Con " + A.name() + ": " +
                     std::to_string(L.congs.size()) + " congruences" +
                     (dist.ok ? ", distributive" : ", not distributive") +
                     (brouwer.ok ? ", dually Brouwerian\n"
                                 : ", not dually Brouwerian\n");
  for (const auto& c : L.congs) text += "  " + c.to_string() + "\n";
  print(cfg, rep, text);
  return 0;
}

int cmd_alg_cep(const RunConfig& cfg, const std::string& in) {
  FiniteAlgebra A = load_algebra(in);
  CepResult r = cep_check(A, cfg.congruence_limit);
  nlohmann::ordered_json rep = make_report("alg cep", cfg);
  rep["algebra"] = A.name();
  rep["pass"] = r.ok;
  std::string witness;
  if (!r.ok) {
    witness = "subuniverse {";
    for (size_t i = 0; i < r.sub_universe.size(); ++i)
      witness += (i ? "," : "") + std::to_string(r.sub_universe[i]);
    witness += "}, pair (" + std::to_string(r.pair.first) + "," +
               std::to_string(r.pair.second) + ")";
  }
  rep["witness"] = witness;
  print(cfg, rep,
        A.name() + (r.ok ? ": congruence extension property holds\n"
                         : ": CEP fails; " + witness + "\n"));
  return r.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_interp_right(const RunConfig& cfg, const std::string& variety,
                     const std::string& sigma_path, const std::string& elim,
                     bool verify) {
  FiniteAlgebra G = load_algebra(variety);
  VarietyEngine V(G, cfg.element_budget);
  EquationSet sigma = parse_equation_set(read_file(sigma_path), G.sig());
  InterpolantResult r = right_uniform_interpolant(V, sigma, split_csv(elim));
  nlohmann::ordered_json rep = make_report("interp right", cfg);
  rep["sigma"] = json_equations(sigma);
  rep["eliminated"] = r.eliminated;
  rep["pi"] = json_equations(r.pi);
  std::string text = "Pi =\n" + to_string(r.pi);
  int code = 0;
  if (verify) {
    int fresh_budget = 1;
    VerifySummary vs;
    try {
      vs = verify_right_interpolant(V, sigma, r, fresh_budget);
    } catch (const BudgetError&) {
      // the free algebra with a fresh variable is out of budget; fall back
      // to checking conclusions over the kept variables only
      fresh_budget = 0;
      vs = verify_right_interpolant(V, sigma, r, fresh_budget);
    }
    rep["verified"] = vs.pass;
    rep["fresh_budget"] = fresh_budget;
    rep["checked"] = vs.checked;
    rep["witness"] = vs.witness;
    text += vs.pass ? "PASS (" + std::to_string(vs.checked) +
                          " equations, fresh budget " +
                          std::to_string(fresh_budget) + ")\n"
                    : "FAIL: " + vs.witness + "\n";
    if (!vs.pass) code = 1;
  }
  print(cfg, rep, text);
  return code;
}

int cmd_interp_left(const RunConfig& cfg, const std::string& variety,
                    const std::string& delta_path, const std::string& elim,
                    bool verify) {
  FiniteAlgebra G = load_algebra(variety);
  VarietyEngine V(G, cfg.element_budget);
  EquationSet delta = parse_equation_set(read_file(delta_path), G.sig());
  InterpolantResult r = left_uniform_interpolant(V, delta, split_csv(elim));
  nlohmann::ordered_json rep = make_report("interp left", cfg);
  rep["delta"] = json_equations(delta);
  rep["eliminated"] = r.eliminated;
  rep["exists"] = r.ok;
  if (!r.ok) {
    rep["witness"] = r.diagnostic;
    print(cfg, rep, "left interpolant missing: " + r.diagnostic + "\n");
    return 1;
  }
  rep["pi"] = json_equations(r.pi);
  std::string text = "Pi =\n" + to_string(r.pi);
  int code = 0;
  if (verify) {
    VerifySummary vs;
    try {
      vs = verify_left_interpolant(V, delta, r, 1, cfg.seed);
    } catch (const BudgetError&) {
      vs = verify_left_interpolant(V, delta, r, 0, cfg.seed);
    }
    rep["verified"] = vs.pass;
    rep["checked"] = vs.checked;
    rep["witness"] = vs.witness;
    text += vs.pass ? "PASS (" + std::to_string(vs.checked) + " premise sets)\n"
                    : "FAIL: " + vs.witness + "\n";
    if (!vs.pass) code = 1;
  }
  print(cfg, rep, text);
  return code;
}

int cmd_interp_maehara(const RunConfig& cfg, const std::string& variety,
                       const std::string& sigma_path,
                       const std::string& delta_path) {
  FiniteAlgebra G = load_algebra(variety);
  VarietyEngine V(G, cfg.element_budget);
  EquationSet sigma = parse_equation_set(read_file(sigma_path), G.sig());
  EquationSet delta = parse_equation_set(read_file(delta_path), G.sig());
  InterpolantResult r = maehara_residual_interpolant(V, sigma, delta);
  nlohmann::ordered_json rep = make_report("interp maehara", cfg);
  rep["sigma"] = json_equations(sigma);
  rep["delta"] = json_equations(delta);
  rep["exists"] = r.ok;
  if (!r.ok) {
    rep["witness"] = r.diagnostic;
    print(cfg, rep, "residual missing: " + r.diagnostic + "\n");
    return 1;
  }
  rep["pi"] = json_equations(r.pi);
  print(cfg, rep, "Pi =\n" + to_string(r.pi));
  return 0;
}

int cmd_interp_dip(const RunConfig& cfg, const std::string& variety,
                   const std::string& xs, const std::string& ys,
                   const std::string& zs) {
  FiniteAlgebra G = load_algebra(variety);
  VarietyEngine V(G, cfg.element_budget);
  DipSquareResult r =
      dip_square_check(V, split_csv(xs), split_csv(ys), split_csv(zs));
  nlohmann::ordered_json rep = make_report("interp dip-check", cfg);
  rep["pass"] = r.pass;
  rep["checked"] = r.checked;
  rep["witness"] = r.witness;
  print(cfg, rep,
        r.pass ? "PASS: square commutes for all " +
                     std::to_string(r.checked) + " congruences\n"
               : "FAIL: " + r.witness + "\n");
  return r.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_lgroup_eliminate(const RunConfig& cfg, const std::string& in,
                         const std::string& var, bool certify) {
  InequationSystem S = parse_inequation_system(read_file(in));
  EliminationResult r = eliminate(S, var);
  nlohmann::ordered_json rep = make_report("lgroup eliminate", cfg);
  rep["input"] = json_system(S);
  rep["variable"] = var;
  rep["n"] = r.n;
  rep["pi"] = json_system(r.pi);
  std::string text;
  for (const auto& iq : r.pi.inequations) text += iq.to_string() + "\n";
  if (r.pi.inequations.empty()) text += "(no constraints remain)\n";
  if (certify) {
    bool ok = check_certificate(r);
    rep["certified"] = ok;
    nlohmann::ordered_json cert = nlohmann::ordered_json::array();
    for (const auto& ln : r.certificate) {
      nlohmann::ordered_json entry;
      entry["output_multiplier"] = ln.output_multiplier;
      entry["input_multipliers"] = nlohmann::ordered_json::array();
      for (auto [idx, mult] : ln.input_multipliers)
        entry["input_multipliers"].push_back({{"input", idx}, {"lambda", mult}});
      cert.push_back(entry);
    }
    rep["certificate"] = cert;
    text += ok ? "certificate: OK\n" : "certificate: FAILED\n";
    if (!ok) {
      print(cfg, rep, text);
      return 1;
    }
  }
  print(cfg, rep, text);
  return 0;
}

int cmd_lgroup_check(const RunConfig& cfg, const std::string& in,
                     const std::string& var, const std::string& point) {
  InequationSystem S = parse_inequation_system(read_file(in));
  RationalPoint pt = parse_point(point);
  nlohmann::ordered_json rep = make_report("lgroup check", cfg);
  rep["input"] = json_system(S);
  if (var.empty()) {
    bool ok = point_satisfies(S, pt);
    rep["satisfied"] = ok;
    print(cfg, rep, ok ? "point satisfies the system\n"
                       : "point violates the system\n");
    return ok ? 0 : 1;
  }
  Interval iv = witness_interval(S, var, pt);
  rep["variable"] = var;
  rep["nonempty"] = iv.nonempty();
  auto rat = [](const Rational& q) {
    return std::to_string(q.numerator()) + "/" +
           std::to_string(q.denominator());
  };
  rep["lo"] = iv.lo ? rat(*iv.lo) : "-inf";
  rep["hi"] = iv.hi ? rat(*iv.hi) : "+inf";
  std::string text = "witness interval for " + var + ": [" +
                     (iv.lo ? rat(*iv.lo) : "-inf") + ", " +
                     (iv.hi ? rat(*iv.hi) : "+inf") + "]" +
                     (iv.nonempty() ? " (nonempty)\n" : " (empty)\n");
  print(cfg, rep, text);
  return iv.nonempty() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_mc_axiom(const RunConfig& cfg, const std::string& variety,
                 const std::string& gamma_path,
                 const std::vector<std::string>& delta_paths,
                 const std::string& x, bool verify) {
  FiniteAlgebra G = load_algebra(variety);
  VarietyEngine V(G, cfg.element_budget);
  EquationSet gamma = parse_equation_set(read_file(gamma_path), G.sig());
  std::vector<EquationSet> deltas;
  for (const auto& p : delta_paths)
    deltas.push_back(parse_equation_set(read_file(p), G.sig()));
  AxiomDatum d;
  try {
    d = build_axiom_datum(V, gamma, deltas, x);
  } catch (const BudgetError&) {
    throw;
  } catch (const std::exception& e) {
    nlohmann::ordered_json rep = make_report("mc axiom", cfg);
    rep["pass"] = false;
    rep["witness"] = e.what();
    print(cfg, rep, std::string("construction failed: ") + e.what() + "\n");
    return 1;
  }
  nlohmann::ordered_json rep = make_report("mc axiom", cfg);
  rep["sigma"] = json_equations(d.sigma);
  rep["pis"] = nlohmann::ordered_json::array();
  for (const auto& pi : d.pis) rep["pis"].push_back(json_equations(pi));
  std::string axiom = to_string(emit_axiom(d));
  rep["axiom"] = axiom;
  std::string text = axiom + "\n";
  int code = 0;
  if (verify) {
    FiniteAlgebra G2 = direct_power(G, 2, cfg.element_budget);
    QuantElimReport qe = verify_quantelim_direction(V, d, {&G, &G2});
    rep["quantelim"] = {{"pass", qe.pass},
                        {"assignments", qe.assignments},
                        {"witness", qe.witness}};
    text += qe.pass ? "quantifier-elimination direction: PASS (" +
                          std::to_string(qe.assignments) + " assignments)\n"
                    : "quantifier-elimination direction: FAIL: " + qe.witness +
                          "\n";
    if (!qe.pass) code = 1;
  }
  print(cfg, rep, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational universal algebra toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--budget", cfg.element_budget, "element budget");
  app.add_option("--congruence-limit", cfg.congruence_limit,
                 "congruence count limit");
  app.add_option("--seed", cfg.seed, "random seed (echoed in reports)");
  app.add_flag("--jsonout,--json", cfg.json, "JSON report output");
  app.add_flag("-v", cfg.verbosity, "verbosity");

  std::string in, gen, vars, variety, sigma, delta, elim, var, point, x;
  std::vector<std::string> delta_paths;
  std::string xs, ys, zs;
  bool verify = false, certify = false;

  CLI::App* alg = app.add_subcommand("alg", "finite algebra operations");
  CLI::App* alg_validate = alg->add_subcommand("validate", "load and check");
  alg_validate->add_option("--in", in)->required();
  CLI::App* alg_free = alg->add_subcommand("free", "free algebra of HSP(G)");
  alg_free->add_option("--generator", gen)->required();
  alg_free->add_option("--vars", vars)->required();
  CLI::App* alg_cong = alg->add_subcommand("cong", "congruence lattice");
  alg_cong->add_option("--in", in)->required();
  CLI::App* alg_cep = alg->add_subcommand("cep", "congruence extension check");
  alg_cep->add_option("--in", in)->required();

  CLI::App* interp = app.add_subcommand("interp", "uniform interpolants");
  CLI::App* i_right = interp->add_subcommand("right", "right interpolant");
  i_right->add_option("--variety", variety)->required();
  i_right->add_option("--sigma", sigma)->required();
  i_right->add_option("--eliminate", elim)->required();
  i_right->add_flag("--verify", verify);
  CLI::App* i_left = interp->add_subcommand("left", "left interpolant");
  i_left->add_option("--variety", variety)->required();
  i_left->add_option("--delta", delta)->required();
  i_left->add_option("--eliminate", elim)->required();
  i_left->add_flag("--verify", verify);
  CLI::App* i_mae = interp->add_subcommand("maehara", "residual interpolant");
  i_mae->add_option("--variety", variety)->required();
  i_mae->add_option("--sigma", sigma)->required();
  i_mae->add_option("--delta", delta)->required();
  CLI::App* i_dip = interp->add_subcommand("dip-check", "square commutation");
  i_dip->add_option("--variety", variety)->required();
  i_dip->add_option("--x", xs)->required();
  i_dip->add_option("--y", ys)->required();
  i_dip->add_option("--z", zs)->required();

  CLI::App* lg = app.add_subcommand("lgroup", "linear variable elimination");
  CLI::App* lg_elim = lg->add_subcommand("eliminate", "eliminate a variable");
  lg_elim->add_option("--in", in)->required();
  lg_elim->add_option("--var", var)->required();
  lg_elim->add_flag("--certify", certify);
  CLI::App* lg_check = lg->add_subcommand("check", "evaluate at a point");
  lg_check->add_option("--in", in)->required();
  lg_check->add_option("--point", point)->required();
  lg_check->add_option("--var", var, "also print the witness interval");

  CLI::App* mc = app.add_subcommand("mc", "model-completion axioms");
  CLI::App* mc_axiom = mc->add_subcommand("axiom", "build one axiom");
  mc_axiom->add_option("--variety", variety)->required();
  mc_axiom->add_option("--gamma", sigma)->required();
  mc_axiom->add_option("--delta", delta_paths);
  mc_axiom->add_option("--eliminate", x)->required();
  mc_axiom->add_flag("--verify", verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    apply_env_budget(cfg);
    if (alg_validate->parsed()) return cmd_alg_validate(cfg, in);
    if (alg_free->parsed()) return cmd_alg_free(cfg, gen, vars);
    if (alg_cong->parsed()) return cmd_alg_cong(cfg, in);
    if (alg_cep->parsed()) return cmd_alg_cep(cfg, in);
    if (i_right->parsed())
      return cmd_interp_right(cfg, variety, sigma, elim, verify);
    if (i_left->parsed())
      return cmd_interp_left(cfg, variety, delta, elim, verify);
    if (i_mae->parsed()) return cmd_interp_maehara(cfg, variety, sigma, delta);
    if (i_dip->parsed()) return cmd_interp_dip(cfg, variety, xs, ys, zs);
    if (lg_elim->parsed()) return cmd_lgroup_eliminate(cfg, in, var, certify);
    if (lg_check->parsed()) return cmd_lgroup_check(cfg, in, var, point);
    if (mc_axiom->parsed())
      return cmd_mc_axiom(cfg, variety, sigma, delta_paths, x, verify);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
