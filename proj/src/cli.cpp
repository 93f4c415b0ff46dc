#include "ocsym/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ocsym/errors.hpp"
#include "ocsym/noether.hpp"
#include "ocsym/parser.hpp"
#include "ocsym/pmp.hpp"
#include "ocsym/report.hpp"
#include "ocsym/symmetry.hpp"

namespace ocsym::cli {

namespace {

struct Options {
  std::string file;
  std::optional<std::string> mode;
  bool json = false;
  bool timing = false;
  // symmetry / noether
  bool gauge = false;
  std::string dep = "D3";
  unsigned degree = 2;
  bool dense = false;
  // noether
  std::vector<std::string> specs;
  bool all_independent = false;
  bool verify = false;
  std::vector<std::string> substs;
  bool expand_h = false;
  // pmp
  bool eval_h = false;
  bool system = false;
  bool controls = false;
};

OCProblem load(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw std::invalid_argument("cannot read '" + o.file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  OCProblem p = parse_problem(buf.str());
  if (o.mode) p.mode = *o.mode == "abnormal" ? Mode::Abnormal : Mode::Normal;
  return p;
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + text + "'");
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

// "C2=1,C3=-1/2"
std::map<Var, Rational> parse_spec(const std::string& text, const SymbolTable& symbols) {
  std::map<Var, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto [key, value] = split_assignment(item);
    auto v = symbols.lookup(key);
    if (!v || v->kind != VarKind::FreeConstant) throw std::invalid_argument("'" + key + "' is not a free constant");
    Expr e = parse_expression(value, symbols);
    if (!e.is_constant()) throw std::invalid_argument("value for '" + key + "' must be a rational number");
    out[*v] = e.constant_value();
  }
  return out;
}

GeneratorsText render_generators(const Generators& g, const SymbolTable& s) {
  GeneratorsText out;
  out.T = render(g.T, s);
  for (const auto& e : g.X) out.X.push_back(render(e, s));
  for (const auto& e : g.U) out.U.push_back(render(e, s));
  for (const auto& e : g.Psi) out.Psi.push_back(render(e, s));
  out.G = render(g.G, s);
  return out;
}

RunReport base_report(const std::string& command, const OCProblem& p) {
  RunReport r;
  r.command = command;
  r.n = p.n();
  r.m = p.m();
  r.mode = to_string(p.mode);
  r.states = p.state_names;
  r.controls = p.control_names;
  return r;
}

AnsatzSpec ansatz_spec(const Options& o) {
  AnsatzSpec spec;
  spec.config = DependenceConfig::preset(o.dep);
  spec.degree = o.degree;
  spec.separation = o.dense ? Separation::Dense : Separation::Additive;
  return spec;
}

SymmetryFamily solve_family(const OCProblem& p, const Options& o, RunReport& r) {
  AnsatzSpec spec = ansatz_spec(o);
  r.config = ConfigEcho{spec.config.name, spec.degree, o.dense ? "dense" : "additive", o.gauge};
  SymmetryFamily fam = find_symmetries(p, spec, o.gauge);
  SymbolTable s = p.symbols();
  FamilyText f;
  for (const auto& c : fam.constants) f.constants.push_back(s.name(c));
  f.general = render_generators(fam.generators, s);
  for (std::size_t k = 0; k < fam.dimension(); ++k) f.basis.push_back(render_generators(fam.direction(k), s));
  r.family = std::move(f);
  if (fam.dimension() == 0)
    r.notes.push_back("no symmetry found at degree " + std::to_string(o.degree) + "; try --degree " +
                      std::to_string(o.degree + 1));
  return fam;
}

int cmd_symmetry(const Options& o, RunReport& r) {
  OCProblem p = load(o);
  r = base_report("symmetry", p);
  solve_family(p, o, r);
  return kOk;
}

int cmd_noether(const Options& o, RunReport& r) {
  OCProblem p = load(o);
  r = base_report("noether", p);
  SymbolTable s = p.symbols();
  Bindings subst;
  for (const auto& text : o.substs) {
    auto [key, value] = split_assignment(text);
    auto v = s.lookup(key);
    if (!v) throw UnknownIdentifier(key);
    subst[*v] = parse_expression(value, s);
  }
  std::vector<std::map<Var, Rational>> specs;
  for (const auto& text : o.specs) specs.push_back(parse_spec(text, s));

  SymmetryFamily fam = solve_family(p, o, r);
  std::vector<std::pair<std::string, ConservationLaw>> laws;
  ConservationLaw general = conservation_law(p, fam);
  laws.emplace_back("general", general);
  for (std::size_t i = 0; i < specs.size(); ++i) laws.emplace_back(o.specs[i], normalize(specialize(general, specs[i])));
  if (o.all_independent) {
    for (const auto& c : fam.constants) laws.emplace_back(s.name(c), normalize(specialize(general, {{c, Rational(1)}})));
  }
  for (const auto& [label, law] : laws) {
    LawText t{label, render_law(law, s, !o.expand_h), render(law.algebraic, s), std::nullopt};
    if (law.integrand) t.integrand = render(*law.integrand, s);
    r.laws.push_back(std::move(t));
  }
  int code = kOk;
  if (o.verify) {
    for (const auto& [label, law] : laws) {
      Expr residual = verify_conservation(p, law, subst);
      r.verification.push_back({label, render(residual, s), residual.is_zero()});
      if (!residual.is_zero()) code = kInternal;
    }
  }
  return code;
}

int cmd_pmp(const Options& o, RunReport& r) {
  OCProblem p = load(o);
  r = base_report("pmp", p);
  SymbolTable s = p.symbols();
  bool any = o.eval_h || o.system || o.controls;
  HamiltonianSystem sys = hamiltonian_system(p);
  if (o.eval_h || !any) r.hamiltonian = render(sys.H, s);
  if (o.system || !any) {
    SystemText t;
    for (std::uint32_t i = 1; i <= p.n(); ++i) {
      t.state.emplace_back(s.name(Var::dot_state(i)), render(sys.state_rhs[i - 1], s));
      t.adjoint.emplace_back(s.name(Var::dot_costate(i)), render(sys.adjoint_rhs[i - 1], s));
    }
    for (std::uint32_t j = 1; j <= p.m(); ++j)
      t.stationary.emplace_back("H_" + s.name(Var::control(j)), render(sys.stationary[j - 1], s));
    r.system = std::move(t);
  }
  if (o.controls) {
    std::vector<std::pair<std::string, std::string>> sol;
    for (const auto& [v, e] : solve_controls(p)) sol.emplace_back(s.name(v), render(e, s));
    r.control_solution = std::move(sol);
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "problem file")->required();
  sub->add_option("--mode", o.mode, "normal or abnormal (overrides the file)")
      ->check(CLI::IsMember({"normal", "abnormal"}));
  sub->add_flag("--json", o.json, "JSON report");
  sub->add_flag("--timing", o.timing, "include wall-clock duration");
}

void add_solver(CLI::App* sub, Options& o) {
  sub->add_flag("--gauge", o.gauge, "allow a gauge term G(t, x)");
  sub->add_option("--dep", o.dep, "dependence preset")->check(CLI::IsMember({"D1", "D2", "D3", "D4"}));
  sub->add_option("--degree", o.degree, "ansatz degree")->check(CLI::Range(1u, 12u));
  sub->add_flag("--dense", o.dense, "dense ansatz (all monomials up to the degree)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Variational symmetries and Noether first integrals of optimal-control problems", "ocsym"};
  app.require_subcommand(1);
  auto* sym = app.add_subcommand("symmetry", "solve the determining system");
  add_common(sym, o);
  add_solver(sym, o);
  auto* noe = app.add_subcommand("noether", "conservation laws from the symmetry family");
  add_common(noe, o);
  add_solver(noe, o);
  noe->add_option("--spec", o.specs, "specialization, e.g. C2=1 or C1=1,C3=-1/2");
  noe->add_flag("--all-independent", o.all_independent, "one law per basis constant");
  noe->add_flag("--verify", o.verify, "check each law along extremals");
  noe->add_option("--subst", o.substs, "name=expr applied to verification residuals");
  noe->add_flag("--expand-h", o.expand_h, "print laws with H expanded");
  auto* pmp = app.add_subcommand("pmp", "Hamiltonian, extremal system, controls");
  add_common(pmp, o);
  pmp->add_flag("--evalH", o.eval_h, "print H");
  pmp->add_flag("--system", o.system, "print the Hamiltonian system");
  pmp->add_flag("--controls", o.controls, "solve dH/du = 0 for the controls");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto start = std::chrono::steady_clock::now();
  RunReport report;
  int code = kOk;
  try {
    if (sym->parsed()) code = cmd_symmetry(o, report);
    else if (noe->parsed()) code = cmd_noether(o, report);
    else code = cmd_pmp(o, report);
  } catch (const NonlinearControls& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const SingularControls& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  if (o.timing)
    report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.json) out << to_json(report).dump(2) << "\n";
  else out << to_text(report);
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ocsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ocsym::cli
