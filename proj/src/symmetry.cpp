#include "ocsym/symmetry.hpp"

#include <functional>
#include <stdexcept>

#include "ocsym/linalg.hpp"
#include "ocsym/parallel.hpp"
#include "ocsym/pmp.hpp"

namespace ocsym {

// ---------------------------------------------------------------------------
// Dependence presets

DependenceConfig DependenceConfig::D1() {
  constexpr unsigned all = kOnTime | kOnState | kOnControl | kOnCostate;
  return {"D1", all, all, all, all};
}

DependenceConfig DependenceConfig::D2() {
  return {"D2", kOnTime, kOnTime | kOnState, kOnControl | kOnCostate, kOnCostate};
}

DependenceConfig DependenceConfig::D3() {
  return {"D3", kOnTime, kOnTime | kOnState, kOnTime | kOnControl, kOnTime | kOnCostate};
}

DependenceConfig DependenceConfig::D4() { return {"D4", kOnTime, kOnState, kOnControl, kOnCostate}; }

DependenceConfig DependenceConfig::preset(std::string_view name) {
  if (name == "D1") return D1();
  if (name == "D2") return D2();
  if (name == "D3") return D3();
  if (name == "D4") return D4();
  throw std::invalid_argument("unknown dependence preset '" + std::string(name) + "'");
}

unsigned DependenceConfig::mask(GeneratorSlot slot) const {
  switch (slot) {
    case GeneratorSlot::T: return T;
    case GeneratorSlot::X: return X;
    case GeneratorSlot::U: return U;
    case GeneratorSlot::Psi: return Psi;
    case GeneratorSlot::G: return G;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Generators

Generators Generators::zero(std::size_t n, std::size_t m) {
  Generators g;
  g.X.assign(n, Expr());
  g.U.assign(m, Expr());
  g.Psi.assign(n, Expr());
  return g;
}

Generators Generators::time_translation(std::size_t n, std::size_t m) {
  Generators g = zero(n, m);
  g.T = Expr(1L);
  return g;
}

std::vector<const Expr*> Generators::slots() const {
  std::vector<const Expr*> out{&T};
  for (const auto& e : X) out.push_back(&e);
  for (const auto& e : U) out.push_back(&e);
  for (const auto& e : Psi) out.push_back(&e);
  out.push_back(&G);
  return out;
}

std::vector<Expr*> Generators::slots() {
  std::vector<Expr*> out{&T};
  for (auto& e : X) out.push_back(&e);
  for (auto& e : U) out.push_back(&e);
  for (auto& e : Psi) out.push_back(&e);
  out.push_back(&G);
  return out;
}

const Expr& Generators::at(GeneratorSlot slot, std::uint32_t index) const {
  switch (slot) {
    case GeneratorSlot::T: return T;
    case GeneratorSlot::X: return X.at(index - 1);
    case GeneratorSlot::U: return U.at(index - 1);
    case GeneratorSlot::Psi: return Psi.at(index - 1);
    case GeneratorSlot::G: return G;
  }
  throw std::logic_error("bad generator slot");
}

Generators Generators::substituted(const Bindings& bindings) const {
  Generators out = *this;
  for (Expr* e : out.slots()) *e = substitute(*e, bindings);
  return out;
}

bool Generators::is_zero() const {
  for (const Expr* e : slots()) {
    if (!e->is_zero()) return false;
  }
  return true;
}

Generators SymmetryFamily::direction(std::size_t k) const {
  Bindings b;
  for (std::size_t i = 0; i < constants.size(); ++i) b.emplace(constants[i], Expr(i == k ? 1L : 0L));
  return generators.substituted(b);
}

// ---------------------------------------------------------------------------
// Determining system

namespace {

std::vector<Var> phase_variables(const OCProblem& p, unsigned mask) {
  std::vector<Var> out;
  if (mask & kOnTime) out.push_back(Var::time());
  if (mask & kOnState) {
    for (std::uint32_t i = 1; i <= p.n(); ++i) out.push_back(Var::state(i));
  }
  if (mask & kOnControl) {
    for (std::uint32_t j = 1; j <= p.m(); ++j) out.push_back(Var::control(j));
  }
  if (mask & kOnCostate) {
    for (std::uint32_t i = 1; i <= p.n(); ++i) out.push_back(Var::costate(i));
  }
  return out;
}

// d/dt rate symbol of a phase variable: 1 for t, the dotted symbol otherwise.
Expr rate_of(const Var& v) {
  switch (v.kind) {
    case VarKind::Time: return Expr(1L);
    case VarKind::State: return Expr(Var::dot_state(v.index));
    case VarKind::Control: return Expr(Var::dot_control(v.index));
    case VarKind::Costate: return Expr(Var::dot_costate(v.index));
    default: throw std::logic_error("not a phase variable");
  }
}

// Total time derivative of the unknown function in `slot`, restricted to `mask`.
Expr total_derivative(const OCProblem& p, GeneratorSlot slot, std::uint32_t index, unsigned mask) {
  Expr out;
  for (const Var& v : phase_variables(p, mask)) out += Expr(Var::jet(slot, index, v)) * rate_of(v);
  return out;
}

unsigned group_of(const Var& v) {
  switch (v.kind) {
    case VarKind::Time: return kOnTime;
    case VarKind::State: return kOnState;
    case VarKind::Control: return kOnControl;
    case VarKind::Costate: return kOnCostate;
    default: return 0;
  }
}

unsigned groups_mentioned(const Expr& e) {
  unsigned mask = 0;
  for (const auto& v : e.variables()) mask |= group_of(v);
  return mask;
}

DependenceConfig widened(DependenceConfig cfg, const Generators& gens) {
  cfg.T |= groups_mentioned(gens.T);
  for (const auto& e : gens.X) cfg.X |= groups_mentioned(e);
  for (const auto& e : gens.U) cfg.U |= groups_mentioned(e);
  for (const auto& e : gens.Psi) cfg.Psi |= groups_mentioned(e);
  cfg.G |= groups_mentioned(gens.G);
  return cfg;
}

}  // namespace

DeterminingSystem determining_system(const OCProblem& p, const DependenceConfig& cfg, bool gauge) {
  const Expr H = hamiltonian(p);
  const auto n = static_cast<std::uint32_t>(p.n());
  const auto m = static_cast<std::uint32_t>(p.m());

  Expr identity = diff(H, Var::time()) * Expr(Var::jet(GeneratorSlot::T, 0));
  for (std::uint32_t i = 1; i <= n; ++i) {
    identity += diff(H, Var::state(i)) * Expr(Var::jet(GeneratorSlot::X, i));
    identity += diff(H, Var::costate(i)) * Expr(Var::jet(GeneratorSlot::Psi, i));
    identity -= Expr(Var::jet(GeneratorSlot::Psi, i)) * Expr(Var::dot_state(i));
    identity -= Expr(Var::costate(i)) * total_derivative(p, GeneratorSlot::X, i, cfg.X);
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    identity += diff(H, Var::control(j)) * Expr(Var::jet(GeneratorSlot::U, j));
  }
  identity += H * total_derivative(p, GeneratorSlot::T, 0, cfg.T);
  if (gauge) identity -= total_derivative(p, GeneratorSlot::G, 0, cfg.G);

  std::set<Var> dotted;
  for (std::uint32_t i = 1; i <= n; ++i) {
    dotted.insert(Var::dot_state(i));
    dotted.insert(Var::dot_costate(i));
  }
  for (std::uint32_t j = 1; j <= m; ++j) dotted.insert(Var::dot_control(j));
  Coefficients groups = collect(identity, dotted);

  DeterminingSystem sys;
  auto take = [&](const Monomial& key, std::string label) {
    auto it = groups.find(key);
    if (it != groups.end()) sys.push_back({std::move(label), it->second});
  };
  take(Monomial(), "A");
  for (std::uint32_t i = 1; i <= n; ++i) take(Monomial(Var::dot_state(i)), "B" + std::to_string(i));
  for (std::uint32_t j = 1; j <= m; ++j) take(Monomial(Var::dot_control(j)), "C" + std::to_string(j));
  for (std::uint32_t i = 1; i <= n; ++i) take(Monomial(Var::dot_costate(i)), "D" + std::to_string(i));
  return sys;
}

std::vector<Expr> instantiate(const DeterminingSystem& sys, const OCProblem& /*p*/, const Generators& gens) {
  std::set<Var> jets;
  for (const auto& eq : sys) {
    for (const auto& v : eq.residual.variables()) {
      if (v.kind == VarKind::Jet) jets.insert(v);
    }
  }
  Bindings bindings;
  for (const auto& jet : jets) {
    JetInfo info = decode_jet(jet);
    const Expr& value = gens.at(info.slot, info.slot_index);
    bindings.emplace(jet, info.has_derivative ? diff(value, info.wrt) : value);
  }
  std::vector<Expr> out(sys.size());
  parallel_for(sys.size(), [&](std::size_t k) { out[k] = substitute(sys[k].residual, bindings); });
  return out;
}

// ---------------------------------------------------------------------------
// Ansatz

namespace {

// Monomials of total degree 1..degree over vars, by degree then position.
void dense_monomials(const std::vector<Var>& vars, unsigned degree, std::vector<Monomial>& out) {
  std::function<void(std::size_t, unsigned, Monomial)> rec = [&](std::size_t start, unsigned left, Monomial cur) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < vars.size(); ++i) rec(i, left - 1, cur * Monomial(vars[i]));
  };
  for (unsigned d = 1; d <= degree; ++d) rec(0, d, Monomial());
}

}  // namespace

Ansatz build_ansatz(const OCProblem& p, const AnsatzSpec& spec, bool gauge) {
  if (spec.degree < 1) throw std::invalid_argument("ansatz degree must be at least 1");
  Ansatz out;
  out.generators = Generators::zero(p.n(), p.m());
  std::uint32_t next = 1;

  auto make = [&](unsigned mask) {
    std::vector<Var> vars = phase_variables(p, mask);
    std::vector<Monomial> monomials{Monomial()};
    if (spec.separation == Separation::Additive) {
      for (const Var& v : vars) {
        for (unsigned k = 1; k <= spec.degree; ++k) monomials.emplace_back(v, k);
      }
    } else {
      dense_monomials(vars, spec.degree, monomials);
    }
    Poly poly;
    for (const auto& mono : monomials) {
      Var coeff = Var::ansatz(next++);
      out.coefficients.push_back(coeff);
      poly.add_term(mono * Monomial(coeff), 1);
    }
    return Expr(poly);
  };

  const DependenceConfig& cfg = spec.config;
  out.generators.T = make(cfg.T);
  for (auto& e : out.generators.X) e = make(cfg.X);
  for (auto& e : out.generators.U) e = make(cfg.U);
  for (auto& e : out.generators.Psi) e = make(cfg.Psi);
  if (gauge) out.generators.G = make(cfg.G);
  return out;
}

// ---------------------------------------------------------------------------
// Solver

SymmetryFamily find_symmetries(const OCProblem& p, const AnsatzSpec& spec, bool gauge) {
  DeterminingSystem sys = determining_system(p, spec.config, gauge);
  Ansatz ansatz = build_ansatz(p, spec, gauge);
  std::vector<Expr> residuals = instantiate(sys, p, ansatz.generators);

  // Each residual is N/D with D free of ansatz coefficients, so it vanishes
  // iff every coefficient of N in the remaining variables does.
  std::vector<std::vector<std::vector<RatMatrix::Entry>>> blocks(residuals.size());
  parallel_for(residuals.size(), [&](std::size_t k) {
    std::map<Monomial, std::vector<RatMatrix::Entry>, MonomialOrder> rows;
    for (const auto& [mono, c] : residuals[k].numerator().terms()) {
      auto [unknown, rest] = mono.split([](const Var& v) { return v.kind == VarKind::AnsatzCoeff; });
      if (unknown.degree() != 1) throw std::logic_error("determining system is not linear homogeneous in the ansatz");
      rows[rest].emplace_back(unknown.factors().front().first.index - 1, c);
    }
    for (auto& [mono, entries] : rows) blocks[k].push_back(std::move(entries));
  });

  RatMatrix matrix(0, ansatz.coefficients.size());
  for (auto& block : blocks) {
    for (auto& row : block) matrix.append_row(std::move(row));
  }
  auto basis = nullspace(matrix);

  SymmetryFamily fam;
  fam.config = spec.config;
  fam.gauge = gauge;
  Bindings solution;
  for (std::size_t j = 0; j < ansatz.coefficients.size(); ++j) {
    Poly value;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k][j] != 0) value.add_term(Monomial(Var::constant(static_cast<std::uint32_t>(k + 1))), basis[k][j]);
    }
    solution.emplace(ansatz.coefficients[j], Expr(value));
  }
  for (std::size_t k = 0; k < basis.size(); ++k) fam.constants.push_back(Var::constant(static_cast<std::uint32_t>(k + 1)));
  fam.generators = ansatz.generators.substituted(solution);
  return fam;
}

Expr residual_check(const OCProblem& p, const Generators& gens, const DependenceConfig& cfg, bool gauge) {
  DependenceConfig effective = widened(cfg, gens);
  bool with_gauge = gauge || !gens.G.is_zero();
  DeterminingSystem sys = determining_system(p, effective, with_gauge);
  Expr worst;
  for (const auto& r : instantiate(sys, p, gens)) {
    if (r.term_count() > worst.term_count()) worst = r;
  }
  return worst;
}

std::optional<std::vector<Rational>> span_coordinates(const SymmetryFamily& fam, const Generators& target) {
  const std::size_t k = fam.dimension();
  std::vector<Generators> dirs;
  for (std::size_t i = 0; i < k; ++i) dirs.push_back(fam.direction(i));

  // Rows keyed by (slot, monomial); columns: directions, then the target.
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return MonomialOrder{}(a.second, b.second);
    }
  };
  std::map<std::pair<std::size_t, Monomial>, std::vector<RatMatrix::Entry>, KeyLess> rows;
  auto scatter = [&](const Generators& g, std::size_t column) {
    auto slots = g.slots();
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const Expr& e = *slots[s];
      if (!e.is_polynomial()) throw std::invalid_argument("span_coordinates requires polynomial generators");
      for (const auto& [mono, c] : e.numerator().terms()) rows[{s, mono}].emplace_back(column, c);
    }
  };
  for (std::size_t i = 0; i < k; ++i) scatter(dirs[i], i);
  if (target.X.size() != fam.generators.X.size() || target.U.size() != fam.generators.U.size()) {
    throw std::invalid_argument("generator dimensions differ");
  }
  scatter(target, k);

  RatMatrix augmented(0, k + 1);
  for (auto& [key, entries] : rows) augmented.append_row(std::move(entries));
  RrefResult r = rref(augmented);
  std::vector<Rational> coords(k);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == k) return std::nullopt;
    coords[r.pivots[i]] = r.matrix.at(i, k);
  }
  return coords;
}

}  // namespace ocsym
