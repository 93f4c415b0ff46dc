#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocsym/expr.hpp"
#include "ocsym/problem.hpp"

namespace ocsym {

/// Variable groups a generator may depend on.
enum DependenceGroup : unsigned {
  kOnTime = 1u << 0,
  kOnState = 1u << 1,
  kOnControl = 1u << 2,
  kOnCostate = 1u << 3,
};

/// Which variable groups each of T, X, U, Psi and the gauge term G may
/// depend on. The gauge term defaults to G(t, x) in every preset.
struct DependenceConfig {
  std::string name;
  unsigned T = 0;
  unsigned X = 0;
  unsigned U = 0;
  unsigned Psi = 0;
  unsigned G = kOnTime | kOnState;

  static DependenceConfig D1();  // everything on (t, x, u, psi)
  static DependenceConfig D2();  // T(t), X(t,x), U(u,psi), Psi(psi)
  static DependenceConfig D3();  // T(t), X(t,x), U(t,u), Psi(t,psi)
  static DependenceConfig D4();  // T(t), X(x), U(u), Psi(psi)
  /// "D1".."D4"; throws std::invalid_argument otherwise.
  static DependenceConfig preset(std::string_view name);

  unsigned mask(GeneratorSlot slot) const;
};

enum class Separation { Additive, Dense };

struct AnsatzSpec {
  DependenceConfig config = DependenceConfig::D3();
  unsigned degree = 2;
  Separation separation = Separation::Additive;
};

/// Infinitesimal generators (T, X, U, Psi) and gauge term G.
struct Generators {
  Expr T;
  std::vector<Expr> X;
  std::vector<Expr> U;
  std::vector<Expr> Psi;
  Expr G;

  static Generators zero(std::size_t n, std::size_t m);
  /// T = 1, everything else zero.
  static Generators time_translation(std::size_t n, std::size_t m);

  /// Every generator expression in slot order T, X.., U.., Psi.., G.
  std::vector<const Expr*> slots() const;
  std::vector<Expr*> slots();
  const Expr& at(GeneratorSlot slot, std::uint32_t index) const;

  Generators substituted(const Bindings& bindings) const;
  bool is_zero() const;

  friend bool operator==(const Generators&, const Generators&) = default;
};

/// One coefficient group of the invariance identity, written in jet symbols
/// (unknown generator functions and their first partial derivatives).
struct DeterminingEquation {
  std::string label;  // "A", "B<i>" (x_i'), "C<j>" (u_j'), "D<i>" (psi_i')
  Expr residual;
};

using DeterminingSystem = std::vector<DeterminingEquation>;

/// Invariance identity up to a gauge term with total derivatives expanded
/// over the dependences allowed by `cfg`, split by the dotted symbols.
/// Coefficient groups that vanish structurally are omitted. The force never
/// enters. Without `gauge` the G term is absent.
DeterminingSystem determining_system(const OCProblem& p, const DependenceConfig& cfg, bool gauge);

/// Replaces jet symbols by the corresponding derivatives of `gens`.
std::vector<Expr> instantiate(const DeterminingSystem& sys, const OCProblem& p, const Generators& gens);

struct Ansatz {
  Generators generators;        // linear in the coefficients
  std::vector<Var> coefficients;  // AnsatzCoeff(1..N) in column order
};

/// Polynomial ansatz in each generator's allowed variables. Coefficients are
/// numbered T first, then X1..Xn, U1..Um, Psi1..Psin and G (when gauge).
Ansatz build_ansatz(const OCProblem& p, const AnsatzSpec& spec, bool gauge = true);

/// Generators linear and homogeneous in the free constants C1..Ck.
struct SymmetryFamily {
  std::vector<Var> constants;
  Generators generators;
  DependenceConfig config;
  bool gauge = false;

  std::size_t dimension() const { return constants.size(); }
  /// Generators with C_k = 1 and every other constant 0 (k is 0-based).
  Generators direction(std::size_t k) const;
};

/// Solves the determining system over the polynomial ansatz: collects the
/// coefficient of every monomial in the problem variables into a homogeneous
/// linear system and parametrizes its nullspace.
SymmetryFamily find_symmetries(const OCProblem& p, const AnsatzSpec& spec, bool gauge);

/// Largest (by term count) residual of the determining system for `gens`;
/// zero iff the generators are a symmetry, identically in any free
/// constants they carry. Dependences actually present in `gens` are honored
/// even when `cfg` excludes them.
Expr residual_check(const OCProblem& p, const Generators& gens, const DependenceConfig& cfg, bool gauge);

/// Coordinates of `target` in the basis directions of `fam`, or nullopt when
/// it is outside the span.
std::optional<std::vector<Rational>> span_coordinates(const SymmetryFamily& fam, const Generators& target);

}  // namespace ocsym
