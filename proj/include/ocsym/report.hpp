#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ocsym {

/// Rendered generator set; components are strings in the expression grammar.
struct GeneratorsText {
  std::string T;
  std::vector<std::string> X;
  std::vector<std::string> U;
  std::vector<std::string> Psi;
  std::string G;
};

struct ConfigEcho {
  std::string dependence;
  unsigned degree = 0;
  std::string separation;
  bool gauge = false;
};

struct FamilyText {
  std::vector<std::string> constants;
  GeneratorsText general;
  std::vector<GeneratorsText> basis;  // one per constant
};

struct LawText {
  std::string label;
  std::string display;    // H kept symbolic unless expanded on request
  std::string algebraic;  // psi.X + G - H T with H expanded
  std::optional<std::string> integrand;
};

struct Verdict {
  std::string label;
  std::string residual;
  bool ok = false;
};

struct SystemText {
  std::vector<std::pair<std::string, std::string>> state;
  std::vector<std::pair<std::string, std::string>> adjoint;
  std::vector<std::pair<std::string, std::string>> stationary;
};

struct RunReport {
  std::string command;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string mode;
  std::vector<std::string> states;
  std::vector<std::string> controls;
  std::optional<ConfigEcho> config;
  std::optional<FamilyText> family;
  std::vector<LawText> laws;
  std::vector<Verdict> verification;
  std::optional<std::string> hamiltonian;
  std::optional<SystemText> system;
  std::optional<std::vector<std::pair<std::string, std::string>>> control_solution;
  std::vector<std::string> notes;
  std::optional<double> duration_ms;
};

nlohmann::ordered_json to_json(const RunReport& r);
std::string to_text(const RunReport& r);

}  // namespace ocsym
