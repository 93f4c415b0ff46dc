#include "ocsym/report.hpp"

#include <cstdio>
#include <sstream>

namespace ocsym {

namespace {

using json = nlohmann::ordered_json;

json generators_json(const GeneratorsText& g) {
  return json{{"T", g.T}, {"X", g.X}, {"U", g.U}, {"Psi", g.Psi}, {"G", g.G}};
}

json equations_json(const std::vector<std::pair<std::string, std::string>>& eqs) {
  json out = json::object();
  for (const auto& [lhs, rhs] : eqs) out[lhs] = rhs;
  return out;
}

// (name, value) in slot order
std::vector<std::pair<std::string, std::string>> components(const GeneratorsText& g) {
  std::vector<std::pair<std::string, std::string>> out{{"T", g.T}};
  for (std::size_t i = 0; i < g.X.size(); ++i) out.emplace_back("X" + std::to_string(i + 1), g.X[i]);
  for (std::size_t j = 0; j < g.U.size(); ++j) out.emplace_back("U" + std::to_string(j + 1), g.U[j]);
  for (std::size_t i = 0; i < g.Psi.size(); ++i) out.emplace_back("Psi" + std::to_string(i + 1), g.Psi[i]);
  out.emplace_back("G", g.G);
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

json to_json(const RunReport& r) {
  json j;
  j["schema"] = 1;
  j["command"] = r.command;
  j["problem"] = json{{"n", r.n}, {"m", r.m}, {"mode", r.mode}, {"states", r.states}, {"controls", r.controls}};
  if (r.config) {
    j["config"] = json{{"dependence", r.config->dependence},
                       {"degree", r.config->degree},
                       {"separation", r.config->separation},
                       {"gauge", r.config->gauge}};
  }
  if (r.family) {
    json basis = json::array();
    for (std::size_t k = 0; k < r.family->basis.size(); ++k) {
      json entry{{"constant", r.family->constants[k]}};
      entry["generators"] = generators_json(r.family->basis[k]);
      basis.push_back(std::move(entry));
    }
    j["family"] = json{{"dimension", r.family->constants.size()},
                       {"constants", r.family->constants},
                       {"generators", generators_json(r.family->general)},
                       {"basis", std::move(basis)}};
  }
  if (r.hamiltonian) j["hamiltonian"] = *r.hamiltonian;
  if (r.system) {
    j["system"] = json{{"state", equations_json(r.system->state)},
                       {"adjoint", equations_json(r.system->adjoint)},
                       {"stationary", equations_json(r.system->stationary)}};
  }
  if (r.control_solution) j["controls"] = equations_json(*r.control_solution);
  if (!r.laws.empty()) {
    json laws = json::array();
    for (const auto& law : r.laws) {
      json entry{{"label", law.label}, {"display", law.display}, {"algebraic", law.algebraic}};
      entry["integrand"] = law.integrand ? json(*law.integrand) : json(nullptr);
      laws.push_back(std::move(entry));
    }
    j["laws"] = std::move(laws);
  }
  if (!r.verification.empty()) {
    json verdicts = json::array();
    for (const auto& v : r.verification) verdicts.push_back(json{{"label", v.label}, {"residual", v.residual}, {"ok", v.ok}});
    j["verification"] = std::move(verdicts);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.duration_ms) j["duration_ms"] = *r.duration_ms;
  return j;
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "problem: n=" << r.n << " m=" << r.m << " mode=" << r.mode << " states=[" << join(r.states, ", ")
     << "] controls=[" << join(r.controls, ", ") << "]\n";
  if (r.config) {
    os << "config: dep=" << r.config->dependence << " degree=" << r.config->degree
       << " separation=" << r.config->separation << " gauge=" << (r.config->gauge ? "on" : "off") << "\n";
  }
  if (r.family) {
    const auto& f = *r.family;
    os << "family: " << f.constants.size() << " constant" << (f.constants.size() == 1 ? "" : "s");
    if (!f.constants.empty()) os << " (" << join(f.constants, ", ") << ")";
    os << "\n";
    for (const auto& [name, value] : components(f.general)) os << "  " << name << " = " << value << "\n";
    if (!f.basis.empty()) os << "basis:\n";
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
      std::vector<std::string> parts;
      for (const auto& [name, value] : components(f.basis[k]))
        if (value != "0") parts.push_back(name + " = " + value);
      if (parts.empty()) parts.push_back("0");
      os << "  " << f.constants[k] << ": " << join(parts, "; ") << "\n";
    }
  }
  if (r.hamiltonian) os << "H = " << *r.hamiltonian << "\n";
  if (r.system) {
    os << "system:\n";
    for (const auto& [lhs, rhs] : r.system->state) os << "  " << lhs << " = " << rhs << "\n";
    for (const auto& [lhs, rhs] : r.system->adjoint) os << "  " << lhs << " = " << rhs << "\n";
    for (const auto& [lhs, rhs] : r.system->stationary) os << "  " << lhs << " = " << rhs << "\n";
  }
  if (r.control_solution) {
    os << "controls:\n";
    for (const auto& [lhs, rhs] : *r.control_solution) os << "  " << lhs << " = " << rhs << "\n";
  }
  if (!r.laws.empty()) {
    os << "laws:\n";
    for (const auto& law : r.laws) {
      os << "  [" << law.label << "] " << law.display << "\n";
      os << "    algebraic: " << law.algebraic << "\n";
      if (law.integrand) os << "    integrand: " << *law.integrand << "\n";
    }
  }
  if (!r.verification.empty()) {
    os << "verification:\n";
    for (const auto& v : r.verification)
      os << "  [" << v.label << "] residual = " << v.residual << (v.ok ? "" : " FAILED") << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  if (r.duration_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *r.duration_ms);
    os << "duration_ms: " << buf << "\n";
  }
  return os.str();
}

}  // namespace ocsym
