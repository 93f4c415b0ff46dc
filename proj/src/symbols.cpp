#include "ocsym/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace ocsym {
namespace {

std::optional<std::uint32_t> numeric_suffix(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = s.substr(prefix.size());
  if (digits[0] == '0') return std::nullopt;
  std::uint32_t value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + static_cast<std::uint32_t>(ch - '0');
    if (value > 1000000) return std::nullopt;
  }
  return value;
}

std::optional<std::uint32_t> position_of(const std::vector<std::string>& names, std::string_view id) {
  auto it = std::find(names.begin(), names.end(), id);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin()) + 1;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

SymbolTable::SymbolTable(std::vector<std::string> states, std::vector<std::string> controls,
                         std::vector<std::string> params, std::vector<std::string> opaque)
    : states_(std::move(states)),
      controls_(std::move(controls)),
      params_(std::move(params)),
      opaque_(std::move(opaque)) {}

std::string SymbolTable::name(const Var& v) const {
  auto state_name = [&](std::uint32_t i) {
    return i >= 1 && i <= states_.size() ? states_[i - 1] : "x" + std::to_string(i);
  };
  auto control_name = [&](std::uint32_t j) {
    return j >= 1 && j <= controls_.size() ? controls_[j - 1] : "u" + std::to_string(j);
  };
  switch (v.kind) {
    case VarKind::Time: return "t";
    case VarKind::State: return state_name(v.index);
    case VarKind::Control: return control_name(v.index);
    case VarKind::CostateZero: return "psi0";
    case VarKind::Costate: return "psi" + std::to_string(v.index);
    case VarKind::DotState: return state_name(v.index) + "_dot";
    case VarKind::DotControl: return control_name(v.index) + "_dot";
    case VarKind::DotCostate: return "psi" + std::to_string(v.index) + "_dot";
    case VarKind::FreeConstant: return "C" + std::to_string(v.index);
    case VarKind::AnsatzCoeff: return "a" + std::to_string(v.index);
    case VarKind::Param:
    case VarKind::Opaque: return v.name;
    case VarKind::Jet: {
      JetInfo info = decode_jet(v);
      std::string out;
      switch (info.slot) {
        case GeneratorSlot::T: out = "T"; break;
        case GeneratorSlot::X: out = "X" + std::to_string(info.slot_index); break;
        case GeneratorSlot::U: out = "U" + std::to_string(info.slot_index); break;
        case GeneratorSlot::Psi: out = "Psi" + std::to_string(info.slot_index); break;
        case GeneratorSlot::G: out = "G"; break;
      }
      if (info.has_derivative) out += "_" + name(info.wrt);
      return out;
    }
  }
  return "?";
}

std::optional<Var> SymbolTable::lookup(std::string_view id) const {
  if (auto i = position_of(states_, id)) return Var::state(*i);
  if (auto j = position_of(controls_, id)) return Var::control(*j);
  if (position_of(params_, id)) return Var::param(std::string(id));
  if (position_of(opaque_, id)) return Var::opaque(std::string(id));
  if (id == "t") return Var::time();
  if (id == "psi0") return Var::costate_zero();
  if (auto k = numeric_suffix(id, "psi")) return Var::costate(*k);
  if (auto k = numeric_suffix(id, "C")) return Var::constant(*k);
  if (auto k = numeric_suffix(id, "a")) return Var::ansatz(*k);
  if (ends_with(id, "_dot")) {
    std::string_view base = id.substr(0, id.size() - 4);
    if (auto i = position_of(states_, base)) return Var::dot_state(*i);
    if (auto j = position_of(controls_, base)) return Var::dot_control(*j);
    if (auto k = numeric_suffix(base, "psi")) return Var::dot_costate(*k);
    if (states_.empty() && controls_.empty()) {
      if (auto i = numeric_suffix(base, "x")) return Var::dot_state(*i);
      if (auto j = numeric_suffix(base, "u")) return Var::dot_control(*j);
    }
  }
  // Default-named tables resolve x<i>/u<j> directly.
  if (states_.empty() && controls_.empty()) {
    if (auto i = numeric_suffix(id, "x")) return Var::state(*i);
    if (auto j = numeric_suffix(id, "u")) return Var::control(*j);
  }
  return std::nullopt;
}

bool SymbolTable::is_reserved(std::string_view id) {
  return id == "t" || id == "psi" || id == "psi0" || numeric_suffix(id, "psi") || numeric_suffix(id, "C") ||
         numeric_suffix(id, "a") || ends_with(id, "_dot");
}

std::string render(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

std::string render(const Poly& p, const SymbolTable& symbols) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (m.empty() || mag != 1) {
      out += render(mag);
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) out += "*";
      out += symbols.name(v);
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

std::string render(const Expr& e, const SymbolTable& symbols) {
  if (e.is_polynomial()) return render(e.numerator(), symbols);
  return "(" + render(e.numerator(), symbols) + ")/(" + render(e.denominator(), symbols) + ")";
}

}  // namespace ocsym
