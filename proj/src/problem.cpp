#include "ocsym/problem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "ocsym/errors.hpp"
#include "ocsym/parser.hpp"

namespace ocsym {
namespace {

struct Line {
  int number;
  int value_column;  // 1-based column where the value starts
  std::string key;
  std::string value;
};

std::string trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset = b;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

std::vector<std::string> split_names(const Line& line, std::set<std::string>& seen) {
  std::vector<std::string> names;
  std::istringstream in(line.value);
  std::string name;
  while (in >> name) {
    if (!is_identifier(name)) throw SyntaxError("invalid identifier '" + name + "'", line.number, line.value_column);
    if (SymbolTable::is_reserved(name)) {
      throw SyntaxError("identifier '" + name + "' is reserved", line.number, line.value_column);
    }
    if (!seen.insert(name).second) {
      throw SyntaxError("identifier '" + name + "' declared twice", line.number, line.value_column);
    }
    names.push_back(name);
  }
  return names;
}

Expr parse_at(const Line& line, const SymbolTable& symbols) {
  try {
    return parse_expression(line.value, symbols);
  } catch (const SyntaxError& e) {
    // Re-anchor the column to the file line.
    std::string msg = e.what();
    auto pos = msg.find(": ");
    throw SyntaxError(pos == std::string::npos ? msg : msg.substr(pos + 2), line.number,
                      line.value_column + e.column() - 1);
  }
}

void check_vars(const Expr& e, const OCProblem& p, const std::string& field, bool allow_opaque,
                std::vector<Diagnostic>& out) {
  SymbolTable symbols = p.symbols();
  for (const auto& v : e.variables()) {
    bool ok = false;
    switch (v.kind) {
      case VarKind::Time: ok = true; break;
      case VarKind::State: ok = v.index >= 1 && v.index <= p.n(); break;
      case VarKind::Control: ok = v.index >= 1 && v.index <= p.m(); break;
      case VarKind::Param:
        ok = std::find(p.param_names.begin(), p.param_names.end(), v.name) != p.param_names.end();
        break;
      case VarKind::Opaque: {
        bool declared = std::find(p.opaque_names.begin(), p.opaque_names.end(), v.name) != p.opaque_names.end();
        if (declared && !allow_opaque) {
          out.push_back({"OpaqueNotAllowed", v.name, "opaque symbol '" + v.name + "' may only appear in force"});
          continue;
        }
        ok = declared;
        break;
      }
      default: {
        out.push_back({"ForbiddenSymbol", symbols.name(v), "symbol '" + symbols.name(v) + "' not allowed in " + field});
        continue;
      }
    }
    if (!ok) {
      std::string name = symbols.name(v);
      out.push_back({"UnknownIdentifier", name, "unknown identifier '" + name + "' in " + field});
    }
  }
}

}  // namespace

OCProblem OCProblem::with_dimensions(std::size_t n, std::size_t m) {
  OCProblem p;
  for (std::size_t i = 1; i <= n; ++i) p.state_names.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) p.control_names.push_back("u" + std::to_string(j));
  return p;
}

std::string to_string(Mode mode) { return mode == Mode::Normal ? "normal" : "abnormal"; }

OCProblem parse_problem(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t offset = 0;
    std::string content = trim(raw, offset);
    if (content.empty()) continue;
    auto colon = content.find(':');
    if (colon == std::string::npos) {
      throw SyntaxError("expected 'key: value'", number, static_cast<int>(offset) + 1);
    }
    std::size_t key_offset = 0;
    std::string key = trim(std::string_view(content).substr(0, colon), key_offset);
    std::size_t value_offset = 0;
    std::string value = trim(std::string_view(content).substr(colon + 1), value_offset);
    int value_column = static_cast<int>(offset + colon + 1 + value_offset) + 1;
    lines.push_back({number, value_column, key, value});
    if (end == text.size()) break;
  }

  OCProblem p;
  std::set<std::string> seen_names;
  std::set<std::string> seen_headers;
  std::optional<Line> lagrangian;
  std::vector<Line> phi_lines;
  std::vector<Line> force_lines;

  for (const auto& line : lines) {
    const std::string& key = line.key;
    bool header = key == "states" || key == "controls" || key == "params" || key == "opaque" ||
                  key == "lagrangian" || key == "mode";
    if (header && !seen_headers.insert(key).second) {
      throw SyntaxError("duplicate '" + key + ":' line", line.number, 1);
    }
    if (key == "states") {
      p.state_names = split_names(line, seen_names);
    } else if (key == "controls") {
      p.control_names = split_names(line, seen_names);
    } else if (key == "params") {
      p.param_names = split_names(line, seen_names);
    } else if (key == "opaque") {
      p.opaque_names = split_names(line, seen_names);
    } else if (key == "lagrangian") {
      lagrangian = line;
    } else if (key == "phi") {
      phi_lines.push_back(line);
    } else if (key == "force") {
      force_lines.push_back(line);
    } else if (key == "mode") {
      if (line.value == "normal") {
        p.mode = Mode::Normal;
      } else if (line.value == "abnormal") {
        p.mode = Mode::Abnormal;
      } else {
        throw SyntaxError("mode must be 'normal' or 'abnormal'", line.number, line.value_column);
      }
    } else {
      throw SyntaxError("unknown key '" + key + "'", line.number, 1);
    }
  }

  if (p.state_names.empty()) throw SyntaxError("missing 'states:' line", 0, 1);
  if (p.control_names.empty()) throw SyntaxError("missing 'controls:' line", 0, 1);
  if (!lagrangian) throw SyntaxError("missing 'lagrangian:' line", 0, 1);
  if (phi_lines.size() != p.n()) {
    throw DimensionMismatch("expected " + std::to_string(p.n()) + " 'phi:' lines, found " +
                            std::to_string(phi_lines.size()));
  }
  if (!force_lines.empty() && force_lines.size() != p.n()) {
    throw DimensionMismatch("expected 0 or " + std::to_string(p.n()) + " 'force:' lines, found " +
                            std::to_string(force_lines.size()));
  }

  SymbolTable symbols = p.symbols();
  p.lagrangian = parse_at(*lagrangian, symbols);
  for (const auto& line : phi_lines) p.phi.push_back(parse_at(line, symbols));
  for (const auto& line : force_lines) p.force.push_back(parse_at(line, symbols));

  auto diagnostics = validate(p);
  if (!diagnostics.empty()) {
    const auto& d = diagnostics.front();
    if (d.code == "UnknownIdentifier") throw UnknownIdentifier(d.subject);
    throw SyntaxError(d.message, 0, 1);
  }
  return p;
}

std::vector<Diagnostic> validate(const OCProblem& p) {
  std::vector<Diagnostic> out;
  if (p.n() == 0) out.push_back({"DimensionMismatch", "states", "at least one state is required"});
  if (p.m() == 0) out.push_back({"DimensionMismatch", "controls", "at least one control is required"});
  if (p.phi.size() != p.n()) {
    out.push_back({"DimensionMismatch", "phi",
                   "phi has " + std::to_string(p.phi.size()) + " entries, expected " + std::to_string(p.n())});
  }
  if (!p.force.empty() && p.force.size() != p.n()) {
    out.push_back({"DimensionMismatch", "force",
                   "force has " + std::to_string(p.force.size()) + " entries, expected 0 or " +
                       std::to_string(p.n())});
  }
  check_vars(p.lagrangian, p, "lagrangian", false, out);
  for (const auto& e : p.phi) check_vars(e, p, "phi", false, out);
  for (const auto& e : p.force) check_vars(e, p, "force", true, out);
  return out;
}

}  // namespace ocsym
