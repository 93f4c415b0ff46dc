#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ocsym {

// Declaration order is the global variable order used by the monomial order.
enum class VarKind : std::uint8_t {
  Time,
  State,
  Control,
  CostateZero,
  Costate,
  DotState,
  DotControl,
  DotCostate,
  FreeConstant,
  Param,
  AnsatzCoeff,
  Jet,
  Opaque,
};

/// Slot of an unknown generator function inside a jet symbol.
enum class GeneratorSlot : std::uint8_t { T, X, U, Psi, G };

/// An indeterminate. Indexed kinds are 1-based; Param and Opaque are named.
/// Jet symbols stand for an unknown generator function or one of its first
/// partial derivatives, packed into `index`.
struct Var {
  VarKind kind = VarKind::Time;
  std::uint32_t index = 0;
  std::string name;

  static Var time() { return {VarKind::Time, 0, {}}; }
  static Var state(std::uint32_t i) { return {VarKind::State, i, {}}; }
  static Var control(std::uint32_t j) { return {VarKind::Control, j, {}}; }
  static Var costate_zero() { return {VarKind::CostateZero, 0, {}}; }
  static Var costate(std::uint32_t i) { return {VarKind::Costate, i, {}}; }
  static Var dot_state(std::uint32_t i) { return {VarKind::DotState, i, {}}; }
  static Var dot_control(std::uint32_t j) { return {VarKind::DotControl, j, {}}; }
  static Var dot_costate(std::uint32_t i) { return {VarKind::DotCostate, i, {}}; }
  static Var constant(std::uint32_t k) { return {VarKind::FreeConstant, k, {}}; }
  static Var ansatz(std::uint32_t k) { return {VarKind::AnsatzCoeff, k, {}}; }
  static Var param(std::string n) { return {VarKind::Param, 0, std::move(n)}; }
  static Var opaque(std::string n) { return {VarKind::Opaque, 0, std::move(n)}; }

  /// Jet for generator `slot`/`slot_index`, differentiated by `wrt` when
  /// `wrt` is a Time/State/Control/Costate variable, or the bare value when
  /// `wrt` is absent.
  static Var jet(GeneratorSlot slot, std::uint32_t slot_index);
  static Var jet(GeneratorSlot slot, std::uint32_t slot_index, const Var& wrt);

  bool is_named() const { return kind == VarKind::Param || kind == VarKind::Opaque; }
  bool is_dotted() const {
    return kind == VarKind::DotState || kind == VarKind::DotControl || kind == VarKind::DotCostate;
  }
  /// t, x, u, psi: the phase-space variables generators may depend on.
  bool is_phase() const {
    return kind == VarKind::Time || kind == VarKind::State || kind == VarKind::Control ||
           kind == VarKind::Costate;
  }

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
  }
};

/// Decoded form of a jet symbol.
struct JetInfo {
  GeneratorSlot slot;
  std::uint32_t slot_index;  // 0 for T and G
  bool has_derivative;
  Var wrt;
};

JetInfo decode_jet(const Var& v);

}  // namespace ocsym
