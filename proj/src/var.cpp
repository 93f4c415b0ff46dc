#include "ocsym/var.hpp"

#include <stdexcept>

namespace ocsym {

// index layout: slot (3 bits) | slot index (9 bits) | derivative kind (4 bits) | derivative index (16 bits)
namespace {

constexpr std::uint32_t kDerivNone = 0;

std::uint32_t deriv_code(const Var& wrt) {
  switch (wrt.kind) {
    case VarKind::Time: return 1;
    case VarKind::State: return 2;
    case VarKind::Control: return 3;
    case VarKind::Costate: return 4;
    default: throw std::invalid_argument("jet derivative must be taken in t, x, u or psi");
  }
}

}  // namespace

Var Var::jet(GeneratorSlot slot, std::uint32_t slot_index) {
  if (slot_index >= (1u << 9)) throw std::out_of_range("jet slot index too large");
  std::uint32_t code = (static_cast<std::uint32_t>(slot) << 29) | (slot_index << 20) | (kDerivNone << 16);
  return {VarKind::Jet, code, {}};
}

Var Var::jet(GeneratorSlot slot, std::uint32_t slot_index, const Var& wrt) {
  if (slot_index >= (1u << 9) || wrt.index >= (1u << 16)) throw std::out_of_range("jet index too large");
  std::uint32_t code = (static_cast<std::uint32_t>(slot) << 29) | (slot_index << 20) |
                       (deriv_code(wrt) << 16) | wrt.index;
  return {VarKind::Jet, code, {}};
}

JetInfo decode_jet(const Var& v) {
  if (v.kind != VarKind::Jet) throw std::invalid_argument("not a jet symbol");
  JetInfo info{};
  info.slot = static_cast<GeneratorSlot>(v.index >> 29);
  info.slot_index = (v.index >> 20) & 0x1ffu;
  std::uint32_t dk = (v.index >> 16) & 0xfu;
  std::uint32_t di = v.index & 0xffffu;
  info.has_derivative = dk != kDerivNone;
  switch (dk) {
    case 1: info.wrt = Var::time(); break;
    case 2: info.wrt = Var::state(di); break;
    case 3: info.wrt = Var::control(di); break;
    case 4: info.wrt = Var::costate(di); break;
    default: break;
  }
  return info;
}

}  // namespace ocsym
