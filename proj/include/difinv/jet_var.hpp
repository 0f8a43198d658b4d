#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace difinv {

/// Variable kinds, listed in their position in the fixed total order.
enum class VarKind : std::uint8_t {
  Indep = 0,  // x
  Z = 1,      // z, the new independent variable
  Param = 2,  // group parameters and formal constants (k1, eps, alpha, ...)
  XiJet = 3,  // d^k xi / dz^k
  EtaJet = 4, // d^k eta / dz^k
  Coef = 5,   // d^k a_j / dx^k
  CompCoef = 6,  // (d^k a_j / dx^k) evaluated at x = xi(z)
};

/// Group parameters known to the engine. Parameter ids follow this order.
enum class Param : std::uint8_t {
  K1 = 0,
  K2,
  K3,
  Eps,
  Alpha,
  Beta,
  Gamma,
  Delta,
  C,
};
inline constexpr int kParamCount = 9;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// A symbol of the differential polynomial ring, packed into one word so
/// that the canonical total order is plain integer comparison.
class JetVar {
 public:
  static constexpr int kMaxJetIndex = 255;
  static constexpr int kMaxJetOrder = 4095;

  static JetVar indep() { return JetVar(pack(VarKind::Indep, 0, 0, 0)); }
  static JetVar z() { return JetVar(pack(VarKind::Z, 0, 0, 0)); }
  static JetVar param(Param p) {
    return JetVar(pack(VarKind::Param, 0, 0, static_cast<unsigned>(p)));
  }
  static JetVar coef(int j, int k = 0);
  static JetVar comp_coef(int j, int k = 0);
  static JetVar xi(int k);
  static JetVar eta(int k);

  VarKind kind() const { return static_cast<VarKind>(key_ >> 28); }
  int index() const { return static_cast<int>((key_ >> 20) & 0xFFu); }
  int order() const { return static_cast<int>((key_ >> 8) & 0xFFFu); }
  Param param_id() const { return static_cast<Param>(key_ & 0xFFu); }

  /// True for Coef/CompCoef/XiJet/EtaJet, i.e. variables carrying a jet order.
  bool is_jet() const;

  /// Same variable with its jet order replaced.
  JetVar with_order(int k) const;

  std::uint32_t key() const { return key_; }

  /// ASCII spelling used by the expression syntax: x, z, k1, a3, a3', a3'',
  /// a3^(3), abar4', xi'', eta.
  std::string name() const;
  std::string latex() const;

  friend auto operator<=>(JetVar, JetVar) = default;

 private:
  explicit JetVar(std::uint32_t key) : key_(key) {}
  static std::uint32_t pack(VarKind kind, unsigned j, unsigned k, unsigned p) {
    return (static_cast<std::uint32_t>(kind) << 28) | (j << 20) | (k << 8) | p;
  }

  std::uint32_t key_;
};

/// Parses the spelling produced by JetVar::name(); nullopt if unknown.
std::optional<JetVar> jet_var_from_name(std::string_view name);

}  // namespace difinv

template <>
struct std::hash<difinv::JetVar> {
  std::size_t operator()(difinv::JetVar v) const noexcept {
    return std::hash<std::uint32_t>{}(v.key());
  }
};
