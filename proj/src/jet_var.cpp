#include "difinv/jet_var.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace difinv {

namespace {

constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "k1", "k2", "k3", "eps", "alpha", "beta", "gamma", "delta", "c"};

constexpr std::array<std::string_view, kParamCount> kParamLatex = {
    "k_1", "k_2", "k_3", "\\varepsilon", "\\alpha", "\\beta", "\\gamma", "\\delta", "c"};

void check_jet(int j, int k) {
  if (j < 0 || j > JetVar::kMaxJetIndex || k < 0 || k > JetVar::kMaxJetOrder) {
    throw std::out_of_range("jet index/order out of range");
  }
}

std::string ascii_suffix(int k) {
  if (k <= 2) return std::string(static_cast<std::size_t>(k), '\'');
  return "^(" + std::to_string(k) + ")";
}

std::string latex_suffix(int k) {
  if (k <= 2) return std::string(static_cast<std::size_t>(k), '\'');
  return "^{(" + std::to_string(k) + ")}";
}

// Parses a trailing jet suffix: "", "'", "''", ... or "^(K)".
std::optional<int> parse_suffix(std::string_view s) {
  if (s.empty()) return 0;
  if (s.front() == '\'') {
    for (char ch : s) {
      if (ch != '\'') return std::nullopt;
    }
    return static_cast<int>(s.size());
  }
  if (s.size() >= 4 && s.substr(0, 2) == "^(" && s.back() == ')') {
    auto digits = s.substr(2, s.size() - 3);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return k;
  }
  return std::nullopt;
}

}  // namespace

std::string_view param_name(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamNames.size(); ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  return std::nullopt;
}

JetVar JetVar::coef(int j, int k) {
  check_jet(j, k);
  return JetVar(pack(VarKind::Coef, static_cast<unsigned>(j), static_cast<unsigned>(k), 0));
}

JetVar JetVar::comp_coef(int j, int k) {
  check_jet(j, k);
  return JetVar(
      pack(VarKind::CompCoef, static_cast<unsigned>(j), static_cast<unsigned>(k), 0));
}

JetVar JetVar::xi(int k) {
  check_jet(0, k);
  return JetVar(pack(VarKind::XiJet, 0, static_cast<unsigned>(k), 0));
}

JetVar JetVar::eta(int k) {
  check_jet(0, k);
  return JetVar(pack(VarKind::EtaJet, 0, static_cast<unsigned>(k), 0));
}

bool JetVar::is_jet() const {
  switch (kind()) {
    case VarKind::Coef:
    case VarKind::CompCoef:
    case VarKind::XiJet:
    case VarKind::EtaJet:
      return true;
    default:
      return false;
  }
}

JetVar JetVar::with_order(int k) const {
  if (!is_jet()) throw std::logic_error("with_order on a non-jet variable");
  check_jet(index(), k);
  return JetVar(pack(kind(), static_cast<unsigned>(index()), static_cast<unsigned>(k), 0));
}

std::string JetVar::name() const {
  switch (kind()) {
    case VarKind::Indep:
      return "x";
    case VarKind::Z:
      return "z";
    case VarKind::Param:
      return std::string(param_name(param_id()));
    case VarKind::XiJet:
      return "xi" + ascii_suffix(order());
    case VarKind::EtaJet:
      return "eta" + ascii_suffix(order());
    case VarKind::Coef:
      return "a" + std::to_string(index()) + ascii_suffix(order());
    case VarKind::CompCoef:
      return "abar" + std::to_string(index()) + ascii_suffix(order());
  }
  return "?";
}

std::string JetVar::latex() const {
  switch (kind()) {
    case VarKind::Indep:
      return "x";
    case VarKind::Z:
      return "z";
    case VarKind::Param:
      return std::string(kParamLatex[static_cast<std::size_t>(param_id())]);
    case VarKind::XiJet:
      return "\\xi" + latex_suffix(order());
    case VarKind::EtaJet:
      return "\\eta" + latex_suffix(order());
    case VarKind::Coef:
      return "a_{" + std::to_string(index()) + "}" + latex_suffix(order());
    case VarKind::CompCoef:
      return "\\bar{a}_{" + std::to_string(index()) + "}" + latex_suffix(order());
  }
  return "?";
}

std::optional<JetVar> jet_var_from_name(std::string_view name) {
  if (name == "x") return JetVar::indep();
  if (name == "z") return JetVar::z();
  if (auto p = param_from_name(name)) return JetVar::param(*p);

  auto split_head = [&](std::string_view head) -> std::optional<std::string_view> {
    if (name.substr(0, head.size()) != head) return std::nullopt;
    return name.substr(head.size());
  };
  auto parse_indexed = [](std::string_view rest, bool composed) -> std::optional<JetVar> {
    std::size_t n = 0;
    while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
    if (n == 0 || rest[0] == '0') return std::nullopt;
    int j = 0;
    std::from_chars(rest.data(), rest.data() + n, j);
    auto k = parse_suffix(rest.substr(n));
    if (!k || j > JetVar::kMaxJetIndex || *k > JetVar::kMaxJetOrder) return std::nullopt;
    return composed ? JetVar::comp_coef(j, *k) : JetVar::coef(j, *k);
  };

  if (auto rest = split_head("abar")) {
    if (auto v = parse_indexed(*rest, true)) return v;
  }
  if (auto rest = split_head("a")) {
    if (auto v = parse_indexed(*rest, false)) return v;
  }
  if (auto rest = split_head("xi")) {
    if (auto k = parse_suffix(*rest); k && *k <= JetVar::kMaxJetOrder) return JetVar::xi(*k);
  }
  if (auto rest = split_head("eta")) {
    if (auto k = parse_suffix(*rest); k && *k <= JetVar::kMaxJetOrder) return JetVar::eta(*k);
  }
  return std::nullopt;
}

}  // namespace difinv
