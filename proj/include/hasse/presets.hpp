#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hasse/description.hpp"
#include "hasse/error.hpp"

namespace hasse {

namespace detail {

struct PresetText {
  std::string_view name;
  std::string_view body;
};

// a = alpha (order 2), b = beta (order 3), a b a = b^2.
inline constexpr std::string_view kS3 = R"(basis 1 b b2 a ab ab2
mul b b = b2
mul b b2 = 1
mul b a = ab2
mul b ab = a
mul b ab2 = ab
mul b2 b = 1
mul b2 b2 = b
mul b2 a = ab
mul b2 ab = ab2
mul b2 ab2 = a
mul a b = ab
mul a b2 = ab2
mul a a = 1
mul a ab = b
mul a ab2 = b2
mul ab b = ab2
mul ab b2 = a
mul ab a = b2
mul ab ab = 1
mul ab ab2 = b
mul ab2 b = a
mul ab2 b2 = ab
mul ab2 a = b
mul ab2 ab = b2
mul ab2 ab2 = 1
)";

// R[T][a, b] with a^2 = 1, b^2 = T b - 1, (ab)^2 = 1; T = b + b^-1 is central.
inline constexpr std::string_view kDihedral = R"(basis 1 b a ab
mul b b = T*b - 1
mul b a = T*a - ab
mul b ab = a
mul a b = ab
mul a a = 1
mul a ab = b
mul ab b = T*ab - a
mul ab a = T - b
mul ab ab = 1
)";

// 2x2 matrix units with 1 = e11 + e22.
inline constexpr std::string_view kMat2 = R"(basis 1 e12 e21 e22
mul e12 e21 = 1 - e22
mul e12 e22 = e12
mul e21 e12 = e22
mul e22 e21 = e21
mul e22 e22 = e22
)";

inline constexpr std::string_view kGauss = R"(basis 1 i
mul i i = -1
)";

inline constexpr std::string_view kC2 = R"(basis 1 s
mul s s = 1
)";

inline constexpr std::string_view kRank1 = "basis 1\n";

inline const std::vector<PresetText>& preset_table() {
  static const std::vector<PresetText> table{
      {"s3", kS3}, {"dihedral", kDihedral}, {"mat2", kMat2}, {"gauss", kGauss}, {"c2", kC2}, {"rank1", kRank1},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : detail::preset_table()) out.emplace_back(p.name);
  return out;
}

// The preset's text with the given base line prepended.
inline std::string preset_text(std::string_view name, const BaseRing& base) {
  for (const auto& p : detail::preset_table())
    if (p.name == name) return "base " + base.name() + "\n" + std::string(p.body);
  throw Error("unknown preset '" + std::string(name) + "'");
}

inline Description preset(std::string_view name, const BaseRing& base) {
  if (name == "dihedral" && base.kind() != BaseRing::Kind::polynomial_ring)
    throw Error("preset 'dihedral' needs a base GF(q)[T]");
  return parse_description(preset_text(name, base));
}

}  // namespace hasse
