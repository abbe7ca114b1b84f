#pragma once

#include <stdexcept>
#include <string_view>

namespace f2watch {

enum class Verdict { Good, Zombie };

inline constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::Zombie ? "zombie" : "good";
}

inline Verdict verdict_from_string(std::string_view s) {
  if (s == "zombie") return Verdict::Zombie;
  if (s == "good") return Verdict::Good;
  throw std::invalid_argument("verdict_from_string: expected \"good\" or \"zombie\"");
}

}  // namespace f2watch
