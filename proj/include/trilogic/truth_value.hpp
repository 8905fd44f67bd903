#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trilogic {

/// The three semantic values. The enumerator order is the canonical value
/// order t < f < b used for every enumeration and tie-break in the library.
enum class TruthValue : std::uint8_t { t = 0, f = 1, b = 2 };

inline constexpr std::array<TruthValue, 3> all_values = {TruthValue::t, TruthValue::f, TruthValue::b};
inline constexpr std::array<TruthValue, 2> classical_values = {TruthValue::t, TruthValue::f};

constexpr std::size_t index(TruthValue v) noexcept { return static_cast<std::size_t>(v); }

/// D = {t, b}; f is the only non-designated value.
constexpr bool is_designated(TruthValue v) noexcept { return v != TruthValue::f; }

constexpr bool is_classical(TruthValue v) noexcept { return v != TruthValue::b; }

constexpr char to_char(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::t: return 't';
    case TruthValue::f: return 'f';
    case TruthValue::b: return 'b';
  }
  return '?';
}

constexpr std::optional<TruthValue> value_from_char(char c) noexcept {
  switch (c) {
    case 't': return TruthValue::t;
    case 'f': return TruthValue::f;
    case 'b': return TruthValue::b;
    default: return std::nullopt;
  }
}

inline TruthValue parse_value(const std::string& text) {
  if (text.size() == 1) {
    if (auto v = value_from_char(text[0])) return *v;
  }
  throw std::invalid_argument("not a truth value (expected t, f or b): '" + text + "'");
}

inline std::ostream& operator<<(std::ostream& os, TruthValue v) { return os << to_char(v); }

}  // namespace trilogic
