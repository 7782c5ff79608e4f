#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bsmaps {

enum class BaseKind { P, Q };

/// One of the named circle points P_k or Q_k.
struct NamedPoint {
  BaseKind kind = BaseKind::P;
  int index = 1;

  auto operator<=>(const NamedPoint&) const = default;
  std::string to_string() const;
};

/// T_{l_1} T_{l_2} ... T_{l_m} applied to a named base point.
/// letters[0] is outermost (applied last).
struct GroupWord {
  std::vector<int> letters;
  NamedPoint base;

  bool operator==(const GroupWord&) const = default;

  /// e.g. "T6T3P1"; the empty word prints as its base.
  std::string to_string() const;
  /// Text of the letters only, e.g. "T6T3".
  std::string letters_string() const;

  /// Accepts "T6T3P1", "T_6 T_3 P_1", "P12".
  static GroupWord parse(std::string_view text);

  /// Shortlex order: length, then letters outermost-first, then base (P before Q, by index).
  static bool shortlex_less(const GroupWord& a, const GroupWord& b);
};

/// T_l ∘ w.
GroupWord prepend(int letter, const GroupWord& w);
/// outer ∘ w where outer lists letters outermost-first.
GroupWord prepend(const std::vector<int>& outer, const GroupWord& w);

}  // namespace bsmaps
