#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lmo {

/// Order of kinds is significant: it fixes the total order on colors.
/// `Hole` marks an unfinished slot during sector enumeration and never appears in user data.
enum class ColorKind : std::uint8_t { Minus = 0, Plus = 1, Star = 2, Free = 3, Hole = 4 };

/// Leg color: i-, i+, i* (i >= 1) or a free symbol of at most 7 identifier characters.
///
/// Free names are packed big-endian into the key, so comparing keys compares names
/// lexicographically; the total order is (kind, index-or-name).
class Color {
 public:
  static constexpr std::size_t kMaxNameLength = 7;

  static Color minus(int index);
  static Color plus(int index);
  static Color star(int index);
  static Color free(std::string_view name);
  static Color hole();
  /// Rebuilds a color from (kind, key()); used when decoding canonical codes.
  static Color from_key(ColorKind kind, std::uint64_t key) { return Color(kind, key); }

  /// Parses "3+", "2-", "1*" or a bare symbol.
  static Color parse(std::string_view text);

  ColorKind kind() const noexcept { return kind_; }
  bool indexed() const noexcept { return kind_ <= ColorKind::Star; }
  int index() const;
  std::string name() const;
  std::uint64_t key() const noexcept { return key_; }

  /// Same index, different kind.
  Color with_kind(ColorKind kind) const;

  std::string to_string() const;

  auto operator<=>(const Color&) const = default;

 private:
  Color(ColorKind kind, std::uint64_t key) : kind_(kind), key_(key) {}

  ColorKind kind_;
  std::uint64_t key_;
};

/// Sorted multiset of colors.
using ColorMultiset = std::vector<Color>;

std::string to_string(const ColorMultiset& colors);

struct ColorHash {
  std::size_t operator()(const Color& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.key() * 8 + static_cast<std::uint64_t>(c.kind()));
  }
};

/// Colors {1^kind, ..., n^kind}.
std::vector<Color> color_range(ColorKind kind, int n);

}  // namespace lmo
