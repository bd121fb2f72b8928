#include "lmo/color.hpp"

#include <cctype>
#include <charconv>

#include "lmo/error.hpp"

namespace lmo {
namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Color Color::minus(int index) {
  if (index < 1) throw InvariantError("color index must be >= 1");
  return Color(ColorKind::Minus, static_cast<std::uint64_t>(index));
}

Color Color::plus(int index) {
  if (index < 1) throw InvariantError("color index must be >= 1");
  return Color(ColorKind::Plus, static_cast<std::uint64_t>(index));
}

Color Color::star(int index) {
  if (index < 1) throw InvariantError("color index must be >= 1");
  return Color(ColorKind::Star, static_cast<std::uint64_t>(index));
}

Color Color::free(std::string_view name) {
  if (name.empty() || name.size() > kMaxNameLength || !is_name_start(name[0]))
    throw InvariantError("invalid color symbol '" + std::string(name) + "'");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < kMaxNameLength; ++i) {
    key <<= 8;
    if (i < name.size()) {
      if (!is_name_char(name[i])) throw InvariantError("invalid color symbol '" + std::string(name) + "'");
      key |= static_cast<unsigned char>(name[i]);
    }
  }
  return Color(ColorKind::Free, key);
}

Color Color::hole() { return Color(ColorKind::Hole, 0); }

Color Color::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty color", 0);
  char last = text.back();
  if (last == '+' || last == '-' || last == '*') {
    std::string_view digits = text.substr(0, text.size() - 1);
    int index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || index < 1)
      throw ParseError("invalid color '" + std::string(text) + "'", 0);
    if (last == '+') return plus(index);
    if (last == '-') return minus(index);
    return star(index);
  }
  try {
    return free(text);
  } catch (const InvariantError& e) {
    throw ParseError(e.what(), 0);
  }
}

int Color::index() const {
  if (!indexed()) throw InvariantError("color " + to_string() + " has no index");
  return static_cast<int>(key_);
}

std::string Color::name() const {
  if (kind_ != ColorKind::Free) return to_string();
  std::string out;
  for (int shift = 8 * static_cast<int>(kMaxNameLength - 1); shift >= 0; shift -= 8) {
    char c = static_cast<char>((key_ >> shift) & 0xff);
    if (c == 0) break;
    out.push_back(c);
  }
  return out;
}

Color Color::with_kind(ColorKind kind) const {
  if (!indexed() || kind > ColorKind::Star) throw InvariantError("with_kind on non-indexed color");
  return Color(kind, key_);
}

std::string Color::to_string() const {
  switch (kind_) {
    case ColorKind::Minus: return std::to_string(key_) + "-";
    case ColorKind::Plus: return std::to_string(key_) + "+";
    case ColorKind::Star: return std::to_string(key_) + "*";
    case ColorKind::Free: return name();
    case ColorKind::Hole: return "?";
  }
  return "?";
}

std::string to_string(const ColorMultiset& colors) {
  std::string out = "{";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += ",";
    out += colors[i].to_string();
  }
  return out + "}";
}

std::vector<Color> color_range(ColorKind kind, int n) {
  std::vector<Color> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    switch (kind) {
      case ColorKind::Minus: out.push_back(Color::minus(i)); break;
      case ColorKind::Plus: out.push_back(Color::plus(i)); break;
      case ColorKind::Star: out.push_back(Color::star(i)); break;
      default: throw InvariantError("color_range needs an indexed kind");
    }
  }
  return out;
}

}  // namespace lmo
