#include "lmo/rational.hpp"

#include <cctype>

#include "lmo/error.hpp"

namespace lmo {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  bool slash = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      ++digits;
    } else if (ch == '/' && !slash && digits > 0) {
      slash = true;
      digits = 0;
    } else {
      throw ParseError("invalid rational '" + std::string(text) + "'", i);
    }
  }
  if (digits == 0) throw ParseError("invalid rational '" + std::string(text) + "'", text.size());
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace lmo
