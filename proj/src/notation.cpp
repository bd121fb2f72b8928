#include "lmo/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lmo/error.hpp"

namespace lmo {

namespace {

const char* const kEmpty = "∅";

int rot(int slot, int k) { return 3 * (slot / 3) + (slot % 3 + k) % 3; }

std::string general_form(const RawDiagram& d) {
  std::ostringstream out;
  out << "graph{";
  for (int v = 0; v < d.vertex_count; ++v) {
    out << 'v' << v + 1 << ":(" << 3 * v + 1 << ',' << 3 * v + 2 << ',' << 3 * v + 3 << ");";
  }
  out << "edges{";
  bool first = true;
  for (int s = 0; s < 3 * d.vertex_count; ++s) {
    const int m = d.mate[s];
    if (d.is_leg(m) || m < s) continue;
    if (!first) out << ';';
    first = false;
    out << s + 1 << '-' << m + 1;
  }
  out << "};legs{";
  first = true;
  for (int s = 0; s < 3 * d.vertex_count; ++s) {
    const int m = d.mate[s];
    if (!d.is_leg(m)) continue;
    if (!first) out << ';';
    first = false;
    out << s + 1 << '=' << d.color_of(m).to_string();
  }
  out << "}}";
  return out.str();
}

// Slot of vertex v joined to a leg, or -1 / the first one.
int leg_slot(const RawDiagram& d, int v) {
  for (int k = 0; k < 3; ++k)
    if (d.is_leg(d.mate[3 * v + k])) return 3 * v + k;
  return -1;
}

}  // namespace

std::pair<std::string, int> format_diagram(DiagramId id) {
  const DiagramInfo& info = diagram_info(id);
  const RawDiagram& d = info.rep;
  auto col = [&](int slot) { return d.color_of(d.mate[slot]).to_string(); };
  const int n = d.vertex_count;
  const int legs = d.leg_count();
  if (n == 0) {
    return {"strut(" + d.leg_colors[0].to_string() + "," + d.leg_colors[1].to_string() + ")", 1};
  }
  if (n == 1) return {"Y(" + col(0) + "," + col(1) + "," + col(2) + ")", 1};
  if (n == 2 && legs == 4) {
    int a = -1;
    for (int s = 0; s < 3; ++s)
      if (!d.is_leg(d.mate[s])) a = s;
    const int b = d.mate[a];
    return {"H(" + col(rot(a, 1)) + "," + col(rot(a, 2)) + "|" + col(rot(b, 1)) + "," +
                col(rot(b, 2)) + ")",
            1};
  }
  if (n == 2 && legs == 2) {
    // bubble(a,b): u = (a, p, q), v = (b, q', p').
    const int la = leg_slot(d, 0), lb = leg_slot(d, 1);
    const int sign = d.mate[rot(la, 1)] == rot(lb, 2) ? 1 : -1;
    return {"bubble(" + col(la) + "," + col(lb) + ")", sign};
  }
  if (n == 2 && legs == 0) {
    // theta: u = (x, y, z), v = (x', z', y').
    const int x = d.mate[0];
    const int sign = d.mate[2] == rot(x, 1) ? 1 : -1;
    return {"theta", sign};
  }
  return {general_form(d), 1};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  Color color() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view(",)|};").find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a color");
    try {
      return Color::parse(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // Returns false for the empty diagram.
  bool component(RawDiagram& out) {
    if (accept(kEmpty) || accept("empty")) return false;
    if (accept("strut(")) {
      Color a = color();
      expect(",");
      Color b = color();
      expect(")");
      out = make_strut(a, b);
    } else if (accept("Y(")) {
      Color a = color();
      expect(",");
      Color b = color();
      expect(",");
      Color c = color();
      expect(")");
      out = make_y(a, b, c);
    } else if (accept("H(")) {
      Color a = color();
      expect(",");
      Color b = color();
      expect("|");
      Color c = color();
      expect(",");
      Color d = color();
      expect(")");
      out = make_h(a, b, c, d);
    } else if (accept("bubble(")) {
      Color a = color();
      expect(",");
      Color b = color();
      expect(")");
      out = make_bubble(a, b);
    } else if (accept("theta")) {
      out = make_theta();
    } else if (accept("graph{")) {
      out = graph();
    } else {
      fail("expected a diagram");
    }
    return true;
  }

  RawDiagram graph() {
    std::vector<std::array<int, 3>> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, Color>> legs;
    const std::size_t start = pos_;
    while (!accept("}")) {
      if (accept("edges{")) {
        while (!accept("}")) {
          int a = integer();
          expect("-");
          int b = integer();
          edges.emplace_back(a, b);
          accept(";");
        }
      } else if (accept("legs{")) {
        while (!accept("}")) {
          int h = integer();
          expect("=");
          legs.emplace_back(h, color());
          accept(";");
        }
      } else {
        expect("v");
        integer();
        expect(":(");
        std::array<int, 3> v{};
        for (int k = 0; k < 3; ++k) {
          if (k > 0) expect(",");
          v[k] = integer();
        }
        expect(")");
        vertices.push_back(v);
      }
      accept(";");
      if (at_end()) fail("unterminated graph");
    }
    RawDiagram d;
    d.vertex_count = static_cast<int>(vertices.size());
    std::map<int, int> slot_of;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (int k = 0; k < 3; ++k)
        if (!slot_of.emplace(vertices[v][k], static_cast<int>(3 * v + k)).second)
          throw ParseError("half-edge listed twice", start);
    d.mate.assign(3 * d.vertex_count + legs.size(), -1);
    auto slot = [&](int h) {
      auto it = slot_of.find(h);
      if (it == slot_of.end()) throw ParseError("unknown half-edge " + std::to_string(h), start);
      return it->second;
    };
    auto join = [&](int a, int b) {
      if (d.mate[a] >= 0 || d.mate[b] >= 0 || a == b) throw ParseError("half-edge used twice", start);
      d.mate[a] = b;
      d.mate[b] = a;
    };
    for (auto [a, b] : edges) join(slot(a), slot(b));
    for (std::size_t i = 0; i < legs.size(); ++i) {
      d.leg_colors.push_back(legs[i].second);
      join(slot(legs[i].first), 3 * d.vertex_count + static_cast<int>(i));
    }
    for (int m : d.mate)
      if (m < 0) throw ParseError("dangling half-edge", start);
    return d;
  }

  Rational coefficient() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  Series series(int max_ideg) {
    Series out(max_ideg);
    if (accept("0") && at_end()) return out;
    pos_ = 0;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!accept("+") && !first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coef = 1;
      skip_space();
      bool need_monomial = true;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coef = coefficient();
        need_monomial = accept("*");
      }
      std::vector<RawDiagram> parts;
      if (need_monomial) {
        do {
          RawDiagram d;
          if (component(d)) parts.push_back(std::move(d));
        } while (accept("|"));
      }
      try {
        out.add_raw(disjoint_union(parts), sign * coef);
      } catch (const InvariantError& e) {
        fail(e.what());
      }
    }
    return out;
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawDiagram parse_diagram(std::string_view text) {
  Parser p(text);
  RawDiagram d;
  if (!p.component(d)) throw ParseError("the empty diagram is not connected", 0);
  if (!p.at_end()) p.fail("trailing input");
  try {
    d.validate();
  } catch (const InvariantError& e) {
    throw ParseError(e.what(), 0);
  }
  return d;
}

std::string format_series(const Series& s) {
  if (s.is_zero()) return "0";
  struct Item {
    int ideg;
    std::string text;
    Rational coef;
  };
  std::vector<Item> items;
  for (const auto& [m, c] : s.terms()) {
    std::vector<std::string> parts;
    Rational coef = c;
    for (DiagramId id : m) {
      auto [t, sign] = format_diagram(id);
      parts.push_back(std::move(t));
      coef *= sign;
    }
    std::sort(parts.begin(), parts.end());
    std::string text;
    for (const auto& p : parts) text += (text.empty() ? "" : "|") + p;
    if (text.empty()) text = kEmpty;
    items.push_back({monomial_ideg(m), std::move(text), coef});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.ideg, a.text) < std::tie(b.ideg, b.text);
  });
  std::string out;
  for (const auto& it : items) {
    const bool negative = it.coef < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(Rational(abs(it.coef))) + "*" + it.text;
  }
  return out;
}

Series parse_series(std::string_view text, int max_ideg) {
  return Parser(text).series(max_ideg);
}

}  // namespace lmo
