#include "lmo/coblang.hpp"

#include <cctype>

#include "lmo/error.hpp"

namespace lmo {

namespace {

// Returns the end of the word starting at pos, or npos.
std::size_t scan_word(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return std::string_view::npos;
  if (s[pos] == '.') return pos + 1;
  if (s[pos] != '(') return std::string_view::npos;
  std::size_t mid = scan_word(s, pos + 1);
  if (mid == std::string_view::npos) return mid;
  std::size_t end = scan_word(s, mid);
  if (end == std::string_view::npos || end >= s.size() || s[end] != ')') return std::string_view::npos;
  return end + 1;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Operator letter 'o' or 'x' standing alone.
  bool at_operator(char op) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != op) return false;
    std::size_t next = pos_ + 1;
    return next >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[next])) || s_[next] == '_');
  }

  ExprPtr binary(CobExpr::Kind kind, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<CobExpr>();
    e->kind = kind;
    e->begin = l->begin;
    e->end = r->end;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_operator('o')) {
      ++pos_;
      e = binary(CobExpr::Kind::Compose, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = atom();
    while (at_operator('x')) {
      ++pos_;
      e = binary(CobExpr::Kind::Tensor, e, atom());
    }
    return e;
  }

  std::string word() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ']') return "";
    std::string out;
    // Words may contain spaces; strip them while scanning.
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      char ch = s_[pos_];
      if (ch == '.' || ch == '(' || ch == ')') {
        if (ch == '(') ++depth;
        if (ch == ')') {
          if (depth == 0) break;
          --depth;
        }
        out += ch;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        break;
      }
      ++pos_;
      if (depth == 0 && !out.empty()) break;
    }
    if (!is_word(out)) {
      pos_ = start;
      fail("malformed word");
    }
    return out;
  }

  void expect(char ch) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  ExprPtr atom() {
    skip();
    auto e = std::make_shared<CobExpr>();
    e->begin = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (s_[pos_] == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      inner->begin = e->begin;
      inner->end = pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name == "v" && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) name += s_[pos_++];
    if (name.empty()) fail("expected a generator, id[...] or '('");
    if (name == "id") {
      expect('[');
      e->kind = CobExpr::Kind::Id;
      e->word = word();
      expect(']');
    } else if (name == "P" || name == "Pinv") {
      e->kind = CobExpr::Kind::P;
      e->inverted = name == "Pinv";
      expect('[');
      e->u = word();
      expect(',');
      e->v = word();
      expect(',');
      e->w = word();
      expect(']');
      if (e->u.empty() || e->v.empty() || e->w.empty()) {
        pos_ = start;
        fail("P needs nonempty words");
      }
    } else {
      static const char* const kGens[] = {"psi", "psi_inv", "mu", "eta", "delta", "eps",
                                          "s",   "s_inv",   "v+", "v-",  "Y",     "c"};
      bool known = false;
      for (const char* g : kGens) known = known || name == g;
      if (!known) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      e->kind = CobExpr::Kind::Gen;
      e->name = name;
    }
    e->end = pos_;
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_word(std::string_view text) {
  return text.empty() || scan_word(text, 0) == text.size();
}

int word_length(std::string_view word) {
  int n = 0;
  for (char ch : word) n += ch == '.';
  return n;
}

std::string tensor_words(const std::string& u, const std::string& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  return "(" + u + v + ")";
}

std::string show_word(const std::string& word) { return word.empty() ? "∅" : word; }

std::pair<std::string, std::string> generator_words(std::string_view name) {
  if (name == "psi" || name == "psi_inv") return {"(..)", "(..)"};
  if (name == "mu") return {"(..)", "."};
  if (name == "eta" || name == "v+" || name == "v-") return {"", "."};
  if (name == "delta") return {".", "(..)"};
  if (name == "eps") return {".", ""};
  if (name == "s" || name == "s_inv") return {".", "."};
  if (name == "Y") return {"((..).)", ""};
  if (name == "c") return {"", "(..)"};
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

void typecheck(CobExpr& e) {
  switch (e.kind) {
    case CobExpr::Kind::Gen:
      std::tie(e.top, e.bottom) = generator_words(e.name);
      break;
    case CobExpr::Kind::Id:
      e.top = e.bottom = e.word;
      break;
    case CobExpr::Kind::P: {
      const std::string left = tensor_words(e.u, tensor_words(e.v, e.w));
      const std::string right = tensor_words(tensor_words(e.u, e.v), e.w);
      e.top = e.inverted ? right : left;
      e.bottom = e.inverted ? left : right;
      break;
    }
    case CobExpr::Kind::Compose:
      typecheck(*e.left);
      typecheck(*e.right);
      if (e.left->top != e.right->bottom)
        throw TypeError("word mismatch at position " + std::to_string(e.left->begin) + ": '" +
                        to_string(*e.left) + "' has top word " + show_word(e.left->top) + " but '" +
                        to_string(*e.right) + "' has bottom word " + show_word(e.right->bottom));
      e.top = e.right->top;
      e.bottom = e.left->bottom;
      break;
    case CobExpr::Kind::Tensor:
      typecheck(*e.left);
      typecheck(*e.right);
      e.top = tensor_words(e.left->top, e.right->top);
      e.bottom = tensor_words(e.left->bottom, e.right->bottom);
      break;
  }
  e.typed = true;
}

std::string table_name(const CobExpr& e) {
  if (e.kind == CobExpr::Kind::P)
    return std::string(e.inverted ? "Pinv" : "P") + "[" + e.u + "," + e.v + "," + e.w + "]";
  return e.name;
}

std::string to_string(const CobExpr& e) {
  switch (e.kind) {
    case CobExpr::Kind::Gen:
    case CobExpr::Kind::P:
      return table_name(e);
    case CobExpr::Kind::Id:
      return "id[" + e.word + "]";
    case CobExpr::Kind::Compose:
      return "(" + to_string(*e.left) + " o " + to_string(*e.right) + ")";
    case CobExpr::Kind::Tensor:
      return "(" + to_string(*e.left) + " x " + to_string(*e.right) + ")";
  }
  return "";
}

ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

namespace {

TsElement lookup(const CobExpr& e, const GeneratorTable& table) {
  const std::string name = table_name(e);
  if (table.has(name)) return table.value_of(name);
  if (e.kind == CobExpr::Kind::P) {
    // The generic entry applies to every word triple only when it is trivial.
    const std::string generic = e.inverted ? "Pinv" : "P";
    const int n = word_length(e.top);
    if (table.has(generic)) {
      TsElement p = table.value_of(generic);
      if (p == identity(3, table.max_ideg)) return identity(n, table.max_ideg);
      if (n == 3) return p;
    }
    throw DomainError("the table has no value for " + name);
  }
  throw DomainError("the table has no value for " + name);
}

TsElement eval(const CobExpr& e, const GeneratorTable& table, int d) {
  switch (e.kind) {
    case CobExpr::Kind::Id:
      return identity(word_length(e.word), d);
    case CobExpr::Kind::Gen:
    case CobExpr::Kind::P: {
      TsElement v = lookup(e, table);
      v.y = v.y.truncated(d);
      return v;
    }
    case CobExpr::Kind::Compose:
      return compose(eval(*e.left, table, d), eval(*e.right, table, d));
    case CobExpr::Kind::Tensor:
      return tensor(eval(*e.left, table, d), eval(*e.right, table, d));
  }
  throw DomainError("bad expression node");
}

StrutMatrix lk(const CobExpr& e, const GeneratorTable& table) {
  switch (e.kind) {
    case CobExpr::Kind::Id:
      return identity(word_length(e.word), 0).w;
    case CobExpr::Kind::Gen:
    case CobExpr::Kind::P:
      return lookup(e, table).w;
    case CobExpr::Kind::Compose:
      return compose_linking(lk(*e.left, table), lk(*e.right, table), word_length(e.right->top),
                             word_length(e.left->top), word_length(e.left->bottom));
    case CobExpr::Kind::Tensor:
      return tensor_linking(lk(*e.left, table), lk(*e.right, table), word_length(e.left->top),
                            word_length(e.left->bottom));
  }
  throw DomainError("bad expression node");
}

}  // namespace

TsElement evaluate(CobExpr& e, const GeneratorTable& table, int max_ideg) {
  if (max_ideg < 0) max_ideg = table.max_ideg;
  if (max_ideg > table.max_ideg)
    throw DomainError("requested i-deg " + std::to_string(max_ideg) + " exceeds the table's " +
                      std::to_string(table.max_ideg));
  if (!e.typed) typecheck(e);
  return eval(e, table, max_ideg);
}

StrutMatrix lk_only(CobExpr& e, const GeneratorTable& table) {
  if (!e.typed) typecheck(e);
  return lk(e, table);
}

TsElement evaluate(std::string_view text, const GeneratorTable& table, int max_ideg) {
  ExprPtr e = parse_expr(text);
  return evaluate(*e, table, max_ideg);
}

}  // namespace lmo
