#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "lmo/generators.hpp"
#include "lmo/strut_matrix.hpp"
#include "lmo/tscat.hpp"

namespace lmo {

/// Parenthesized words in one letter, stored as text: "" (empty), ".", "(..)", "((..).)", ...
bool is_word(std::string_view text);
int word_length(std::string_view word);
/// (u v), with the empty word as unit.
std::string tensor_words(const std::string& u, const std::string& v);
/// "∅" for the empty word.
std::string show_word(const std::string& word);

/// Words of a generator name (top, bottom). Throws DomainError for unknown names.
std::pair<std::string, std::string> generator_words(std::string_view name);

struct CobExpr {
  enum class Kind { Gen, Id, Compose, Tensor, P };
  Kind kind = Kind::Gen;
  std::string name;  // Gen
  std::string word;  // Id
  std::string u, v, w;
  bool inverted = false;  // P
  std::shared_ptr<CobExpr> left, right;
  std::size_t begin = 0, end = 0;  // source span

  // Set by typecheck.
  std::string top, bottom;
  bool typed = false;
};
using ExprPtr = std::shared_ptr<CobExpr>;

/// expr := expr 'o' term | term; term := term 'x' atom | atom;
/// atom := GEN | id[w] | P[u,v,w] | Pinv[u,v,w] | '(' expr ')'.
ExprPtr parse_expr(std::string_view text);
/// Annotates every node with its words; "a o b" needs top(a) = bottom(b).
/// Throws TypeError naming both words.
void typecheck(CobExpr& e);
/// Table name used for a generator or P node.
std::string table_name(const CobExpr& e);
std::string to_string(const CobExpr& e);

/// Functor value; max_ideg < 0 means the table's. Typechecks if needed.
TsElement evaluate(CobExpr& e, const GeneratorTable& table, int max_ideg = -1);
/// Linking matrix only, by the block formula.
StrutMatrix lk_only(CobExpr& e, const GeneratorTable& table);

/// parse + typecheck + evaluate.
TsElement evaluate(std::string_view text, const GeneratorTable& table, int max_ideg = -1);

}  // namespace lmo
