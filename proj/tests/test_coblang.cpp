#include <doctest.h>

#include "lmo/checks.hpp"
#include "lmo/coblang.hpp"
#include "lmo/error.hpp"
#include "lmo/notation.hpp"

using namespace lmo;

namespace {

const std::string kCExpr =
    "(mu x mu) o Pinv[(..),.,.] o (P[.,.,.] x id[.]) o (id[.] x delta x id[.]) o (v- x v+ x v-)";

std::size_t parse_error_at(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

TsElement eval(const std::string& text, int d = -1) { return evaluate(text, builtin_degree2(), d); }

}  // namespace

TEST_CASE("words") {
  CHECK(is_word(""));
  CHECK(is_word("((..).)"));
  CHECK_FALSE(is_word("(.)"));
  CHECK_FALSE(is_word(".."));
  CHECK(word_length("((..)(..))") == 4);
  CHECK(tensor_words("", ".") == ".");
  CHECK(tensor_words("(..)", ".") == "((..).)");
  CHECK(all_words(4).size() == 10);
}

TEST_CASE("parser") {
  ExprPtr e = parse_expr("Y o (v+ x v+ x v+)");
  CHECK(e->kind == CobExpr::Kind::Compose);
  CHECK(e->left->name == "Y");
  CHECK(e->right->kind == CobExpr::Kind::Tensor);
  CHECK(e->right->left->kind == CobExpr::Kind::Tensor);
  CHECK(to_string(*e) == "(Y o ((v+ x v+) x v+))");
  CHECK(to_string(*parse_expr("  id[ ( . . ) ]")) == "id[(..)]");
  CHECK(to_string(*parse_expr("id[]")) == "id[]");
  CHECK(parse_expr("id[.]")->kind == CobExpr::Kind::Id);
  // 'o' binds looser than 'x'.
  CHECK(to_string(*parse_expr("mu o eta x id[.]")) == "(mu o (eta x id[.]))");
  CHECK(to_string(*parse_expr("Pinv[(..),.,.]")) == "Pinv[(..),.,.]");
  CHECK(to_string(*parse_expr(kCExpr)).find("delta") != std::string::npos);
  CHECK(parse_error_at("mu o") == 4);
  CHECK(parse_error_at("mu o foo") == 5);
  CHECK(parse_error_at("id[(.)]") == 3);
  CHECK(parse_error_at("P[.,.]") == 5);
  CHECK(parse_error_at("(mu") == 3);
  CHECK(parse_error_at("mu mu") == 3);
}

TEST_CASE("type checking") {
  ExprPtr e = parse_expr("Y o (v+ x v+ x v+)");
  typecheck(*e);
  CHECK(e->top.empty());
  CHECK(e->bottom.empty());
  e = parse_expr("mu o (eta x id[.])");
  typecheck(*e);
  CHECK(e->top == ".");
  CHECK(e->bottom == ".");
  e = parse_expr("P[.,(..),.]");
  typecheck(*e);
  CHECK(e->top == "(.((..).))");
  CHECK(e->bottom == "((.(..)).)");
  CHECK_THROWS_AS(typecheck(*parse_expr("mu o eta")), TypeError);
  // Without re-bracketing the c-expression does not typecheck.
  try {
    typecheck(*parse_expr("(mu x mu) o (id[.] x delta x id[.]) o (v- x v+ x v-)"));
    FAIL("expected a type error");
  } catch (const TypeError& err) {
    const std::string what = err.what();
    CHECK(what.find("((..)(..))") != std::string::npos);
    CHECK(what.find("((.(..)).)") != std::string::npos);
  }
  CHECK_NOTHROW(typecheck(*parse_expr(kCExpr)));
}

TEST_CASE("evaluation") {
  CHECK(eval("id[(..)]") == identity(2, 2));
  for (const std::string& w : all_words(4)) CHECK(eval("id[" + w + "]") == identity(word_length(w), 2));
  CHECK(eval("P[(..),.,.]") == identity(4, 2));
  CHECK(eval("eps") == TsElement{1, 0, {}, Series::constant(2)});
  CHECK(eval("Y o P[.,.,.] o (eta x id[(..)])") == eval("eps x eps"));
  const TsElement c = eval(kCExpr);
  CHECK(c == builtin_degree2().value_of("c"));
  CHECK(c.w.at(Color::minus(1), Color::minus(2)) == -1);
  // Monoidal functor.
  const GeneratorTable& t = builtin_degree2();
  CHECK(eval("mu o psi") == compose(t.value_of("mu"), t.value_of("psi")));
  CHECK(eval("s x v+") == tensor(t.value_of("s"), t.value_of("v+")));
  // Truncation.
  const TsElement p1 = eval("Y o (v+ x v+ x v+)", 1);
  CHECK(p1.max_ideg() == 1);
  CHECK(p1.y == Series::constant(1));
  CHECK_THROWS_AS(eval("eps", 3), DomainError);
}

TEST_CASE("P lookup in user tables") {
  std::string doc = "maxideg=1\ngen P : 3 -> 3\nW { 1-|1+ = 1; 2-|2+ = 1; 3-|3+ = 1 }\nlogY = 1*Y(1-,2-,3+)\n";
  const GeneratorTable t = load_table(doc);
  CHECK(evaluate("P[.,.,.]", t) == t.value_of("P"));
  CHECK_THROWS_AS(evaluate("P[(..),.,.]", t), DomainError);
  CHECK_THROWS_AS(evaluate("Pinv[.,.,.]", t), DomainError);
  const GeneratorTable t2 = load_table(doc + "gen P[(..),.,.] : 4 -> 4\nW { 1-|1+ = 1; 2-|2+ = 1; 3-|3+ = 1; 4-|4+ = 1 }\nlogY = 0\n");
  CHECK(evaluate("P[(..),.,.]", t2) == identity(4, 1));
}

TEST_CASE("linking fast path") {
  const GeneratorTable& t = builtin_degree2();
  for (const std::string& text : expression_corpus()) {
    ExprPtr e = parse_expr(text);
    INFO(text);
    CHECK(lk_only(*e, t) == evaluate(*e, t).w);
  }
  ExprPtr c = parse_expr(kCExpr);
  CHECK(lk_only(*c, t).at(Color::minus(1), Color::minus(2)) == -1);
  ExprPtr pp = parse_expr("psi o psi_inv");
  CHECK(lk_only(*pp, t) == identity(2, 0).w);
}

TEST_CASE("re-bracketing is trivial at i-deg 2") {
  CHECK(eval("mu o (mu x id[.]) o P[.,.,.]") == eval("mu o (id[.] x mu)"));
  CHECK(eval("Pinv[.,.,.] o P[.,.,.]") == eval("id[(.(..))]"));
  CHECK(eval("Y o P[.,.,.] o Pinv[.,.,.] o (c x id[.])") == eval("Y o (c x id[.])"));
}
