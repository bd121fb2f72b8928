#include <doctest.h>

#include "lmo/coblang.hpp"
#include "lmo/error.hpp"
#include "lmo/generators.hpp"
#include "lmo/notation.hpp"

using namespace lmo;

namespace {

Color c(const char* s) { return Color::parse(s); }
Series S(const char* text, int d = 2) { return parse_series(text, d); }

std::string replace(std::string doc, const std::string& from, const std::string& to) {
  const std::size_t at = doc.find(from);
  REQUIRE(at != std::string::npos);
  return doc.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("builtin table rows") {
  const GeneratorTable t = builtin_degree2();
  CHECK(t.max_ideg == 2);
  CHECK(t.associator == "even");
  CHECK(t.entries.size() == 14);
  const TsElement eta = t.value_of("eta");
  CHECK(eta.g == 0);
  CHECK(eta.f == 1);
  CHECK(eta.w == StrutMatrix());
  CHECK(eta.y == Series::constant(2));
  const TsElement eps = t.value_of("eps");
  CHECK((eps.g == 1 && eps.f == 0 && eps.y == Series::constant(2)));
  CHECK(t.value_of("v+").w.at(c("1-"), c("1-")) == -1);
  CHECK(t.value_of("v-").w.at(c("1-"), c("1-")) == 1);
  CHECK(t.value_of("P") == identity(3, 2));
  CHECK(t.value_of("Pinv") == identity(3, 2));
  CHECK(t.value_of("v+").y == exp_union(S("1/48*bubble(1-,1-)")));
  const TsElement mu = t.value_of("mu");
  CHECK(mu.w.at(c("1-"), c("1+")) == 1);
  CHECK(mu.w.at(c("1-"), c("2+")) == 1);
  CHECK(log_union(mu.y).homogeneous_part(1) == S("-1/2*Y(1-,1+,2+)"));
  CHECK(log_union(t.value_of("Y").y).homogeneous_part(1) == S("-1*Y(1+,2+,3+)"));
  CHECK(t.value_of("c").w.at(c("1-"), c("2-")) == -1);
  CHECK(t.value_of("s").w.at(c("1-"), c("1+")) == -1);
  CHECK_THROWS_AS(t.value_of("nope"), DomainError);
}

TEST_CASE("T1 and the normalized identity") {
  const Series u = chi_inv_z_id1_y();
  const Series t = t1_y();
  CHECK(star_inverse(u, 1) == t);
  CHECK(star_inverse(t, 1) == u);
  CHECK(star(u, t, 1) == Series::constant(2));
  CHECK(coefficient(t, make_bubble(c("1-"), c("1+"))) == Rational(-1, 8));
  CHECK(coefficient(t, make_bubble(c("1+"), c("1+"))) == Rational(-1, 48));
  CHECK(coefficient(t, make_h(c("1-"), c("1+"), c("1+"), c("1-"))) == Rational(1, 8));
}

TEST_CASE("table text round trip") {
  const GeneratorTable t = builtin_degree2();
  const std::string text = save_table(t);
  const GeneratorTable back = load_table(text);
  CHECK(back == t);
  CHECK(save_table(back) == text);
  CHECK(load_table(degree2_document()) == t);
}

TEST_CASE("table rejects malformed documents") {
  const std::string doc = degree2_document();
  CHECK_THROWS_AS(load_table(replace(doc, "W { 1-|2- = -1 }", "W { 1+|2+ = 1 }")), InvariantError);
  CHECK_THROWS_AS(load_table(replace(doc, "gen mu : 2 -> 1", "gen mu : 1 -> 1")), InvariantError);
  CHECK_THROWS_AS(load_table(replace(doc, "gen c : 0 -> 2", "gen q : 0 -> 2")), InvariantError);
  CHECK_THROWS_AS(load_table("maxideg=2\ngen eta : 0 -> 1\nW { }\n"), ParseError);
  CHECK_THROWS_AS(load_table("gen eta : 0 -> 1\nW { }\nlogY = 0\n"), ParseError);
  CHECK_THROWS_AS(load_table("maxideg=2\ngen eta : 0 -> 1\nW { }\nlogY = 1*Y(1-,1-\n"), ParseError);
  CHECK_THROWS_AS(load_table("maxideg=2\ngen eta : 0 -> 1\nW { }\nlogY = 1*∅\n"), ParseError);
  CHECK_THROWS_AS(load_table("maxideg=2\ngen P : 3 -> 3\nW { }\nlogY = 1*Y(1-,2-,3-)|Y(1-,2-,3-)\n"),
                  ParseError);
  CHECK_NOTHROW(load_table("# comment\nmaxideg=1\nassociator=even\n\ngen eps : 1 -> 0 # counit\nW { }\nlogY = 0\n"));
}

TEST_CASE("validation names the failing relation") {
  const std::string doc = degree2_document();
  CHECK_NOTHROW(validate_table(builtin_degree2()));
  // A Y-term avoiding 1+ survives η in the first slot.
  const GeneratorTable bad_y =
      load_table(replace(doc, "logY = -1*Y(1+,2+,3+)", "logY = 1*H(2+,3+|2+,3+) - 1*Y(1+,2+,3+)"));
  try {
    validate_table(bad_y);
    FAIL("expected a relation failure");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("Y o (eta x Id_2) = eps x eps") != std::string::npos);
  }
  // Flipping the whole Y row keeps that relation but breaks the ones with c.
  const std::string flipped = replace(
      doc, "logY = -1*Y(1+,2+,3+) - 1/2*H(1+,2+|1+,3+) - 1/2*H(2+,3+|2+,1+) - 1/2*H(3+,1+|3+,2+)",
      "logY = 1*Y(1+,2+,3+) + 1/2*H(1+,2+|1+,3+) + 1/2*H(2+,3+|2+,1+) + 1/2*H(3+,1+|3+,2+)");
  const GeneratorTable t = load_table(flipped);
  CHECK_NOTHROW(validate_table(t));
  for (const RelationResult& r : check_relations(t, hopf_relations())) {
    if (r.name == "Y o (Id x c) = eps") CHECK_FALSE(r.holds);
    if (r.name == "Y o (eta x Id_2) = eps x eps") CHECK(r.holds);
  }
  const GeneratorTable bad_mu = load_table(replace(doc, "W { 1-|1+ = 1; 1-|2+ = 1 }", "W { 1-|1+ = 1; 1-|2+ = 2 }"));
  try {
    validate_table(bad_mu);
    FAIL("expected a relation failure");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("mu o (eta x Id) = Id") != std::string::npos);
  }
}

TEST_CASE("Hopf relations hold for the builtin table") {
  for (const RelationResult& r : check_relations(builtin_degree2(), hopf_relations())) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.holds);
  }
}

TEST_CASE("each calibrated orientation is forced by the relations") {
  using F = int PictureSigns::*;
  const F forced[] = {&PictureSigns::y_delta,       &PictureSigns::h,         &PictureSigns::h_mu_right,
                      &PictureSigns::h_mu_left,     &PictureSigns::h_delta_left, &PictureSigns::h_delta_right,
                      &PictureSigns::h_cup,         &PictureSigns::h_cap,     &PictureSigns::bubble,
                      &PictureSigns::bubble_bot};
  for (F field : forced) {
    PictureSigns s = calibrated_signs();
    s.*field = -(s.*field);
    bool all = true;
    for (const RelationResult& r : check_relations(load_table(degree2_document(s)), hopf_relations()))
      all = all && r.holds;
    CHECK_FALSE(all);
  }
  // Y(1+,2+,3+) enters no relation of the suite.
  PictureSigns s = calibrated_signs();
  s.y_top = -s.y_top;
  for (const RelationResult& r : check_relations(load_table(degree2_document(s)), hopf_relations())) CHECK(r.holds);
}
