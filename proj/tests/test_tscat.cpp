#include "doctest.h"

#include "lmo/error.hpp"
#include "lmo/notation.hpp"
#include "lmo/tscat.hpp"
#include "oracles.hpp"

using namespace lmo;

namespace {
Series S(const char* text, int d = 2) { return parse_series(text, d); }
}  // namespace

TEST_CASE("identity elements") {
  CHECK(identity(0, 2).w.is_zero());
  CHECK(identity(0, 2).y == Series::constant(2));
  const TsElement id1 = identity(1, 2);
  CHECK(id1.w.at(Color::plus(1), Color::minus(1)) == 1);
  CHECK(format_element(id1) == "W = [1-|1+ = 1]; Y = 1*∅");
  CHECK(tensor(id1, id1) == identity(2, 2));
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const TsElement x = oracle::random_split(rng, 1 + trial % 2, 1 + trial % 3, 2, 2);
    CHECK(compose(identity(x.f, 2), x) == x);
    CHECK(compose(x, identity(x.g, 2)) == x);
    CHECK(tensor(x, identity(0, 2)) == x);
    CHECK(tensor(identity(0, 2), x) == x);
  }
}

TEST_CASE("element text round trip and validation") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const TsElement x = oracle::random_split(rng, 2, 2, 3, 3);
    CHECK(parse_element(format_element(x), 2, 2, 3) == x);
  }
  CHECK_THROWS_AS(parse_element("W = [1+|2+ = 1]; Y = 1*∅", 2, 0, 2), InvariantError);
  CHECK_THROWS_AS(parse_element("W = []; Y = 1*Y(1+,2+,3-)", 2, 2, 2), InvariantError);
  CHECK_THROWS_AS(parse_element("W = []; Y = 1*strut(1+,1-)", 1, 1, 2), InvariantError);
}

TEST_CASE("tensor shifts colors") {
  TsElement v{0, 1, {}, S("1*∅ + 1/48*bubble(1-,1-)")};
  v.w.set(Color::minus(1), Color::minus(1), -1);
  const TsElement vv = tensor(v, v);
  CHECK(vv.w.at(Color::minus(1), Color::minus(1)) == -1);
  CHECK(vv.w.at(Color::minus(2), Color::minus(2)) == -1);
  CHECK(vv.w.at(Color::minus(1), Color::minus(2)) == 0);
  CHECK(vv.y == disjoint_union(v.y, S("1*∅ + 1/48*bubble(2-,2-)")));
}

TEST_CASE("composition is associative and tensor is functorial") {
  Rng rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const TsElement c = oracle::random_split(rng, 1, 2, 3, 2);
    const TsElement b = oracle::random_split(rng, 2, 1, 3, 2);
    const TsElement a = oracle::random_split(rng, 1, 2, 3, 2);
    const TsElement left = compose(compose(a, b), c);
    const TsElement right = compose(a, compose(b, c));
    CHECK(left == right);
    CHECK(is_group_like(left.y));
  }
  for (int trial = 0; trial < 8; ++trial) {
    const TsElement a = oracle::random_split(rng, 1, 1, 2, 2);
    const TsElement b = oracle::random_split(rng, 2, 1, 2, 2);
    const TsElement a2 = oracle::random_split(rng, 1, 2, 2, 2);
    const TsElement b2 = oracle::random_split(rng, 1, 1, 2, 2);
    CHECK(compose(tensor(a, a2), tensor(b, b2)) == tensor(compose(a, b), compose(a2, b2)));
  }
  CHECK_THROWS_AS(compose(identity(1, 2), identity(2, 2)), DomainError);
}

TEST_CASE("split composition agrees with brute-force gluing") {
  Rng rng(45);
  for (int trial = 0; trial < 25; ++trial) {
    const int h = 1 + trial % 2, g = 1 + (trial / 2) % 2, f = 1 + (trial / 4) % 2;
    const TsElement a = oracle::random_split(rng, g, f, 2 + trial % 2, 2);
    const TsElement b = oracle::random_split(rng, h, g, a.max_ideg(), 2);
    const TsElement ab = compose(a, b);
    CHECK(ab.y == oracle::brute_compose_y(a, b));
    CHECK(ab.w == oracle::brute_compose_w(a, b));
  }
}

TEST_CASE("exponential shift") {
  Rng rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    const int h = 1 + trial % 2, g = 1 + (trial / 2) % 2, f = 1 + trial % 3;
    const int d = 2 + trial % 2;
    TsElement x = oracle::random_split(rng, g, f, d, 2);
    x.w = StrutMatrix();
    TsElement y = oracle::random_split(rng, h, g, d, 2);
    y.w = StrutMatrix();
    StrutMatrix dm;  // [D] = exp(Σ d(j+, i-) strut(j+, i-))
    for (int j = 1; j <= h; ++j)
      for (int i = 1; i <= g; ++i)
        if (rng() % 3) dm.set(Color::plus(j), Color::minus(i), random_rational(rng, 2));
    // Direct: expand [D] far enough for every plus leg of x, then glue.
    int max_plus = 0;
    for (const auto& [m, c] : x.y.terms()) max_plus = std::max(max_plus, oracle::count_legs(m, ColorKind::Plus));
    ColorSet stars;
    for (int i = 1; i <= g; ++i) stars.insert(Color::star(i));
    const Series direct = contract_finite(
        recolor_affine(x.y, oracle::to_star(ColorKind::Plus, g), true),
        recolor_affine(disjoint_union(strut_exponential(dm, max_plus, d), y.y), oracle::to_star(ColorKind::Minus, g), true),
        stars);
    // Shortcut: x / (i+ ↦ i* + D·i-).
    Recoloring shift;
    for (int i = 1; i <= g; ++i) {
      auto& t = shift[Color::plus(i)];
      t.emplace_back(Color::star(i), 1);
      for (int j = 1; j <= h; ++j)
        if (dm.at(Color::plus(j), Color::minus(i)) != 0) t.emplace_back(Color::plus(j), dm.at(Color::plus(j), Color::minus(i)));
    }
    const Series shortcut = contract_finite(recolor_affine(x.y, shift, true),
                                            recolor_affine(y.y, oracle::to_star(ColorKind::Minus, g), true), stars);
    CHECK(direct == shortcut);
    TsElement yd = y;
    yd.w = dm;
    CHECK(compose(x, yd).y == direct);
  }
}

TEST_CASE("star product and inverse") {
  const Series y = S("1*∅ + 1*Y(1+,1-,2+)", 2);
  CHECK(star(Series::constant(2), y, 2) == y);
  CHECK(star(y, Series::constant(2), 2) == y);
  CHECK(star_inverse(Series::constant(2), 1) == Series::constant(2));
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int g = 1 + trial % 2;
    TsElement x = oracle::random_split(rng, g, g, 3, 3);
    const Series inv = star_inverse(x.y, g);
    CHECK(star(x.y, inv, g) == Series::constant(3));
    CHECK(star(inv, x.y, g) == Series::constant(3));
    CHECK(star_inverse(inv, g) == x.y);
  }
  // One gluing of Y(1+,a,b) with Y(1-,c,d) gives H(a,b|c,d) under u = (1*,a,b), v = (1*,c,d).
  const Series yp = S("1*Y(1+,2-,2+)", 2);
  const Series ym = S("1*Y(1-,2+,2-)", 2);
  const Series prod = star(yp, ym, 2);
  CHECK(coefficient(prod, make_h(Color::minus(2), Color::plus(2), Color::plus(2), Color::minus(2))) == 1);
}

TEST_CASE("fill-in") {
  CHECK(fill_in(identity(3, 2)) == Series::constant(2));
  TsElement x{1, 1, {}, S("1*∅ + 1*theta + 1*bubble(1-,1+)")};
  CHECK(fill_in(x) == S("1*∅ + 1*theta"));
}
