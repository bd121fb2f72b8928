#include "doctest.h"

#include "lmo/error.hpp"
#include "lmo/notation.hpp"
#include "lmo/pairing.hpp"
#include "lmo/sampling.hpp"

using namespace lmo;

namespace {
Color c(const char* s) { return Color::parse(s); }
Series S(const char* text, int d = 2) { return parse_series(text, d); }

// Plain rational Gauss-Jordan, used as an oracle for the fraction-free inverse.
DenseMatrix naive_inverse(DenseMatrix m) {
  const std::size_t n = m.size();
  DenseMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (m[p][k] == 0) ++p;
    std::swap(m[p], m[k]);
    std::swap(inv[p], inv[k]);
    const Rational f = m[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      m[k][j] /= f;
      inv[k][j] /= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rational g = m[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[k][j];
        inv[i][j] -= g * inv[k][j];
      }
    }
  }
  return inv;
}
}  // namespace

TEST_CASE("matrix text round trip") {
  StrutMatrix m;
  m.set(c("1-"), c("1+"), 1);
  m.set(c("2-"), c("1-"), Rational(-1, 2));
  CHECK(format_matrix(m) == "[1-|2- = -1/2; 1-|1+ = 1]");
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(format_matrix(StrutMatrix()) == "[]");
  CHECK(parse_matrix("[]").is_zero());
  CHECK_THROWS_AS(parse_matrix("[1-|1+ 1]"), ParseError);
}

TEST_CASE("exact inverse and determinant") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    DenseMatrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& q : row) q = rng() % 3 == 0 ? Rational(0) : random_rational(rng);
    if (determinant(m) == 0) {
      CHECK_THROWS_AS(inverse(m), DomainError);
      continue;
    }
    const DenseMatrix inv = inverse(m);
    CHECK(inv == naive_inverse(m));
    const DenseMatrix id = multiply(m, inv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(id[i][j] == (i == j ? 1 : 0));
  }
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
}

TEST_CASE("finite contraction") {
  const ColorSet s{c("s")};
  CHECK(contract_finite(S("strut(x,s)"), S("strut(s,y)"), s) == S("strut(x,y)"));
  CHECK(contract_finite(S("∅"), S("Y(x,s,s)"), s).is_zero());
  // One gluing of u = (s,a,b) with v = (s,c,d) gives u = (a,b,e), v = (e,c,d).
  CHECK(contract_finite(S("Y(s,a,b)"), S("Y(s,c,d)"), s) == Series::from_raw(2, make_h(c("a"), c("b"), c("c"), c("d"))));
  CHECK_THROWS_AS(contract_finite(S("strut(s,s)"), S("strut(s,s)"), s), DomainError);
}

TEST_CASE("Wick contraction") {
  const ColorSet s{c("s")};
  StrutMatrix m;
  m.set(c("s"), c("s"), 5);
  CHECK(wick_contract(m, S("Y(a,b,c)"), s) == S("Y(a,b,c)"));
  CHECK(wick_contract(m, S("strut(x,s)|strut(s,y)"), s) == S("5*strut(x,y)"));
  CHECK(wick_contract(m, S("Y(x,s,s)"), s).is_zero());
  // Agreement with the finite contraction against the truncated exponential.
  Rng rng(5);
  const std::vector<Color> palette{c("s"), c("t"), c("a"), c("b")};
  const ColorSet st{c("s"), c("t")};
  StrutMatrix mt;
  mt.set(c("s"), c("s"), Rational(2, 3));
  mt.set(c("s"), c("t"), -1);
  mt.set(c("t"), c("t"), 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Series d = random_connected_series(rng, 3, palette, 3);
    const Series lhs = wick_contract(mt, d, st);
    const Series rhs = contract_finite(strut_exponential(mt, 3, 3), d, st);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Gaussian integration") {
  StrutMatrix l;
  l.set(c("s"), c("s"), 4);
  const Series p = S("strut(x,s)|strut(s,y)");
  CHECK(gaussian_integrate(l, p, {c("s")}) == S("-1/4*strut(x,y)"));
  CHECK(gaussian_integrate(l, S("Y(a,b,c)"), {c("s")}) == S("Y(a,b,c)"));
  CHECK_THROWS_AS(gaussian_integrate(StrutMatrix(), p, {c("s")}), DomainError);
}

TEST_CASE("iterated and joint integration agree") {
  Rng rng(2024);
  const std::vector<Color> s{c("s"), c("t")};
  const std::vector<Color> s2{c("u")};
  const std::vector<Color> all{c("s"), c("t"), c("u")};
  const std::vector<Color> palette{c("s"), c("t"), c("u"), c("a")};
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    StrutMatrix l;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j)
        if (rng() % 4 != 0) l.set(all[i], all[j], random_rational(rng));
    if (determinant(to_dense(l, s, s)) == 0 || determinant(to_dense(l, all, all)) == 0) continue;
    const Series p = random_group_like(rng, 3, palette, 3);
    const Series joint = gaussian_integrate(l, p, all);
    auto [rest, partial] = integrate_partially(l, p, s);
    const Series iterated = gaussian_integrate(rest, partial, s2);
    CHECK(joint == iterated);
    ++done;
  }
  CHECK(done >= 20);
}

TEST_CASE("congruence invariance") {
  Rng rng(77);
  const std::vector<Color> s{c("s"), c("t")};
  const std::vector<Color> s2{c("p"), c("q")};
  for (int trial = 0; trial < 20; ++trial) {
    StrutMatrix l;
    l.set(c("s"), c("s"), random_rational(rng));
    l.set(c("s"), c("t"), random_rational(rng));
    l.set(c("t"), c("t"), random_rational(rng));
    DenseMatrix q{{random_rational(rng), random_rational(rng)}, {random_rational(rng), random_rational(rng)}};
    if (determinant(to_dense(l, s, s)) == 0 || determinant(q) == 0) continue;
    const Series p = random_group_like(rng, 3, {c("s"), c("t"), c("a")}, 3);
    // Substitute s_i = sum_j Q_ij p_j.
    Recoloring sigma;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) sigma[s[i]].emplace_back(s2[j], q[i][j]);
    DenseMatrix qt{{q[0][0], q[1][0]}, {q[0][1], q[1][1]}};
    const StrutMatrix l2 = from_dense(multiply(multiply(qt, to_dense(l, s, s)), q), s2);
    const Series lhs = gaussian_integrate(l2, recolor_affine(p, sigma, true), s2);
    CHECK(lhs == gaussian_integrate(l, p, s));
  }
}

TEST_CASE("contraction of group-like elements is group-like") {
  Rng rng(31);
  const ColorSet s{c("s"), c("t")};
  const std::vector<Color> palette{c("s"), c("t"), c("a"), c("b")};
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3;
    const Series e = random_group_like(rng, d, palette, 2, 3);
    const Series f = random_group_like(rng, d, palette, 2, 3);
    const Series r = contract_finite(e, f, s);
    if (!r.is_zero()) {
      const Rational c0 = r.constant_term();
      REQUIRE(c0 != 0);
      CHECK(is_group_like(Rational(1) / c0 * r));
    }
  }
  CHECK(is_group_like(contract_finite(exp_union(S("Y(s,a,b)")), exp_union(S("Y(s,c,d)")), {c("s")})));
}
