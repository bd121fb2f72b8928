#include "lmo/cylinders.hpp"

#include <algorithm>

#include "lmo/error.hpp"

namespace lmo {

bool is_cylinder(const TsElement& a) {
  return a.g == a.f && a.w == identity(a.g, 0).w;
}

CylinderValue as_cylinder(const TsElement& a) {
  if (!is_cylinder(a)) throw InvariantError("not a homology cylinder: linking matrix " + format_matrix(a.w));
  return {a.g, a.y};
}

TsElement to_element(const CylinderValue& c) {
  TsElement e = identity(c.g, c.max_ideg());
  e.y = c.y;
  return e;
}

CylinderValue trivial_cylinder(int g, int max_ideg) { return {g, Series::constant(max_ideg)}; }

CylinderValue cyl_compose(const CylinderValue& a, const CylinderValue& b) {
  if (a.g != b.g) throw DomainError("genus mismatch: " + std::to_string(a.g) + " vs " + std::to_string(b.g));
  return {a.g, star(a.y, b.y, a.g)};
}

Series tau1(const CylinderValue& c) { return log_union(c.y).homogeneous_part(1); }

Rational theta_coefficient(const Series& x) {
  Recoloring zero;
  for (const auto& [m, q] : x.terms())
    for (DiagramId id : m)
      for (const Color& col : diagram_info(id).legs) zero[col] = {};
  const Series closed = recolor_affine(x, zero, true);
  if (closed.max_ideg() < 2) return 0;
  return coefficient(closed, make_theta());
}

Rational casson_lambda(const TsElement& a) {
  if (a.g != 0 || a.f != 0)
    throw DomainError("Casson invariant needs an element 0 -> 0, got " + std::to_string(a.g) + " -> " +
                      std::to_string(a.f));
  if (a.max_ideg() < 2) throw DomainError("Casson invariant needs i-deg 2");
  return 2 * theta_coefficient(a.y);
}

TsElement fill(const TsElement& a, const GeneratorTable& table) {
  TsElement top = identity(0, a.max_ideg());
  TsElement bottom = identity(0, a.max_ideg());
  TsElement eta = table.value_of("eta");
  TsElement eps = table.value_of("eps");
  eta.y = eta.y.truncated(a.max_ideg());
  eps.y = eps.y.truncated(a.max_ideg());
  for (int i = 0; i < a.g; ++i) top = tensor(top, eta);
  for (int i = 0; i < a.f; ++i) bottom = tensor(bottom, eps);
  return compose(bottom, compose(a, top));
}

MoritaResult morita_check(const CylinderValue& m, const CylinderValue& n, const GeneratorTable& table) {
  if (m.max_ideg() < 2) throw DomainError("Morita's formula needs i-deg 2");
  const TsElement me = to_element(m);
  const TsElement ne = to_element(n);
  MoritaResult r;
  r.lhs = casson_lambda(fill(compose(me, ne), table));
  r.rhs = casson_lambda(fill(me, table)) + casson_lambda(fill(ne, table)) +
          2 * theta_coefficient(star(tau1(m), tau1(n), m.g));
  r.equal = r.lhs == r.rhs;
  return r;
}

CylinderValue random_cylinder(Rng& rng, int g, int max_ideg, int terms) {
  std::vector<Color> palette = color_range(ColorKind::Plus, g);
  for (const Color& c : color_range(ColorKind::Minus, g)) palette.push_back(c);
  Series log_y = random_connected_series(rng, max_ideg, palette, terms);
  if (g >= 3 && max_ideg >= 1) {
    // All-plus and all-minus trees on the same colors: the only source of a θ in M ⋆ N.
    std::vector<int> idx(g);
    for (int i = 0; i < g; ++i) idx[i] = i + 1;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (ColorKind kind : {ColorKind::Plus, ColorKind::Minus}) {
      auto col = [&](int i) { return kind == ColorKind::Plus ? Color::plus(idx[i]) : Color::minus(idx[i]); };
      log_y.add_raw(make_y(col(0), col(1), col(2)), random_rational(rng));
    }
  }
  return {g, exp_union(log_y)};
}

}  // namespace lmo
