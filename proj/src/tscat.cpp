#include "lmo/tscat.hpp"

#include "lmo/error.hpp"
#include "lmo/notation.hpp"

namespace lmo {

namespace {

bool in_range(const Color& c, int g, int f) {
  if (c.kind() == ColorKind::Plus) return c.index() <= g;
  if (c.kind() == ColorKind::Minus) return c.index() <= f;
  return false;
}

Color shifted(const Color& c, int dp, int dm) {
  if (c.kind() == ColorKind::Plus) return Color::plus(c.index() + dp);
  if (c.kind() == ColorKind::Minus) return Color::minus(c.index() + dm);
  return c;
}

void require_same_degree(const TsElement& a, const TsElement& b) {
  if (a.max_ideg() != b.max_ideg()) throw DomainError("truncation degrees differ");
}

}  // namespace

void TsElement::validate() const {
  if (g < 0 || f < 0) throw InvariantError("negative arity");
  for (const auto& [k, v] : w.entries()) {
    if (!in_range(k.first, g, f) || !in_range(k.second, g, f))
      throw InvariantError("linking matrix uses a color outside the arity");
    if (k.first.kind() == ColorKind::Plus && k.second.kind() == ColorKind::Plus)
      throw InvariantError("strut with both legs on top (" + k.first.to_string() + "," + k.second.to_string() + ")");
  }
  if (!y.is_strut_free()) throw InvariantError("Y-part contains a strut");
  for (const auto& [m, c] : y.terms())
    for (DiagramId id : m)
      for (const Color& col : diagram_info(id).legs)
        if (!in_range(col, g, f)) throw InvariantError("Y-part uses color " + col.to_string() + " outside the arity");
}

TsElement identity(int g, int max_ideg) {
  TsElement e{g, g, {}, Series::constant(max_ideg)};
  for (int i = 1; i <= g; ++i) e.w.set(Color::minus(i), Color::plus(i), 1);
  return e;
}

Series shift_colors(const Series& x, int dp, int dm) {
  if (dp == 0 && dm == 0) return x;
  Recoloring sigma;
  for (const auto& [m, c] : x.terms())
    for (DiagramId id : m)
      for (const Color& col : diagram_info(id).legs) sigma[col] = {{shifted(col, dp, dm), 1}};
  return recolor_affine(x, sigma, true);
}

StrutMatrix shift_colors(const StrutMatrix& m, int dp, int dm) {
  StrutMatrix out;
  for (const auto& [k, v] : m.entries()) out.set(shifted(k.first, dp, dm), shifted(k.second, dp, dm), v);
  return out;
}

StrutMatrix tensor_linking(const StrutMatrix& a, const StrutMatrix& b, int a_g, int a_f) {
  return a + shift_colors(b, a_g, a_f);
}

TsElement tensor(const TsElement& a, const TsElement& b) {
  require_same_degree(a, b);
  return TsElement{a.g + b.g, a.f + b.f, tensor_linking(a.w, b.w, a.g, a.f),
                   disjoint_union(a.y, shift_colors(b.y, a.g, a.f))};
}

StrutMatrix compose_linking(const StrutMatrix& a, const StrutMatrix& b, int h, int g, int f) {
  const auto hp = color_range(ColorKind::Plus, h);
  const auto gp = color_range(ColorKind::Plus, g);
  const auto gm = color_range(ColorKind::Minus, g);
  const auto fm = color_range(ColorKind::Minus, f);
  const DenseMatrix a_pm = to_dense(a, gp, fm);  // A^{+-}: g+ x f-
  const DenseMatrix a_mm = to_dense(a, fm, fm);
  const DenseMatrix b_pm = to_dense(b, hp, gm);  // B^{+-}: h+ x g-
  const DenseMatrix b_mm = to_dense(b, gm, gm);
  // Shapes are explicit: empty factors carry no column count.
  auto mult = [](const DenseMatrix& x, const DenseMatrix& y, int rows, int inner, int cols) {
    DenseMatrix out(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < inner; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
      }
    return out;
  };
  const DenseMatrix top = mult(b_pm, a_pm, h, g, f);  // h+ x f-
  DenseMatrix a_mp(f, std::vector<Rational>(g));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < g; ++j) a_mp[i][j] = a_pm[j][i];
  const DenseMatrix bottom = mult(mult(a_mp, b_mm, f, g, g), a_pm, f, g, f);  // f- x f-
  StrutMatrix out;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < f; ++j) out.set(hp[i], fm[j], top[i][j]);
  for (int i = 0; i < f; ++i)
    for (int j = i; j < f; ++j) out.set(fm[i], fm[j], a_mm[i][j] + bottom[i][j]);
  return out;
}

Series star_ab(const Series& x, const Series& y, const StrutMatrix& a, const StrutMatrix& b, int h, int g,
               int f) {
  if (x.max_ideg() != y.max_ideg()) throw DomainError("truncation degrees differ");
  const auto hp = color_range(ColorKind::Plus, h);
  const auto gp = color_range(ColorKind::Plus, g);
  const auto gm = color_range(ColorKind::Minus, g);
  const auto gs = color_range(ColorKind::Star, g);
  const auto fm = color_range(ColorKind::Minus, f);
  const DenseMatrix a_pm = to_dense(a, gp, fm);
  const DenseMatrix b_pm = to_dense(b, hp, gm);
  const DenseMatrix b_mm = to_dense(b, gm, gm);
  DenseMatrix a_mp(f, std::vector<Rational>(g));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < g; ++j) a_mp[i][j] = a_pm[j][i];
  const DenseMatrix ab = multiply(a_mp, b_mm);  // f- x g

  // x / (i+ ↦ i* + Σ_j B(j+, i-) j+ + Σ_k (A^{-+} B^{--})(k-, i) k-)
  Recoloring sx;
  for (int i = 0; i < g; ++i) {
    auto& t = sx[gp[i]];
    t.emplace_back(gs[i], 1);
    for (int j = 0; j < h; ++j)
      if (b_pm[j][i] != 0) t.emplace_back(hp[j], b_pm[j][i]);
    for (int k = 0; k < f; ++k)
      if (ab[k][i] != 0) t.emplace_back(fm[k], ab[k][i]);
  }
  // y / (i- ↦ i* + Σ_k A(i+, k-) k-)
  Recoloring sy;
  for (int i = 0; i < g; ++i) {
    auto& t = sy[gm[i]];
    t.emplace_back(gs[i], 1);
    for (int k = 0; k < f; ++k)
      if (a_pm[i][k] != 0) t.emplace_back(fm[k], a_pm[i][k]);
  }
  StrutMatrix metric;
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) metric.set(gs[i], gs[j], b_mm[i][j]);
  return glue_pairing(recolor_affine(x, sx, true), metric, recolor_affine(y, sy, true),
                      ColorSet(gs.begin(), gs.end()));
}

TsElement compose(const TsElement& a, const TsElement& b) {
  if (a.g != b.f)
    throw DomainError("cannot compose: source arity " + std::to_string(a.g) + " vs target arity " +
                      std::to_string(b.f));
  require_same_degree(a, b);
  return TsElement{b.g, a.f, compose_linking(a.w, b.w, b.g, a.g, a.f),
                   star_ab(a.y, b.y, a.w, b.w, b.g, a.g, a.f)};
}

Series star(const Series& x, const Series& y, int g) {
  const TsElement id = identity(g, x.max_ideg());
  return star_ab(x, y, id.w, id.w, g, g, g);
}

Series star_inverse(const Series& x, int g) {
  if (x.constant_term() != 1) throw DomainError("star inverse needs constant term 1");
  Series y = Series::constant(x.max_ideg());
  for (int k = 1; k <= x.max_ideg(); ++k) y -= star(x, y, g).homogeneous_part(k);
  return y;
}

Series fill_in(const TsElement& a) {
  Recoloring zero;
  for (const Color& c : color_range(ColorKind::Plus, a.g)) zero[c] = {};
  for (const Color& c : color_range(ColorKind::Minus, a.f)) zero[c] = {};
  return recolor_affine(a.y, zero, true);
}

std::string format_element(const TsElement& a) {
  return "W = " + format_matrix(a.w) + "; Y = " + format_series(a.y);
}

TsElement parse_element(std::string_view text, int g, int f, int max_ideg) {
  const std::size_t w_at = text.find("W =");
  const std::size_t close = text.find(']');
  const std::size_t y_at = text.find("Y =", close == std::string_view::npos ? 0 : close);
  if (w_at == std::string_view::npos || close == std::string_view::npos || y_at == std::string_view::npos)
    throw ParseError("expected 'W = [...]; Y = ...'", 0);
  TsElement e{g, f, parse_matrix(text.substr(w_at + 3, close - w_at - 2)),
              Series(max_ideg)};
  try {
    e.y = parse_series(text.substr(y_at + 3), max_ideg);
  } catch (const ParseError& err) {
    throw ParseError(err.what(), y_at + 3 + err.position());
  }
  e.validate();
  return e;
}

}  // namespace lmo
