#pragma once

#include <string>
#include <string_view>

#include "lmo/pairing.hpp"
#include "lmo/series.hpp"
#include "lmo/strut_matrix.hpp"

namespace lmo {

/// A split morphism g -> f of top-substantial diagrams: [W/2] ⊔ y over the colors
/// {1+..g+} ∪ {1-..f-}. W has no (+,+) entries and y has no struts.
struct TsElement {
  int g = 0;
  int f = 0;
  StrutMatrix w;
  Series y;

  int max_ideg() const { return y.max_ideg(); }
  /// Throws InvariantError on foreign colors, a (+,+) entry, or struts in y.
  void validate() const;
  bool operator==(const TsElement& other) const {
    return g == other.g && f == other.f && w == other.w && y == other.y;
  }
};

TsElement identity(int g, int max_ideg);
TsElement tensor(const TsElement& a, const TsElement& b);
/// a ∘ b for a: g -> f and b: h -> g ("b, then a").
TsElement compose(const TsElement& a, const TsElement& b);

/// Linking part of compose, without diagrams.
StrutMatrix compose_linking(const StrutMatrix& a, const StrutMatrix& b, int h, int g, int f);
StrutMatrix tensor_linking(const StrutMatrix& a, const StrutMatrix& b, int a_g, int a_f);

/// Y-part of a ∘ b from the Y-parts x (over g+, f-) and y (over h+, g-) and the linking
/// matrices A of a and B of b.
Series star_ab(const Series& x, const Series& y, const StrutMatrix& a, const StrutMatrix& b, int h, int g,
               int f);

/// x ⋆ y for series over {1+..g+} ∪ {1-..g-}.
Series star(const Series& x, const Series& y, int g);
/// The ⋆-inverse, computed degree by degree. Needs constant term 1.
Series star_inverse(const Series& x, int g);

/// Y-part with every ± leg set to zero: the closed part of ε^{⊗f} ∘ a ∘ η^{⊗g}.
Series fill_in(const TsElement& a);

/// Shifts Plus indices by dp and Minus indices by dm.
Series shift_colors(const Series& x, int dp, int dm);
StrutMatrix shift_colors(const StrutMatrix& m, int dp, int dm);

/// "W = [...]; Y = ..."
std::string format_element(const TsElement& a);
TsElement parse_element(std::string_view text, int g, int f, int max_ideg);

}  // namespace lmo
