#pragma once

#include "lmo/generators.hpp"
#include "lmo/sampling.hpp"
#include "lmo/series.hpp"
#include "lmo/tscat.hpp"

namespace lmo {

/// Y-part of a homology cylinder over F_g; its linking matrix is the identity pairing.
struct CylinderValue {
  int g = 0;
  Series y;

  int max_ideg() const { return y.max_ideg(); }
  bool operator==(const CylinderValue& other) const { return g == other.g && y == other.y; }
};

/// W is exactly the pairing i- <-> i+ with nothing else.
bool is_cylinder(const TsElement& a);
/// Throws InvariantError if a is not a cylinder.
CylinderValue as_cylinder(const TsElement& a);
TsElement to_element(const CylinderValue& c);

CylinderValue trivial_cylinder(int g, int max_ideg);
/// yPart = a.y ⋆ b.y.
CylinderValue cyl_compose(const CylinderValue& a, const CylinderValue& b);
/// i-deg 1 part of log_⊔ y.
Series tau1(const CylinderValue& c);

/// Coefficient of θ after setting every colored leg to zero.
Rational theta_coefficient(const Series& x);
/// 2 * θ-coefficient of an element 0 -> 0.
Rational casson_lambda(const TsElement& a);

/// ε^{⊗g} ∘ a ∘ η^{⊗g} with the table's ε and η.
TsElement fill(const TsElement& a, const GeneratorTable& table);

struct MoritaResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};
/// lhs = λ(fill(M∘N)); rhs = λ(fill M) + λ(fill N) + 2·θ(τ₁(M) ⋆ τ₁(N)).
MoritaResult morita_check(const CylinderValue& m, const CylinderValue& n, const GeneratorTable& table);

/// exp_⊔ of a random connected series over {1±..g±}.
CylinderValue random_cylinder(Rng& rng, int g, int max_ideg, int terms = 4);

}  // namespace lmo
