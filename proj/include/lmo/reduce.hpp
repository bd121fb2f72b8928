#pragma once

#include <utility>
#include <vector>

#include "lmo/diagram.hpp"
#include "lmo/rational.hpp"

namespace lmo {

/// Linear combination of interned connected diagrams.
using Expansion = std::vector<std::pair<DiagramId, Rational>>;

/// Largest i-deg for which the AS/IHX quotient is computed (default 6).
int ideg_limit();
void set_ideg_limit(int limit);

/// The three terms T1 = d, T2, T3 of the IHX relation T1 + T2 + T3 = 0 at the internal
/// edge leaving `slot` (whose mate must be a slot of a different vertex).
std::array<RawDiagram, 3> ihx_terms(const RawDiagram& d, int slot);

/// Expansion of a canonical diagram in the basis of its sector, sorted by id.
/// Basis elements are the least codes of each IHX class. Memoized, thread-safe.
const Expansion& reduce_connected(DiagramId id);

/// Reduces an arbitrary connected raw diagram.
Expansion reduce_raw(const RawDiagram& connected);

struct SectorBasis {
  int ideg = 0;
  ColorMultiset legs;
  std::vector<DiagramId> basis;  // sorted by code
  std::vector<DiagramId> all;    // every nonzero canonical diagram in the sector
};

/// Enumerates all connected diagrams with `ideg` trivalent vertices and the given legs,
/// and the basis of their span modulo AS and IHX. Memoized.
const SectorBasis& sector_basis(int ideg, ColorMultiset legs);

}  // namespace lmo
