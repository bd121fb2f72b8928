#pragma once

#include <random>
#include <utility>

#include "lmo/diagram.hpp"

namespace lmo {

using Rng = std::mt19937_64;

/// Random connected diagram with n trivalent vertices and the given legs (no struts unless
/// n == 0). May contain tadpoles, so it can be zero in the quotient.
RawDiagram random_connected(Rng& rng, int n, const ColorMultiset& legs);

/// Random relabeling of vertices, slots and legs. Returns the relabeled diagram and the
/// parity (+1/-1) of the induced change of cyclic orders: relabeled = parity * d.
std::pair<RawDiagram, int> random_relabel(Rng& rng, const RawDiagram& d);

}  // namespace lmo

#include "lmo/series.hpp"

namespace lmo {

/// Random rational with small numerator and denominator, nonzero.
Rational random_rational(Rng& rng, int bound = 3);

/// Sum of `terms` random connected strut-free diagrams of i-deg 1..max_ideg with at most
/// `max_legs` legs drawn from `palette`, with random coefficients.
Series random_connected_series(Rng& rng, int max_ideg, const std::vector<Color>& palette, int terms,
                               int max_legs = 4);

/// exp_union of a random connected series.
Series random_group_like(Rng& rng, int max_ideg, const std::vector<Color>& palette, int terms,
                         int max_legs = 4);

}  // namespace lmo
