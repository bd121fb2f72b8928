#pragma once

#include <set>

#include "lmo/series.hpp"
#include "lmo/strut_matrix.hpp"

namespace lmo {

using ColorSet = std::set<Color>;

/// <P, [M/2] ⊔ Q>_S: every S-leg of Q is glued to an S-leg of P of the same color, and the
/// remaining S-legs of P are matched in pairs, a pair colored (i, j) weighing M(i, j).
/// Monomial pairs with no complete gluing contribute zero. Result has P's truncation degree.
/// Throws DomainError if a gluing closes a circle without vertices.
Series glue_pairing(const Series& p, const StrutMatrix& metric, const Series& q, const ColorSet& s);

/// True if x has no strut with both legs in S.
bool is_substantial(const Series& x, const ColorSet& s);

/// <E, D>_S, the finite contraction. Requires one side to be S-substantial.
Series contract_finite(const Series& e, const Series& d, const ColorSet& s);

/// <[M/2], D>_S: sum over perfect matchings of the S-legs of each monomial of D.
Series wick_contract(const StrutMatrix& m, const Series& d, const ColorSet& s);

/// The formal Gaussian integral of [L/2] ⊔ P along S, i.e. <[-L^{-1}/2], P>_S.
/// `s` lists the colors of S in the row order of L. Throws DomainError if det L = 0.
Series gaussian_integrate(const StrutMatrix& l, const Series& p, const std::vector<Color>& s);

/// Integrates [L/2] ⊔ P along S only, where L may also involve other colors T.
/// With L = (A C; C^T D) in the (S, T) blocks the result is
/// [(D - C^T A^{-1} C)/2] ⊔ <[-A^{-1}/2], P/(s ↦ s - (A^{-1} C)_s · t)>_S, returned as the
/// pair (matrix over T, strut-free-in-S series).
std::pair<StrutMatrix, Series> integrate_partially(const StrutMatrix& l, const Series& p,
                                                   const std::vector<Color>& s);

/// Partial sum of [M/2] with at most `max_struts` struts (an exact series in struts only).
Series strut_exponential(const StrutMatrix& m, int max_struts, int max_ideg);

}  // namespace lmo
