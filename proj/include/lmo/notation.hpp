#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "lmo/diagram.hpp"
#include "lmo/series.hpp"

namespace lmo {

/// Text for a basis diagram and the sign relating it: diagram = sign * parse(text).
/// Uses strut/Y/H/bubble/theta when the shape allows, otherwise the graph{...} form.
std::pair<std::string, int> format_diagram(DiagramId id);

/// Parses one connected diagram in any of the notations.
RawDiagram parse_diagram(std::string_view text);

/// "q1*m1 + q2*m2 - ..." (coefficients always written), monomials '|'-joined, "∅" for the empty diagram, "0" for zero.
/// Terms are ordered by i-deg, then by text.
std::string format_series(const Series& s);

/// Inverse of format_series; "empty" is accepted for "∅".
Series parse_series(std::string_view text, int max_ideg);

}  // namespace lmo
