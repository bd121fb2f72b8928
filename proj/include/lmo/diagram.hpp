#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lmo/color.hpp"

namespace lmo {

/// A uni-trivalent graph with colored legs, possibly disconnected.
///
/// Nodes 0 .. 3n-1 are the slots of the n trivalent vertices: vertex v owns slots
/// 3v, 3v+1, 3v+2, listed in its cyclic order. Nodes 3n .. 3n+L-1 are legs. `mate` is a
/// fixed-point-free involution: every node is joined by an edge to `mate[node]`. A leg
/// mated to a leg is a strut.
struct RawDiagram {
  int vertex_count = 0;
  std::vector<int> mate;
  std::vector<Color> leg_colors;

  int node_count() const { return static_cast<int>(mate.size()); }
  int leg_count() const { return static_cast<int>(leg_colors.size()); }
  int first_leg() const { return 3 * vertex_count; }
  bool is_leg(int node) const { return node >= 3 * vertex_count; }
  const Color& color_of(int node) const { return leg_colors[node - 3 * vertex_count]; }

  /// Throws InvariantError on a malformed graph.
  void validate() const;
  std::vector<RawDiagram> components() const;
  ColorMultiset sorted_legs() const;
};

RawDiagram make_strut(Color a, Color b);
/// One vertex, legs in the listed cyclic order.
RawDiagram make_y(Color a, Color b, Color c);
/// The i-deg 2 tree: legs a, b, e at one vertex and e, c, d at the other (cyclic orders as
/// listed, e the internal edge). Drawn planar, the legs read a, b, c, d counterclockwise.
RawDiagram make_h(Color a, Color b, Color c, Color d);
/// Two vertices joined by a double edge, drawn planar, one leg each.
RawDiagram make_bubble(Color a, Color b);
/// The planar theta graph: opposite cyclic orders at its two vertices.
RawDiagram make_theta();

/// Union of diagrams, renumbered.
RawDiagram disjoint_union(const std::vector<RawDiagram>& parts);

/// Canonical code of a connected diagram. For a vertex diagram the code lists, vertex by
/// vertex and slot by slot, the mate of each slot (a slot reference or a leg color).
using Code = std::vector<std::uint64_t>;

struct CodeHash {
  std::size_t operator()(const Code& code) const noexcept;
};

struct CanonicalForm {
  Code code;
  /// d = sign * from_code(code); 0 when d admits an orientation-reversing automorphism.
  int sign = 0;
};

/// Canonical form of a connected diagram: the lexicographically least code over all
/// traversal labelings. Throws InvariantError on disconnected or malformed input.
CanonicalForm canonicalize(const RawDiagram& connected);

/// The oriented representative encoded by a canonical code.
RawDiagram from_code(const Code& code);

using DiagramId = std::uint32_t;

/// Interned canonical connected diagram.
struct DiagramInfo {
  DiagramId id = 0;
  Code code;
  RawDiagram rep;
  int ideg = 0;
  int betti = 0;
  bool strut = false;
  ColorMultiset legs;
};

/// A connected diagram identified up to sign: raw = sign * rep(id). sign == 0 means zero.
struct SignedId {
  DiagramId id = 0;
  int sign = 0;
};

/// Interns a canonical code; thread-safe and idempotent.
DiagramId intern(const Code& code);
/// Stable reference, valid for the process lifetime.
const DiagramInfo& diagram_info(DiagramId id);
/// canonicalize + intern. Zero diagrams are not interned.
SignedId identify(const RawDiagram& connected);

/// Number of distinct diagrams interned so far.
std::size_t registry_size();

}  // namespace lmo
