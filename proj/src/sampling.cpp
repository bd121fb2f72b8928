#include "lmo/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "lmo/error.hpp"
#include "lmo/reduce.hpp"

namespace lmo {

RawDiagram random_connected(Rng& rng, int n, const ColorMultiset& legs) {
  const int leg_count = static_cast<int>(legs.size());
  if ((3 * n + leg_count) % 2 != 0 || (n == 0 && leg_count != 2))
    throw DomainError("no connected diagram with these vertex and leg counts");
  if (n > 0 && leg_count > n + 2) throw DomainError("too many legs for a connected diagram");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RawDiagram d;
    d.vertex_count = n;
    d.leg_colors = legs;
    std::shuffle(d.leg_colors.begin(), d.leg_colors.end(), rng);
    std::vector<int> nodes(3 * n + leg_count);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    d.mate.assign(nodes.size(), -1);
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size(); i += 2) {
      d.mate[nodes[i]] = nodes[i + 1];
      d.mate[nodes[i + 1]] = nodes[i];
      if (n > 0 && d.is_leg(nodes[i]) && d.is_leg(nodes[i + 1])) ok = false;
    }
    if (ok && d.components().size() == 1) return d;
  }
  throw DomainError("failed to sample a connected diagram");
}

std::pair<RawDiagram, int> random_relabel(Rng& rng, const RawDiagram& d) {
  const int n = d.vertex_count;
  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<int> lperm(d.leg_count());
  std::iota(lperm.begin(), lperm.end(), 0);
  std::shuffle(lperm.begin(), lperm.end(), rng);
  std::vector<int> new_of(d.node_count());
  int parity = 1;
  std::uniform_int_distribution<int> six(0, 5);
  static const int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int v = 0; v < n; ++v) {
    const int p = six(rng);
    if (p >= 3) parity = -parity;
    for (int k = 0; k < 3; ++k) new_of[3 * v + k] = 3 * vperm[v] + kPerms[p][k];
  }
  RawDiagram r;
  r.vertex_count = n;
  r.leg_colors = d.leg_colors;
  for (int l = 0; l < d.leg_count(); ++l) {
    new_of[d.first_leg() + l] = d.first_leg() + lperm[l];
    r.leg_colors[lperm[l]] = d.leg_colors[l];
  }
  r.mate.assign(d.node_count(), -1);
  for (int i = 0; i < d.node_count(); ++i) r.mate[new_of[i]] = new_of[d.mate[i]];
  return {r, parity};
}

}  // namespace lmo

namespace lmo {

Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

Series random_connected_series(Rng& rng, int max_ideg, const std::vector<Color>& palette, int terms,
                               int max_legs) {
  Series out(max_ideg);
  if (max_ideg < 1) return out;
  std::uniform_int_distribution<int> deg(1, max_ideg);
  std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
  for (int k = 0; k < terms; ++k) {
    const int n = deg(rng);
    std::vector<int> leg_counts;
    for (int l = n % 2; l <= std::min(n + 2, max_legs); l += 2)
      if (!(n == 1 && l != 3)) leg_counts.push_back(l);
    if (leg_counts.empty() || palette.empty()) continue;
    const int legs = leg_counts[std::uniform_int_distribution<std::size_t>(0, leg_counts.size() - 1)(rng)];
    // Resample until the diagram survives AS/IHX; tadpoles are common at random.
    for (int attempt = 0; attempt < 20; ++attempt) {
      ColorMultiset l;
      for (int i = 0; i < legs; ++i) l.push_back(palette[pick(rng)]);
      const RawDiagram d = random_connected(rng, n, l);
      if (reduce_raw(d).empty()) continue;
      out.add_raw(d, random_rational(rng));
      break;
    }
  }
  return out;
}

Series random_group_like(Rng& rng, int max_ideg, const std::vector<Color>& palette, int terms,
                         int max_legs) {
  return exp_union(random_connected_series(rng, max_ideg, palette, terms, max_legs));
}

}  // namespace lmo
