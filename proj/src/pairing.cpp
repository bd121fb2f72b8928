#include "lmo/pairing.hpp"

#include <algorithm>
#include <map>

#include "lmo/error.hpp"

namespace lmo {

namespace {

// Joins the given leg pairs of d into edges and removes those legs.
RawDiagram glue_legs(const RawDiagram& d, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner(d.node_count(), -1);
  for (auto [a, b] : pairs) {
    partner[a] = b;
    partner[b] = a;
  }
  // New numbering: all slots, then surviving legs.
  std::vector<int> new_index(d.node_count(), -1);
  RawDiagram out;
  out.vertex_count = d.vertex_count;
  int next = d.first_leg();
  for (int i = 0; i < d.first_leg(); ++i) new_index[i] = i;
  for (int l = d.first_leg(); l < d.node_count(); ++l) {
    if (partner[l] >= 0) continue;
    new_index[l] = next++;
    out.leg_colors.push_back(d.color_of(l));
  }
  out.mate.assign(next, -1);
  std::vector<bool> visited(d.node_count(), false);
  for (int n = 0; n < d.node_count(); ++n) {
    if (new_index[n] < 0) continue;
    int m = d.mate[n];
    while (partner[m] >= 0) {
      visited[m] = visited[partner[m]] = true;
      m = d.mate[partner[m]];
    }
    out.mate[new_index[n]] = new_index[m];
  }
  for (int l = d.first_leg(); l < d.node_count(); ++l)
    if (partner[l] >= 0 && !visited[l]) throw DomainError("gluing closes a circle without vertices");
  return out;
}

struct LegTable {
  std::vector<int> p_legs;  // S-legs coming from the P side (node ids in the union)
  std::vector<int> q_legs;  // S-legs coming from the Q side
};

class Gluer {
 public:
  Gluer(const RawDiagram& u, const LegTable& legs, const StrutMatrix& metric, Series& out, const Rational& coef)
      : u_(u), legs_(legs), metric_(metric), out_(out), coef_(coef), used_(legs.p_legs.size(), false) {}

  void run() { glue_q(0, coef_); }

 private:
  void glue_q(std::size_t k, const Rational& weight) {
    if (k == legs_.q_legs.size()) {
      match_p(weight);
      return;
    }
    const Color& c = u_.color_of(legs_.q_legs[k]);
    for (std::size_t i = 0; i < legs_.p_legs.size(); ++i) {
      if (used_[i] || u_.color_of(legs_.p_legs[i]) != c) continue;
      used_[i] = true;
      pairs_.emplace_back(legs_.q_legs[k], legs_.p_legs[i]);
      glue_q(k + 1, weight);
      pairs_.pop_back();
      used_[i] = false;
    }
  }

  void match_p(const Rational& weight) {
    std::size_t first = 0;
    while (first < used_.size() && used_[first]) ++first;
    if (first == used_.size()) {
      out_.add_raw(glue_legs(u_, pairs_), weight);
      return;
    }
    used_[first] = true;
    const Color& a = u_.color_of(legs_.p_legs[first]);
    for (std::size_t j = first + 1; j < used_.size(); ++j) {
      if (used_[j]) continue;
      const Rational w = metric_.at(a, u_.color_of(legs_.p_legs[j]));
      if (w == 0) continue;
      used_[j] = true;
      pairs_.emplace_back(legs_.p_legs[first], legs_.p_legs[j]);
      match_p(weight * w);
      pairs_.pop_back();
      used_[j] = false;
    }
    used_[first] = false;
  }

  const RawDiagram& u_;
  const LegTable& legs_;
  const StrutMatrix& metric_;
  Series& out_;
  Rational coef_;
  std::vector<bool> used_;
  std::vector<std::pair<int, int>> pairs_;
};

std::map<Color, int> s_leg_counts(const Monomial& m, const ColorSet& s) {
  std::map<Color, int> counts;
  for (DiagramId id : m)
    for (const Color& c : diagram_info(id).legs)
      if (s.count(c)) ++counts[c];
  return counts;
}

RawDiagram monomial_raw(const Monomial& m) {
  std::vector<RawDiagram> parts;
  for (DiagramId id : m) parts.push_back(diagram_info(id).rep);
  return disjoint_union(parts);
}

}  // namespace

Series glue_pairing(const Series& p, const StrutMatrix& metric, const Series& q, const ColorSet& s) {
  Series out(p.max_ideg());
  std::vector<std::pair<const Monomial*, std::map<Color, int>>> q_terms;
  for (const auto& [m, c] : q.terms()) q_terms.emplace_back(&m, s_leg_counts(m, s));
  for (const auto& [pm, pc] : p.terms()) {
    const auto p_counts = s_leg_counts(pm, s);
    const int p_deg = monomial_ideg(pm);
    int p_total = 0;
    for (const auto& [c, n] : p_counts) p_total += n;
    for (const auto& [qm_ptr, q_counts] : q_terms) {
      const Monomial& qm = *qm_ptr;
      if (p_deg + monomial_ideg(qm) > out.max_ideg()) continue;
      bool feasible = true;
      int q_total = 0;
      for (const auto& [c, n] : q_counts) {
        q_total += n;
        auto it = p_counts.find(c);
        if (it == p_counts.end() || it->second < n) feasible = false;
      }
      if (!feasible || (p_total - q_total) % 2 != 0) continue;
      if (p_total != q_total && metric.is_zero()) continue;
      RawDiagram u = disjoint_union({monomial_raw(pm), monomial_raw(qm)});
      int p_nodes_end = u.first_leg();
      for (DiagramId id : pm) p_nodes_end += diagram_info(id).rep.leg_count();
      LegTable legs;
      for (int l = u.first_leg(); l < u.node_count(); ++l) {
        if (!s.count(u.color_of(l))) continue;
        (l < p_nodes_end ? legs.p_legs : legs.q_legs).push_back(l);
      }
      Gluer(u, legs, metric, out, pc * q.terms().at(qm)).run();
    }
  }
  return out;
}

bool is_substantial(const Series& x, const ColorSet& s) {
  for (const auto& [m, c] : x.terms()) {
    for (DiagramId id : m) {
      const DiagramInfo& info = diagram_info(id);
      if (info.strut && s.count(info.legs[0]) && s.count(info.legs[1])) return false;
    }
  }
  return true;
}

Series contract_finite(const Series& e, const Series& d, const ColorSet& s) {
  if (!is_substantial(e, s) && !is_substantial(d, s))
    throw DomainError("contraction needs one side without struts inside the glued colors");
  return glue_pairing(e, StrutMatrix(), d, s);
}

Series wick_contract(const StrutMatrix& m, const Series& d, const ColorSet& s) {
  if (!is_substantial(d, s)) throw DomainError("Wick contraction of a series with glued-color struts");
  return glue_pairing(d, m, Series::constant(d.max_ideg()), s);
}

Series gaussian_integrate(const StrutMatrix& l, const Series& p, const std::vector<Color>& s) {
  const DenseMatrix dense = to_dense(l, s, s);
  if (determinant(dense) == 0) throw DomainError("degenerate Gaussian: det L = 0");
  for (const auto& [k, v] : l.entries()) {
    if (std::find(s.begin(), s.end(), k.first) == s.end() || std::find(s.begin(), s.end(), k.second) == s.end())
      throw DomainError("Gaussian matrix has entries outside the integrated colors");
  }
  const StrutMatrix covariance = from_dense(inverse(dense), s) * Rational(-1);
  return wick_contract(covariance, p, ColorSet(s.begin(), s.end()));
}

std::pair<StrutMatrix, Series> integrate_partially(const StrutMatrix& l, const Series& p,
                                                   const std::vector<Color>& s) {
  const ColorSet s_set(s.begin(), s.end());
  std::vector<Color> t;
  for (const Color& c : l.support())
    if (!s_set.count(c)) t.push_back(c);
  const DenseMatrix a = to_dense(l, s, s);
  if (determinant(a) == 0) throw DomainError("degenerate Gaussian: det L = 0");
  const DenseMatrix a_inv = inverse(a);
  const DenseMatrix shift = multiply(a_inv, to_dense(l, s, t), static_cast<int>(t.size()));  // A^{-1} C
  StrutMatrix schur = l.restricted([&](const Color& c) { return !s_set.count(c); });
  const DenseMatrix correction = multiply(to_dense(l, t, s), shift, static_cast<int>(t.size()));  // C^T A^{-1} C
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j) schur.add(t[i], t[j], -correction[i][j]);
  Recoloring sigma;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto& target = sigma[s[i]];
    target.emplace_back(s[i], 1);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (shift[i][j] != 0) target.emplace_back(t[j], -shift[i][j]);
  }
  const Series shifted = recolor_affine(p, sigma, true);
  const StrutMatrix covariance = from_dense(a_inv, s) * Rational(-1);
  return {schur, wick_contract(covariance, shifted, s_set)};
}

Series strut_exponential(const StrutMatrix& m, int max_struts, int max_ideg) {
  Series x(max_ideg);
  for (const auto& [k, v] : m.entries()) {
    const Rational coef = k.first == k.second ? Rational(v / 2) : v;
    x.add_raw(make_strut(k.first, k.second), coef);
  }
  Series result = Series::constant(max_ideg);
  Series power = Series::constant(max_ideg);
  for (int n = 1; n <= max_struts; ++n) {
    power = disjoint_union(power, x);
    power *= Rational(1, n);
    result += power;
  }
  return result;
}

}  // namespace lmo
