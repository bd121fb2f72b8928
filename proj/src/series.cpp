#include "lmo/series.hpp"

#include <algorithm>

#include "lmo/error.hpp"

namespace lmo {

int monomial_ideg(const Monomial& m) {
  int total = 0;
  for (DiagramId id : m) total += diagram_info(id).ideg;
  return total;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Series Series::constant(int max_ideg, const Rational& c) {
  Series s(max_ideg);
  s.add_monomial({}, c);
  return s;
}

Series Series::from_raw(int max_ideg, const RawDiagram& d, const Rational& c) {
  Series s(max_ideg);
  s.add_raw(d, c);
  return s;
}

bool Series::is_strut_free() const {
  for (const auto& [m, c] : terms_)
    for (DiagramId id : m)
      if (diagram_info(id).strut) return false;
  return true;
}

void Series::add_raw(const RawDiagram& d, const Rational& c) {
  if (c == 0) return;
  d.validate();
  if (d.vertex_count > max_ideg_) return;
  std::vector<Expansion> factors;
  for (const RawDiagram& part : d.components()) {
    Expansion e = reduce_raw(part);
    if (e.empty()) return;
    factors.push_back(std::move(e));
  }
  // Cartesian product of the component expansions.
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    Monomial m;
    Rational coef = c;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      m.push_back(factors[i][pick[i]].first);
      coef *= factors[i][pick[i]].second;
    }
    std::sort(m.begin(), m.end());
    add_monomial(m, coef);
    std::size_t i = 0;
    while (i < factors.size() && ++pick[i] == factors[i].size()) pick[i++] = 0;
    if (i == factors.size()) break;
  }
}

void Series::add_monomial(const Monomial& m, const Rational& c_in) {
  if (c_in == 0 || monomial_ideg(m) > max_ideg_) return;
  Rational c = c_in;
  c.canonicalize();
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Series::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Series Series::truncated(int max_ideg) const {
  Series out(max_ideg);
  for (const auto& [m, c] : terms_) out.add_monomial(m, c);
  return out;
}

Series Series::homogeneous_part(int ideg) const {
  Series out(max_ideg_);
  for (const auto& [m, c] : terms_)
    if (monomial_ideg(m) == ideg) out.terms_.emplace(m, c);
  return out;
}

void Series::check_same_degree(const Series& other) const {
  if (max_ideg_ != other.max_ideg_)
    throw DomainError("truncation degrees differ: " + std::to_string(max_ideg_) + " vs " +
                      std::to_string(other.max_ideg_));
}

Series& Series::operator+=(const Series& other) {
  check_same_degree(other);
  for (const auto& [m, c] : other.terms_) add_monomial(m, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  check_same_degree(other);
  for (const auto& [m, c] : other.terms_) add_monomial(m, -c);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) {
    q *= c;
    q.canonicalize();
  }
  return *this;
}

bool Series::operator==(const Series& other) const {
  check_same_degree(other);
  return terms_ == other.terms_;
}

Series disjoint_union(const Series& a, const Series& b) {
  if (a.max_ideg() != b.max_ideg())
    throw DomainError("disjoint union of series with different truncation degrees");
  Series out(a.max_ideg());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = monomial_ideg(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (da + monomial_ideg(mb) > a.max_ideg()) continue;
      out.add_monomial(monomial_product(ma, mb), ca * cb);
    }
  }
  return out;
}

namespace {

void require_positive_degree(const Series& x, const char* what) {
  for (const auto& [m, c] : x.terms()) {
    if (!m.empty() && monomial_ideg(m) == 0)
      throw DomainError(std::string(what) + " of a series with strut monomials does not terminate");
  }
}

}  // namespace

Series exp_union(const Series& x) {
  if (x.constant_term() != 0) throw DomainError("exp_union needs a zero constant term");
  require_positive_degree(x, "exp_union");
  Series result = Series::constant(x.max_ideg());
  Series power = Series::constant(x.max_ideg());
  for (int k = 1; k <= x.max_ideg(); ++k) {
    power = disjoint_union(power, x);
    power *= Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

Series log_union(const Series& x) {
  if (x.constant_term() != 1) throw DomainError("log_union needs constant term 1");
  require_positive_degree(x, "log_union");
  Series y = x - Series::constant(x.max_ideg());
  Series result(x.max_ideg());
  Series power = Series::constant(x.max_ideg());
  for (int k = 1; k <= x.max_ideg(); ++k) {
    power = disjoint_union(power, y);
    if (power.is_zero()) break;
    result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return result;
}

Series connected_part(const Series& x) {
  Series out(x.max_ideg());
  for (const auto& [m, c] : x.terms())
    if (m.size() == 1) out.add_monomial(m, c);
  return out;
}

bool is_group_like(const Series& x) {
  if (x.constant_term() != 1) return false;
  Series l = log_union(x);
  for (const auto& [m, c] : l.terms())
    if (m.size() != 1) return false;
  return true;
}

Series tree_reduce(const Series& x) {
  Series out(x.max_ideg());
  for (const auto& [m, c] : x.terms()) {
    bool tree = true;
    for (DiagramId id : m)
      if (diagram_info(id).betti > 0) tree = false;
    if (tree) out.add_monomial(m, c);
  }
  return out;
}

Rational coefficient(const Series& x, const RawDiagram& monomial) {
  Series probe(std::max(x.max_ideg(), monomial.vertex_count));
  probe.add_raw(monomial, 1);
  if (probe.terms().size() != 1 || abs(probe.terms().begin()->second) != 1)
    throw DomainError("monomial is not in reduced normal form");
  const auto& [m, sign] = *probe.terms().begin();
  return sign * x.coefficient_of(m);
}

Series recolor_affine(const Series& x, const Recoloring& sigma, bool keep_missing) {
  const int max = x.max_ideg();
  std::map<DiagramId, Series> cache;
  auto recolor_component = [&](DiagramId id) -> const Series& {
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    const RawDiagram& d = diagram_info(id).rep;
    std::vector<std::vector<std::pair<Color, Rational>>> choices;
    for (const Color& c : d.leg_colors) {
      auto s = sigma.find(c);
      if (s != sigma.end()) {
        choices.push_back(s->second);
      } else if (keep_missing) {
        choices.push_back({{c, 1}});
      } else {
        throw DomainError("recoloring undefined on color " + c.to_string());
      }
    }
    Series out(max);
    bool empty = false;
    for (const auto& ch : choices) empty = empty || ch.empty();
    if (!empty) {
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        RawDiagram r = d;
        Rational coef = 1;
        for (std::size_t i = 0; i < choices.size(); ++i) {
          r.leg_colors[i] = choices[i][pick[i]].first;
          coef *= choices[i][pick[i]].second;
        }
        out.add_raw(r, coef);
        std::size_t i = 0;
        while (i < choices.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == choices.size()) break;
      }
    }
    return cache.emplace(id, std::move(out)).first->second;
  };
  Series result(max);
  for (const auto& [m, c] : x.terms()) {
    Series term = Series::constant(max, c);
    for (DiagramId id : m) {
      term = disjoint_union(term, recolor_component(id));
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

Recoloring renaming(const std::map<Color, Color>& names) {
  Recoloring r;
  for (const auto& [from, to] : names) r[from] = {{to, 1}};
  return r;
}

}  // namespace lmo
