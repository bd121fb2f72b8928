#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmo/diagram.hpp"
#include "lmo/error.hpp"
#include "lmo/rational.hpp"
#include "lmo/reduce.hpp"

namespace lmo {

/// ⊔-monomial: sorted multiset of reduced basis diagrams. Empty = the empty diagram.
using Monomial = std::vector<DiagramId>;

int monomial_ideg(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Rational combination of ⊔-monomials in reduced normal form, truncated at i-deg max_ideg.
///
/// Strut components are allowed in intermediate computations; `is_strut_free` tells
/// whether the series lies in the strut-free part.
class Series {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Series(int max_ideg = 0) : max_ideg_(max_ideg) {
    if (max_ideg < 0) throw DomainError("negative truncation degree");
  }

  /// c times the empty diagram.
  static Series constant(int max_ideg, const Rational& c = 1);
  /// c times a (possibly disconnected) raw diagram, reduced.
  static Series from_raw(int max_ideg, const RawDiagram& d, const Rational& c = 1);

  int max_ideg() const { return max_ideg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_strut_free() const;

  void add_raw(const RawDiagram& d, const Rational& c);
  /// m must already be a sorted monomial of basis diagrams.
  void add_monomial(const Monomial& m, const Rational& c);

  Rational constant_term() const { return coefficient_of({}); }
  Rational coefficient_of(const Monomial& m) const;

  Series truncated(int max_ideg) const;
  Series homogeneous_part(int ideg) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  Series operator-() const { return Rational(-1) * *this; }

  /// Compares terms; truncation degrees must agree.
  bool operator==(const Series& other) const;

 private:
  void check_same_degree(const Series& other) const;

  int max_ideg_;
  Terms terms_;
};

Series disjoint_union(const Series& a, const Series& b);
Series exp_union(const Series& x);
Series log_union(const Series& x);

Series connected_part(const Series& x);
bool is_group_like(const Series& x);

/// Drops monomials having a component with a cycle.
Series tree_reduce(const Series& x);

/// Coefficient of a monomial given as a raw diagram; the raw diagram must reduce to a
/// single basis monomial up to sign. Throws DomainError otherwise.
Rational coefficient(const Series& x, const RawDiagram& monomial);

/// Leg substitution: each leg colored c becomes the combination sigma[c]; an empty
/// combination deletes the diagram. Colors missing from sigma are an error unless
/// `keep_missing`, in which case they are left alone.
using Recoloring = std::map<Color, std::vector<std::pair<Color, Rational>>>;
Series recolor_affine(const Series& x, const Recoloring& sigma, bool keep_missing = false);

/// Convenience: recolor by a map to single colors.
Recoloring renaming(const std::map<Color, Color>& names);

}  // namespace lmo
