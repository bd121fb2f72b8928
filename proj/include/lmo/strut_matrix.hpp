#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmo/color.hpp"
#include "lmo/rational.hpp"

namespace lmo {

/// Symmetric rational matrix indexed by colors, stored sparsely.
///
/// It stands for the strut exponential [M/2]: a matched pair of legs colored (i, j) has
/// weight M(i, j), so strut(i, j) has coefficient M(i, j) off the diagonal and M(i, i)/2 on it.
class StrutMatrix {
 public:
  using Key = std::pair<Color, Color>;  // first <= second

  Rational at(const Color& a, const Color& b) const;
  void set(const Color& a, const Color& b, const Rational& value);
  void add(const Color& a, const Color& b, const Rational& value);

  const std::map<Key, Rational>& entries() const { return entries_; }
  std::set<Color> support() const;
  bool is_zero() const { return entries_.empty(); }

  /// Entries whose two colors both satisfy `keep`.
  template <typename Pred>
  StrutMatrix restricted(Pred keep) const {
    StrutMatrix out;
    for (const auto& [k, v] : entries_)
      if (keep(k.first) && keep(k.second)) out.entries_.emplace(k, v);
    return out;
  }

  StrutMatrix& operator+=(const StrutMatrix& other);
  friend StrutMatrix operator+(StrutMatrix a, const StrutMatrix& b) { return a += b; }
  StrutMatrix operator*(const Rational& c) const;
  bool operator==(const StrutMatrix& other) const { return entries_ == other.entries_; }

 private:
  static Key key(const Color& a, const Color& b) { return a <= b ? Key{a, b} : Key{b, a}; }
  std::map<Key, Rational> entries_;
};

/// "[1-|1+ = 1; 1-|2- = -1]" with entries sorted; "[]" for zero.
std::string format_matrix(const StrutMatrix& m);
StrutMatrix parse_matrix(std::string_view text);

/// "[colors=c1,c2,...; r11 r12 ...; r21 ...]" over the given colors.
std::string format_dense(const StrutMatrix& m, const std::vector<Color>& colors);

using DenseMatrix = std::vector<std::vector<Rational>>;

DenseMatrix to_dense(const StrutMatrix& m, const std::vector<Color>& rows, const std::vector<Color>& cols);
/// Builds a symmetric StrutMatrix from a square matrix over `colors`; throws if not symmetric.
StrutMatrix from_dense(const DenseMatrix& m, const std::vector<Color>& colors);

/// Exact determinant and inverse by fraction-free elimination on the cleared-denominator
/// integer matrix. inverse throws DomainError when singular.
Rational determinant(const DenseMatrix& m);
DenseMatrix inverse(const DenseMatrix& m);
/// cols < 0 takes the column count from b, which needs at least one row.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, int cols = -1);

}  // namespace lmo
