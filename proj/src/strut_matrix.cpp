#include "lmo/strut_matrix.hpp"

#include <sstream>

#include "lmo/error.hpp"

namespace lmo {

Rational StrutMatrix::at(const Color& a, const Color& b) const {
  auto it = entries_.find(key(a, b));
  return it == entries_.end() ? Rational(0) : it->second;
}

void StrutMatrix::set(const Color& a, const Color& b, const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v == 0) {
    entries_.erase(key(a, b));
  } else {
    entries_[key(a, b)] = v;
  }
}

void StrutMatrix::add(const Color& a, const Color& b, const Rational& value) {
  set(a, b, at(a, b) + value);
}

std::set<Color> StrutMatrix::support() const {
  std::set<Color> out;
  for (const auto& [k, v] : entries_) {
    out.insert(k.first);
    out.insert(k.second);
  }
  return out;
}

StrutMatrix& StrutMatrix::operator+=(const StrutMatrix& other) {
  for (const auto& [k, v] : other.entries_) add(k.first, k.second, v);
  return *this;
}

StrutMatrix StrutMatrix::operator*(const Rational& c) const {
  StrutMatrix out;
  for (const auto& [k, v] : entries_) out.set(k.first, k.second, v * c);
  return out;
}

std::string format_matrix(const StrutMatrix& m) {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, v] : m.entries()) {
    if (!first) out += "; ";
    first = false;
    out += k.first.to_string() + "|" + k.second.to_string() + " = " + to_string(v);
  }
  return out + "]";
}

StrutMatrix parse_matrix(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("expected a bracketed matrix", 0);
  body = body.substr(1, body.size() - 2);
  StrutMatrix m;
  std::size_t offset = 1;
  while (!trim(body).empty()) {
    const std::size_t semi = body.find(';');
    std::string_view entry = body.substr(0, semi);
    const std::size_t bar = entry.find('|');
    const std::size_t eq = entry.find('=');
    if (bar == std::string_view::npos || eq == std::string_view::npos || eq < bar)
      throw ParseError("expected 'a|b = q'", offset);
    try {
      Color a = Color::parse(trim(entry.substr(0, bar)));
      Color b = Color::parse(trim(entry.substr(bar + 1, eq - bar - 1)));
      Rational q = parse_rational(trim(entry.substr(eq + 1)));
      if (m.at(a, b) != 0) throw ParseError("entry listed twice", offset);
      m.set(a, b, q);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), offset);
    }
    if (semi == std::string_view::npos) break;
    body.remove_prefix(semi + 1);
    offset += semi + 1;
  }
  return m;
}

std::string format_dense(const StrutMatrix& m, const std::vector<Color>& colors) {
  std::ostringstream out;
  out << "[colors=";
  for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? "," : "") << colors[i].to_string();
  for (const auto& a : colors) {
    out << ";";
    for (const auto& b : colors) out << " " << to_string(m.at(a, b));
  }
  out << "]";
  return out.str();
}

DenseMatrix to_dense(const StrutMatrix& m, const std::vector<Color>& rows, const std::vector<Color>& cols) {
  DenseMatrix out(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m.at(rows[i], cols[j]);
  return out;
}

StrutMatrix from_dense(const DenseMatrix& m, const std::vector<Color>& colors) {
  StrutMatrix out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i; j < colors.size(); ++j) {
      if (m[i][j] != m[j][i]) throw InvariantError("matrix is not symmetric");
      out.set(colors[i], colors[j], m[i][j]);
    }
  }
  return out;
}

namespace {

// Integer matrix and the common denominator used to clear the rational one.
std::pair<std::vector<std::vector<Integer>>, Integer> clear_denominators(const DenseMatrix& m) {
  Integer den = 1;
  for (const auto& row : m)
    for (const auto& q : row) den = lcm(den, Integer(q.get_den()));
  std::vector<std::vector<Integer>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& q : m[i]) out[i].push_back(Integer(q.get_num() * (den / q.get_den())));
  return {out, den};
}

void require_square(const DenseMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix is not square");
}

}  // namespace

Rational determinant(const DenseMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  auto [a, den] = clear_denominators(m);
  // Bareiss elimination: every division is exact.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        if (t % prev != 0) throw InvariantError("inexact division in fraction-free elimination");
        a[i][j] = t / prev;
      }
    }
    prev = a[k][k];
  }
  Rational det(sign * a[n - 1][n - 1]);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= den;
  det /= Rational(scale);
  det.canonicalize();
  return det;
}

DenseMatrix inverse(const DenseMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  auto [a, den] = clear_denominators(m);
  // Fraction-free Gauss-Jordan on [a | I].
  std::vector<std::vector<Integer>> aug(n, std::vector<Integer>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && aug[p][k] == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(aug[p], aug[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Integer t = aug[i][j] * aug[k][k] - aug[i][k] * aug[k][j];
        if (t % prev != 0) throw InvariantError("inexact division in fraction-free elimination");
        aug[i][j] = t / prev;
      }
      aug[i][k] = 0;
    }
    prev = aug[k][k];
  }
  // Now aug = [d*I | adj-like], with d = aug[k][k] for every k.
  DenseMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational q(aug[i][n + j] * den, aug[i][i]);
      q.canonicalize();
      inv[i][j] = q;
    }
  }
  return inv;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, int explicit_cols) {
  const std::size_t inner = b.size();
  const std::size_t cols = explicit_cols >= 0 ? explicit_cols : inner == 0 ? 0 : b[0].size();
  DenseMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw DomainError("matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace lmo
