#include "lmo/reduce.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "lmo/error.hpp"

namespace lmo {

namespace {

std::atomic<int> g_ideg_limit{6};

int next_slot(int s) { return 3 * (s / 3) + (s % 3 + 1) % 3; }

struct Memo {
  std::shared_mutex mutex;
  std::unordered_map<DiagramId, std::unique_ptr<Expansion>> expansions;
  std::map<std::pair<int, ColorMultiset>, std::unique_ptr<SectorBasis>> sectors;
};

Memo& memo() {
  static Memo m;
  return m;
}

void check_limit(int ideg) {
  if (ideg > ideg_limit()) {
    throw DomainError("i-deg " + std::to_string(ideg) + " exceeds the enumeration limit " +
                      std::to_string(ideg_limit()));
  }
}

// Reduced row echelon form over the rationals, in place. Returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// IHX class of a diagram: all nonzero canonical diagrams reachable by IHX moves, with the
// relations collected along the way. Each relation is a sparse signed combination.
void reduce_class(DiagramId seed) {
  const DiagramInfo& seed_info = diagram_info(seed);
  check_limit(seed_info.ideg);
  std::vector<DiagramId> members{seed};
  std::unordered_set<DiagramId> seen{seed};
  std::vector<std::map<DiagramId, int>> relations;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const RawDiagram& d = diagram_info(members[i]).rep;
    for (int s = 0; s < 3 * d.vertex_count; ++s) {
      const int m = d.mate[s];
      if (d.is_leg(m) || m / 3 == s / 3 || m < s) continue;
      std::map<DiagramId, int> rel;
      for (const auto& t : ihx_terms(d, s)) {
        SignedId sid = identify(t);
        if (sid.sign == 0) continue;
        rel[sid.id] += sid.sign;
        if (seen.insert(sid.id).second) members.push_back(sid.id);
      }
      for (auto it = rel.begin(); it != rel.end();) it = it->second == 0 ? rel.erase(it) : std::next(it);
      if (!rel.empty()) relations.push_back(std::move(rel));
    }
  }
  // Larger codes first, so that the free columns are the least codes.
  std::sort(members.begin(), members.end(), [](DiagramId a, DiagramId b) {
    return diagram_info(a).code > diagram_info(b).code;
  });
  std::unordered_map<DiagramId, std::size_t> column;
  for (std::size_t c = 0; c < members.size(); ++c) column[members[c]] = c;
  std::vector<std::vector<Rational>> mat;
  mat.reserve(relations.size());
  for (const auto& rel : relations) {
    std::vector<Rational> row(members.size());
    for (const auto& [id, coef] : rel) row[column[id]] = coef;
    mat.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(mat, members.size());
  std::vector<bool> is_pivot(members.size(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::unordered_map<DiagramId, std::unique_ptr<Expansion>> result;
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (!is_pivot[c]) result[members[c]] = std::make_unique<Expansion>(Expansion{{members[c], 1}});
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto e = std::make_unique<Expansion>();
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (is_pivot[c] || mat[r][c] == 0) continue;
      e->emplace_back(members[c], -mat[r][c]);
    }
    std::sort(e->begin(), e->end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    result[members[pivots[r]]] = std::move(e);
  }
  std::unique_lock lock(memo().mutex);
  for (auto& [id, e] : result) memo().expansions.emplace(id, std::move(e));
}

// Connected diagrams with n vertices and the given legs, each produced at least once.
// Vertices are touched in order and entered through slot 0; equal-colored legs are
// used in order.
class SectorEnumerator {
 public:
  SectorEnumerator(int n, const ColorMultiset& legs) : n_(n), legs_(legs) {
    d_.vertex_count = n;
    d_.leg_colors = legs;
    d_.mate.assign(3 * n + static_cast<int>(legs.size()), -1);
  }

  std::vector<DiagramId> run() {
    if (n_ == 0) {
      if (legs_.size() == 2) out_.insert(identify(make_strut(legs_[0], legs_[1])).id);
    } else {
      touched_ = 1;
      recurse();
    }
    return {out_.begin(), out_.end()};
  }

 private:
  void link(int a, int b) {
    d_.mate[a] = b;
    d_.mate[b] = a;
  }
  void unlink(int a, int b) {
    d_.mate[a] = -1;
    d_.mate[b] = -1;
  }

  void recurse() {
    int s = -1;
    for (int i = 0; i < 3 * touched_; ++i) {
      if (d_.mate[i] < 0) {
        s = i;
        break;
      }
    }
    if (s < 0) {
      if (touched_ != n_) return;
      for (int l = d_.first_leg(); l < d_.node_count(); ++l)
        if (d_.mate[l] < 0) return;
      SignedId sid = identify(d_);
      if (sid.sign != 0) out_.insert(sid.id);
      return;
    }
    // A leg: first unused of each color.
    for (int l = d_.first_leg(); l < d_.node_count(); ++l) {
      if (d_.mate[l] >= 0) continue;
      bool earlier = false;
      for (int k = d_.first_leg(); k < l; ++k)
        if (d_.mate[k] < 0 && d_.color_of(k) == d_.color_of(l)) earlier = true;
      if (earlier) continue;
      link(s, l);
      recurse();
      unlink(s, l);
    }
    // A free slot on another touched vertex.
    for (int t = s + 1; t < 3 * touched_; ++t) {
      if (d_.mate[t] >= 0 || t / 3 == s / 3) continue;
      link(s, t);
      recurse();
      unlink(s, t);
    }
    if (touched_ < n_) {
      const int t = 3 * touched_;
      ++touched_;
      link(s, t);
      recurse();
      unlink(s, t);
      --touched_;
    }
  }

  int n_;
  ColorMultiset legs_;
  RawDiagram d_;
  int touched_ = 0;
  std::set<DiagramId> out_;
};

}  // namespace

int ideg_limit() { return g_ideg_limit.load(); }

void set_ideg_limit(int limit) {
  if (limit < 0) throw DomainError("negative i-deg limit");
  g_ideg_limit.store(limit);
}

std::array<RawDiagram, 3> ihx_terms(const RawDiagram& d, int a) {
  if (a < 0 || a >= 3 * d.vertex_count || d.is_leg(d.mate[a]) || d.mate[a] / 3 == a / 3)
    throw InvariantError("IHX needs an edge between two distinct vertices");
  const int b = d.mate[a];
  // Stub slots around the edge: u = (x1, x2, a), v = (b, y1, y2).
  const int sx1 = next_slot(a), sx2 = next_slot(sx1);
  const int sy1 = next_slot(b), sy2 = next_slot(sy1);
  const std::array<int, 4> stubs{sx1, sx2, sy1, sy2};
  std::array<int, 4> far{};
  for (int k = 0; k < 4; ++k) far[k] = d.mate[stubs[k]];
  // placement[k] = slot that receives stub k; the stub order is x1, x2, y1, y2.
  const std::array<std::array<int, 4>, 3> placements{{
      {sx1, sx2, sy1, sy2},  // u = (x1, x2, a), v = (b, y1, y2)
      {sy1, sx1, sx2, sy2},  // u = (x2, y1, a), v = (b, x1, y2)
      {sx2, sy1, sx1, sy2},  // u = (y1, x1, a), v = (b, x2, y2)
  }};
  std::array<RawDiagram, 3> out;
  for (int t = 0; t < 3; ++t) {
    RawDiagram r = d;
    const auto& place = placements[t];
    auto moved = [&](int node) {
      for (int k = 0; k < 4; ++k)
        if (stubs[k] == node) return place[k];
      return node;
    };
    for (int k = 0; k < 4; ++k) {
      const int target = moved(far[k]);
      r.mate[place[k]] = target;
      r.mate[target] = place[k];
    }
    out[t] = std::move(r);
  }
  return out;
}

const Expansion& reduce_connected(DiagramId id) {
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().expansions.find(id);
    if (it != memo().expansions.end()) return *it->second;
  }
  const DiagramInfo& info = diagram_info(id);
  if (info.strut) {
    std::unique_lock lock(memo().mutex);
    auto& slot = memo().expansions[id];
    if (!slot) slot = std::make_unique<Expansion>(Expansion{{id, 1}});
    return *slot;
  }
  reduce_class(id);
  std::shared_lock lock(memo().mutex);
  return *memo().expansions.at(id);
}

Expansion reduce_raw(const RawDiagram& connected) {
  SignedId sid = identify(connected);
  if (sid.sign == 0) return {};
  Expansion e = reduce_connected(sid.id);
  for (auto& [id, c] : e) c *= sid.sign;
  return e;
}

const SectorBasis& sector_basis(int ideg, ColorMultiset legs) {
  check_limit(ideg);
  std::sort(legs.begin(), legs.end());
  auto key = std::make_pair(ideg, legs);
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().sectors.find(key);
    if (it != memo().sectors.end()) return *it->second;
  }
  auto sb = std::make_unique<SectorBasis>();
  sb->ideg = ideg;
  sb->legs = legs;
  sb->all = SectorEnumerator(ideg, legs).run();
  std::set<DiagramId> basis;
  for (DiagramId id : sb->all)
    for (const auto& [b, c] : reduce_connected(id)) basis.insert(b);
  sb->basis.assign(basis.begin(), basis.end());
  std::sort(sb->basis.begin(), sb->basis.end(), [](DiagramId a, DiagramId b) {
    return diagram_info(a).code < diagram_info(b).code;
  });
  std::unique_lock lock(memo().mutex);
  auto [it, inserted] = memo().sectors.emplace(key, std::move(sb));
  return *it->second;
}

}  // namespace lmo
