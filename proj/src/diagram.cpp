#include "lmo/diagram.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "lmo/error.hpp"

namespace lmo {

namespace {

constexpr std::uint64_t kLegFlag = 1ull << 63;
constexpr std::uint64_t kStrutTag = ~0ull;
constexpr std::uint64_t kKeyMask = (1ull << 56) - 1;

std::uint64_t leg_token(const Color& c) {
  return kLegFlag | (static_cast<std::uint64_t>(c.kind()) << 56) | c.key();
}

Color token_color(std::uint64_t t) {
  return Color::from_key(static_cast<ColorKind>((t >> 56) & 0x7f), t & kKeyMask);
}

int next_slot(int s) { return 3 * (s / 3) + (s % 3 + 1) % 3; }

// Exhaustive traversal search for the least code. Each vertex is labeled on discovery, its
// entering slot placed first; the two remaining slot orders are both tried.
class CanonSearch {
 public:
  explicit CanonSearch(const RawDiagram& d)
      : d_(d),
        n_(d.vertex_count),
        index_of_(n_, -1),
        order_(n_),
        position_of_(d.node_count(), -1) {}

  CanonicalForm run() {
    static const int kPerms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                     {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int s = 0; s < n_; ++s) {
      for (int p = 0; p < 6; ++p) {
        index_of_[s] = 0;
        discovered_ = 1;
        for (int i = 0; i < 3; ++i) {
          order_[0][i] = 3 * s + kPerms[p][i];
          position_of_[3 * s + kPerms[p][i]] = i;
        }
        sign_ = p < 3 ? 1 : -1;
        step(0, 0, have_best_ ? 0 : -1);
        index_of_[s] = -1;
      }
    }
    CanonicalForm out;
    out.code = best_;
    out.sign = (best_plus_ && best_minus_) ? 0 : (best_plus_ ? 1 : -1);
    return out;
  }

 private:
  void step(int k, int p, int cmp) {
    if (k == n_) {
      finish(cmp);
      return;
    }
    if (p == 3) {
      step(k + 1, 0, cmp);
      return;
    }
    const int node = order_[k][p];
    const int m = d_.mate[node];
    if (d_.is_leg(m)) {
      emit(leg_token(d_.color_of(m)), k, p, cmp);
      return;
    }
    const int w = m / 3;
    if (index_of_[w] >= 0) {
      emit(static_cast<std::uint64_t>(index_of_[w]) * 3 + position_of_[m], k, p, cmp);
      return;
    }
    const int idx = discovered_++;
    index_of_[w] = idx;
    const int m1 = next_slot(m);
    const int m2 = next_slot(m1);
    for (int choice = 0; choice < 2; ++choice) {
      order_[idx] = choice == 0 ? std::array<int, 3>{m, m1, m2} : std::array<int, 3>{m, m2, m1};
      for (int i = 0; i < 3; ++i) position_of_[order_[idx][i]] = i;
      const int saved = sign_;
      if (choice == 1) sign_ = -sign_;
      emit(static_cast<std::uint64_t>(idx) * 3, k, p, cmp);
      sign_ = saved;
    }
    index_of_[w] = -1;
    --discovered_;
  }

  void emit(std::uint64_t token, int k, int p, int cmp) {
    const std::size_t pos = code_.size();
    int c = cmp;
    if (have_best_ && prefix_generation_[pos] != generation_) {
      // The best code changed since this prefix was compared with it; compare again.
      const int r = compare_prefix(pos);
      if (r > 0) return;
      c = r;
    }
    prefix_generation_[pos + 1] = generation_;
    if (c == 0) {
      if (token > best_[pos]) return;
      if (token < best_[pos]) c = -1;
    }
    code_.push_back(token);
    step(k, p + 1, c);
    code_.pop_back();
  }

  int compare_prefix(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (code_[i] != best_[i]) return code_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void finish(int cmp) {
    if (have_best_ && prefix_generation_[code_.size()] != generation_) {
      cmp = compare_prefix(code_.size());
      if (cmp > 0) return;
    }
    if (cmp == -1) {
      ++generation_;
      best_ = code_;
      have_best_ = true;
      best_plus_ = sign_ > 0;
      best_minus_ = sign_ < 0;
    } else {
      (sign_ > 0 ? best_plus_ : best_minus_) = true;
    }
  }

  const RawDiagram& d_;
  int n_;
  std::vector<int> index_of_;
  std::vector<std::array<int, 3>> order_;
  std::vector<int> position_of_;
  int discovered_ = 0;
  int sign_ = 1;
  Code code_;
  Code best_;
  bool have_best_ = false;
  bool best_plus_ = false;
  bool best_minus_ = false;
  // prefix_generation_[len]: value of generation_ when the prefix of that length was
  // last compared against best_.
  std::uint64_t generation_ = 0;
  std::vector<std::uint64_t> prefix_generation_ = std::vector<std::uint64_t>(3 * n_ + 2, 0);
};

class Registry {
 public:
  DiagramId intern(const Code& code) {
    {
      std::shared_lock lock(mutex_);
      auto it = by_code_.find(code);
      if (it != by_code_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = by_code_.find(code);
    if (it != by_code_.end()) return it->second;
    auto info = std::make_unique<DiagramInfo>();
    info->id = static_cast<DiagramId>(infos_.size());
    info->code = code;
    info->rep = from_code(code);
    const int n = info->rep.vertex_count;
    const int legs = info->rep.leg_count();
    info->strut = n == 0;
    info->ideg = n;
    info->betti = (n - legs) / 2 + 1;
    info->legs = info->rep.sorted_legs();
    by_code_.emplace(code, info->id);
    infos_.push_back(std::move(info));
    return infos_.back()->id;
  }

  const DiagramInfo& get(DiagramId id) const {
    std::shared_lock lock(mutex_);
    if (id >= infos_.size()) throw InvariantError("unknown diagram id");
    return *infos_[id];
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return infos_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Code, DiagramId, CodeHash> by_code_;
  std::vector<std::unique_ptr<DiagramInfo>> infos_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

void RawDiagram::validate() const {
  if (vertex_count < 0) throw InvariantError("negative vertex count");
  if (node_count() != 3 * vertex_count + leg_count())
    throw InvariantError("mate table does not match vertex and leg counts");
  for (int i = 0; i < node_count(); ++i) {
    const int m = mate[i];
    if (m < 0 || m >= node_count() || m == i || mate[m] != i)
      throw InvariantError("edge table is not a perfect matching");
  }
}

std::vector<RawDiagram> RawDiagram::components() const {
  const int total = node_count();
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 0; i < total; ++i) join(i, mate[i]);
  for (int v = 0; v < vertex_count; ++v) {
    join(3 * v, 3 * v + 1);
    join(3 * v, 3 * v + 2);
  }
  std::vector<int> root_order;
  std::unordered_map<int, int> slot_of_root;
  for (int i = 0; i < total; ++i) {
    const int r = find(i);
    if (slot_of_root.emplace(r, static_cast<int>(root_order.size())).second) root_order.push_back(r);
  }
  std::vector<RawDiagram> out(root_order.size());
  // New numbering per component: its vertices first, then its legs.
  std::vector<int> new_index(total, -1);
  for (int v = 0; v < vertex_count; ++v) {
    RawDiagram& c = out[slot_of_root[find(3 * v)]];
    const int nv = c.vertex_count++;
    for (int k = 0; k < 3; ++k) new_index[3 * v + k] = 3 * nv + k;
  }
  for (int l = first_leg(); l < total; ++l) {
    RawDiagram& c = out[slot_of_root[find(l)]];
    new_index[l] = -2 - static_cast<int>(c.leg_colors.size());
    c.leg_colors.push_back(color_of(l));
  }
  for (auto& c : out) c.mate.assign(3 * c.vertex_count + c.leg_count(), -1);
  auto resolve = [&](RawDiagram& c, int node) {
    const int ni = new_index[node];
    return ni >= 0 ? ni : 3 * c.vertex_count + (-2 - ni);
  };
  for (int i = 0; i < total; ++i) {
    RawDiagram& c = out[slot_of_root[find(i)]];
    c.mate[resolve(c, i)] = resolve(c, mate[i]);
  }
  return out;
}

ColorMultiset RawDiagram::sorted_legs() const {
  ColorMultiset legs = leg_colors;
  std::sort(legs.begin(), legs.end());
  return legs;
}

RawDiagram make_strut(Color a, Color b) {
  RawDiagram d;
  d.mate = {1, 0};
  d.leg_colors = {a, b};
  return d;
}

RawDiagram make_y(Color a, Color b, Color c) {
  RawDiagram d;
  d.vertex_count = 1;
  d.mate = {3, 4, 5, 0, 1, 2};
  d.leg_colors = {a, b, c};
  return d;
}

RawDiagram make_h(Color a, Color b, Color c, Color d) {
  RawDiagram r;
  r.vertex_count = 2;
  // u = (a, b, e) in slots 0..2, v = (e, c, d) in slots 3..5.
  r.mate = {6, 7, 3, 2, 8, 9, 0, 1, 4, 5};
  r.leg_colors = {a, b, c, d};
  return r;
}

RawDiagram make_bubble(Color a, Color b) {
  RawDiagram d;
  d.vertex_count = 2;
  // u = (a, p, q), v = (b, q', p').
  d.mate = {6, 5, 4, 7, 2, 1, 0, 3};
  d.leg_colors = {a, b};
  return d;
}

RawDiagram make_theta() {
  RawDiagram d;
  d.vertex_count = 2;
  // u = (x, y, z), v = (x', z', y').
  d.mate = {3, 5, 4, 0, 2, 1};
  return d;
}

RawDiagram disjoint_union(const std::vector<RawDiagram>& parts) {
  RawDiagram out;
  for (const auto& p : parts) out.vertex_count += p.vertex_count;
  int vertex_base = 0;
  int leg_base = 3 * out.vertex_count;
  std::vector<int> slot_base, leg_start;
  for (const auto& p : parts) {
    slot_base.push_back(3 * vertex_base);
    leg_start.push_back(leg_base);
    vertex_base += p.vertex_count;
    leg_base += p.leg_count();
  }
  out.mate.assign(leg_base, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    auto map = [&](int node) {
      return p.is_leg(node) ? leg_start[i] + (node - p.first_leg()) : slot_base[i] + node;
    };
    for (int k = 0; k < p.node_count(); ++k) out.mate[map(k)] = map(p.mate[k]);
    out.leg_colors.insert(out.leg_colors.end(), p.leg_colors.begin(), p.leg_colors.end());
  }
  return out;
}

std::size_t CodeHash::operator()(const Code& code) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto t : code) {
    h ^= t + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

CanonicalForm canonicalize(const RawDiagram& d) {
  d.validate();
  if (d.vertex_count == 0) {
    if (d.leg_count() != 2) throw InvariantError("not a connected diagram");
    auto a = leg_token(d.leg_colors[0]);
    auto b = leg_token(d.leg_colors[1]);
    if (a > b) std::swap(a, b);
    return CanonicalForm{{kStrutTag, a, b}, 1};
  }
  for (int i = d.first_leg(); i < d.node_count(); ++i)
    if (d.is_leg(d.mate[i])) throw InvariantError("not a connected diagram");
  if (d.components().size() != 1) throw InvariantError("not a connected diagram");
  return CanonSearch(d).run();
}

RawDiagram from_code(const Code& code) {
  if (code.empty()) throw InvariantError("empty diagram code");
  if (code[0] == kStrutTag) {
    if (code.size() != 3) throw InvariantError("bad strut code");
    return make_strut(token_color(code[1]), token_color(code[2]));
  }
  if (code.size() % 3 != 0) throw InvariantError("bad diagram code length");
  RawDiagram d;
  d.vertex_count = static_cast<int>(code.size() / 3);
  for (auto t : code)
    if (t & kLegFlag) d.leg_colors.push_back(token_color(t));
  d.mate.assign(3 * d.vertex_count + d.leg_count(), -1);
  int leg = d.first_leg();
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int slot = static_cast<int>(i);
    if (code[i] & kLegFlag) {
      d.mate[slot] = leg;
      d.mate[leg] = slot;
      ++leg;
    } else {
      d.mate[slot] = static_cast<int>(code[i]);
    }
  }
  d.validate();
  return d;
}

DiagramId intern(const Code& code) { return registry().intern(code); }

const DiagramInfo& diagram_info(DiagramId id) { return registry().get(id); }

SignedId identify(const RawDiagram& connected) {
  CanonicalForm f = canonicalize(connected);
  if (f.sign == 0) return SignedId{0, 0};
  return SignedId{intern(f.code), f.sign};
}

std::size_t registry_size() { return registry().size(); }

}  // namespace lmo
