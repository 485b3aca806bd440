// Exact orthogonal maps and finite groups of them: closure enumeration,
// orbit counting, subgroup indices, Weyl and full automorphism groups of a
// root system. Group elements are ambient matrices; maps reconstructed from
// images on a subspace act as the identity on its orthogonal complement.
#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "likit/root_system.hpp"

namespace likit {

class OrthogonalMap {
 public:
  OrthogonalMap() = default;
  explicit OrthogonalMap(Mat m) : m_(std::move(m)) {
    if (!is_orthogonal_matrix(m_)) throw value_error("matrix is not orthogonal");
  }
  static OrthogonalMap identity(int dim) { return OrthogonalMap(Mat::Identity(dim, dim)); }

  const Mat& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  Vec apply(const Vec& v) const { return m_ * v; }
  OrthogonalMap inverse() const { return OrthogonalMap(m_.transpose()); }
  std::string key() const { return key_string(m_); }

  friend OrthogonalMap operator*(const OrthogonalMap& a, const OrthogonalMap& b) {
    OrthogonalMap r;
    r.m_ = a.m_ * b.m_;  // product of orthogonal maps, no re-check needed
    return r;
  }
  friend bool operator==(const OrthogonalMap& a, const OrthogonalMap& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  Mat m_;
};

struct FiniteOrthogonalGroup {
  std::vector<OrthogonalMap> generators;
  std::optional<std::vector<OrthogonalMap>> elements;  // sorted by key when present
  Int order = 0;

  bool materialized() const { return elements.has_value(); }
  bool contains(const OrthogonalMap& g) const {
    if (!elements) throw value_error("group elements are not materialized");
    auto it = std::lower_bound(elements->begin(), elements->end(), g,
                               [](const OrthogonalMap& a, const OrthogonalMap& b) {
                                 return a.key() < b.key();
                               });
    return it != elements->end() && *it == g;
  }
};

constexpr long kDefaultGroupCap = 1'000'000;

// Breadth-first closure of the generated group; throws a resource error when
// the cap is exceeded. The returned elements are sorted by canonical key, so
// the result set is deterministic regardless of generator order.
inline std::vector<OrthogonalMap> close_group(const std::vector<OrthogonalMap>& gens,
                                              long cap = kDefaultGroupCap) {
  if (gens.empty()) throw value_error("close_group: no generators");
  const int d = gens.front().dim();
  std::set<std::string> seen;
  std::deque<OrthogonalMap> queue;
  std::vector<OrthogonalMap> out;
  OrthogonalMap id = OrthogonalMap::identity(d);
  seen.insert(id.key());
  queue.push_back(id);
  out.push_back(id);
  while (!queue.empty()) {
    OrthogonalMap g = queue.front();
    queue.pop_front();
    for (const OrthogonalMap& s : gens) {
      OrthogonalMap h = s * g;
      if (seen.insert(h.key()).second) {
        if (static_cast<long>(seen.size()) > cap)
          throw resource_error("group closure exceeds cap of " + std::to_string(cap) +
                               " elements; the group is too large");
        queue.push_back(h);
        out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const OrthogonalMap& a, const OrthogonalMap& b) { return a.key() < b.key(); });
  return out;
}

// Size of the orbit of seed under the generated group.
inline Int orbit_size(const std::vector<OrthogonalMap>& gens, const Vec& seed,
                      long cap = kDefaultGroupCap) {
  std::set<Vec, LexLess> seen{seed};
  std::deque<Vec> queue{seed};
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (const OrthogonalMap& g : gens) {
      Vec w = g.apply(v);
      if (seen.insert(w).second) {
        if (static_cast<long>(seen.size()) > cap)
          throw resource_error("orbit exceeds cap of " + std::to_string(cap) +
                               " points; the group is too large");
        queue.push_back(w);
      }
    }
  }
  return Int(static_cast<unsigned long>(seen.size()));
}

// A small generating subset of a materialized element list. Greedy: any
// element outside the currently generated subgroup strictly enlarges it, so
// one closure per accepted generator suffices.
inline std::vector<OrthogonalMap> small_generating_set(const std::vector<OrthogonalMap>& elements) {
  std::vector<OrthogonalMap> gens;
  if (elements.empty()) return gens;
  std::set<std::string> generated{OrthogonalMap::identity(elements.front().dim()).key()};
  for (const OrthogonalMap& g : elements) {
    if (generated.size() == elements.size()) break;
    if (generated.count(g.key())) continue;
    gens.push_back(g);
    generated.clear();
    for (const OrthogonalMap& h : close_group(gens, static_cast<long>(elements.size()) + 1))
      generated.insert(h.key());
  }
  if (gens.empty()) gens.push_back(elements.front());  // trivial group
  return gens;
}

inline FiniteOrthogonalGroup group_from_generators(std::vector<OrthogonalMap> gens,
                                                   long cap = kDefaultGroupCap) {
  FiniteOrthogonalGroup g;
  g.generators = std::move(gens);
  g.elements = close_group(g.generators, cap);
  g.order = Int(static_cast<unsigned long>(g.elements->size()));
  return g;
}

// Index [sup : <sub_gens>]. Every sub generator must lie in sup.
inline Int subgroup_index(const std::vector<OrthogonalMap>& sub_gens,
                          const FiniteOrthogonalGroup& sup) {
  for (const OrthogonalMap& g : sub_gens)
    if (!sup.contains(g)) throw value_error("subgroup_index: generator outside the group");
  Int sub_order = sub_gens.empty()
                      ? Int(1)
                      : Int(static_cast<unsigned long>(close_group(sub_gens).size()));
  if (sup.order % sub_order != 0)
    throw value_error("subgroup_index: order does not divide (closure bug)");
  return sup.order / sub_order;
}

inline std::vector<OrthogonalMap> simple_reflections(const RootSystem& rs) {
  std::vector<OrthogonalMap> gens;
  for (const Vec& s : rs.simple_roots) gens.push_back(OrthogonalMap(reflection_matrix(s)));
  return gens;
}

// Weyl group of rs. With materialize the full element set is enumerated
// (subject to cap); otherwise only the order is computed, as the size of the
// orbit of the Weyl vector, on which the group acts simply transitively.
inline FiniteOrthogonalGroup weyl_group(const RootSystem& rs, bool materialize = true,
                                        long cap = kDefaultGroupCap) {
  std::vector<OrthogonalMap> gens = simple_reflections(rs);
  if (materialize) return group_from_generators(std::move(gens), cap);
  FiniteOrthogonalGroup g;
  g.order = orbit_size(gens, rs.weyl_vector, cap);
  g.generators = std::move(gens);
  return g;
}

// Permutations of the simple roots preserving the Gram matrix, i.e. the
// Dynkin diagram automorphisms, as orthogonal maps (identity on the
// complement of the root span).
inline std::vector<OrthogonalMap> diagram_automorphisms(const RootSystem& rs) {
  const int r = rs.rank;
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  Mat g = gram(rs.simple_roots);
  std::vector<OrthogonalMap> out;
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        if (g(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != g(i, j))
          ok = false;
    if (!ok) continue;
    bool is_id = true;
    for (int i = 0; i < r; ++i)
      if (perm[static_cast<std::size_t>(i)] != i) is_id = false;
    if (is_id) continue;
    std::vector<Vec> images;
    for (int i = 0; i < r; ++i)
      images.push_back(rs.simple_roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    out.push_back(OrthogonalMap(linear_map_from_images(rs.simple_roots, images)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Full automorphism group of the root system: Weyl group extended by the
// diagram automorphisms.
inline FiniteOrthogonalGroup aut_group(const RootSystem& rs, long cap = kDefaultGroupCap) {
  std::vector<OrthogonalMap> gens = simple_reflections(rs);
  for (OrthogonalMap& d : diagram_automorphisms(rs)) gens.push_back(std::move(d));
  return group_from_generators(std::move(gens), cap);
}

}  // namespace likit
