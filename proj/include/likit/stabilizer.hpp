// Finite orthogonal stabilizer searches: the automorphism group of a lattice
// and the stabilizer of a weight multiset. Both are complete backtracking
// searches assigning images to a basis, pruning on partial Gram mismatch.
#pragma once

#include <chrono>
#include <vector>

#include "likit/ortho_group.hpp"
#include "likit/weights.hpp"

namespace likit {

struct SearchStats {
  long nodes = 0;
  long prunes = 0;
  double elapsed_sec = 0;
};

struct SearchOptions {
  long node_cap = 10'000'000;
};

struct StabilizerResult {
  FiniteOrthogonalGroup group;
  SearchStats stats;
  // True when the defining set does not span the ambient space; elements are
  // then the identity extension of the stabilizer of the restriction.
  bool restricted_to_span = false;
  // Multiplicity of the zero weight in the defining multiset. Recorded for
  // the report only: zero never constrains an orthogonal map.
  long ignored_zero_multiplicity = 0;
};

namespace detail {

// Candidate images per basis slot; backtracking with exact partial-Gram
// pruning. accept() gets the completed orthogonal map for a global check.
template <typename Accept>
void assignment_search(const std::vector<Vec>& basis,
                       const std::vector<std::vector<Vec>>& candidates, const Mat& basis_gram,
                       const SearchOptions& opt, SearchStats& stats, Accept&& accept) {
  const std::size_t k = basis.size();
  std::vector<Vec> chosen(k, Vec());
  std::vector<std::size_t> cursor(k, 0);
  std::size_t depth = 0;
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      if (depth == 0) break;
      cursor[depth] = 0;
      --depth;
      ++cursor[depth];
      continue;
    }
    const Vec& u = candidates[depth][cursor[depth]];
    ++stats.nodes;
    if (stats.nodes > opt.node_cap)
      throw resource_error("stabilizer search exceeded the node cap of " +
                           std::to_string(opt.node_cap));
    bool ok = norm2(u) == basis_gram(depth, depth);
    for (std::size_t j = 0; ok && j < depth; ++j)
      ok = dot(u, chosen[j]) == basis_gram(static_cast<Eigen::Index>(j),
                                           static_cast<Eigen::Index>(depth));
    if (!ok) {
      ++stats.prunes;
      ++cursor[depth];
      continue;
    }
    chosen[depth] = u;
    if (depth + 1 == k) {
      std::vector<Vec> images(chosen.begin(), chosen.end());
      accept(images);
      ++cursor[depth];
    } else {
      ++depth;
    }
  }
}

}  // namespace detail

// The full group of orthogonal maps preserving the lattice as a set. Each
// basis vector must map to a lattice vector of equal norm; a Gram-compatible
// assignment of lattice vectors to the whole basis determines an isometry of
// the span taking L into L with determinant +-1 in lattice coordinates, hence
// an automorphism. Maps act as the identity on the complement of the span.
inline StabilizerResult lattice_aut_group(const Lattice& l, const SearchOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  StabilizerResult res;
  res.restricted_to_span = l.rank() < l.ambient_dim();

  const std::vector<Vec>& basis = l.basis();
  Mat g = gram(basis);
  std::vector<std::vector<Vec>> candidates;
  std::map<std::string, std::vector<Vec>> norm_cache;
  for (const Vec& b : basis) {
    Rat n = norm2(b);
    std::string key = n.get_str();
    auto it = norm_cache.find(key);
    if (it == norm_cache.end()) it = norm_cache.emplace(key, vectors_of_norm(l, n)).first;
    candidates.push_back(it->second);
  }

  std::vector<OrthogonalMap> elements;
  detail::assignment_search(basis, candidates, g, opt, res.stats, [&](const std::vector<Vec>& images) {
    elements.emplace_back(linear_map_from_images(basis, images));
  });
  std::sort(elements.begin(), elements.end(),
            [](const OrthogonalMap& a, const OrthogonalMap& b) { return a.key() < b.key(); });

  res.group.elements = std::move(elements);
  res.group.order = Int(static_cast<unsigned long>(res.group.elements->size()));
  res.group.generators = small_generating_set(*res.group.elements);
  res.stats.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// Stabilizer of a weight multiset in the orthogonal group of its span: all
// orthogonal maps permuting the nonzero weights with multiplicities. Zero
// weights never constrain the search (every orthogonal map fixes 0); their
// multiplicity is carried along but ignored. Weights are partitioned into
// (norm, multiplicity) classes; a spanning basis is chosen greedily from the
// smallest classes and images are backtracked class by class, each completed
// map being verified against the whole multiset.
inline StabilizerResult weight_multiset_stabilizer(const WeightMultiset& ws,
                                                   const SearchOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  StabilizerResult res;

  std::vector<Vec> nonzero;
  for (const auto& [w, m] : ws.entries) {
    if (w.isZero(0))
      res.ignored_zero_multiplicity = m;
    else
      nonzero.push_back(w);
  }
  if (nonzero.empty()) throw value_error("stabilizer: no nonzero weights");

  // (norm, multiplicity) classes.
  std::map<std::pair<std::string, long>, std::vector<Vec>> classes;
  for (const Vec& w : nonzero)
    classes[{norm2(w).get_str(), ws.multiplicity(w)}].push_back(w);

  // Greedy spanning basis, preferring small classes.
  std::vector<std::pair<std::size_t, Vec>> pool;  // (class size, weight)
  {
    std::vector<const std::vector<Vec>*> sorted_classes;
    for (const auto& [k, v] : classes) sorted_classes.push_back(&v);
    std::sort(sorted_classes.begin(), sorted_classes.end(),
              [](const auto* a, const auto* b) { return a->size() < b->size(); });
    for (const auto* c : sorted_classes)
      for (const Vec& w : *c) pool.emplace_back(c->size(), w);
  }
  std::vector<Vec> basis;
  std::vector<std::vector<Vec>> candidates;
  Mat span_probe(static_cast<Eigen::Index>(nonzero.front().size()), 0);
  for (const auto& [csize, w] : pool) {
    Mat trial(span_probe.rows(), span_probe.cols() + 1);
    trial.leftCols(span_probe.cols()) = span_probe;
    trial.col(span_probe.cols()) = w;
    if (rank_of(trial) == trial.cols()) {
      span_probe = trial;
      basis.push_back(w);
      candidates.push_back(classes.at({norm2(w).get_str(), ws.multiplicity(w)}));
    }
  }
  res.restricted_to_span = static_cast<int>(basis.size()) < ws.ambient_dim;

  Mat g = gram(basis);
  std::vector<OrthogonalMap> elements;
  detail::assignment_search(basis, candidates, g, opt, res.stats, [&](const std::vector<Vec>& images) {
    OrthogonalMap cand(linear_map_from_images(basis, images));
    for (const auto& [w, m] : ws.entries) {
      if (w.isZero(0)) continue;
      if (ws.multiplicity(cand.apply(w)) != m) return;
    }
    elements.push_back(std::move(cand));
  });
  std::sort(elements.begin(), elements.end(),
            [](const OrthogonalMap& a, const OrthogonalMap& b) { return a.key() < b.key(); });

  res.group.elements = std::move(elements);
  res.group.order = Int(static_cast<unsigned long>(res.group.elements->size()));
  res.group.generators = small_generating_set(*res.group.elements);
  res.stats.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace likit
