// Weight systems of finite-dimensional representations: the Weyl dimension
// formula, Freudenthal's multiplicity recursion, direct sums, greedy
// decomposition into irreducibles, duality and character shifts, plus the
// spectrum-disentangling rule m -> (m mod n, floor(m/n)) and the cascade
// n_1 = 1, n_i = dim + 1 used to build multiplicity-separated sums.
#pragma once

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "likit/ortho_group.hpp"

namespace likit {

struct WeightMultiset {
  int ambient_dim = 0;
  std::map<Vec, long, LexLess> entries;

  WeightMultiset() = default;
  explicit WeightMultiset(int dim) : ambient_dim(dim) {}

  long dimension() const {
    long d = 0;
    for (const auto& [w, m] : entries) d += m;
    return d;
  }
  long multiplicity(const Vec& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  void add(const Vec& w, long m = 1) {
    if (w.size() != ambient_dim) throw dimension_error("weight multiset: ambient mismatch");
    if (m == 0) return;
    long& slot = entries[w];
    slot += m;
    if (slot == 0) entries.erase(w);
    if (slot < 0) throw value_error("weight multiset: negative multiplicity");
  }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.ambient_dim == b.ambient_dim && a.entries == b.entries;
  }
};

constexpr long kDefaultDimCap = 10'000;

inline void require_dominant_weight(const RootSystem& rs, const Vec& lambda) {
  if (lambda.size() != rs.ambient_dim)
    throw dimension_error("highest weight has wrong ambient dimension");
  if (!is_dominant(rs, lambda)) throw value_error("weight is not dominant");
  if (!rs.weight_lattice.contains(lambda) && !lambda.isZero(0))
    throw value_error("weight is not in the weight lattice");
}

// dim L(lambda) by the Weyl dimension formula (exact product over positive
// roots; the rational product is an integer for valid input).
inline Int weyl_dim(const RootSystem& rs, const Vec& lambda) {
  require_dominant_weight(rs, lambda);
  Rat num = 1, den = 1;
  const Vec& rho = rs.weyl_vector;
  for (const Vec& a : rs.positive_roots) {
    num *= dot(lambda + rho, a);
    den *= dot(rho, a);
  }
  return to_int(Rat(num / den));
}

namespace detail {

struct FreudenthalKey {
  std::string system;
  std::string weight;
  bool operator<(const FreudenthalKey& o) const {
    return system != o.system ? system < o.system : weight < o.weight;
  }
};

inline std::map<FreudenthalKey, WeightMultiset>& freudenthal_memo() {
  static std::map<FreudenthalKey, WeightMultiset> memo;
  return memo;
}
inline std::mutex& freudenthal_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// Weight multiset of the irreducible representation with the given highest
// weight. Weights are generated level by level using the root-string rule;
// multiplicities come from Freudenthal's recursion and the total is checked
// against the Weyl dimension formula.
inline WeightMultiset freudenthal_weights(const RootSystem& rs, const Vec& lambda,
                                          long dim_cap = kDefaultDimCap) {
  Int dim = weyl_dim(rs, lambda);
  if (dim > dim_cap)
    throw resource_error("representation dimension " + dim.get_str() + " exceeds cap " +
                         std::to_string(dim_cap));
  detail::FreudenthalKey key{rs.name(), key_string(lambda)};
  {
    std::lock_guard<std::mutex> lock(detail::freudenthal_mutex());
    auto it = detail::freudenthal_memo().find(key);
    if (it != detail::freudenthal_memo().end()) return it->second;
  }

  // Level h holds the weights mu with height(lambda - mu) = h. A candidate
  // mu = nu - alpha_i is a weight iff the alpha_i-string through nu extends
  // downwards: up(nu) + <nu, alpha_i^vee> >= 1.
  std::map<Vec, int, LexLess> level{{lambda, 0}};
  std::vector<std::vector<Vec>> by_level{{lambda}};
  for (int h = 1;; ++h) {
    std::vector<Vec> fresh;
    for (const Vec& nu : by_level[static_cast<std::size_t>(h - 1)]) {
      for (const Vec& alpha : rs.simple_roots) {
        Vec mu = nu - alpha;
        if (level.count(mu)) continue;
        long up = 0;
        Vec probe = nu + alpha;
        while (level.count(probe)) {
          ++up;
          probe += alpha;
        }
        Rat pairing = Rat(2) * dot(nu, alpha) / norm2(alpha);
        if (Rat(up) + pairing >= 1) {
          level[mu] = h;
          fresh.push_back(mu);
        }
      }
    }
    if (fresh.empty()) break;
    by_level.push_back(std::move(fresh));
  }

  const Vec& rho = rs.weyl_vector;
  Rat top = dot(lambda + rho, lambda + rho);
  std::map<Vec, Rat, LexLess> mult{{lambda, Rat(1)}};
  for (std::size_t h = 1; h < by_level.size(); ++h) {
    for (const Vec& mu : by_level[h]) {
      Rat sum = 0;
      for (const Vec& alpha : rs.positive_roots) {
        Vec probe = mu + alpha;
        while (level.count(probe)) {
          sum += dot(probe, alpha) * mult.at(probe);
          probe += alpha;
        }
      }
      Rat denom = top - dot(mu + rho, mu + rho);
      if (denom == 0) throw value_error("freudenthal: zero denominator");
      mult[mu] = Rat(2) * sum / denom;
    }
  }

  WeightMultiset ws(rs.ambient_dim);
  for (const auto& [w, m] : mult) {
    if (!is_integer(m) || m <= 0) throw value_error("freudenthal: non-integral multiplicity");
    ws.add(w, m.get_num().get_si());
  }
  if (Int(ws.dimension()) != dim)
    throw value_error("freudenthal total disagrees with the Weyl dimension formula");

  std::lock_guard<std::mutex> lock(detail::freudenthal_mutex());
  detail::freudenthal_memo()[key] = ws;
  return ws;
}

inline WeightMultiset trivial_rep(int ambient_dim) {
  WeightMultiset ws(ambient_dim);
  ws.add(zero_vec(ambient_dim), 1);
  return ws;
}

inline WeightMultiset direct_sum(std::span<const WeightMultiset> parts) {
  if (parts.empty()) throw value_error("direct_sum: empty list");
  WeightMultiset out(parts.front().ambient_dim);
  for (const WeightMultiset& p : parts) {
    if (p.ambient_dim != out.ambient_dim) throw dimension_error("direct_sum: ambient mismatch");
    for (const auto& [w, m] : p.entries) out.add(w, m);
  }
  return out;
}

inline WeightMultiset direct_sum(std::initializer_list<WeightMultiset> parts) {
  std::vector<WeightMultiset> v(parts);
  return direct_sum(std::span<const WeightMultiset>(v));
}

// True iff the multiset is stable under negation of every weight.
inline bool self_dual(const WeightMultiset& ws) {
  for (const auto& [w, m] : ws.entries)
    if (ws.multiplicity(Vec(-w)) != m) return false;
  return true;
}

// Translates every weight by m * chi.
inline WeightMultiset shift_by_character(const WeightMultiset& ws, const Vec& chi, long m) {
  if (chi.size() != ws.ambient_dim) throw dimension_error("shift: ambient mismatch");
  WeightMultiset out(ws.ambient_dim);
  for (const auto& [w, k] : ws.entries) out.add(Vec(w + Rat(m) * chi), k);
  return out;
}

// Greedy peeling of a Weyl-stable multiset into irreducibles: repeatedly take
// the maximal weight present (by pairing against the Weyl vector, ties broken
// lexicographically), subtract its irreducible character, record it.
inline std::vector<std::pair<Vec, long>> decompose(const WeightMultiset& ws, const RootSystem& rs,
                                                   long dim_cap = kDefaultDimCap) {
  if (ws.ambient_dim != rs.ambient_dim) throw dimension_error("decompose: ambient mismatch");
  WeightMultiset rest = ws;
  std::vector<std::pair<Vec, long>> out;
  while (!rest.entries.empty()) {
    const Vec* best = nullptr;
    Rat best_h;
    for (const auto& [w, m] : rest.entries) {
      Rat h = dot(w, rs.weyl_vector);
      if (!best || h > best_h || (h == best_h && lex_less(*best, w))) {
        best = &w;
        best_h = h;
      }
    }
    Vec top = *best;
    long mult = rest.multiplicity(top);
    if (!is_dominant(rs, top) || (!rs.weight_lattice.contains(top) && !top.isZero(0)))
      throw value_error("decompose: not a character (maximal weight " + key_string(top) +
                        " is not a dominant weight)");
    WeightMultiset irr = freudenthal_weights(rs, top, dim_cap);
    for (const auto& [w, m] : irr.entries) {
      if (rest.multiplicity(w) < m * mult)
        throw value_error("decompose: not a character (multiplicity underflow at " +
                          key_string(w) + ")");
      rest.add(w, -m * mult);
    }
    out.emplace_back(std::move(top), mult);
  }
  return out;
}

// Eigenvalue multiset with multiplicities, as used by the disentangling rule.
struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};
using Spectrum = std::map<Rat, long, RatLess>;

// Splits the spectrum of U1 + n*U2 back into the spectra of U1 and U2:
// a multiplicity m contributes m mod n to U1 and floor(m/n) to U2.
inline std::pair<Spectrum, Spectrum> disentangle(const Spectrum& sum, long n) {
  if (n <= 0) throw value_error("disentangle: n must be positive");
  Spectrum u1, u2;
  for (const auto& [value, m] : sum) {
    if (m < 0) throw value_error("disentangle: negative multiplicity");
    long a = m % n, b = m / n;
    if (a) u1[value] = a;
    if (b) u2[value] = b;
  }
  return {u1, u2};
}

struct CascadeResult {
  std::vector<Int> multipliers;  // n_1, ..., n_m
  Int total_dim;                 // dim of the accumulated sum
};

// n_1 = 1 and n_i = (accumulated dimension) + 1, accumulating
// dim_i' = dim_{i-1}' + n_i * dims[i].
inline CascadeResult cascade_multiplicities(const std::vector<Int>& dims) {
  if (dims.empty()) throw value_error("cascade: empty dimension list");
  CascadeResult out;
  Int acc = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] <= 0) throw value_error("cascade: dimensions must be positive");
    Int ni = (i == 0) ? Int(1) : acc + 1;
    out.multipliers.push_back(ni);
    acc += ni * dims[i];
  }
  out.total_dim = acc;
  return out;
}

}  // namespace likit
