// Irreducible root systems A1-A8, B2-B8, C3-C8, D4-D8, E6-E8, F4, G2 in
// Bourbaki epsilon-coordinates, with reflections, dominant-chamber
// canonicalization and the root/weight lattices. A_l lives in the sum-zero
// hyperplane of Q^{l+1}; G2 in the sum-zero hyperplane of Q^3; E6 and E7 in
// the E8 ambient Q^8 (their root lattices admit no rational realization with
// the standard form in dimension = rank); everything else has ambient = rank.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "likit/lattice.hpp"

namespace likit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> all_roots;       // sorted lexicographically
  std::vector<Vec> positive_roots;  // positive with respect to simple_roots
  Mat cartan;                       // cartan(i,j) = <alpha_j, alpha_i^vee>
  std::vector<Vec> fundamental_weights;
  Vec weyl_vector;  // half sum of positive roots
  Lattice root_lattice;
  Lattice weight_lattice;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  bool is_root(const Vec& v) const {
    return std::binary_search(all_roots.begin(), all_roots.end(), v, LexLess{});
  }

  Vec coroot(const Vec& alpha) const { return Rat(2) / norm2(alpha) * alpha; }
};

namespace detail {

inline std::vector<Vec> simple_roots_for(Family f, int l) {
  std::vector<Vec> s;
  auto e = [](int dim, int i) { return unit_vec(dim, i); };
  switch (f) {
    case Family::A: {
      if (l < 1 || l > 8) throw value_error("unsupported rank for A");
      int n = l + 1;
      for (int i = 0; i < l; ++i) s.push_back(e(n, i) - e(n, i + 1));
      break;
    }
    case Family::B: {
      if (l < 2 || l > 8) throw value_error("unsupported rank for B");
      for (int i = 0; i + 1 < l; ++i) s.push_back(e(l, i) - e(l, i + 1));
      s.push_back(e(l, l - 1));
      break;
    }
    case Family::C: {
      if (l < 3 || l > 8) throw value_error("unsupported rank for C");
      for (int i = 0; i + 1 < l; ++i) s.push_back(e(l, i) - e(l, i + 1));
      s.push_back(Rat(2) * e(l, l - 1));
      break;
    }
    case Family::D: {
      if (l < 4 || l > 8) throw value_error("unsupported rank for D");
      for (int i = 0; i + 1 < l; ++i) s.push_back(e(l, i) - e(l, i + 1));
      s.push_back(e(l, l - 2) + e(l, l - 1));
      break;
    }
    case Family::E: {
      if (l < 6 || l > 8) throw value_error("unsupported rank for E");
      // Bourbaki E8 base, truncated to the first l nodes for E6, E7.
      Vec a1 = vec({rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2),
                    rat(-1, 2), rat(1, 2)});
      s.push_back(a1);
      s.push_back(e(8, 0) + e(8, 1));
      for (int i = 1; i <= 6; ++i) s.push_back(e(8, i) - e(8, i - 1));
      s.resize(static_cast<std::size_t>(l));
      break;
    }
    case Family::F: {
      if (l != 4) throw value_error("unsupported rank for F");
      s.push_back(vec({rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)}));
      s.push_back(e(4, 3));
      s.push_back(e(4, 2) - e(4, 3));
      s.push_back(e(4, 1) - e(4, 2));
      break;
    }
    case Family::G: {
      if (l != 2) throw value_error("unsupported rank for G");
      s.push_back(e(3, 0) - e(3, 1));
      s.push_back(Rat(-2) * e(3, 0) + e(3, 1) + e(3, 2));
      break;
    }
  }
  return s;
}

inline std::size_t classical_root_count(Family f, int l) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(l * (l + 1));
    case Family::B:
    case Family::C: return static_cast<std::size_t>(2 * l * l);
    case Family::D: return static_cast<std::size_t>(2 * l * (l - 1));
    case Family::E: return l == 6 ? 72u : l == 7 ? 126u : 240u;
    case Family::F: return 48u;
    case Family::G: return 12u;
  }
  return 0;
}

}  // namespace detail

inline Vec reflect_in(const Vec& alpha, const Vec& v) {
  Rat n = norm2(alpha);
  if (n == 0) throw value_error("reflection in the zero vector");
  return v - Rat(2) * dot(v, alpha) / n * alpha;
}

// Matrix of the reflection s_alpha on the ambient space.
inline Mat reflection_matrix(const Vec& alpha) {
  Rat n = norm2(alpha);
  if (n == 0) throw value_error("reflection in the zero vector");
  const Eigen::Index d = alpha.size();
  Mat m = Mat::Identity(d, d);
  m -= Rat(2) / n * (alpha * alpha.transpose());
  return m;
}

inline RootSystem build_root_system(Family f, int rank) {
  RootSystem rs;
  rs.family = f;
  rs.rank = rank;
  rs.simple_roots = detail::simple_roots_for(f, rank);
  rs.ambient_dim = static_cast<int>(rs.simple_roots.front().size());

  // Root set: reflection closure of the simple roots.
  std::set<Vec, LexLess> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snapshot(roots.begin(), roots.end());
    for (const Vec& r : snapshot)
      for (const Vec& s : rs.simple_roots) {
        Vec image = reflect_in(s, r);
        if (roots.insert(image).second) grew = true;
      }
  }
  rs.all_roots.assign(roots.begin(), roots.end());
  if (rs.all_roots.size() != detail::classical_root_count(f, rank))
    throw value_error("root closure produced an unexpected count for " + rs.name());

  // Positivity: coordinates in the simple-root basis are integers of one sign.
  Mat b = columns(rs.simple_roots);
  for (const Vec& r : rs.all_roots) {
    auto c = solve_exact(b, r);
    if (!c) throw value_error("root outside the span of the simple roots");
    int sign = 0;
    for (Eigen::Index i = 0; i < c->size(); ++i) {
      if (!is_integer((*c)(i))) throw value_error("non-integral root coordinates");
      if ((*c)(i) > 0) sign |= 1;
      if ((*c)(i) < 0) sign |= 2;
    }
    if (sign == 3) throw value_error("mixed-sign root coordinates");
    if (sign == 1) rs.positive_roots.push_back(r);
  }

  rs.weyl_vector = zero_vec(rs.ambient_dim);
  for (const Vec& r : rs.positive_roots) rs.weyl_vector += r;
  rs.weyl_vector /= Rat(2);

  rs.cartan = Mat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.cartan(i, j) = Rat(2) * dot(rs.simple_roots[static_cast<std::size_t>(j)],
                                     rs.simple_roots[static_cast<std::size_t>(i)]) /
                        norm2(rs.simple_roots[static_cast<std::size_t>(i)]);

  // Fundamental weights: solve <w_i, alpha_j^vee> = delta_ij inside the span.
  // Writing w_i = sum_k c_k alpha_k turns this into cartan * c = e_i.
  for (int i = 0; i < rank; ++i) {
    auto c = solve_exact(rs.cartan, unit_vec(rank, i));
    if (!c) throw value_error("singular Cartan matrix");
    Vec w = zero_vec(rs.ambient_dim);
    for (int k = 0; k < rank; ++k) w += (*c)(k)*rs.simple_roots[static_cast<std::size_t>(k)];
    rs.fundamental_weights.push_back(w);
  }

  rs.root_lattice = Lattice(rs.simple_roots);
  rs.weight_lattice = Lattice(rs.fundamental_weights);
  return rs;
}

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw value_error(std::string("unknown family '") + c + "'");
  }
}

// Parses names like "F4", "A2", "D8".
inline RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2) throw value_error("bad root system name '" + name + "'");
  Family f = family_from_char(name[0]);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw value_error("bad root system name '" + name + "'");
  }
  return build_root_system(f, rank);
}

// s_alpha(v) for a root alpha of rs.
inline Vec reflect(const RootSystem& rs, const Vec& alpha, const Vec& v) {
  if (!rs.is_root(alpha)) throw value_error("reflect: not a root of " + rs.name());
  return reflect_in(alpha, v);
}

// The unique root maximal in the dominance order (the adjoint highest weight).
inline Vec highest_root(const RootSystem& rs) {
  const Vec* best = nullptr;
  Rat best_h;
  for (const Vec& r : rs.all_roots) {
    Rat h = dot(r, rs.weyl_vector);
    if (!best || h > best_h) {
      best = &r;
      best_h = h;
    }
  }
  return *best;
}

struct DominantForm {
  Vec vector;
  Mat witness;  // witness * input = vector
};

inline bool is_dominant(const RootSystem& rs, const Vec& v) {
  for (const Vec& s : rs.simple_roots)
    if (dot(v, s) < 0) return false;
  return true;
}

// The unique dominant representative of the Weyl orbit, with a group element
// carrying the input onto it. Runs the simple-reflection straightening loop.
inline DominantForm dominant_form(const RootSystem& rs, const Vec& v) {
  if (v.size() != rs.ambient_dim) throw dimension_error("dominant_form: ambient mismatch");
  DominantForm out{v, Mat::Identity(rs.ambient_dim, rs.ambient_dim)};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Vec& s : rs.simple_roots) {
      if (dot(out.vector, s) < 0) {
        out.vector = reflect_in(s, out.vector);
        out.witness = reflection_matrix(s) * out.witness;
        moved = true;
      }
    }
  }
  return out;
}

}  // namespace likit
