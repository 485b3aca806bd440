// Lattices with rational bases: exact membership, subgroup index via Smith
// normal form, and enumeration of lattice vectors of a prescribed norm
// (Fincke-Pohst style with exact rational bounds).
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "likit/smith.hpp"

namespace likit {

class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<Vec> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw value_error("lattice: empty basis");
    b_ = columns(basis_);
    if (rank_of(b_) != b_.cols()) throw value_error("lattice: dependent basis");
  }

  int ambient_dim() const { return static_cast<int>(b_.rows()); }
  int rank() const { return static_cast<int>(b_.cols()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Mat& basis_matrix() const { return b_; }

  // Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (v.size() != b_.rows()) throw dimension_error("lattice: ambient mismatch");
    return solve_exact(b_, v);
  }

  // v is a lattice point iff its basis coordinates are integers.
  bool contains(const Vec& v) const {
    auto c = coordinates(v);
    if (!c) return false;
    for (Eigen::Index i = 0; i < c->size(); ++i)
      if (!is_integer((*c)(i))) return false;
    return true;
  }

 private:
  std::vector<Vec> basis_;
  Mat b_;
};

struct LatticeIndex {
  bool finite = true;
  Int index = 1;                // [super : sub] when finite
  std::vector<Int> divisors;    // nontrivial elementary divisors of super/sub
};

// Index of sub in super together with the structure of the quotient.
// Throws if sub is not contained in super; returns finite=false when the
// ranks differ (infinite index).
inline LatticeIndex lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient_dim() != super.ambient_dim())
    throw dimension_error("lattice_index: ambient mismatch");
  IMat coords(super.rank(), sub.rank());
  for (int j = 0; j < sub.rank(); ++j) {
    auto c = super.coordinates(sub.basis()[static_cast<std::size_t>(j)]);
    if (!c) throw value_error("lattice_index: sub basis vector outside super's span");
    for (Eigen::Index i = 0; i < c->size(); ++i) {
      if (!is_integer((*c)(i)))
        throw value_error("lattice_index: sub is not contained in super");
      coords(i, j) = (*c)(i).get_num();
    }
  }
  LatticeIndex out;
  if (sub.rank() != super.rank()) {
    out.finite = false;
    return out;
  }
  SmithResult snf = smith_normal_form(coords);
  out.index = snf.product_of_nonzero();
  for (const Int& d : snf.divisors)
    if (d == 0) throw value_error("lattice_index: degenerate coordinate matrix");
  out.divisors = snf.nontrivial();
  return out;
}

namespace detail {

// Exact LDL-type completion of squares of a positive definite Gram matrix:
// q(x) = sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2.
struct QuadForm {
  std::vector<Rat> d;
  Mat l;  // strictly upper part used
};

inline QuadForm decompose_pd(Mat g) {
  const Eigen::Index n = g.rows();
  QuadForm f;
  f.d.resize(static_cast<std::size_t>(n));
  f.l = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat di = g(i, i);
    if (di <= 0) throw value_error("quadratic form is not positive definite");
    f.d[static_cast<std::size_t>(i)] = di;
    for (Eigen::Index j = i + 1; j < n; ++j) f.l(i, j) = g(i, j) / di;
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j; k < n; ++k) g(j, k) -= g(i, j) * g(i, k) / di;
  }
  return f;
}

inline void enumerate_rec(const QuadForm& f, Eigen::Index level, const Rat& budget,
                          std::vector<Rat>& shift, std::vector<Int>& x,
                          std::vector<std::vector<Int>>& out) {
  if (level < 0) {
    if (budget == 0) out.push_back(x);
    return;
  }
  const std::size_t i = static_cast<std::size_t>(level);
  // d_i (x_i + s)^2 <= budget with s = sum_{j>i} l_ij x_j.
  Rat s = shift[i];
  Rat t = budget / f.d[i];
  Int u = isqrt_floor(t);
  // integer range for x_i: |x_i + s| <= sqrt(t); u = floor(sqrt(t)) brackets
  // it, with the exact check below filtering the endpoints.
  auto rfloor = [](const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
  };
  auto rceil = [](const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
  };
  Int lo = rceil(Rat(-s - Rat(u) - 1));
  Int hi = rfloor(Rat(-s + Rat(u) + 1));
  for (Int xi = lo; xi <= hi; ++xi) {
    Rat term = Rat(xi) + s;
    Rat used = f.d[i] * term * term;
    if (used > budget) continue;  // sqrt bound can admit one spurious endpoint
    x[i] = xi;
    // update shifts of lower levels
    std::vector<Rat> saved;
    saved.reserve(i);
    for (Eigen::Index k = 0; k < level; ++k) {
      saved.push_back(shift[static_cast<std::size_t>(k)]);
      shift[static_cast<std::size_t>(k)] += f.l(k, level) * Rat(xi);
    }
    enumerate_rec(f, level - 1, budget - used, shift, x, out);
    for (Eigen::Index k = 0; k < level; ++k) shift[static_cast<std::size_t>(k)] = saved[static_cast<std::size_t>(k)];
  }
}

}  // namespace detail

// All lattice vectors v with (v, v) = c, as ambient vectors. Exact and
// complete; intended for the small norms that arise in root lattices.
inline std::vector<Vec> vectors_of_norm(const Lattice& l, const Rat& c) {
  std::vector<Vec> out;
  if (c < 0) return out;
  if (c == 0) {
    out.push_back(zero_vec(l.ambient_dim()));
    return out;
  }
  Mat g = l.basis_matrix().transpose() * l.basis_matrix();
  detail::QuadForm f = detail::decompose_pd(g);
  const Eigen::Index r = g.rows();
  std::vector<Rat> shift(static_cast<std::size_t>(r), Rat(0));
  std::vector<Int> x(static_cast<std::size_t>(r), Int(0));
  std::vector<std::vector<Int>> coords;
  detail::enumerate_rec(f, r - 1, c, shift, x, coords);
  for (const auto& cv : coords) {
    Vec v = zero_vec(l.ambient_dim());
    for (Eigen::Index j = 0; j < r; ++j)
      v += Rat(cv[static_cast<std::size_t>(j)]) * l.basis()[static_cast<std::size_t>(j)];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace likit
