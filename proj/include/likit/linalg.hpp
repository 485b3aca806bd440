// Dense exact linear algebra on top of Eigen with the rational scalar:
// vectors and matrices of mpq_class, exact solves, and the map-from-images
// construction used by the automorphism searches.
#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "likit/rational.hpp"

namespace likit {

using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline Vec vec(std::initializer_list<Rat> coords) {
  Vec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const Rat& c : coords) v(i++) = c;
  return v;
}

inline Vec zero_vec(int dim) { return Vec::Zero(dim); }

inline Vec unit_vec(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v(i) = 1;
  return v;
}

inline Rat dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size())
    throw dimension_error("dot: length mismatch (" + std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()) + ")");
  return u.dot(v);
}

inline Rat norm2(const Vec& v) { return v.dot(v); }

// Exact lexicographic order; used as the canonical ordering for weight maps
// and group-element sets so that all enumerations are deterministic.
struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      int c = cmp(a(i), b(i));
      if (c != 0) return c < 0;
    }
    return false;
  }
};

inline bool lex_less(const Vec& a, const Vec& b) { return LexLess{}(a, b); }

inline std::string key_string(const Vec& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i).get_str();
  }
  return os.str();
}

inline std::string key_string(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols() << ':';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j).get_str() << ',';
  return os.str();
}

inline Mat columns(const std::vector<Vec>& vs) {
  if (vs.empty()) return Mat(0, 0);
  Mat m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != m.rows()) throw dimension_error("columns: mixed vector lengths");
    m.col(static_cast<Eigen::Index>(j)) = vs[j];
  }
  return m;
}

inline Mat gram(const std::vector<Vec>& vs) {
  Mat b = columns(vs);
  return b.transpose() * b;
}

inline Eigen::Index rank_of(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return Eigen::FullPivLU<Mat>(m).rank();
}

// Exact solve of A x = b; nullopt when the system is inconsistent. When the
// solution is not unique an arbitrary representative is returned.
inline std::optional<Vec> solve_exact(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw dimension_error("solve_exact: shape mismatch");
  Eigen::FullPivLU<Mat> lu(a);
  Vec x = lu.solve(b);
  if (((a * x) - b).isZero(0)) return x;
  return std::nullopt;
}

// Basis of the kernel of A (exact).
inline std::vector<Vec> kernel_basis(const Mat& a) {
  Eigen::FullPivLU<Mat> lu(a);
  Mat k = lu.kernel();
  std::vector<Vec> out;
  if (lu.dimensionOfKernel() == 0) return out;
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

// The unique linear map sending basis[i] -> images[i] on span(basis),
// extended by the identity on the orthogonal complement of the span.
inline Mat linear_map_from_images(const std::vector<Vec>& basis, const std::vector<Vec>& images) {
  if (basis.empty()) throw value_error("linear_map_from_images: empty basis");
  if (basis.size() != images.size())
    throw dimension_error("linear_map_from_images: basis/image count mismatch");
  Mat b = columns(basis);
  Mat u = columns(images);
  if (u.rows() != b.rows()) throw dimension_error("linear_map_from_images: ambient mismatch");
  const Eigen::Index n = b.rows();
  const Eigen::Index k = b.cols();
  if (rank_of(b) != k) throw value_error("linear_map_from_images: dependent basis");
  // Complement of span(basis) = kernel of B^T (orthogonal complement).
  std::vector<Vec> comp = kernel_basis(Mat(b.transpose()));
  Mat full(n, n), target(n, n);
  full.leftCols(k) = b;
  target.leftCols(k) = u;
  for (std::size_t j = 0; j < comp.size(); ++j) {
    full.col(k + static_cast<Eigen::Index>(j)) = comp[j];
    target.col(k + static_cast<Eigen::Index>(j)) = comp[j];
  }
  if (k + static_cast<Eigen::Index>(comp.size()) != n)
    throw value_error("linear_map_from_images: complement construction failed");
  return target * full.inverse();
}

inline bool is_orthogonal_matrix(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  return (m.transpose() * m).isIdentity(0);
}

}  // namespace likit
