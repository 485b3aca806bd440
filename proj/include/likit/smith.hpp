// Smith normal form of an integer matrix over arbitrary-precision integers.
// Classic elimination: move a minimal pivot to the corner, reduce its row and
// column, restart on remainders, then enforce the divisibility chain.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "likit/linalg.hpp"

namespace likit {

struct SmithResult {
  // Diagonal entries d1 | d2 | ... (nonnegative, including any trailing zeros
  // for rank-deficient input and the leading ones).
  std::vector<Int> divisors;

  Int product_of_nonzero() const {
    Int p = 1;
    for (const Int& d : divisors)
      if (d != 0) p *= d;
    return p;
  }
  std::vector<Int> nontrivial() const {
    std::vector<Int> out;
    for (const Int& d : divisors)
      if (d > 1) out.push_back(d);
    return out;
  }
};

namespace detail {

inline bool find_pivot(const IMat& a, Eigen::Index s, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  Int best = 0;
  for (Eigen::Index i = s; i < a.rows(); ++i)
    for (Eigen::Index j = s; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

inline SmithResult smith_normal_form(IMat a) {
  const Eigen::Index mn = std::min(a.rows(), a.cols());
  SmithResult res;
  for (Eigen::Index s = 0; s < mn; ++s) {
    Eigen::Index pi = s, pj = s;
    if (!detail::find_pivot(a, s, pi, pj)) break;
    a.row(s).swap(a.row(pi));
    a.col(s).swap(a.col(pj));

    for (;;) {
      bool clean = true;
      // Clear the pivot column by Euclidean steps.
      for (Eigen::Index i = s + 1; i < a.rows(); ++i) {
        if (a(i, s) == 0) continue;
        Int q = a(i, s) / a(s, s);
        a.row(i) -= q * a.row(s);
        if (a(i, s) != 0) {  // remainder smaller than pivot: swap up and restart
          a.row(s).swap(a.row(i));
          clean = false;
        }
      }
      if (!clean) continue;
      // Clear the pivot row.
      for (Eigen::Index j = s + 1; j < a.cols(); ++j) {
        if (a(s, j) == 0) continue;
        Int q = a(s, j) / a(s, s);
        a.col(j) -= q * a.col(s);
        if (a(s, j) != 0) {
          a.col(s).swap(a.col(j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold in any entry the pivot does not divide.
      bool divides = true;
      for (Eigen::Index i = s + 1; i < a.rows() && divides; ++i)
        for (Eigen::Index j = s + 1; j < a.cols() && divides; ++j)
          if (a(i, j) % a(s, s) != 0) {
            a.row(s) += a.row(i);
            divides = false;
          }
      if (divides) break;
    }
  }
  for (Eigen::Index s = 0; s < mn; ++s) res.divisors.push_back(abs(a(s, s)));
  return res;
}

}  // namespace likit
