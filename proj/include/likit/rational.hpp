// Exact rational scalar used throughout likit: GMP's mpq_class, wired into
// Eigen through a NumTraits specialization. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace likit {

using Rat = mpq_class;
using Int = mpz_class;

// Error hierarchy. Everything thrown by the library derives from likit::error.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dimension_error : error {
  using error::error;
};
struct value_error : error {
  using error::error;
};
struct resource_error : error {
  using error::error;
};
struct inconclusive_error : error {
  using error::error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw value_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw value_error("expected an integer, got " + q.get_str());
  return q.get_num();
}

// Parses "p", "-p" or "p/q". mpq_class accepts this syntax directly but does
// not canonicalize, and silently maps garbage to 0 only on set_str failure.
inline Rat parse_rat(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw value_error("cannot parse rational '" + s + "'");
  if (q.get_den() == 0) throw value_error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw value_error("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Largest integer k with k^2 <= q (q >= 0), i.e. floor(sqrt(q)) for rationals.
inline Int isqrt_floor(const Rat& q) {
  if (q < 0) throw value_error("isqrt of negative value");
  // k^2 <= num/den  <=>  k^2 * den <= num; start from floor(sqrt(floor(q)))
  // and correct upward, which can overshoot by at most one step.
  Int k = isqrt_floor(Int(q.get_num() / q.get_den()));
  while ((k + 1) * (k + 1) * q.get_den() <= q.get_num()) ++k;
  while (k > 0 && k * k * q.get_den() > q.get_num()) --k;
  return k;
}

}  // namespace likit

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 200
  };
};

}  // namespace Eigen
