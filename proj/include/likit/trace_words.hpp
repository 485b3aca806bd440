// Trace monomials on matrix tuples: cyclic canonical forms, products of
// traces with rational coefficients, exact evaluation, symmetrization,
// Lie-polynomial expansion into the trace-word basis, and a sample-based
// exact membership test for the invariant subalgebra they generate.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "likit/linalg.hpp"

namespace likit {

// Cyclic word over tuple-slot indices 1..n; canonical form is the
// lexicographically least rotation.
struct TraceWord {
  std::vector<int> letters;

  TraceWord() = default;
  explicit TraceWord(std::vector<int> l) : letters(std::move(l)) {
    if (letters.empty()) throw value_error("empty trace word");
    for (int x : letters)
      if (x < 1) throw value_error("trace word letters are 1-based slot indices");
  }

  friend bool operator<(const TraceWord& a, const TraceWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
  friend bool operator==(const TraceWord& a, const TraceWord& b) { return a.letters == b.letters; }
};

inline TraceWord canonicalize(const TraceWord& w) {
  const std::size_t k = w.letters.size();
  std::vector<int> best = w.letters;
  std::vector<int> rot = w.letters;
  for (std::size_t r = 1; r < k; ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return TraceWord(std::move(best));
}

// A product of traces: canonically sorted multiset of canonical words.
using WordProduct = std::vector<TraceWord>;

inline WordProduct make_product(std::vector<TraceWord> words) {
  for (TraceWord& w : words) w = canonicalize(w);
  std::sort(words.begin(), words.end());
  return words;
}

// Rational linear combination of products of traces.
struct TracePolynomial {
  std::map<WordProduct, Rat> terms;

  TracePolynomial& add_term(WordProduct p, const Rat& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms.try_emplace(std::move(p), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
    return *this;
  }

  bool is_zero() const { return terms.empty(); }

  friend TracePolynomial operator+(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out = a;
    for (const auto& [p, c] : b.terms) {
      Rat& slot = out.terms[p];
      slot += c;
      if (slot == 0) out.terms.erase(p);
    }
    return out;
  }
  friend TracePolynomial operator-(const TracePolynomial& a, const TracePolynomial& b) {
    return a + (Rat(-1) * b);
  }
  friend TracePolynomial operator*(const Rat& s, const TracePolynomial& a) {
    TracePolynomial out;
    if (s == 0) return out;
    for (const auto& [p, c] : a.terms) out.terms[p] = s * c;
    return out;
  }
  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    TracePolynomial out;
    for (const auto& [pa, ca] : a.terms)
      for (const auto& [pb, cb] : b.terms) {
        WordProduct p = pa;
        p.insert(p.end(), pb.begin(), pb.end());
        std::sort(p.begin(), p.end());
        Rat& slot = out.terms[p];
        slot += ca * cb;
        if (slot == 0) out.terms.erase(p);
      }
    return out;
  }
  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.terms == b.terms;
  }
};

inline TracePolynomial tp_one() {
  TracePolynomial p;
  p.terms[WordProduct{}] = 1;
  return p;
}

inline TracePolynomial tp_word(const TraceWord& w, const Rat& c = 1) {
  TracePolynomial p;
  if (c != 0) p.terms[make_product({w})] = c;
  return p;
}

inline TracePolynomial tp_word(std::vector<int> letters, const Rat& c = 1) {
  return tp_word(TraceWord(std::move(letters)), c);
}

// tr(X_1 X_2 ... X_l).
inline TracePolynomial full_trace_word(int l) {
  std::vector<int> letters(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  return tp_word(std::move(letters));
}

// Multidegree (occurrences of each slot) across one product term.
inline std::vector<long> term_multidegree(const WordProduct& p, int arity) {
  std::vector<long> deg(static_cast<std::size_t>(arity), 0);
  for (const TraceWord& w : p)
    for (int x : w.letters) {
      if (x > arity) throw value_error("trace word uses a slot beyond the arity");
      ++deg[static_cast<std::size_t>(x - 1)];
    }
  return deg;
}

// Multidegree of a multihomogeneous polynomial; throws when terms disagree.
inline std::vector<long> multidegree(const TracePolynomial& p, int arity) {
  if (p.terms.empty()) throw value_error("multidegree of the zero polynomial");
  std::vector<long> deg = term_multidegree(p.terms.begin()->first, arity);
  for (const auto& [t, c] : p.terms)
    if (term_multidegree(t, arity) != deg)
      throw value_error("polynomial is not multihomogeneous");
  return deg;
}

inline Rat evaluate(const TracePolynomial& p, const std::vector<Mat>& tuple) {
  for (const Mat& m : tuple)
    if (m.rows() != m.cols() || (!tuple.empty() && m.rows() != tuple.front().rows()))
      throw dimension_error("evaluate: matrices must be square and of equal size");
  Rat out = 0;
  for (const auto& [prod, coeff] : p.terms) {
    Rat value = coeff;
    for (const TraceWord& w : prod) {
      Mat acc;
      bool first = true;
      for (int letter : w.letters) {
        if (letter > static_cast<int>(tuple.size()))
          throw dimension_error("evaluate: tuple arity too small for slot " +
                                std::to_string(letter));
        const Mat& x = tuple[static_cast<std::size_t>(letter - 1)];
        acc = first ? x : Mat(acc * x);
        first = false;
      }
      value *= acc.trace();
    }
    out += value;
  }
  return out;
}

// --- associative expansion of Lie polynomials -------------------------------

// Word -> coefficient map in the free associative algebra on the slots.
using AssocPoly = std::map<std::vector<int>, Rat>;

inline AssocPoly assoc_var(int slot) { return {{std::vector<int>{slot}, Rat(1)}}; }

inline AssocPoly assoc_add(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out = a;
  for (const auto& [w, c] : b) {
    Rat& slot = out[w];
    slot += c;
    if (slot == 0) out.erase(w);
  }
  return out;
}

inline AssocPoly assoc_scale(const Rat& s, const AssocPoly& a) {
  AssocPoly out;
  if (s == 0) return out;
  for (const auto& [w, c] : a) out[w] = s * c;
  return out;
}

inline AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rat& slot = out[w];
      slot += ca * cb;
      if (slot == 0) out.erase(w);
    }
  return out;
}

// Bracket expression tree over slot symbols.
class LieExpr {
 public:
  static LieExpr var(int slot) {
    LieExpr e;
    e.slot_ = slot;
    return e;
  }
  static LieExpr bracket(LieExpr a, LieExpr b) {
    LieExpr e;
    e.left_ = std::make_shared<LieExpr>(std::move(a));
    e.right_ = std::make_shared<LieExpr>(std::move(b));
    return e;
  }
  bool is_leaf() const { return !left_; }

  AssocPoly expand() const {
    if (is_leaf()) return assoc_var(slot_);
    AssocPoly l = left_->expand();
    AssocPoly r = right_->expand();
    return assoc_add(assoc_mul(l, r), assoc_scale(-1, assoc_mul(r, l)));
  }

  int degree() const {
    if (is_leaf()) return 1;
    return left_->degree() + right_->degree();
  }

  std::string to_string() const {
    if (is_leaf()) return "X" + std::to_string(slot_);
    return "[" + left_->to_string() + "," + right_->to_string() + "]";
  }

 private:
  int slot_ = 0;
  std::shared_ptr<const LieExpr> left_, right_;
};

// Rational combination of bracket monomials.
using LiePolynomial = std::vector<std::pair<Rat, LieExpr>>;

inline AssocPoly expand(const LiePolynomial& l) {
  AssocPoly out;
  for (const auto& [c, e] : l) out = assoc_add(out, assoc_scale(c, e.expand()));
  return out;
}

// Trace of an associative polynomial: each word becomes a cyclic trace word.
inline TracePolynomial trace_of(const AssocPoly& a) {
  TracePolynomial out;
  for (const auto& [w, c] : a) {
    WordProduct p = make_product({TraceWord(w)});
    Rat& slot = out.terms[p];
    slot += c;
    if (slot == 0) out.terms.erase(p);
  }
  return out;
}

constexpr long kDefaultWordCap = 100'000;

// tr(L^k) expanded into the trace-word basis.
inline TracePolynomial expand_lie_power_trace(const LiePolynomial& l, int k,
                                              long word_cap = kDefaultWordCap) {
  if (k <= 0) throw value_error("expand_lie_power_trace: k must be positive");
  AssocPoly base = expand(l);
  AssocPoly acc = base;
  for (int i = 1; i < k; ++i) {
    acc = assoc_mul(acc, base);
    if (static_cast<long>(acc.size()) > word_cap)
      throw resource_error("lie power expansion exceeds the word cap");
  }
  return trace_of(acc);
}

// The transposition identity: swapping adjacent arguments of the full trace
// word changes it by the trace of a single bracket insertion,
// sigma_i f_l - f_l = tr(X_1 ... [X_{i+1}, X_i] ... X_l).
struct TranspositionDefect {
  TracePolynomial difference;         // sigma_i f_l - f_l
  TracePolynomial bracket_expansion;  // tr(X_1 .. [X_{i+1},X_i] .. X_l) expanded
  bool equal = false;
};

inline TranspositionDefect transposition_defect(int l, int i) {
  if (l < 2) throw value_error("transposition_defect: need l >= 2");
  if (i < 1 || i >= l) throw value_error("transposition_defect: position out of range");
  std::vector<int> word(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) word[static_cast<std::size_t>(j)] = j + 1;
  std::vector<int> swapped = word;
  std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);

  TranspositionDefect out;
  out.difference = tp_word(swapped) - tp_word(word);

  // tr(X_1 ... [X_{i+1}, X_i] ... X_l), expanded through the associative
  // algebra and collected cyclically (an independent route to the same
  // polynomial).
  AssocPoly acc{{std::vector<int>{}, Rat(1)}};
  for (int j = 1; j <= l; ++j) {
    if (j == i) {
      acc = assoc_mul(acc, LieExpr::bracket(LieExpr::var(i + 1), LieExpr::var(i)).expand());
      ++j;  // the bracket consumed slots i and i+1
    } else {
      acc = assoc_mul(acc, assoc_var(j));
    }
  }
  out.bracket_expansion = trace_of(acc);
  out.equal = (out.difference == out.bracket_expansion);
  return out;
}

constexpr int kDefaultSymmetrizeCap = 6;

// (1/l!) sum over all permutations of tr(X_{s(1)} ... X_{s(l)}), collected in
// the cyclic canonical basis.
inline TracePolynomial symmetrize(int l, int cap = kDefaultSymmetrizeCap) {
  if (l < 1) throw value_error("symmetrize: l must be positive");
  if (l > cap) throw resource_error("symmetrize: l exceeds cap " + std::to_string(cap));
  std::vector<int> perm(static_cast<std::size_t>(l));
  for (int j = 0; j < l; ++j) perm[static_cast<std::size_t>(j)] = j + 1;
  TracePolynomial out;
  Rat factorial = 1;
  for (int j = 2; j <= l; ++j) factorial *= j;
  do {
    out = out + tp_word(perm, Rat(1) / factorial);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Symmetrized trace of a tuple of Lie expressions:
// (1/d!) sum over permutations of tr(L_{s(1)} ... L_{s(d)}).
inline TracePolynomial symmetrized_trace(const std::vector<LieExpr>& ls) {
  if (ls.empty()) throw value_error("symmetrized_trace: empty tuple");
  std::vector<std::size_t> idx(ls.size());
  for (std::size_t j = 0; j < ls.size(); ++j) idx[j] = j;
  std::vector<AssocPoly> expanded;
  for (const LieExpr& e : ls) expanded.push_back(e.expand());
  TracePolynomial out;
  Rat factorial = 1;
  for (std::size_t j = 2; j <= ls.size(); ++j) factorial *= static_cast<long>(j);
  std::sort(idx.begin(), idx.end());
  do {
    AssocPoly acc = expanded[idx[0]];
    for (std::size_t j = 1; j < idx.size(); ++j) acc = assoc_mul(acc, expanded[idx[j]]);
    out = out + Rat(1) / factorial * trace_of(acc);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// Substitutes every slot by slot 1 (all arguments equal).
inline TracePolynomial substitute_equal(const TracePolynomial& p) {
  TracePolynomial out;
  for (const auto& [prod, c] : p.terms) {
    WordProduct collapsed;
    for (const TraceWord& w : prod)
      collapsed.push_back(TraceWord(std::vector<int>(w.letters.size(), 1)));
    std::sort(collapsed.begin(), collapsed.end());
    Rat& slot = out.terms[collapsed];
    slot += c;
    if (slot == 0) out.terms.erase(collapsed);
  }
  return out;
}

// --- matrix-space samplers and membership -----------------------------------

enum class MatrixAlgebra { gl, sl, so, sp };

inline MatrixAlgebra algebra_from_string(const std::string& s) {
  if (s == "gl") return MatrixAlgebra::gl;
  if (s == "sl") return MatrixAlgebra::sl;
  if (s == "so") return MatrixAlgebra::so;
  if (s == "sp") return MatrixAlgebra::sp;
  throw value_error("unknown matrix algebra '" + s + "' (expected gl/sl/so/sp)");
}

// Draws integer-entry matrices from the chosen algebra realized as a matrix
// space: gl_m, sl_m (traceless), so_m (antisymmetric), sp_m (m even,
// [[A,B],[C,-A^T]] with B, C symmetric). Entries are uniform in
// [-bound, bound]; all-zero draws are rejected. The generator is a fixed
// xorshift so that a seed pins the sample sequence on every platform.
class TupleSampler {
 public:
  TupleSampler(MatrixAlgebra alg, int m, std::uint64_t seed, long bound = 7)
      : alg_(alg), m_(m), state_(seed ? seed : 0x9e3779b97f4a7c15ull), bound_(bound) {
    if (m <= 0) throw value_error("sampler: matrix size must be positive");
    if (alg == MatrixAlgebra::sp && m % 2 != 0)
      throw value_error("sampler: sp requires even matrix size");
  }

  int matrix_size() const { return m_; }

  Mat next_matrix() {
    for (;;) {
      Mat x = draw();
      if (!x.isZero(0)) return x;
    }
  }

  std::vector<Mat> next_tuple(int arity) {
    std::vector<Mat> t;
    for (int i = 0; i < arity; ++i) t.push_back(next_matrix());
    return t;
  }

 private:
  long draw_entry() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    std::uint64_t r = state_ * 0x2545f4914f6cdd1dull;
    return static_cast<long>(r % static_cast<std::uint64_t>(2 * bound_ + 1)) - bound_;
  }

  Mat draw() {
    Mat x = Mat::Zero(m_, m_);
    switch (alg_) {
      case MatrixAlgebra::gl:
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) x(i, j) = draw_entry();
        break;
      case MatrixAlgebra::sl: {
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) x(i, j) = draw_entry();
        Rat t = x.trace() / Rat(m_);
        for (int i = 0; i < m_; ++i) x(i, i) -= t;
        break;
      }
      case MatrixAlgebra::so:
        for (int i = 0; i < m_; ++i)
          for (int j = i + 1; j < m_; ++j) {
            Rat v = draw_entry();
            x(i, j) = v;
            x(j, i) = -v;
          }
        break;
      case MatrixAlgebra::sp: {
        int h = m_ / 2;
        Mat a(h, h), b(h, h), c(h, h);
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < h; ++j) a(i, j) = draw_entry();
        for (int i = 0; i < h; ++i)
          for (int j = i; j < h; ++j) {
            b(i, j) = draw_entry();
            b(j, i) = b(i, j);
            c(i, j) = draw_entry();
            c(j, i) = c(i, j);
          }
        x.topLeftCorner(h, h) = a;
        x.topRightCorner(h, h) = b;
        x.bottomLeftCorner(h, h) = c;
        x.bottomRightCorner(h, h) = -a.transpose();
        break;
      }
    }
    return x;
  }

  MatrixAlgebra alg_;
  int m_;
  std::uint64_t state_;
  long bound_;
};

// --- symbolic cross-check oracle ---------------------------------------------

// Polynomials in the commuting matrix entries x_{s,i,j} (slot s, row i,
// column j), as exponent-vector -> coefficient maps. Used to cross-check the
// sample-based membership test at small size: a trace polynomial on gl_m is
// expanded literally and span membership becomes exact linear algebra on
// coefficient vectors.
using EntryPoly = std::map<std::vector<int>, Rat>;

namespace detail {

inline EntryPoly entry_mul(const EntryPoly& a, const EntryPoly& b) {
  EntryPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      Rat& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

inline void entry_add_scaled(EntryPoly& a, const EntryPoly& b, const Rat& s) {
  for (const auto& [e, c] : b) {
    Rat& slot = a[e];
    slot += s * c;
    if (slot == 0) a.erase(e);
  }
}

}  // namespace detail

// Expansion of a trace polynomial on gl_m into matrix entries.
inline EntryPoly entry_expansion(const TracePolynomial& p, int m, int arity) {
  const std::size_t nvars = static_cast<std::size_t>(arity) * m * m;
  auto var_index = [m](int slot, int i, int j) {
    return (static_cast<std::size_t>(slot - 1) * m + static_cast<std::size_t>(i)) * m +
           static_cast<std::size_t>(j);
  };
  // Symbolic matrix per slot.
  std::vector<std::vector<EntryPoly>> sym(static_cast<std::size_t>(arity));
  for (int s = 1; s <= arity; ++s) {
    auto& mat = sym[static_cast<std::size_t>(s - 1)];
    mat.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<int> e(nvars, 0);
        e[var_index(s, i, j)] = 1;
        mat[static_cast<std::size_t>(i) * m + j] = EntryPoly{{e, Rat(1)}};
      }
  }
  auto word_trace = [&](const TraceWord& w) {
    // Product of symbolic matrices, then trace.
    std::vector<EntryPoly> acc = sym[static_cast<std::size_t>(w.letters[0] - 1)];
    for (std::size_t t = 1; t < w.letters.size(); ++t) {
      const auto& rhs = sym[static_cast<std::size_t>(w.letters[t] - 1)];
      std::vector<EntryPoly> next(static_cast<std::size_t>(m) * m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          EntryPoly cell;
          for (int k = 0; k < m; ++k)
            detail::entry_add_scaled(
                cell,
                detail::entry_mul(acc[static_cast<std::size_t>(i) * m + k],
                                  rhs[static_cast<std::size_t>(k) * m + j]),
                Rat(1));
          next[static_cast<std::size_t>(i) * m + j] = std::move(cell);
        }
      acc = std::move(next);
    }
    EntryPoly tr;
    for (int i = 0; i < m; ++i)
      detail::entry_add_scaled(tr, acc[static_cast<std::size_t>(i) * m + i], Rat(1));
    return tr;
  };

  EntryPoly out;
  for (const auto& [prod, coeff] : p.terms) {
    EntryPoly term{{std::vector<int>(nvars, 0), Rat(1)}};
    for (const TraceWord& w : prod) term = detail::entry_mul(term, word_trace(w));
    detail::entry_add_scaled(out, term, coeff);
  }
  return out;
}

// Exact span membership on gl_m via full symbolic expansion; independent of
// the sampling route.
inline bool membership_symbolic(const TracePolynomial& target,
                                const std::vector<TracePolynomial>& candidates, int m,
                                int arity) {
  std::vector<EntryPoly> cand_polys;
  for (const TracePolynomial& c : candidates) cand_polys.push_back(entry_expansion(c, m, arity));
  EntryPoly target_poly = entry_expansion(target, m, arity);

  std::map<std::vector<int>, Eigen::Index> monomials;
  auto note = [&](const EntryPoly& p) {
    for (const auto& [e, c] : p)
      if (!monomials.count(e)) {
        Eigen::Index idx = static_cast<Eigen::Index>(monomials.size());
        monomials[e] = idx;
      }
  };
  note(target_poly);
  for (const EntryPoly& p : cand_polys) note(p);

  Mat a = Mat::Zero(static_cast<Eigen::Index>(monomials.size()),
                    static_cast<Eigen::Index>(cand_polys.size()));
  Vec t = Vec::Zero(static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t j = 0; j < cand_polys.size(); ++j)
    for (const auto& [e, c] : cand_polys[j]) a(monomials.at(e), static_cast<Eigen::Index>(j)) = c;
  for (const auto& [e, c] : target_poly) t(monomials.at(e)) = c;
  if (cand_polys.empty()) return t.isZero(0);
  return solve_exact(a, t).has_value();
}

struct MembershipOptions {
  int margin = 10;  // extra samples beyond the candidate count, and the
                    // number of fresh verification samples for a "true"
};

struct MembershipResult {
  bool member = false;
  std::vector<Rat> coefficients;  // per candidate, when member
  long samples_used = 0;
};

// Does target lie in the span of the candidates, as polynomial functions on
// tuples from the sampled matrix space? Evaluates everything at
// (#candidates + margin) sample tuples and solves the exact linear system; a
// positive answer is certified by re-verifying the coefficient vector at
// fresh samples (failure to verify raises inconclusive_error). A negative
// answer holds up to the vanishing of a nonzero polynomial on the sample set.
inline MembershipResult membership_in_span(const TracePolynomial& target,
                                           const std::vector<TracePolynomial>& candidates,
                                           TupleSampler sampler, int arity,
                                           const MembershipOptions& opt = {}) {
  const long n_samples = static_cast<long>(candidates.size()) + opt.margin;
  MembershipResult out;
  out.samples_used = n_samples;

  std::vector<std::vector<Mat>> tuples;
  for (long s = 0; s < n_samples; ++s) tuples.push_back(sampler.next_tuple(arity));

  Mat a(n_samples, static_cast<Eigen::Index>(candidates.size()));
  Vec t(n_samples);
  for (long s = 0; s < n_samples; ++s) {
    for (std::size_t j = 0; j < candidates.size(); ++j)
      a(s, static_cast<Eigen::Index>(j)) = evaluate(candidates[j], tuples[static_cast<std::size_t>(s)]);
    t(s) = evaluate(target, tuples[static_cast<std::size_t>(s)]);
  }

  std::optional<Vec> coeffs;
  if (candidates.empty()) {
    if (t.isZero(0)) coeffs = Vec(0);
  } else {
    coeffs = solve_exact(a, t);
  }
  if (!coeffs) {
    out.member = false;
    return out;
  }

  // Certify on fresh samples.
  out.samples_used += opt.margin;
  for (int s = 0; s < opt.margin; ++s) {
    std::vector<Mat> tuple = sampler.next_tuple(arity);
    Rat lhs = evaluate(target, tuple);
    Rat rhs = 0;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      rhs += (*coeffs)(static_cast<Eigen::Index>(j)) * evaluate(candidates[j], tuple);
    if (lhs != rhs)
      throw inconclusive_error(
          "membership: solution failed fresh-sample verification; raise samples");
  }
  out.member = true;
  for (Eigen::Index j = 0; j < coeffs->size(); ++j) out.coefficients.push_back((*coeffs)(j));
  return out;
}

}  // namespace likit
