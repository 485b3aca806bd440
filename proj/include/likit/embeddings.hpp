// Toral embedding data and the tests built on it: weight pullback
// (branching), linear equivalence via equal pullbacks, conjugacy under a
// finite acting group, the rank-1-torus birationality criterion, the
// zero-weight/even-dimension pair construction, the 9-dimensional
// restriction table and the type-I predicate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "likit/stabilizer.hpp"

namespace likit {

// Rational linear data sending a source Cartan into a target Cartan: one
// image vector per source simple coroot (or torus basis element).
struct ToralEmbedding {
  std::optional<RootSystem> source;  // nullopt for a bare torus
  int source_rank = 0;
  RootSystem target;
  std::vector<Vec> coroot_images;

  std::string source_name() const {
    return source ? source->name() : "T" + std::to_string(source_rank);
  }
};

inline void validate(const ToralEmbedding& e) {
  if (e.coroot_images.empty()) throw value_error("embedding: no coroot images");
  if (static_cast<int>(e.coroot_images.size()) != e.source_rank)
    throw value_error("embedding: coroot image count differs from source rank");
  for (const Vec& v : e.coroot_images)
    if (v.size() != e.target.ambient_dim)
      throw dimension_error("embedding: coroot image has wrong ambient dimension");
  if (rank_of(columns(e.coroot_images)) != static_cast<Eigen::Index>(e.coroot_images.size()))
    throw value_error("embedding: coroot images are dependent");
  if (e.source) {
    // Target weights must take integer values on the image of the coweight
    // lattice; the fundamental weights generate all target weights.
    for (const Vec& w : e.target.fundamental_weights)
      for (const Vec& v : e.coroot_images)
        if (!is_integer(dot(w, v)))
          throw value_error("embedding: target weight is non-integral on a coroot image");
  }
}

inline ToralEmbedding make_embedding(RootSystem source, RootSystem target,
                                     std::vector<Vec> coroot_images) {
  ToralEmbedding e{std::move(source), 0, std::move(target), std::move(coroot_images)};
  e.source_rank = e.source->rank;
  validate(e);
  return e;
}

inline ToralEmbedding make_torus_embedding(int source_rank, RootSystem target,
                                           std::vector<Vec> coroot_images) {
  ToralEmbedding e{std::nullopt, source_rank, std::move(target), std::move(coroot_images)};
  validate(e);
  return e;
}

// Pullback of a target weight multiset: each weight lambda goes to the
// vector of its values on the coroot images. The result lives in Q^r with
// r = source rank ("coroot coordinates": coefficients in the fundamental
// weight basis of the source when the source is semisimple).
inline WeightMultiset pullback(const ToralEmbedding& e, const WeightMultiset& ws) {
  if (ws.ambient_dim != e.target.ambient_dim)
    throw dimension_error("pullback: multiset does not live in the target ambient space");
  WeightMultiset out(e.source_rank);
  for (const auto& [w, m] : ws.entries) {
    Vec values(e.source_rank);
    for (int i = 0; i < e.source_rank; ++i)
      values(i) = dot(w, e.coroot_images[static_cast<std::size_t>(i)]);
    out.add(values, m);
  }
  return out;
}

// Converts a weight from coroot coordinates (values on simple coroots) back
// to the epsilon-coordinate realization: sum c_i * (i-th fundamental weight).
inline Vec coroot_coords_to_ambient(const RootSystem& rs, const Vec& coords) {
  if (coords.size() != rs.rank) throw dimension_error("coroot coords: rank mismatch");
  Vec out = zero_vec(rs.ambient_dim);
  for (int i = 0; i < rs.rank; ++i)
    out += coords(i) * rs.fundamental_weights[static_cast<std::size_t>(i)];
  return out;
}

inline WeightMultiset coroot_multiset_to_ambient(const RootSystem& rs, const WeightMultiset& ws) {
  WeightMultiset out(rs.ambient_dim);
  for (const auto& [w, m] : ws.entries) out.add(coroot_coords_to_ambient(rs, w), m);
  return out;
}

// Applies an orthogonal map of the target Cartan to the toral data.
inline ToralEmbedding compose_target(const OrthogonalMap& g, const ToralEmbedding& e) {
  ToralEmbedding out = e;
  for (Vec& v : out.coroot_images) v = g.apply(v);
  return out;
}

inline void require_same_shape(const ToralEmbedding& a, const ToralEmbedding& b) {
  if (a.source_name() != b.source_name() || a.target.name() != b.target.name())
    throw value_error("embeddings have different sources or targets");
}

// Two embeddings are linearly equivalent for a probe representation iff the
// pulled-back weight multisets coincide.
inline bool linearly_equivalent(const ToralEmbedding& a, const ToralEmbedding& b,
                                const WeightMultiset& probe) {
  require_same_shape(a, b);
  return pullback(a, probe) == pullback(b, probe);
}

// Searches the acting group for an element carrying the ordered coroot
// images of a onto those of b.
inline std::optional<OrthogonalMap> weyl_conjugate(const ToralEmbedding& a,
                                                   const ToralEmbedding& b,
                                                   const FiniteOrthogonalGroup& acting) {
  require_same_shape(a, b);
  if (!acting.materialized()) throw resource_error("weyl_conjugate: group not materialized");
  for (const OrthogonalMap& g : *acting.elements) {
    bool ok = true;
    for (std::size_t i = 0; i < a.coroot_images.size() && ok; ++i)
      ok = (g.apply(a.coroot_images[i]) == b.coroot_images[i]);
    if (ok) return g;
  }
  return std::nullopt;
}

struct BirationalityResult {
  bool is_birational = false;
  Int index = 1;
  StabilizerResult stabilizer;
};

// The rank-1 criterion: compare the full stabilizer of the representation's
// weight system with the acting group (the normalizer image). Birational iff
// they coincide; the index measures the defect.
inline BirationalityResult birationality_test(const WeightMultiset& rep_weights,
                                              const RootSystem& system,
                                              const FiniteOrthogonalGroup& acting,
                                              const SearchOptions& opt = {}) {
  if (rep_weights.ambient_dim != system.ambient_dim)
    throw dimension_error("birationality_test: ambient mismatch");
  BirationalityResult out;
  out.stabilizer = weight_multiset_stabilizer(rep_weights, opt);
  for (const OrthogonalMap& g : acting.generators)
    if (!out.stabilizer.group.contains(g))
      throw value_error(
          "birationality_test: acting group does not stabilize the weight system");
  out.index = subgroup_index(acting.generators, out.stabilizer.group);
  out.is_birational = (out.index == 1);
  return out;
}

struct Prop91Result {
  bool has_zero_weight = false;  // the direct sum has a zero weight
  bool all_even = false;         // every component has even dimension
  bool verdict = false;
};

// Components are the irreducible summands of the 2n-dimensional orthogonal
// representation, as weight multisets over a common source Cartan.
inline Prop91Result prop91_check(const std::vector<WeightMultiset>& components) {
  if (components.empty()) throw value_error("prop91_check: no components");
  Prop91Result out;
  out.all_even = true;
  const Vec zero = zero_vec(components.front().ambient_dim);
  for (const WeightMultiset& c : components) {
    if (c.ambient_dim != components.front().ambient_dim)
      throw dimension_error("prop91_check: mixed ambient dimensions");
    if (c.multiplicity(zero) > 0) out.has_zero_weight = true;
    if (c.dimension() % 2 != 0) out.all_even = false;
  }
  out.verdict = out.has_zero_weight && out.all_even;
  return out;
}

// Pads a weight multiset into a larger product Cartan (zeros left/right).
inline WeightMultiset pad_weights(const WeightMultiset& ws, int left, int right) {
  WeightMultiset out(left + ws.ambient_dim + right);
  for (const auto& [w, m] : ws.entries) {
    Vec v = zero_vec(out.ambient_dim);
    v.segment(left, ws.ambient_dim) = w;
    out.add(v, m);
  }
  return out;
}

struct So9TableRow {
  std::string algebra;
  std::string rep;
  std::vector<Int> component_dims;
  Int total = 0;
  bool is_self_dual = false;
  bool pass = false;  // total == 9 and self-dual
};

// The five rank>1 simple subalgebras of so9 with non-regular image, each with
// its 9-dimensional linear representation; checks dimension 9 and
// self-duality row by row.
inline std::vector<So9TableRow> verify_so9_table() {
  struct RowDef {
    std::string algebra, rep, system;
    std::vector<int> fundamentals;  // 1-based index per irreducible piece, 0 = trivial
  };
  const std::vector<RowDef> rows = {
      {"sl4", "R(pi2) + 3 R(0)", "A3", {2, 0, 0, 0}},
      {"so7", "R(pi3) + R(0)", "B3", {3, 0}},
      {"G2", "R(pi1) + 2 R(0)", "G2", {1, 0, 0}},
      {"so5", "R(pi2) + R(pi2) + R(0)", "B2", {2, 2, 0}},
      {"sl3", "ad + R(0)", "A2", {-1, 0}},  // -1 marks the adjoint
  };
  std::vector<So9TableRow> out;
  for (const RowDef& def : rows) {
    RootSystem rs = build_root_system(def.system);
    So9TableRow row{def.algebra, def.rep, {}, 0, false, false};
    std::vector<WeightMultiset> parts;
    for (int f : def.fundamentals) {
      Vec hw;
      if (f == 0)
        hw = zero_vec(rs.ambient_dim);
      else if (f == -1)
        hw = highest_root(rs);
      else
        hw = rs.fundamental_weights[static_cast<std::size_t>(f - 1)];
      parts.push_back(freudenthal_weights(rs, hw));
      row.component_dims.push_back(Int(parts.back().dimension()));
      row.total += row.component_dims.back();
    }
    row.is_self_dual = self_dual(direct_sum(std::span<const WeightMultiset>(parts)));
    row.pass = (row.total == 9) && row.is_self_dual;
    out.push_back(std::move(row));
  }
  return out;
}

// --- type-I predicate -------------------------------------------------------

struct RealizedOuter {
  std::string class_label;  // "diagram" (order 2) or "triality" (order 3)
  bool involutory = false;
  // Realized by a group element acting as the identity on all other ideals.
};

struct SimpleIdeal {
  Family family = Family::A;
  int rank = 0;
  std::vector<RealizedOuter> realized_outer;
};

struct GroupDescription {
  std::vector<SimpleIdeal> simple_ideals;
};

inline void validate(const GroupDescription& d) {
  for (const SimpleIdeal& ideal : d.simple_ideals) {
    for (const RealizedOuter& o : ideal.realized_outer) {
      bool diagram_exists = (ideal.family == Family::A && ideal.rank >= 2) ||
                            (ideal.family == Family::D && ideal.rank >= 4) ||
                            (ideal.family == Family::E && ideal.rank == 6);
      bool triality_exists = ideal.family == Family::D && ideal.rank == 4;
      if (o.class_label == "diagram") {
        if (!diagram_exists)
          throw value_error("no order-2 diagram class for " +
                            std::string(1, static_cast<char>(ideal.family)) +
                            std::to_string(ideal.rank));
      } else if (o.class_label == "triality") {
        if (!triality_exists) throw value_error("triality exists only for D4");
        if (o.involutory) throw value_error("a triality class cannot be involutory");
      } else {
        throw value_error("unknown outer class '" + o.class_label + "'");
      }
    }
  }
}

struct TypeIResult {
  bool value = false;
  std::string witness;  // failing ideal, empty when value is true
};

// A group is of type I when it has no E-type simple ideals and every D-type
// ideal of rank >= 4 carries a realized involutory outer automorphism that is
// the identity on the other ideals.
inline TypeIResult is_type_I(const GroupDescription& d) {
  validate(d);
  for (std::size_t i = 0; i < d.simple_ideals.size(); ++i) {
    const SimpleIdeal& ideal = d.simple_ideals[i];
    std::string name =
        std::string(1, static_cast<char>(ideal.family)) + std::to_string(ideal.rank);
    if (ideal.family == Family::E) return {false, name};
    if (ideal.family == Family::D && ideal.rank >= 4) {
      bool ok = false;
      for (const RealizedOuter& o : ideal.realized_outer)
        if (o.class_label == "diagram" && o.involutory) ok = true;
      if (!ok) return {false, name};
    }
  }
  return {true, ""};
}

// --- named embedding presets ------------------------------------------------

// "f4-sl3-rho2":      sl3 -> F4 with h1 -> e1+2e2+e4, h2 -> e1-e2-2e4.
// "so9-sl3-adjoint":  sl3 -> so9 via ad + R(0) (derived toral data).
// "so8-sl3-adjoint":  sl3 -> so8 via ad (zero-weight pair construction, D4).
// "so10-so5-lambda2": so5 -> so10 via the exterior square of the tautological
//                     representation (D5).
inline ToralEmbedding preset_embedding(const std::string& name) {
  if (name == "f4-sl3-rho2") {
    return make_embedding(build_root_system("A2"), build_root_system("F4"),
                          {vec({1, 2, 0, 1}), vec({1, -1, 0, -2})});
  }
  if (name == "so9-sl3-adjoint") {
    return make_embedding(build_root_system("A2"), build_root_system("B4"),
                          {vec({2, -1, 1, 0}), vec({-1, 2, 1, 0})});
  }
  if (name == "so8-sl3-adjoint") {
    return make_embedding(build_root_system("A2"), build_root_system("D4"),
                          {vec({2, -1, 1, 0}), vec({-1, 2, 1, 0})});
  }
  if (name == "so10-so5-lambda2") {
    return make_embedding(build_root_system("B2"), build_root_system("D5"),
                          {vec({1, -1, 0, 2, 0}), vec({0, 2, 2, -2, 0})});
  }
  throw value_error("unknown embedding preset '" + name + "'");
}

}  // namespace likit
