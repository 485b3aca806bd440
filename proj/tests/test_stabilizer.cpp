#include <doctest.h>

#include "likit/stabilizer.hpp"

using namespace likit;

namespace {

// Brute-force oracle: all signed permutation matrices of size n.
std::vector<OrthogonalMap> signed_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<OrthogonalMap> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      Mat m = Mat::Zero(n, n);
      for (int i = 0; i < n; ++i)
        m(perm[static_cast<std::size_t>(i)], i) = ((signs >> i) & 1) ? -1 : 1;
      out.push_back(OrthogonalMap(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(),
            [](const OrthogonalMap& a, const OrthogonalMap& b) { return a.key() < b.key(); });
  return out;
}

std::vector<std::string> keys_of(const std::vector<OrthogonalMap>& v) {
  std::vector<std::string> keys;
  for (const OrthogonalMap& g : v) keys.push_back(g.key());
  return keys;
}

}  // namespace

TEST_CASE("lattice automorphisms of Z^4 are exactly the signed permutations") {
  std::vector<Vec> basis;
  for (int i = 0; i < 4; ++i) basis.push_back(unit_vec(4, i));
  StabilizerResult res = lattice_aut_group(Lattice(basis));
  CHECK(res.group.order == 384);
  CHECK(keys_of(*res.group.elements) == keys_of(signed_permutations(4)));
  CHECK(res.stats.nodes > 0);
  CHECK(!res.restricted_to_span);
}

TEST_CASE("lattice automorphism search honors the node cap") {
  RootSystem c4 = build_root_system("C4");
  SearchOptions opt;
  opt.node_cap = 10;
  CHECK_THROWS_AS(lattice_aut_group(c4.root_lattice, opt), resource_error);
}

TEST_CASE("the rank <= 4 sweep: lattice vs root-system automorphisms") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = build_root_system(name);
    StabilizerResult lat = lattice_aut_group(rs.root_lattice);
    FiniteOrthogonalGroup aut = aut_group(rs);
    auto lat_keys = keys_of(*lat.group.elements);
    auto aut_keys = keys_of(*aut.elements);
    if (std::string(name) == "C4") {
      CHECK(lat.group.order == 1152);
      CHECK(aut.order == 384);
      CHECK(std::includes(lat_keys.begin(), lat_keys.end(), aut_keys.begin(), aut_keys.end()));
    } else {
      CHECK(lat_keys == aut_keys);
    }
  }
}

TEST_CASE("the dual sweep: weight-lattice automorphisms single out B4") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = build_root_system(name);
    StabilizerResult lat = lattice_aut_group(rs.weight_lattice);
    FiniteOrthogonalGroup aut = aut_group(rs);
    auto lat_keys = keys_of(*lat.group.elements);
    auto aut_keys = keys_of(*aut.elements);
    if (std::string(name) == "B4") {
      CHECK(lat.group.order == 1152);
      CHECK(aut.order == 384);
      CHECK(std::includes(lat_keys.begin(), lat_keys.end(), aut_keys.begin(), aut_keys.end()));
    } else {
      CHECK(lat_keys == aut_keys);
    }
  }
}

TEST_CASE("weight vectors of root length are roots, except for A7, A8, D8") {
  auto sweep = [](const std::string& name) {
    RootSystem rs = build_root_system(name);
    // All systems here are simply laced with root norm 2.
    std::vector<Vec> shell = vectors_of_norm(rs.weight_lattice, Rat(2));
    bool all_roots = true;
    for (const Vec& v : shell) all_roots = all_roots && rs.is_root(v);
    return all_roots;
  };
  for (const char* name : {"A4", "A5", "A6", "D4", "D5", "D6", "D7"}) CHECK(sweep(name));
  for (const char* name : {"A7", "A8", "D8"}) CHECK(!sweep(name));
}

TEST_CASE("stabilizer of the C4 second-fundamental weight system") {
  RootSystem c4 = build_root_system("C4");
  WeightMultiset ws = freudenthal_weights(c4, c4.fundamental_weights[1]);
  StabilizerResult st = weight_multiset_stabilizer(ws);
  CHECK(st.group.order == 1152);
  CHECK(st.stats.nodes > 0);

  // The nonzero weights are the D4 root configuration, so the stabilizer is
  // the full D4 automorphism group, as a set of matrices.
  FiniteOrthogonalGroup aut_d4 = aut_group(build_root_system("D4"));
  CHECK(keys_of(*st.group.elements) == keys_of(*aut_d4.elements));

  // Weyl group image sits inside with index 3.
  FiniteOrthogonalGroup w = weyl_group(c4);
  for (const OrthogonalMap& g : w.generators) CHECK(st.group.contains(g));
  CHECK(subgroup_index(w.generators, st.group) == 3);
}

TEST_CASE("stabilizer of the 1+9+16 weight system of B4") {
  RootSystem b4 = build_root_system("B4");
  WeightMultiset ws = direct_sum({trivial_rep(4),
                                  freudenthal_weights(b4, b4.fundamental_weights[0]),
                                  freudenthal_weights(b4, b4.fundamental_weights[3])});
  CHECK(ws.dimension() == 26);
  CHECK(ws.multiplicity(zero_vec(4)) == 2);
  StabilizerResult st = weight_multiset_stabilizer(ws);
  CHECK(st.group.order == 1152);
  CHECK(subgroup_index(weyl_group(b4).generators, st.group) == 3);

  // The 24 nonzero weights form the F4 short-root configuration; the
  // stabilizer coincides with the F4 Weyl group.
  FiniteOrthogonalGroup wf4 = weyl_group(build_root_system("F4"));
  CHECK(keys_of(*st.group.elements) == keys_of(*wf4.elements));
}

TEST_CASE("stabilizer of the rank-2 hypercube weights") {
  WeightMultiset ws(2);
  ws.add(vec({1, 0}));
  ws.add(vec({-1, 0}));
  ws.add(vec({0, 1}));
  ws.add(vec({0, -1}));
  StabilizerResult st = weight_multiset_stabilizer(ws);
  CHECK(st.group.order == 8);
  CHECK(keys_of(*st.group.elements) == keys_of(signed_permutations(2)));
}

TEST_CASE("zero weights never constrain the stabilizer") {
  WeightMultiset base(2);
  base.add(vec({1, 0}));
  base.add(vec({-1, 0}));
  base.add(vec({0, 1}));
  base.add(vec({0, -1}));
  WeightMultiset with_zeros = base;
  with_zeros.add(zero_vec(2), 7);
  StabilizerResult plain = weight_multiset_stabilizer(base);
  StabilizerResult zeros = weight_multiset_stabilizer(with_zeros);
  CHECK(keys_of(*plain.group.elements) == keys_of(*zeros.group.elements));
  CHECK(plain.ignored_zero_multiplicity == 0);
  CHECK(zeros.ignored_zero_multiplicity == 7);
}

TEST_CASE("materialized groups are closed under composition and inverse") {
  FiniteOrthogonalGroup w = weyl_group(build_root_system("B2"));
  const auto& els = *w.elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    CHECK(w.contains(els[i].inverse()));
    for (std::size_t j = 0; j < els.size(); j += 3) CHECK(w.contains(els[i] * els[j]));
  }
}

TEST_CASE("Weyl groups always stabilize their own weight systems") {
  for (const char* name : {"A2", "B2", "C3", "G2"}) {
    RootSystem rs = build_root_system(name);
    FiniteOrthogonalGroup w = weyl_group(rs);
    WeightMultiset ws = freudenthal_weights(rs, rs.fundamental_weights[0]);
    StabilizerResult st = weight_multiset_stabilizer(ws);
    for (const OrthogonalMap& g : w.generators) CHECK(st.group.contains(g));
  }
}

TEST_CASE("non-spanning weights are restricted to their span") {
  // Weights of the tautological A2 system span only the sum-zero plane.
  RootSystem a2 = build_root_system("A2");
  WeightMultiset taut = freudenthal_weights(a2, a2.fundamental_weights[0]);
  StabilizerResult st = weight_multiset_stabilizer(taut);
  CHECK(st.restricted_to_span);
  // The stabilizer of a triangle in its plane is the 6-element dihedral group.
  CHECK(st.group.order == 6);
  Vec ones = vec({1, 1, 1});
  for (const OrthogonalMap& g : *st.group.elements) CHECK(g.apply(ones) == ones);
}

TEST_CASE("every stabilizer element preserves the form and the multiset") {
  RootSystem c4 = build_root_system("C4");
  WeightMultiset ws = freudenthal_weights(c4, c4.fundamental_weights[1]);
  StabilizerResult st = weight_multiset_stabilizer(ws);
  for (std::size_t i = 0; i < st.group.elements->size(); i += 97) {
    const OrthogonalMap& g = (*st.group.elements)[i];
    CHECK(is_orthogonal_matrix(g.matrix()));
    for (const auto& [w, m] : ws.entries) CHECK(ws.multiplicity(g.apply(w)) == m);
  }
}
