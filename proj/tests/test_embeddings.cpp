#include <doctest.h>

#include "likit/embeddings.hpp"

using namespace likit;

TEST_CASE("pullback along the identity toral embedding gives coroot coordinates") {
  RootSystem a2 = build_root_system("A2");
  std::vector<Vec> coroots;
  for (const Vec& s : a2.simple_roots) coroots.push_back(a2.coroot(s));
  ToralEmbedding id_emb = make_embedding(a2, a2, coroots);
  WeightMultiset taut = freudenthal_weights(a2, a2.fundamental_weights[0]);
  WeightMultiset pb = pullback(id_emb, taut);
  CHECK(pb.dimension() == taut.dimension());
  // Highest weight pi1 has coroot coordinates (1, 0).
  CHECK(pb.multiplicity(vec({1, 0})) == 1);
  CHECK(pb.multiplicity(vec({-1, 1})) == 1);
  CHECK(pb.multiplicity(vec({0, -1})) == 1);
  // And converting back recovers the original multiset.
  CHECK(coroot_multiset_to_ambient(a2, pb) == taut);
}

TEST_CASE("zero-padded embedding acts as a section of the inclusion") {
  // A multiset in a rank-2 torus, padded into the B4 Cartan and pulled back.
  WeightMultiset ws(2);
  ws.add(vec({1, -2}), 2);
  ws.add(vec({rat(1, 2), 3}), 1);
  ws.add(zero_vec(2), 4);
  RootSystem b4 = build_root_system("B4");
  ToralEmbedding emb =
      make_torus_embedding(2, b4, {unit_vec(4, 0), unit_vec(4, 1)});
  CHECK(pullback(emb, pad_weights(ws, 0, 2)) == ws);
}

TEST_CASE("embedding validation") {
  RootSystem a2 = build_root_system("A2");
  RootSystem f4 = build_root_system("F4");
  // Dependent images.
  CHECK_THROWS_AS(make_embedding(a2, f4, {vec({1, 0, 0, 0}), vec({2, 0, 0, 0})}), value_error);
  // Non-integral pairing against the F4 weights (e.g. a half coroot).
  CHECK_THROWS_AS(make_embedding(a2, f4,
                                 {vec({rat(1, 2), 0, 0, 0}), vec({0, 1, 0, 0})}),
                  value_error);
  // Count mismatch against the source rank.
  CHECK_THROWS_AS(make_embedding(a2, f4, {vec({1, 0, 0, 0})}), value_error);
  // Ambient mismatch in pullback.
  ToralEmbedding ok = preset_embedding("f4-sl3-rho2");
  CHECK_THROWS_AS(pullback(ok, trivial_rep(3)), dimension_error);
}

TEST_CASE("branching of the 26-dimensional system to sl3") {
  RootSystem f4 = build_root_system("F4");
  RootSystem a2 = build_root_system("A2");
  WeightMultiset w26 = freudenthal_weights(f4, f4.fundamental_weights[0]);

  ToralEmbedding rho2 = preset_embedding("f4-sl3-rho2");
  WeightMultiset pb = pullback(rho2, w26);
  WeightMultiset expect(2);
  for (auto pair : {std::pair{2, -1}, {-1, 2}, {1, 1}, {-2, 1}, {1, -2}, {-1, -1}})
    expect.add(vec({Rat(pair.first), Rat(pair.second)}), 3);
  expect.add(zero_vec(2), 8);
  CHECK(pb == expect);

  auto dec = decompose(coroot_multiset_to_ambient(a2, pb), a2);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == highest_root(a2));
  CHECK(dec[0].second == 3);
  CHECK(dec[1].first == zero_vec(3));
  CHECK(dec[1].second == 2);

  // The derived so9 route gives the same branching: so9 is equal-rank regular
  // in F4 (same Cartan), so the ad + R(0) toral data transfers verbatim.
  ToralEmbedding via_so9 =
      make_embedding(a2, f4, preset_embedding("so9-sl3-adjoint").coroot_images);
  CHECK(pullback(via_so9, w26) == pb);

  // The two toral data sets are conjugate under the F4 Weyl group up to the
  // outer swap of the sl3 coroots.
  FiniteOrthogonalGroup wf4 = weyl_group(f4);
  bool direct = weyl_conjugate(rho2, via_so9, wf4).has_value();
  ToralEmbedding swapped =
      make_embedding(a2, f4, {via_so9.coroot_images[1], via_so9.coroot_images[0]});
  bool via_swap = weyl_conjugate(rho2, swapped, wf4).has_value();
  CHECK((direct || via_swap));
}

TEST_CASE("pullback preserves dimension and commutes with direct sums") {
  RootSystem b4 = build_root_system("B4");
  ToralEmbedding emb = preset_embedding("so9-sl3-adjoint");
  WeightMultiset taut = freudenthal_weights(b4, b4.fundamental_weights[0]);
  WeightMultiset spin = freudenthal_weights(b4, b4.fundamental_weights[3]);
  CHECK(pullback(emb, taut).dimension() == taut.dimension());
  CHECK(pullback(emb, direct_sum({taut, spin})) ==
        direct_sum({pullback(emb, taut), pullback(emb, spin)}));
}

TEST_CASE("linear equivalence via pullbacks") {
  ToralEmbedding rho2 = preset_embedding("f4-sl3-rho2");
  RootSystem f4 = build_root_system("F4");
  WeightMultiset w26 = freudenthal_weights(f4, f4.fundamental_weights[0]);
  CHECK(linearly_equivalent(rho2, rho2, w26));

  // Two rank-1 torus embeddings into A2 with coroot images of different
  // norms pull the tautological weights back differently.
  RootSystem a2 = build_root_system("A2");
  Vec coroot = a2.coroot(a2.simple_roots[0]);
  ToralEmbedding t1 = make_torus_embedding(1, a2, {coroot});
  ToralEmbedding t2 = make_torus_embedding(1, a2, {Vec(Rat(2) * coroot)});
  WeightMultiset taut = freudenthal_weights(a2, a2.fundamental_weights[0]);
  CHECK(!linearly_equivalent(t1, t2, taut));

  // Mismatched targets are rejected.
  ToralEmbedding t3 = make_torus_embedding(1, build_root_system("B2"), {vec({1, 0})});
  CHECK_THROWS_AS(linearly_equivalent(t1, t3, taut), value_error);
}

TEST_CASE("pullback equality is an equivalence relation on random triples") {
  RootSystem b2 = build_root_system("B2");
  FiniteOrthogonalGroup w = weyl_group(b2);
  WeightMultiset probe = freudenthal_weights(b2, b2.fundamental_weights[0]);
  std::uint64_t s = 271828;
  for (int trial = 0; trial < 8; ++trial) {
    auto pick = [&] {
      s = s * 6364136223846793005ull + 1442695040888963407ull;
      return (*w.elements)[s % w.elements->size()];
    };
    ToralEmbedding e1 = make_torus_embedding(1, b2, {vec({1, 2})});
    ToralEmbedding e2 = compose_target(pick(), e1);
    ToralEmbedding e3 = compose_target(pick(), e2);
    CHECK(linearly_equivalent(e1, e1, probe));
    CHECK(linearly_equivalent(e1, e2, probe) == linearly_equivalent(e2, e1, probe));
    if (linearly_equivalent(e1, e2, probe) && linearly_equivalent(e2, e3, probe))
      CHECK(linearly_equivalent(e1, e3, probe));
  }
}

TEST_CASE("weyl_conjugate: transitivity on roots, length obstruction") {
  RootSystem a2 = build_root_system("A2");
  FiniteOrthogonalGroup w = weyl_group(a2);
  ToralEmbedding e1 = make_torus_embedding(1, a2, {vec({1, -1, 0})});
  ToralEmbedding e2 = make_torus_embedding(1, a2, {vec({0, 1, -1})});
  auto self = weyl_conjugate(e1, e1, w);
  REQUIRE(self.has_value());
  CHECK(self->matrix() == Mat::Identity(3, 3));
  auto wit = weyl_conjugate(e1, e2, w);
  REQUIRE(wit.has_value());
  CHECK(wit->apply(e1.coroot_images[0]) == e2.coroot_images[0]);

  RootSystem b2 = build_root_system("B2");
  FiniteOrthogonalGroup wb2 = weyl_group(b2);
  ToralEmbedding long_root = make_torus_embedding(1, b2, {vec({1, -1})});
  ToralEmbedding short_root = make_torus_embedding(1, b2, {vec({0, 1})});
  CHECK(!weyl_conjugate(long_root, short_root, wb2).has_value());
}

TEST_CASE("weyl conjugacy implies equal pullbacks (randomized translates)") {
  RootSystem b2 = build_root_system("B2");
  FiniteOrthogonalGroup w = weyl_group(b2);
  WeightMultiset probe = freudenthal_weights(b2, b2.fundamental_weights[0]);
  ToralEmbedding base =
      make_embedding(build_root_system("A1"), b2, {vec({1, 1})});
  for (std::size_t i = 0; i < w.elements->size(); i += 3) {
    ToralEmbedding moved = compose_target((*w.elements)[i], base);
    CHECK(weyl_conjugate(base, moved, w).has_value());
    CHECK(linearly_equivalent(base, moved, probe));
  }
}

TEST_CASE("birationality criterion") {
  RootSystem c4 = build_root_system("C4");
  WeightMultiset pi2 = freudenthal_weights(c4, c4.fundamental_weights[1]);
  BirationalityResult r = birationality_test(pi2, c4, weyl_group(c4));
  CHECK(!r.is_birational);
  CHECK(r.index == 3);

  RootSystem b4 = build_root_system("B4");
  WeightMultiset sum = direct_sum({trivial_rep(4),
                                   freudenthal_weights(b4, b4.fundamental_weights[0]),
                                   freudenthal_weights(b4, b4.fundamental_weights[3])});
  BirationalityResult r2 = birationality_test(sum, b4, weyl_group(b4));
  CHECK(!r2.is_birational);
  CHECK(r2.index == 3);

  // Tautological + dual of A2 is stabilized exactly by the full automorphism
  // group of the hexagon.
  RootSystem a2 = build_root_system("A2");
  WeightMultiset taut = freudenthal_weights(a2, a2.fundamental_weights[0]);
  WeightMultiset dual = freudenthal_weights(a2, a2.fundamental_weights[1]);
  BirationalityResult r3 = birationality_test(direct_sum({taut, dual}), a2, aut_group(a2));
  CHECK(r3.is_birational);
  CHECK(r3.index == 1);

  // The tautological system alone is not stabilized by the diagram flip.
  CHECK_THROWS_AS(birationality_test(taut, a2, aut_group(a2)), value_error);
}

TEST_CASE("prop91_check on the named constructions") {
  RootSystem a2 = build_root_system("A2");
  RootSystem b2 = build_root_system("B2");
  WeightMultiset ad_sl3 = freudenthal_weights(a2, highest_root(a2));
  WeightMultiset lam2_so5 = freudenthal_weights(b2, highest_root(b2));
  CHECK(lam2_so5.dimension() == 10);

  Prop91Result even_case = prop91_check({ad_sl3});
  CHECK(even_case.has_zero_weight);
  CHECK(even_case.all_even);
  CHECK(even_case.verdict);

  WeightMultiset taut_so4(2);
  for (auto p : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
    taut_so4.add(vec({Rat(p.first), Rat(p.second)}));
  Prop91Result padded = prop91_check(
      {pad_weights(lam2_so5, 0, 2), pad_weights(taut_so4, 2, 0)});
  CHECK(padded.verdict);

  WeightMultiset spin = freudenthal_weights(b2, b2.fundamental_weights[1]);
  Prop91Result no_zero = prop91_check({spin});
  CHECK(!no_zero.has_zero_weight);
  CHECK(no_zero.all_even);
  CHECK(!no_zero.verdict);

  WeightMultiset odd = freudenthal_weights(b2, b2.fundamental_weights[0]);  // 5-dim
  Prop91Result odd_dim = prop91_check({odd});
  CHECK(odd_dim.has_zero_weight);
  CHECK(!odd_dim.all_even);
  CHECK(!odd_dim.verdict);
}

TEST_CASE("the constructed pairs are linearly equivalent with a Weyl witness") {
  // The zero weight forces a zero coordinate in the toral data, so the outer
  // flip fixes the toral image: the twist is undetectable torally and a
  // Weyl witness always exists.
  for (const char* preset : {"so8-sl3-adjoint", "so10-so5-lambda2"}) {
    ToralEmbedding emb = preset_embedding(preset);
    int d = emb.target.ambient_dim;
    Mat th = Mat::Identity(d, d);
    th(d - 1, d - 1) = -1;
    ToralEmbedding twisted = compose_target(OrthogonalMap(th), emb);
    WeightMultiset probe = freudenthal_weights(emb.target, emb.target.fundamental_weights[0]);
    CHECK(linearly_equivalent(emb, twisted, probe));
    CHECK(weyl_conjugate(emb, twisted, weyl_group(emb.target)).has_value());
  }
}

TEST_CASE("the nine-dimensional restriction table") {
  std::vector<So9TableRow> rows = verify_so9_table();
  REQUIRE(rows.size() == 5);
  for (const So9TableRow& row : rows) {
    CHECK(row.total == 9);
    CHECK(row.is_self_dual);
    CHECK(row.pass);
  }
  CHECK(rows[0].component_dims == std::vector<Int>({Int(6), Int(1), Int(1), Int(1)}));
  CHECK(rows[1].component_dims == std::vector<Int>({Int(8), Int(1)}));
  CHECK(rows[2].component_dims == std::vector<Int>({Int(7), Int(1), Int(1)}));
  CHECK(rows[3].component_dims == std::vector<Int>({Int(4), Int(4), Int(1)}));
  CHECK(rows[4].component_dims == std::vector<Int>({Int(8), Int(1)}));
}

TEST_CASE("is_type_I") {
  GroupDescription sl_like{{{Family::A, 3, {}}}};
  CHECK(is_type_I(sl_like).value);

  GroupDescription bare_d4{{{Family::D, 4, {}}}};
  TypeIResult r = is_type_I(bare_d4);
  CHECK(!r.value);
  CHECK(r.witness == "D4");

  GroupDescription e6{{{Family::E, 6, {}}}};
  TypeIResult re = is_type_I(e6);
  CHECK(!re.value);
  CHECK(re.witness == "E6");

  GroupDescription full_d4{{{Family::D, 4, {{"diagram", true}}}}};
  CHECK(is_type_I(full_d4).value);

  // A non-involutory outer class does not satisfy the D-ideal condition.
  GroupDescription triality_only{{{Family::D, 4, {{"triality", false}}}}};
  CHECK(!is_type_I(triality_only).value);

  // Mixed: a D5 ideal with a diagram involution next to an A2 ideal.
  GroupDescription mixed{{{Family::A, 2, {}}, {Family::D, 5, {{"diagram", true}}}}};
  CHECK(is_type_I(mixed).value);

  // Validation: classes must exist for the ideal's type.
  GroupDescription bad1{{{Family::D, 5, {{"triality", false}}}}};
  CHECK_THROWS_AS(is_type_I(bad1), value_error);
  GroupDescription bad2{{{Family::D, 4, {{"triality", true}}}}};
  CHECK_THROWS_AS(is_type_I(bad2), value_error);
  GroupDescription bad3{{{Family::B, 3, {{"diagram", true}}}}};
  CHECK_THROWS_AS(is_type_I(bad3), value_error);
}
