#include <doctest.h>

#include "likit/root_system.hpp"

using namespace likit;

namespace {
struct Rng {
  std::uint64_t s = 0xfeedbeef;
  long next(long lo, long hi) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return lo + static_cast<long>((s * 0x2545f4914f6cdd1dull) %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Rat rational_det(const IMat& a) {
  Mat m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return m.determinant();
}
}  // namespace

TEST_CASE("smith normal form: identity and divisibility chain") {
  IMat id = IMat::Identity(3, 3);
  SmithResult s = smith_normal_form(id);
  for (const Int& d : s.divisors) CHECK(d == 1);

  Rng rng;
  for (int t = 0; t < 30; ++t) {
    IMat a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = rng.next(-6, 6);
    SmithResult snf = smith_normal_form(a);
    // d_i | d_{i+1} (zero divides only zero) and the product matches |det|.
    for (std::size_t i = 0; i + 1 < snf.divisors.size(); ++i) {
      if (snf.divisors[i] == 0)
        CHECK(snf.divisors[i + 1] == 0);
      else
        CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
    }
    Rat det = rational_det(a);
    Int prod = 1;
    bool any_zero = false;
    for (const Int& d : snf.divisors) {
      prod *= d;
      any_zero = any_zero || (d == 0);
    }
    if (any_zero)
      CHECK(det == 0);
    else
      CHECK(Rat(prod) == abs(det));
  }
}

TEST_CASE("lattice membership is exact") {
  RootSystem d4 = build_root_system("D4");
  CHECK(d4.root_lattice.contains(vec({1, 1, 0, 0})));
  CHECK(d4.root_lattice.contains(vec({2, 0, 0, 0})));
  CHECK(!d4.root_lattice.contains(vec({1, 0, 0, 0})));
  CHECK(!d4.root_lattice.contains(vec({rat(1, 2), rat(1, 2), 0, 0})));
}

TEST_CASE("root-in-weight lattice indices match the Cartan-matrix normal form") {
  for (const char* name : {"A2", "D4", "F4", "A4", "B3", "C4", "G2", "E6", "E7", "E8"}) {
    RootSystem rs = build_root_system(name);
    LatticeIndex li = lattice_index(rs.root_lattice, rs.weight_lattice);
    // Independent route: the coordinates of the simple roots in the
    // fundamental-weight basis form the Cartan matrix.
    IMat cart(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) cart(i, j) = to_int(rs.cartan(i, j));
    SmithResult snf = smith_normal_form(cart);
    CHECK(li.index == snf.product_of_nonzero());
    CHECK(li.divisors == snf.nontrivial());
  }
}

TEST_CASE("lattice_index: frozen values") {
  RootSystem a2 = build_root_system("A2");
  LatticeIndex li = lattice_index(a2.root_lattice, a2.weight_lattice);
  CHECK(li.index == 3);
  CHECK(li.divisors == std::vector<Int>{Int(3)});

  RootSystem d4 = build_root_system("D4");
  LatticeIndex ld = lattice_index(d4.root_lattice, d4.weight_lattice);
  CHECK(ld.index == 4);
  CHECK(ld.divisors == std::vector<Int>({Int(2), Int(2)}));

  // L in L.
  LatticeIndex self = lattice_index(a2.root_lattice, a2.root_lattice);
  CHECK(self.index == 1);
  CHECK(self.divisors.empty());

  RootSystem f4 = build_root_system("F4");
  CHECK(lattice_index(f4.root_lattice, f4.weight_lattice).index == 1);
  CHECK(lattice_index(build_root_system("E6").root_lattice,
                      build_root_system("E6").weight_lattice)
            .index == 3);
  CHECK(lattice_index(build_root_system("E7").root_lattice,
                      build_root_system("E7").weight_lattice)
            .index == 2);
}

TEST_CASE("lattice_index error and infinity paths") {
  RootSystem a2 = build_root_system("A2");
  // P is not contained in Q.
  CHECK_THROWS_AS(lattice_index(a2.weight_lattice, a2.root_lattice), value_error);
  // Rank mismatch: a sublattice of smaller rank has infinite index.
  Lattice line(std::vector<Vec>{a2.simple_roots[0]});
  LatticeIndex li = lattice_index(line, a2.root_lattice);
  CHECK(!li.finite);
  // Ambient mismatch.
  RootSystem b2 = build_root_system("B2");
  CHECK_THROWS_AS(lattice_index(b2.root_lattice, a2.root_lattice), dimension_error);
}

TEST_CASE("lattice_index is multiplicative along chains (randomized)") {
  Rng rng;
  int done = 0;
  while (done < 20) {
    IMat m2(2, 2), m3(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m2(i, j) = rng.next(-3, 3);
        m3(i, j) = rng.next(-3, 3);
      }
    if (rational_det(m2) == 0 || rational_det(m3) == 0) continue;
    ++done;
    std::vector<Vec> b1 = {vec({1, 0}), vec({0, 1})};
    auto apply = [](const IMat& m, const std::vector<Vec>& b) {
      std::vector<Vec> out;
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Vec v = zero_vec(static_cast<int>(b.front().size()));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          v += Rat(m(i, j)) * b[static_cast<std::size_t>(i)];
        out.push_back(v);
      }
      return out;
    };
    Lattice l1(b1), l2(apply(m2, b1)), l3(apply(m3, apply(m2, b1)));
    CHECK(lattice_index(l3, l1).index ==
          lattice_index(l3, l2).index * lattice_index(l2, l1).index);
  }
}

TEST_CASE("vectors_of_norm agrees with brute force") {
  // Standard Z^2.
  Lattice z2(std::vector<Vec>{vec({1, 0}), vec({0, 1})});
  CHECK(vectors_of_norm(z2, Rat(1)).size() == 4);
  CHECK(vectors_of_norm(z2, Rat(2)).size() == 4);
  CHECK(vectors_of_norm(z2, Rat(3)).empty());
  CHECK(vectors_of_norm(z2, Rat(5)).size() == 8);

  // A skew basis of the same lattice must give the same shells.
  Lattice skew(std::vector<Vec>{vec({1, 0}), vec({3, 1})});
  for (int n = 1; n <= 6; ++n)
    CHECK(vectors_of_norm(skew, Rat(n)).size() == vectors_of_norm(z2, Rat(n)).size());

  RootSystem d4 = build_root_system("D4");
  CHECK(vectors_of_norm(d4.root_lattice, Rat(2)).size() == 24);
  CHECK(vectors_of_norm(d4.root_lattice, Rat(4)).size() == 24);

  // E8: 240 minimal vectors.
  RootSystem e8 = build_root_system("E8");
  CHECK(vectors_of_norm(e8.root_lattice, Rat(2)).size() == 240);
}
