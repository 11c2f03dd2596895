#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wallcross/lattice.hpp"

using namespace wallcross;

namespace {

// Exact determinant of an integer matrix, for cross-checking the doubled
// lattice construction.
Rat determinant(std::vector<std::vector<std::int64_t>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rat f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("lattice vectors: arithmetic, content, primitivity") {
  LatticeVector a{2, 4};
  LatticeVector b{1, -1};
  CHECK(a + b == LatticeVector{3, 3});
  CHECK(a - b == LatticeVector{1, 5});
  CHECK(a * 3 == LatticeVector{6, 12});
  CHECK(a.content() == 2);
  CHECK(a.primitive_part() == LatticeVector{1, 2});
  CHECK(b.is_primitive());
  CHECK_FALSE(a.is_primitive());
  CHECK(LatticeVector{0, 0}.is_zero());
  CHECK(LatticeVector{-2, -4}.primitive_part() == LatticeVector{-1, -2});
  CHECK_THROWS_AS((LatticeVector{0, 0}).primitive_part(), Error);
}

TEST_CASE("make_lattice validates skew-symmetry") {
  auto L = make_lattice(2, {{0, 1}, {-1, 0}});
  CHECK(L.pairing(LatticeVector{1, 0}, LatticeVector{0, 1}) == 1);
  CHECK(L.pairing(LatticeVector{0, 1}, LatticeVector{1, 0}) == -1);
  CHECK(L.nondegenerate());

  auto L2 = make_lattice(2, {{0, 2}, {-2, 0}});
  CHECK(L2.pairing(LatticeVector{1, 0}, LatticeVector{0, 1}) == 2);

  CHECK_THROWS_AS(make_lattice(2, {{0, 1}, {1, 0}}), Error);
  try {
    make_lattice(2, {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSkewSymmetric);
  }
  CHECK_THROWS_AS(make_lattice(2, {{1, 0}, {0, 1}}), Error);
}

TEST_CASE("pairing is bilinear") {
  auto L = make_lattice(3, {{0, 1, 2}, {-1, 0, -1}, {-2, 1, 0}});
  LatticeVector u{1, 2, 0}, v{0, 1, 1}, w{3, 0, -1};
  CHECK(L.pairing(u, v) == -L.pairing(v, u));
  CHECK(L.pairing(u + w, v) == L.pairing(u, v) + L.pairing(w, v));
  CHECK(L.pairing(u, u) == 0);
}

TEST_CASE("double_lattice builds the canonical symplectic extension") {
  auto L1 = make_lattice(1, {{0}});
  auto D1 = double_lattice(L1);
  CHECK(D1.rank() == 2);
  CHECK(D1.gram() == std::vector<std::vector<std::int64_t>>{{0, 1}, {-1, 0}});

  auto L2 = make_lattice(2, {{0, 1}, {-1, 0}});
  auto D2 = double_lattice(L2);
  CHECK(D2.rank() == 4);
  CHECK(D2.nondegenerate());
  CHECK(determinant(D2.gram()) == 1);

  auto D11 = double_lattice(D1);
  CHECK(D11.rank() == 4);
  CHECK(D11.nondegenerate());

  // Pairings: old block kept, <b_i, b_j^v> = delta_ij, duals isotropic.
  CHECK(D2.pairing(D2.basis_vector(0), D2.basis_vector(1)) == 1);
  CHECK(D2.pairing(D2.basis_vector(0), D2.basis_vector(2)) == 1);
  CHECK(D2.pairing(D2.basis_vector(0), D2.basis_vector(3)) == 0);
  CHECK(D2.pairing(D2.basis_vector(2), D2.basis_vector(3)) == 0);
}

TEST_CASE("degenerate lattices are detected") {
  auto L = make_lattice(2, {{0, 0}, {0, 0}});
  CHECK_FALSE(L.nondegenerate());
  auto L3 = make_lattice(3, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(L3.nondegenerate());  // odd rank skew is always singular
}

TEST_CASE("first-quadrant cone: height and membership") {
  auto cone = first_quadrant_cone(10);
  CHECK(cone.max_height() == 10);
  CHECK(cone.height(LatticeVector{2, 3}) == 5);
  CHECK(cone.contains(LatticeVector{1, 0}));
  CHECK(cone.contains(LatticeVector{0, 7}));
  CHECK(cone.contains(LatticeVector{3, 4}));
  CHECK_FALSE(cone.contains(LatticeVector{0, 0}));
  CHECK_FALSE(cone.contains(LatticeVector{-1, 2}));
  CHECK_FALSE(cone.contains(LatticeVector{1, -1}));
}

TEST_CASE("custom cones: membership is the rational cone of the generators") {
  // Cone spanned by (2,1) and (1,2): contains (1,1) and (3,3) but not (1,0).
  TruncationCone cone({LatticeVector{2, 1}, LatticeVector{1, 2}}, {1, 1}, 12);
  CHECK(cone.contains(LatticeVector{2, 1}));
  CHECK(cone.contains(LatticeVector{1, 1}));
  CHECK(cone.contains(LatticeVector{3, 3}));
  CHECK(cone.contains(LatticeVector{5, 4}));
  CHECK_FALSE(cone.contains(LatticeVector{1, 0}));
  CHECK_FALSE(cone.contains(LatticeVector{3, 1}));
}

TEST_CASE("cones demand strictly positive heights on generators") {
  CHECK_THROWS_AS(
      TruncationCone({LatticeVector{1, 0}, LatticeVector{-1, 1}}, {1, 1}, 8),
      Error);
  CHECK_THROWS_AS(TruncationCone({LatticeVector{1, 0}}, {0, 1}, 8), Error);
  CHECK_THROWS_AS(TruncationCone({LatticeVector{1, 0}}, {1, 1}, 0), Error);
}

TEST_CASE("Fourier-Motzkin feasibility") {
  // x <= 1, -x <= -2: infeasible.
  CHECK_FALSE(fm_feasible({{Rat(1)}, {Rat(-1)}}, {Rat(1), Rat(-2)}));
  // x <= 3, -x <= -1: feasible.
  CHECK(fm_feasible({{Rat(1)}, {Rat(-1)}}, {Rat(3), Rat(-1)}));
  // x + y <= 1, -x <= 0, -y <= 0: feasible (the standard simplex).
  CHECK(fm_feasible({{Rat(1), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}},
                    {Rat(1), Rat(0), Rat(0)}));
}
