#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wallcross/factorization.hpp"

using namespace wallcross;

namespace {

ChargeLattice k_lattice(std::int64_t k) {
  return make_lattice(2, {{0, k}, {-k, 0}});
}

CentralCharge standard_charge() {
  return CentralCharge({GaussianRat(Rat(1), Rat(0)),
                        GaussianRat(Rat(0), Rat(1))});
}

// Central charge with the basis arguments swapped: Z(1,0) = i, Z(0,1) = 1.
CentralCharge swapped_charge() {
  return CentralCharge({GaussianRat(Rat(0), Rat(1)),
                        GaussianRat(Rat(1), Rat(0))});
}

// e_mu (1 - e_g)^p in the twisted algebra (geometric series for p < 0);
// the expected image of e_mu under T_g.
ConeSeries transformed_monomial(const ChargeLattice& L,
                                const TruncationCone& cone,
                                const LatticeVector& mu, const LatticeVector& g,
                                std::int64_t p) {
  ConeSeries u = ConeSeries::unit(L, cone) - ConeSeries::term(L, cone, g, Rat(1));
  if (p < 0) {
    // Along a single ray the twist vanishes, so the plain geometric series
    // inverts 1 - e_g.
    ConeSeries inv(L, cone);
    for (std::int64_t n = 0; n * cone.height(g) <= cone.max_height(); ++n)
      inv.add_term(g * n, Rat(1));
    u = inv;
    p = -p;
  }
  ConeSeries r = ConeSeries::term(L, cone, mu, Rat(1));
  for (std::int64_t i = 0; i < p; ++i) r = r * u;
  return r;
}

OmegaTable random_omega(std::mt19937_64& rng, const TruncationCone& cone) {
  std::uniform_int_distribution<int> coord(0, 4);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  OmegaTable t;
  for (int i = 0; i < 5; ++i) {
    LatticeVector g{coord(rng), coord(rng)};
    if (g.is_zero() || cone.height(g) > cone.max_height()) continue;
    Rat w = rat(num(rng), den(rng));
    if (w != 0) t[g] = w;
  }
  return t;
}

// Dense lower-triangular solve of a(m g0) = -sum_{n | m} Omega((m/n) g0)/n^2,
// one divisor at a time; an independent check on the Mobius inversion.
std::map<std::int64_t, Rat> triangular_solve(
    const std::map<std::int64_t, Rat>& alpha, std::int64_t m_max) {
  std::map<std::int64_t, Rat> omega;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    Rat a = alpha.count(m) ? alpha.at(m) : Rat(0);
    Rat w = -a;
    for (std::int64_t n = 2; n <= m; ++n) {
      if (m % n != 0) continue;
      auto it = omega.find(m / n);
      if (it != omega.end()) w -= it->second / Rat(n * n);
    }
    if (w != 0) omega[m] = w;
  }
  return omega;
}

}  // namespace

TEST_CASE("central charge is additive and validates rank") {
  CentralCharge Z = standard_charge();
  CHECK(Z(LatticeVector{2, 3}) == GaussianRat(Rat(2), Rat(3)));
  CHECK(Z(LatticeVector{-1, 0}) == GaussianRat(Rat(-1), Rat(0)));
  CHECK_THROWS_AS(Z(LatticeVector{1, 2, 3}), Error);
}

TEST_CASE("clockwise comparison and ray identity") {
  GaussianRat a(Rat(0), Rat(1)), b(Rat(1), Rat(1)), c(Rat(2), Rat(2));
  CHECK(clockwise_before(a, b));
  CHECK_FALSE(clockwise_before(b, a));
  CHECK_FALSE(clockwise_before(b, c));
  CHECK(same_ray(b, c));
  CHECK_FALSE(same_ray(b, GaussianRat(Rat(-1), Rat(-1))));
}

TEST_CASE("strict-sector validation") {
  GaussianRat e1(Rat(1), Rat(0)), e2(Rat(0), Rat(1));
  CHECK_NOTHROW(check_strict_sector({e1, e2, GaussianRat(Rat(1), Rat(1))}));
  CHECK_NOTHROW(check_strict_sector({}));
  CHECK_NOTHROW(check_strict_sector({e1}));
  try {
    check_strict_sector({e1, GaussianRat(Rat(-1), Rat(0))});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SectorTooWide);
  }
  // Three rays covering more than a half-plane.
  CHECK_THROWS_AS(check_strict_sector({e1, e2, GaussianRat(Rat(-1), Rat(-1))}),
                  Error);
  try {
    check_strict_sector({e1, GaussianRat(Rat(0), Rat(0))});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCharge);
  }
}

TEST_CASE("t_factor matches the coordinate formula e_mu -> e_mu (1-e_g)^{<g,mu>}") {
  for (std::int64_t k : {std::int64_t(1), std::int64_t(2)}) {
    auto L = k_lattice(k);
    auto cone = first_quadrant_cone(8);
    std::vector<std::pair<std::int64_t, std::int64_t>> gammas = {
        {1, 0}, {0, 1}, {1, 1}, {2, 1}};
    for (auto [a, b] : gammas) {
      GroupElement T = t_factor(a, b, k, L, cone);
      LatticeVector g{a, b};
      for (const LatticeVector& mu :
           {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 2}}) {
        ConeSeries image = T.apply(ConeSeries::term(L, cone, mu, Rat(1)));
        CHECK(image == transformed_monomial(L, cone, mu, g, L.pairing(g, mu)));
      }
    }
  }
}

TEST_CASE("t_factor: explicit low-order coefficients") {
  auto L = k_lattice(2);
  auto cone = first_quadrant_cone(6);
  // T_{(1,0)} at k = 2 sends e_{(0,1)} to e_{(0,1)} - 2 e_{(1,1)} + e_{(2,1)}.
  ConeSeries image = t_factor(1, 0, 2, L, cone)
                         .apply(ConeSeries::term(L, cone, LatticeVector{0, 1},
                                                 Rat(1)));
  ConeSeries expected(L, cone);
  expected.add_term(LatticeVector{0, 1}, Rat(1));
  expected.add_term(LatticeVector{1, 1}, Rat(-2));
  expected.add_term(LatticeVector{2, 1}, Rat(1));
  CHECK(image == expected);
}

TEST_CASE("t_factor input validation") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(6);
  try {
    t_factor(1, 0, 2, L, cone);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadLattice);
  }
  try {
    t_factor(0, 0, 1, L, cone);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
  CHECK_THROWS_AS(t_factor(-1, 1, 1, L, cone), Error);
}

TEST_CASE("ray_exp: basic dictionary") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(8);
  // Omega(g0) = 1 reproduces the basic transformation.
  RayFactor r{LatticeVector{0, 1}, {{1, Rat(1)}}};
  CHECK(ray_exp(r, L, cone) == t_factor(0, 1, 1, L, cone));
  // Empty table gives the identity.
  RayFactor empty{LatticeVector{0, 1}, {}};
  CHECK(ray_exp(empty, L, cone).is_identity());
  // Omega(2 g0) = 1 contributes -1/n^2 at 2n g0.
  RayFactor dbl{LatticeVector{0, 1}, {{2, Rat(1)}}};
  LieSeries h = ray_exp(dbl, L, cone).log();
  CHECK(h.coefficient(LatticeVector{0, 2}) == Rat(-1));
  CHECK(h.coefficient(LatticeVector{0, 4}) == Rat(-1, 4));
  CHECK(h.coefficient(LatticeVector{0, 1}) == Rat(0));
  CHECK(h.coefficient(LatticeVector{0, 3}) == Rat(0));
  // Ray bases must be primitive.
  RayFactor bad{LatticeVector{0, 2}, {{1, Rat(1)}}};
  try {
    ray_exp(bad, L, cone);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimitive);
  }
}

TEST_CASE("a_from_omega: 1/n^2 cascade") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(9);
  OmegaTable omega{{LatticeVector{1, 0}, Rat(1)}};
  LieSeries h = a_from_omega(omega, L, cone);
  for (int n = 1; n <= 9; ++n)
    CHECK(h.coefficient(LatticeVector{n, 0}) == Rat(-1, n * n));
}

TEST_CASE("mobius function") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
}

TEST_CASE("omega_from_a inverts a_from_omega") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(12);
  // Worked example: alpha = (-1, -5/4, 0, ...) along a ray encodes
  // Omega(g0) = Omega(2 g0) = 1.
  LieSeries h(L, cone);
  h.add_term(LatticeVector{1, 0}, Rat(-1));
  h.add_term(LatticeVector{2, 0}, Rat(-5, 4));
  OmegaTable got = omega_from_a(h);
  CHECK(got.size() == 2);
  CHECK(got.at(LatticeVector{1, 0}) == Rat(1));
  CHECK(got.at(LatticeVector{2, 0}) == Rat(1));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    OmegaTable omega = random_omega(rng, cone);
    OmegaTable back = omega_from_a(a_from_omega(omega, L, cone));
    for (const auto& [g, w] : omega) CHECK(back.at(g) == w);
    for (const auto& [g, w] : back)
      CHECK((omega.count(g) ? omega.at(g) : Rat(0)) == w);
  }
}

TEST_CASE("omega_from_a agrees with a dense triangular solve") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(12);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LieSeries h(L, cone);
    std::map<std::int64_t, Rat> alpha;
    for (std::int64_t m = 1; m <= 12; ++m) {
      Rat c = rat(num(rng), den(rng));
      if (c == 0) continue;
      alpha[m] = c;
      h.add_term(LatticeVector{0, m}, c);
    }
    if (alpha.empty()) continue;
    std::map<std::int64_t, Rat> expected =
        triangular_solve(alpha, alpha.rbegin()->first);
    OmegaTable got = omega_from_a(h);
    CHECK(got.size() == expected.size());
    for (const auto& [m, w] : expected)
      CHECK(got.at(LatticeVector{0, m}) == w);
  }
}

TEST_CASE("factorize: a single ray factor comes back unchanged") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(8);
  GroupElement T = t_factor(0, 1, 1, L, cone);
  OrderedFactorization f = factorize(T, standard_charge(), cone);
  REQUIRE(f.factors().size() == 1);
  CHECK(f.factors()[0].gamma0 == LatticeVector{0, 1});
  OmegaTable t = f.omega_table();
  CHECK(t.size() == 1);
  CHECK(t.at(LatticeVector{0, 1}) == Rat(1));
}

TEST_CASE("factorize: the basic two-factor product at k = 1") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(10);
  GroupElement F =
      compose(t_factor(1, 0, 1, L, cone), t_factor(0, 1, 1, L, cone));
  OrderedFactorization f = factorize(F, standard_charge(), cone);
  REQUIRE(f.factors().size() == 3);
  CHECK(f.factors()[0].gamma0 == LatticeVector{0, 1});
  CHECK(f.factors()[1].gamma0 == LatticeVector{1, 1});
  CHECK(f.factors()[2].gamma0 == LatticeVector{1, 0});
  OmegaTable t = f.omega_table();
  CHECK(t.size() == 3);
  CHECK(t.at(LatticeVector{1, 0}) == Rat(1));
  CHECK(t.at(LatticeVector{1, 1}) == Rat(1));
  CHECK(t.at(LatticeVector{0, 1}) == Rat(1));
  // The product identity behind it.
  GroupElement rhs = compose({t_factor(0, 1, 1, L, cone),
                              t_factor(1, 1, 1, L, cone),
                              t_factor(1, 0, 1, L, cone)});
  CHECK(F == rhs);
  CHECK(assemble(f) == F);
}

TEST_CASE("factorize: the k = 2 spectrum") {
  auto L = k_lattice(2);
  auto cone = first_quadrant_cone(8);
  GroupElement F =
      compose(t_factor(1, 0, 2, L, cone), t_factor(0, 1, 2, L, cone));
  OmegaTable got = factorize(F, standard_charge(), cone).omega_table();
  OmegaTable expected;
  for (std::int64_t n = 0;; ++n) {
    LatticeVector a{n, n + 1}, b{n + 1, n};
    if (cone.height(a) > cone.max_height()) break;
    expected[a] = Rat(1);
    expected[b] = Rat(1);
  }
  expected[LatticeVector{1, 1}] = Rat(-2);
  CHECK(got == expected);
}

TEST_CASE("assemble: empty factorization is the identity") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(6);
  OrderedFactorization f(L, cone, standard_charge(), {});
  CHECK(assemble(f).is_identity());
  CHECK(f.omega_table().empty());
}

TEST_CASE("assemble after factorize is the identity on random products") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> kdist(1, 3);
  std::uniform_int_distribution<int> coord(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 15; ++trial) {
    std::int64_t k = kdist(rng);
    auto L = k_lattice(k);
    auto cone = first_quadrant_cone(8);
    std::vector<GroupElement> parts;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
      std::int64_t a = coord(rng), b = coord(rng);
      if (a == 0 && b == 0) a = 1;
      parts.push_back(t_factor(a, b, k, L, cone));
    }
    GroupElement F = compose(parts);
    OrderedFactorization f = factorize(F, standard_charge(), cone);
    CHECK(assemble(f) == F);
  }
}

TEST_CASE("refactorize: fixed charge is a no-op, moving it crosses the wall") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(10);
  GroupElement F =
      compose(t_factor(1, 0, 1, L, cone), t_factor(0, 1, 1, L, cone));

  // In the chamber where Arg Z(1,0) > Arg Z(0,1) the element splits into the
  // two-factor side.
  OrderedFactorization two = factorize(F, swapped_charge(), cone);
  REQUIRE(two.factors().size() == 2);
  CHECK(two.factors()[0].gamma0 == LatticeVector{1, 0});
  CHECK(two.factors()[1].gamma0 == LatticeVector{0, 1});
  CHECK(two.omega_table().size() == 2);

  OrderedFactorization same = refactorize(two, swapped_charge());
  CHECK(same.omega_table() == two.omega_table());

  OrderedFactorization three = refactorize(two, standard_charge());
  OmegaTable t = three.omega_table();
  CHECK(t.size() == 3);
  CHECK(t.at(LatticeVector{1, 1}) == Rat(1));

  // Crossing back restores the original table.
  OrderedFactorization back = refactorize(three, swapped_charge());
  CHECK(back.omega_table() == two.omega_table());
}

TEST_CASE("ordered factorization validation") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(6);
  CentralCharge Z = standard_charge();
  RayFactor f01{LatticeVector{0, 1}, {{1, Rat(1)}}};
  RayFactor f10{LatticeVector{1, 0}, {{1, Rat(1)}}};
  RayFactor f11{LatticeVector{1, 1}, {{1, Rat(1)}}};
  CHECK_NOTHROW(OrderedFactorization(L, cone, Z, {f01, f11, f10}));
  try {
    OrderedFactorization(L, cone, Z, {f10, f01});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderingViolated);
  }
  try {
    OrderedFactorization(L, cone, Z, {f01, f01});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderingViolated);
  }
  RayFactor imprim{LatticeVector{2, 2}, {{1, Rat(1)}}};
  try {
    OrderedFactorization(L, cone, Z, {imprim});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimitive);
  }
  // A charge vanishing on a ray is degenerate.
  CentralCharge Zbad({GaussianRat(Rat(0), Rat(0)), GaussianRat(Rat(0), Rat(1))});
  try {
    OrderedFactorization(L, cone, Zbad, {f10});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCharge);
  }
}

TEST_CASE("factorize rejects charges sitting on a wall") {
  auto L = k_lattice(1);
  auto cone = first_quadrant_cone(6);
  GroupElement F =
      compose(t_factor(1, 0, 1, L, cone), t_factor(0, 1, 1, L, cone));
  // Z(1,0) and Z(0,1) share the argument pi/4: the support rays collide.
  CentralCharge Zwall({GaussianRat(Rat(1), Rat(1)), GaussianRat(Rat(2), Rat(2))});
  try {
    factorize(F, Zwall, cone);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCharge);
  }
}
