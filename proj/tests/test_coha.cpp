#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wallcross/coha.hpp"
#include "wallcross/qtorus.hpp"

using namespace wallcross;

namespace {

SymPoly msym(int nvars, Partition lambda, Rat c = Rat(1)) {
  return SymPoly::monomial_sym(nvars, std::move(lambda), std::move(c));
}

// Random homogeneous element of H_n of the given degree in the partition
// basis.
SymPoly random_homogeneous(std::mt19937_64& rng, int n, int deg) {
  static const std::map<int, std::vector<Partition>> kParts = {
      {0, {{}}}, {1, {{1}}}, {2, {{2}, {1, 1}}}, {3, {{3}, {2, 1}, {1, 1, 1}}}};
  std::uniform_int_distribution<int> num(-3, 3);
  SymPoly f(n);
  for (const Partition& p : kParts.at(deg)) {
    if (static_cast<int>(p.size()) > n) continue;
    Rat c(num(rng));
    if (c != 0) f.add_term(p, c);
  }
  if (f.is_zero()) f.add_term(deg == 0 ? Partition{} : Partition{deg}, Rat(1));
  return f;
}

}  // namespace

TEST_CASE("multivariate polynomials") {
  MultiPoly x = MultiPoly::variable(2, 0);
  MultiPoly y = MultiPoly::variable(2, 1);
  MultiPoly d = MultiPoly::linear_diff(2, 1, 0);  // x_1 - x_0
  CHECK(d == y - x);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y).eval({Rat(2), Rat(3)}) == 6);
  CHECK(MultiPoly::constant(2, Rat(0)).is_zero());

  // Exact division by a linear difference.
  MultiPoly p = (y - x) * (x * x + y);
  CHECK(divide_linear_diff(p, 1, 0) == x * x + y);
  try {
    divide_linear_diff(x * x + y, 1, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("symmetric polynomials: expansion and collection") {
  SymPoly f = msym(2, {2, 1});
  MultiPoly e = f.expand();
  // m_{(2,1)} in two variables = x0^2 x1 + x0 x1^2.
  MultiPoly expected(2);
  expected.add_term({2, 1}, Rat(1));
  expected.add_term({1, 2}, Rat(1));
  CHECK(e == expected);
  CHECK(SymPoly::collect(e) == f);

  CHECK(msym(3, {1, 1}).expand().terms().size() == 3);
  CHECK(SymPoly::one(2).degree() == 0);
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((f + msym(2, {1})).is_homogeneous());
}

TEST_CASE("shuffle product: worked examples") {
  SymPoly one1 = SymPoly::one(1);
  // d = 1: two shuffles with trivial kernel.
  CHECK(shuffle_mul(one1, one1, 1) == msym(2, {}, Rat(2)));
  // d = 0: the antisymmetrization of 1 vanishes.
  CHECK(shuffle_mul(one1, one1, 0).is_zero());
  // d = 2: 1 * x = x2(x2-x1) + x1(x1-x2) = m_(2) - 2 m_(1,1).
  SymPoly x = msym(1, {1});
  SymPoly got = shuffle_mul(one1, x, 2);
  SymPoly expected = msym(2, {2}) + msym(2, {1, 1}, Rat(-2));
  CHECK(got == expected);
}

TEST_CASE("shuffle product: unit and base cases") {
  SymPoly unit = SymPoly::one(0);
  SymPoly f = msym(2, {2, 1}) + msym(2, {1, 1}, Rat(3));
  for (int d = 0; d <= 3; ++d) {
    CHECK(shuffle_mul(unit, f, d) == f);
    CHECK(shuffle_mul(f, unit, d) == f);
  }
}

TEST_CASE("shuffle product: associativity and graded structure") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> ndist(1, 2);
  std::uniform_int_distribution<int> kdist(0, 3);
  for (int d = 0; d <= 3; ++d) {
    for (int trial = 0; trial < 8; ++trial) {
      SymPoly f = random_homogeneous(rng, ndist(rng), kdist(rng));
      SymPoly g = random_homogeneous(rng, ndist(rng), kdist(rng));
      SymPoly h = random_homogeneous(rng, ndist(rng), kdist(rng));
      SymPoly fg = shuffle_mul(f, g, d);
      CHECK(shuffle_mul(fg, h, d) == shuffle_mul(f, shuffle_mul(g, h, d), d));
      // Bigradings add under the product.
      if (!fg.is_zero()) {
        Bigrading bf = bigrade(f, d), bg = bigrade(g, d),
                  bfg = bigrade(fg, d);
        CHECK(bfg.n == bf.n + bg.n);
        CHECK(bfg.m == bf.m + bg.m);
      }
    }
  }
}

TEST_CASE("shuffle product output is symmetric") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> val(-7, 7);
  for (int d = 0; d <= 3; ++d) {
    SymPoly f = random_homogeneous(rng, 2, 2);
    SymPoly g = random_homogeneous(rng, 2, 3);
    MultiPoly p = shuffle_mul(f, g, d).expand();
    std::vector<Rat> point;
    for (int i = 0; i < 4; ++i) point.emplace_back(val(rng));
    std::vector<Rat> perm = point;
    std::sort(perm.begin(), perm.end());
    do {
      CHECK(p.eval(perm) == p.eval(point));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("bigrading") {
  CHECK(bigrade(SymPoly::one(0), 3) == Bigrading{0, 0});
  CHECK(bigrade(SymPoly::one(1), 0) == Bigrading{1, 1});
  CHECK(bigrade(msym(2, {1, 1}), 2) == Bigrading{2, 0});
  try {
    bigrade(msym(2, {2}) + msym(2, {1}), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }
}

TEST_CASE("Hilbert dimensions: worked rows") {
  // n = 1: dimension 1 at every m = 2K + (1-d).
  HilbertTable t1 = coha_hilbert(0, 1, 0, 9);
  for (const auto& e : t1.entries) {
    CHECK(e.dim_partitions == e.dim_series);
    if (e.n == 1) {
      CHECK(e.m % 2 == 1);
      CHECK(e.dim_partitions == 1);
    }
  }
  CHECK(t1.match);

  // n = 2, d = 1: partitions of K into at most two parts: 1,1,2,2,3.
  HilbertTable t2 = coha_hilbert(1, 2, 0, 8);
  std::vector<std::int64_t> dims;
  for (const auto& e : t2.entries)
    if (e.n == 2) dims.push_back(e.dim_partitions);
  CHECK(dims == std::vector<std::int64_t>{1, 1, 2, 2, 3});
  CHECK(t2.match);

  // n = 0 contributes a single 1 at m = 0.
  HilbertTable t0 = coha_hilbert(2, 0, -4, 4);
  REQUIRE(t0.entries.size() == 1);
  CHECK(t0.entries[0].n == 0);
  CHECK(t0.entries[0].m == 0);
  CHECK(t0.entries[0].dim_partitions == 1);
}

TEST_CASE("Hilbert dimensions: the two routes agree for d <= 3, n <= 4") {
  for (int d = 0; d <= 3; ++d) {
    HilbertTable t = coha_hilbert(d, 4, -16 * 3, 16);
    CHECK(t.match);
    for (const auto& e : t.entries) CHECK(e.dim_partitions == e.dim_series);
  }
}

TEST_CASE("series coefficients and the dilogarithm bridge") {
  CHECK(coha_series_coefficient(0, 0) == QRational(1));
  // n = 1: t / (1 - t^2) up to normalization.
  CHECK(coha_series_coefficient(0, 1) ==
        QRational(Poly::monomial(1), Poly(Rat(1)) - Poly::monomial(2)));
  // Substituting t -> 1/t turns the d = 0 coefficient into the quantum
  // dilogarithm coefficient.
  for (int n = 1; n <= 5; ++n)
    CHECK(coha_series_coefficient(0, n).subst_inverse_t() ==
          quantum_dilog_coefficient(n));
}
