#ifndef WALLCROSS_COHA_HPP
#define WALLCROSS_COHA_HPP

#include <map>
#include <vector>

#include "wallcross/polyq.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Multivariate polynomial over Q, dense in the exponent map; internal
// workhorse for the shuffle product.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponents e, Rat c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& s) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  static MultiPoly constant(int nvars, Rat c);
  static MultiPoly variable(int nvars, int i);
  // x_a - x_b
  static MultiPoly linear_diff(int nvars, int a, int b);

  Rat eval(const std::vector<Rat>& point) const;

 private:
  int nvars_;
  std::map<Exponents, Rat> terms_;
};

// Exact division by (x_a - x_b); throws NotDivisible on nonzero remainder.
MultiPoly divide_linear_diff(const MultiPoly& p, int a, int b);

// Partition: weakly decreasing positive parts (trailing zeros trimmed).
using Partition = std::vector<std::int64_t>;

// Symmetric polynomial in n variables in the monomial-symmetric basis.
class SymPoly {
 public:
  explicit SymPoly(int nvars) : nvars_(nvars) {}

  static SymPoly one(int nvars);
  static SymPoly monomial_sym(int nvars, Partition lambda, Rat c = Rat(1));

  int nvars() const { return nvars_; }
  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Partition lambda, Rat c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly scaled(const Rat& s) const;
  bool operator==(const SymPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  std::int64_t degree() const;  // max total degree, 0 for the zero poly

  MultiPoly expand() const;
  // Collapses a symmetric expansion back to the partition basis; asserts
  // the input really is symmetric.
  static SymPoly collect(const MultiPoly& p);

 private:
  int nvars_;
  std::map<Partition, Rat> terms_;
};

// CoHA product for the quiver with one vertex and d loops:
// sum over (n,m)-shuffles of f1 f2 prod (x_j - x_i)^{d-1}. For d = 0 the
// sum is computed over the Vandermonde common denominator and divided out
// exactly.
SymPoly shuffle_mul(const SymPoly& f1, const SymPoly& f2, int d);

struct Bigrading {
  std::int64_t n;
  std::int64_t m;  // 2K + (1-d) n^2 for polynomial degree K
  bool operator==(const Bigrading& o) const { return n == o.n && m == o.m; }
};

Bigrading bigrade(const SymPoly& f, int d);

struct HilbertEntry {
  int n;
  std::int64_t m;
  std::int64_t dim_partitions;  // partition-counting route
  std::int64_t dim_series;      // generating-series route
};

struct HilbertTable {
  std::vector<HilbertEntry> entries;
  bool match;
};

// Bigraded dimensions of the d-loop CoHA for n <= n_max and m in
// [m_min, m_max], computed two ways and compared.
HilbertTable coha_hilbert(int d, int n_max, std::int64_t m_min,
                          std::int64_t m_max);

// z^n coefficient of P_d(z, q^{1/2}) as a rational function of t = q^{1/2}:
// t^{(1-d) n^2} / prod_{i=1..n} (1 - t^{2i}).
QRational coha_series_coefficient(int d, int n);

}  // namespace wallcross

#endif  // WALLCROSS_COHA_HPP
