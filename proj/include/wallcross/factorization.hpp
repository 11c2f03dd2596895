#ifndef WALLCROSS_FACTORIZATION_HPP
#define WALLCROSS_FACTORIZATION_HPP

#include <map>
#include <vector>

#include "wallcross/group.hpp"

namespace wallcross {

// Additive map Z : Gamma -> C with exact Gaussian-rational values on the
// basis. Its argument orders rays; all comparisons are exact.
class CentralCharge {
 public:
  explicit CentralCharge(std::vector<GaussianRat> basis_values);

  GaussianRat operator()(const LatticeVector& v) const;
  int rank() const { return static_cast<int>(values_.size()); }
  const std::vector<GaussianRat>& basis_values() const { return values_; }

  bool operator==(const CentralCharge& o) const {
    return values_ == o.values_;
  }

 private:
  std::vector<GaussianRat> values_;
};

// Exact clockwise comparison within a strict sector: a strictly precedes b
// iff Arg Z(a) > Arg Z(b), decided by the sign of Im(conj(a) * b).
inline bool clockwise_before(const GaussianRat& a, const GaussianRat& b) {
  return cross(a, b) < 0;
}

inline bool same_ray(const GaussianRat& a, const GaussianRat& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

// Verifies all values fit in an open half-plane sector of width < pi.
// Throws SectorTooWide or DegenerateCharge (zero value).
void check_strict_sector(const std::vector<GaussianRat>& values);

using OmegaTable = std::map<LatticeVector, Rat>;

// BPS invariants along one primitive ray: omega[n] = Omega(n * gamma0).
struct RayFactor {
  LatticeVector gamma0;
  std::map<std::int64_t, Rat> omega;
};

// Clockwise product representation of a group element:
//   A = prod-> exp(-sum_n Omega(n g0) Li2(e_{n g0})).
class OrderedFactorization {
 public:
  OrderedFactorization(ChargeLattice lattice, TruncationCone cone,
                       CentralCharge charge, std::vector<RayFactor> factors);

  const ChargeLattice& lattice() const { return lattice_; }
  const TruncationCone& cone() const { return cone_; }
  const CentralCharge& charge() const { return charge_; }
  const std::vector<RayFactor>& factors() const { return factors_; }

  // Flattened gamma -> Omega(gamma) over all rays and multiples.
  OmegaTable omega_table() const;

 private:
  ChargeLattice lattice_;
  TruncationCone cone_;
  CentralCharge charge_;
  std::vector<RayFactor> factors_;
};

// The paper's coordinate transformation T_{a,b}^{(k)} on the rank-2 lattice
// with gram [[0,k],[-k,0]]; log = -sum_n e_{n(a,b)} / n^2.
GroupElement t_factor(std::int64_t a, std::int64_t b, std::int64_t k,
                      const ChargeLattice& lattice, const TruncationCone& cone);

// exp(-sum_n Omega(n g0) Li2(e_{n g0})), truncated.
GroupElement ray_exp(const RayFactor& r, const ChargeLattice& lattice,
                     const TruncationCone& cone);

// a(gamma) = -sum_{n >= 1, gamma/n in Gamma\{0}} Omega(gamma/n)/n^2 e_gamma.
LieSeries a_from_omega(const OmegaTable& omega, const ChargeLattice& lattice,
                       const TruncationCone& cone);

// Mobius inversion of a_from_omega, per primitive ray:
// Omega(m g0) = -sum_{d | m} mu(d)/d^2 * alpha_{m/d}.
OmegaTable omega_from_a(const LieSeries& h);

// Number-theoretic Mobius function (n >= 1).
int mobius(std::int64_t n);

// Unique clockwise factorization of F for the given generic central charge.
OrderedFactorization factorize(const GroupElement& F, const CentralCharge& Z,
                               const TruncationCone& cone);

// Clockwise product of the ray factors, per the fixed convention.
GroupElement assemble(const OrderedFactorization& fact);

// Omega table after moving the central charge across whatever walls of
// first kind separate the two charges.
OrderedFactorization refactorize(const OrderedFactorization& fact,
                                 const CentralCharge& Z_new);

}  // namespace wallcross

#endif  // WALLCROSS_FACTORIZATION_HPP
