#ifndef WALLCROSS_STABILITY_HPP
#define WALLCROSS_STABILITY_HPP

#include <optional>
#include <vector>

#include "wallcross/factorization.hpp"

namespace wallcross {

// Stability data: a central charge plus BPS invariants of finite support,
// optionally with a quadratic form witnessing the Support Property.
struct StabilityData {
  ChargeLattice lattice;
  CentralCharge charge;
  OmegaTable omega;
  std::optional<std::vector<std::vector<Rat>>> qform;
};

StabilityData make_stability_data(
    ChargeLattice lattice, CentralCharge charge, OmegaTable omega,
    std::optional<std::vector<std::vector<Rat>>> qform = std::nullopt);

struct SupportVerdict {
  LatticeVector gamma;
  Rat norm2;    // ||gamma||^2 in the lattice basis
  Rat bound2;   // C^2 |Z(gamma)|^2
  bool pass;
};

struct SupportReport {
  std::vector<SupportVerdict> verdicts;
  bool pass;
};

// Exact Support Property check ||gamma||^2 <= C^2 |Z(gamma)|^2 on every
// support vector. ZeroCharge if Z vanishes on a support vector.
SupportReport support_check(const StabilityData& sd, const Rat& C);

struct QFormReport {
  bool negative_on_kernel;   // Q < 0 on Ker Z (vacuously true for trivial kernel)
  bool nonnegative_on_support;
  bool pass;
};

// Quadratic-form variant: Q negative definite on Ker Z and Q(gamma) >= 0
// on the support.
QFormReport qform_check(const StabilityData& sd);

// Strict angular sector, traversed clockwise from start to end; width
// strictly below pi (a single ray when the boundary rays coincide).
class Sector {
 public:
  Sector(GaussianRat z_start, GaussianRat z_end, bool include_start = true,
         bool include_end = true);

  const GaussianRat& start() const { return start_; }
  const GaussianRat& end() const { return end_; }
  bool include_start() const { return include_start_; }
  bool include_end() const { return include_end_; }
  bool single_ray() const { return single_ray_; }

  bool contains(const GaussianRat& z) const;

 private:
  GaussianRat start_, end_;
  bool include_start_, include_end_;
  bool single_ray_;
};

// Support vectors gamma with Z(gamma) in V (and Q(gamma) >= 0 when the
// form is present), sorted clockwise then by multiple.
std::vector<LatticeVector> sector_cone(const StabilityData& sd,
                                       const Sector& V);

// Clockwise product of the ray factors supported in V. DegenerateCharge if
// two distinct primitive rays in V share a direction or Z vanishes there.
GroupElement assemble_sector(const StabilityData& sd, const Sector& V,
                             const TruncationCone& cone);

}  // namespace wallcross

#endif  // WALLCROSS_STABILITY_HPP
