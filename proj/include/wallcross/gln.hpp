#ifndef WALLCROSS_GLN_HPP
#define WALLCROSS_GLN_HPP

#include <vector>

#include "wallcross/algebraic.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Symmetric stability data on gl(n): n marked points z_i in the plane
// (normalized by z_1 = 0) and a skew-symmetric rational matrix a_{ij}.
struct GlnConfig {
  int n = 0;
  std::vector<GaussianRat> z;
  std::vector<std::vector<Rat>> a;
};

// Validates sizes, z_1 = 0, skew-symmetry, distinctness of the z_i, and
// (when require_no_collinear) that no three z_i are collinear.
GlnConfig make_gln_config(int n, std::vector<GaussianRat> z,
                          std::vector<std::vector<Rat>> a,
                          bool require_no_collinear = true);

// Records z_j passing across the open segment (z_i, z_k):
// a_{ik} += direction * a_{ij} * a_{jk}. Indices are 0-based and distinct;
// direction is +1 or -1 (the inverse crossing).
GlnConfig gln_apply_crossing(const GlnConfig& cfg, int i, int j, int k,
                             int direction);

// Piecewise-linear path of the marked points; waypoints.front() must equal
// initial.z and every waypoint keeps z_1 = 0.
struct GlnPath {
  GlnConfig initial;
  std::vector<std::vector<GaussianRat>> waypoints;
};

struct GlnCrossing {
  int segment;  // waypoint interval index
  int i, j, k;  // z_j crossed the segment (z_i, z_k), i < k
  int direction;
  QuadExt time;  // segment parameter in (0,1)
};

struct GlnTransportResult {
  GlnConfig config;
  std::vector<GlnCrossing> crossings;
};

// Transports the matrix along the path, firing each crossing in exact
// chronological order. NonGenericPath on endpoint roots, double roots,
// simultaneous events, or point collisions.
GlnTransportResult gln_transport_detailed(const GlnPath& path);
GlnConfig gln_transport(const GlnPath& path);

// True iff the loop returns the matrix to its initial value exactly.
bool gln_monodromy_check(const GlnPath& loop);

}  // namespace wallcross

#endif  // WALLCROSS_GLN_HPP
