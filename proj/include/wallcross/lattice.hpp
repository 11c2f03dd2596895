#ifndef WALLCROSS_LATTICE_HPP
#define WALLCROSS_LATTICE_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

// Integer charge vector in a fixed-rank lattice. Plain value type; the
// ambient lattice supplies the pairing.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator*(std::int64_t n) const;
  bool operator==(const LatticeVector& o) const { return coords == o.coords; }
  bool operator!=(const LatticeVector& o) const { return coords != o.coords; }
  bool operator<(const LatticeVector& o) const { return coords < o.coords; }

  // gcd of coordinates; 0 for the zero vector.
  std::int64_t content() const;
  bool is_primitive() const { return content() == 1; }
  // v / content; errors on the zero vector.
  LatticeVector primitive_part() const;
};

std::string vec_to_string(const LatticeVector& v);

// Free abelian group Z^rank with a skew-symmetric integer pairing given by
// its Gram matrix on the standard basis.
class ChargeLattice {
 public:
  ChargeLattice(int rank, std::vector<std::vector<std::int64_t>> gram);

  int rank() const { return rank_; }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }

  std::int64_t pairing(const LatticeVector& a, const LatticeVector& b) const;

  // det(gram) != 0; required for faithful torus actions (log recovery).
  bool nondegenerate() const;

  LatticeVector basis_vector(int i) const;

  bool operator==(const ChargeLattice& o) const {
    return rank_ == o.rank_ && gram_ == o.gram_;
  }

 private:
  int rank_;
  std::vector<std::vector<std::int64_t>> gram_;
};

ChargeLattice make_lattice(int rank,
                           std::vector<std::vector<std::int64_t>> gram);

// Canonical symplectic extension: rank doubles, new basis pairs
// <b_i, b_j^v> = delta_ij, <b_i^v, b_j^v> = 0. Always nondegenerate.
ChargeLattice double_lattice(const ChargeLattice& L);

// Strict convex cone spanned by integer generators, together with a
// strictly positive integer height functional and the truncation bound D.
class TruncationCone {
 public:
  TruncationCone(std::vector<LatticeVector> generators,
                 std::vector<std::int64_t> height_coeffs, int max_height);

  const std::vector<LatticeVector>& generators() const { return generators_; }
  int max_height() const { return max_height_; }
  std::int64_t height(const LatticeVector& v) const;

  // Membership in the rational cone spanned by the generators (0 excluded).
  bool contains(const LatticeVector& v) const;

  bool operator==(const TruncationCone& o) const {
    return generators_ == o.generators_ && height_coeffs_ == o.height_coeffs_ &&
           max_height_ == o.max_height_;
  }
  bool operator!=(const TruncationCone& o) const { return !(*this == o); }

 private:
  std::vector<LatticeVector> generators_;
  std::vector<std::int64_t> height_coeffs_;
  int max_height_;
};

// Default cone for rank-2 work: first quadrant, height(a,b) = a+b.
TruncationCone first_quadrant_cone(int max_height);

// Exact Fourier-Motzkin feasibility of {lhs . x <= rhs}.
bool fm_feasible(std::vector<std::vector<Rat>> lhs, std::vector<Rat> rhs);

}  // namespace wallcross

#endif  // WALLCROSS_LATTICE_HPP
