#include "wallcross/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace wallcross {

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

LatticeVector LatticeVector::operator*(std::int64_t n) const {
  LatticeVector r = *this;
  for (auto& c : r.coords) c *= n;
  return r;
}

std::int64_t LatticeVector::content() const {
  std::int64_t g = 0;
  for (auto c : coords) g = std::gcd(g, c);
  return g;
}

LatticeVector LatticeVector::primitive_part() const {
  std::int64_t g = content();
  if (g == 0) fail(ErrorCode::ZeroVector, "primitive part of zero vector");
  LatticeVector r = *this;
  for (auto& c : r.coords) c /= g;
  return r;
}

std::string vec_to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) os << ",";
    os << v.coords[i];
  }
  os << ")";
  return os.str();
}

ChargeLattice::ChargeLattice(int rank,
                             std::vector<std::vector<std::int64_t>> gram)
    : rank_(rank), gram_(std::move(gram)) {
  if (rank_ <= 0) fail(ErrorCode::InvalidInput, "rank must be positive");
  if (gram_.size() != static_cast<std::size_t>(rank_))
    fail(ErrorCode::InvalidInput, "gram matrix is not rank x rank");
  for (const auto& row : gram_)
    if (row.size() != static_cast<std::size_t>(rank_))
      fail(ErrorCode::InvalidInput, "gram matrix is not rank x rank");
  for (int i = 0; i < rank_; ++i) {
    if (gram_[i][i] != 0)
      fail(ErrorCode::NotSkewSymmetric, "nonzero diagonal entry");
    for (int j = 0; j < rank_; ++j)
      if (gram_[i][j] != -gram_[j][i])
        fail(ErrorCode::NotSkewSymmetric, "gram[i][j] != -gram[j][i]");
  }
}

std::int64_t ChargeLattice::pairing(const LatticeVector& a,
                                    const LatticeVector& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += a.coords[i] * gram_[i][j] * b.coords[j];
  return s;
}

bool ChargeLattice::nondegenerate() const {
  // Exact determinant via fraction-full Gaussian elimination.
  std::vector<std::vector<Rat>> m(rank_, std::vector<Rat>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = Rat(gram_[i][j]);
  for (int col = 0; col < rank_; ++col) {
    int pivot = -1;
    for (int r = col; r < rank_; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[col], m[pivot]);
    for (int r = col + 1; r < rank_; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < rank_; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

LatticeVector ChargeLattice::basis_vector(int i) const {
  LatticeVector v(std::vector<std::int64_t>(rank_, 0));
  v.coords[i] = 1;
  return v;
}

ChargeLattice make_lattice(int rank,
                           std::vector<std::vector<std::int64_t>> gram) {
  return ChargeLattice(rank, std::move(gram));
}

ChargeLattice double_lattice(const ChargeLattice& L) {
  int n = L.rank();
  std::vector<std::vector<std::int64_t>> g(2 * n,
                                           std::vector<std::int64_t>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = L.gram()[i][j];
  for (int i = 0; i < n; ++i) {
    g[i][n + i] = 1;
    g[n + i][i] = -1;
  }
  return ChargeLattice(2 * n, std::move(g));
}

namespace {

void append_scaled(std::vector<Rat>& dst, const std::vector<Rat>& a,
                   const Rat& fa, const std::vector<Rat>& b, const Rat& fb) {
  for (std::size_t i = 0; i < a.size(); ++i) dst.push_back(fa * a[i] + fb * b[i]);
}

}  // namespace

bool fm_feasible(std::vector<std::vector<Rat>> lhs, std::vector<Rat> rhs) {
  if (lhs.empty()) return true;
  std::size_t nvars = lhs[0].size();
  for (std::size_t var = 0; var < nvars; ++var) {
    std::vector<std::vector<Rat>> next_lhs;
    std::vector<Rat> next_rhs;
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      int s = sgn(lhs[i][var]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }
    for (auto i : zero) {
      next_lhs.push_back(lhs[i]);
      next_rhs.push_back(rhs[i]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        // a_p x <= b_p (coef > 0), a_n x <= b_n (coef < 0): combine.
        std::vector<Rat> row;
        row.reserve(nvars);
        append_scaled(row, lhs[p], -lhs[n][var], lhs[n], lhs[p][var]);
        next_lhs.push_back(std::move(row));
        next_rhs.push_back(-lhs[n][var] * rhs[p] + lhs[p][var] * rhs[n]);
      }
    }
    lhs = std::move(next_lhs);
    rhs = std::move(next_rhs);
    if (lhs.empty()) return true;
  }
  // All variables eliminated: rows are 0 <= rhs[i].
  for (const auto& b : rhs)
    if (b < 0) return false;
  return true;
}

TruncationCone::TruncationCone(std::vector<LatticeVector> generators,
                               std::vector<std::int64_t> height_coeffs,
                               int max_height)
    : generators_(std::move(generators)),
      height_coeffs_(std::move(height_coeffs)),
      max_height_(max_height) {
  if (generators_.empty())
    fail(ErrorCode::InvalidInput, "cone needs at least one generator");
  if (max_height_ < 1)
    fail(ErrorCode::InvalidInput, "max_height must be positive");
  std::size_t rank = height_coeffs_.size();
  for (const auto& g : generators_) {
    if (g.rank() != rank)
      fail(ErrorCode::InvalidInput, "generator rank mismatch");
    if (height(g) < 1)
      fail(ErrorCode::InvalidInput,
           "height functional must be >= 1 on every generator");
  }
  // Strictness: no nonzero nonnegative combination sums to zero. Since the
  // height is >= 1 on generators and linear, any such combination would have
  // positive height, so strictness follows; still reject a zero generator.
  for (const auto& g : generators_)
    if (g.is_zero()) fail(ErrorCode::InvalidInput, "zero cone generator");
}

std::int64_t TruncationCone::height(const LatticeVector& v) const {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    h += height_coeffs_[i] * v.coords[i];
  return h;
}

bool TruncationCone::contains(const LatticeVector& v) const {
  if (v.is_zero()) return false;
  std::size_t rank = v.rank();
  std::size_t m = generators_.size();
  // Feasibility of {sum x_j g_j = v, x_j >= 0} as inequalities.
  std::vector<std::vector<Rat>> lhs;
  std::vector<Rat> rhs;
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<Rat> row(m), nrow(m);
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = Rat(generators_[j].coords[r]);
      nrow[j] = -row[j];
    }
    lhs.push_back(std::move(row));
    rhs.push_back(Rat(v.coords[r]));
    lhs.push_back(std::move(nrow));
    rhs.push_back(Rat(-v.coords[r]));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rat> row(m, Rat(0));
    row[j] = Rat(-1);
    lhs.push_back(std::move(row));
    rhs.push_back(Rat(0));
  }
  return fm_feasible(std::move(lhs), std::move(rhs));
}

TruncationCone first_quadrant_cone(int max_height) {
  return TruncationCone({LatticeVector{1, 0}, LatticeVector{0, 1}}, {1, 1},
                        max_height);
}

}  // namespace wallcross
