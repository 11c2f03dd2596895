#include "wallcross/stability.hpp"

#include <algorithm>

namespace wallcross {

namespace {

// Rational kernel basis of the 2 x n matrix (Re Z_i; Im Z_i) by Gaussian
// elimination; columns of the result span Ker Z.
std::vector<std::vector<Rat>> charge_kernel(const CentralCharge& Z) {
  int n = Z.rank();
  std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    rows[0][i] = Z.basis_values()[i].re;
    rows[1][i] = Z.basis_values()[i].im;
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < 2; ++c) {
    int p = -1;
    for (int i = r; i < 2; ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    Rat inv = Rat(1) / rows[r][c];
    for (int j = 0; j < n; ++j) rows[r][j] *= inv;
    for (int i = 0; i < 2; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    std::vector<Rat> v(n, Rat(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat quad_eval(const std::vector<std::vector<Rat>>& Q,
              const std::vector<Rat>& x) {
  Rat s(0);
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += Q[i][j] * x[i] * x[j];
  return s;
}

// Negative definiteness of a symmetric rational matrix via leading
// principal minors: (-1)^k det_k > 0 for all k.
bool negative_definite(std::vector<std::vector<Rat>> M) {
  int n = static_cast<int>(M.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = M[i][j];
    // Fraction-free enough at this scale: plain Gaussian determinant.
    Rat det(1);
    for (int c = 0; c < k; ++c) {
      int p = -1;
      for (int i = c; i < k; ++i)
        if (sub[i][c] != 0) {
          p = i;
          break;
        }
      if (p < 0) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(sub[p], sub[c]);
        det = -det;
      }
      det *= sub[c][c];
      Rat inv = Rat(1) / sub[c][c];
      for (int i = c + 1; i < k; ++i) {
        Rat f = sub[i][c] * inv;
        for (int j = c; j < k; ++j) sub[i][j] -= f * sub[c][j];
      }
    }
    if ((k % 2 == 1 && det >= 0) || (k % 2 == 0 && det <= 0)) return false;
  }
  return true;
}

}  // namespace

StabilityData make_stability_data(
    ChargeLattice lattice, CentralCharge charge, OmegaTable omega,
    std::optional<std::vector<std::vector<Rat>>> qform) {
  if (charge.rank() != lattice.rank())
    fail(ErrorCode::InvalidInput, "central charge rank mismatch");
  for (const auto& [gamma, value] : omega) {
    if (static_cast<int>(gamma.rank()) != lattice.rank())
      fail(ErrorCode::InvalidInput, "support vector rank mismatch");
    if (gamma.is_zero())
      fail(ErrorCode::ZeroCharge, "Omega(0) is not part of stability data");
  }
  if (qform) {
    int n = lattice.rank();
    if (static_cast<int>(qform->size()) != n)
      fail(ErrorCode::InvalidInput, "quadratic form has wrong size");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>((*qform)[i].size()) != n)
        fail(ErrorCode::InvalidInput, "quadratic form has wrong size");
      for (int j = 0; j < n; ++j)
        if ((*qform)[i][j] != (*qform)[j][i])
          fail(ErrorCode::InvalidInput, "quadratic form must be symmetric");
    }
  }
  return StabilityData{std::move(lattice), std::move(charge), std::move(omega),
                       std::move(qform)};
}

SupportReport support_check(const StabilityData& sd, const Rat& C) {
  if (C <= 0) fail(ErrorCode::InvalidInput, "support constant must be positive");
  SupportReport report;
  report.pass = true;
  for (const auto& [gamma, value] : sd.omega) {
    if (value == 0) continue;
    GaussianRat zg = sd.charge(gamma);
    if (zg.is_zero())
      fail(ErrorCode::ZeroCharge,
           "central charge vanishes at " + vec_to_string(gamma));
    Rat norm2(0);
    for (auto c : gamma.coords) norm2 += Rat(c) * Rat(c);
    Rat bound2 = C * C * zg.norm2();
    bool ok = norm2 <= bound2;
    report.verdicts.push_back({gamma, norm2, bound2, ok});
    if (!ok) report.pass = false;
  }
  return report;
}

QFormReport qform_check(const StabilityData& sd) {
  if (!sd.qform)
    fail(ErrorCode::InvalidInput, "stability data carries no quadratic form");
  const auto& Q = *sd.qform;
  QFormReport report{true, true, true};

  auto kernel = charge_kernel(sd.charge);
  if (!kernel.empty()) {
    int k = static_cast<int>(kernel.size());
    int n = sd.lattice.rank();
    std::vector<std::vector<Rat>> restricted(k, std::vector<Rat>(k, Rat(0)));
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            restricted[u][v] += kernel[u][i] * Q[i][j] * kernel[v][j];
    report.negative_on_kernel = negative_definite(std::move(restricted));
  }

  for (const auto& [gamma, value] : sd.omega) {
    if (value == 0) continue;
    std::vector<Rat> x;
    x.reserve(gamma.coords.size());
    for (auto c : gamma.coords) x.emplace_back(c);
    if (quad_eval(Q, x) < 0) {
      report.nonnegative_on_support = false;
      break;
    }
  }
  report.pass = report.negative_on_kernel && report.nonnegative_on_support;
  return report;
}

Sector::Sector(GaussianRat z_start, GaussianRat z_end, bool include_start,
               bool include_end)
    : start_(std::move(z_start)),
      end_(std::move(z_end)),
      include_start_(include_start),
      include_end_(include_end),
      single_ray_(false) {
  if (start_.is_zero() || end_.is_zero())
    fail(ErrorCode::InvalidInput, "sector boundary ray is zero");
  Rat c = cross(start_, end_);
  if (c == 0) {
    if (dot(start_, end_) < 0)
      fail(ErrorCode::SectorNotStrict, "sector boundary rays are antipodal");
    single_ray_ = true;
  } else if (c > 0) {
    fail(ErrorCode::SectorNotStrict,
         "sector must be traversed clockwise with width below pi");
  }
}

bool Sector::contains(const GaussianRat& z) const {
  if (z.is_zero()) return false;
  if (single_ray_)
    return same_ray(z, start_) && (include_start_ || include_end_);
  if (same_ray(z, start_)) return include_start_;
  if (same_ray(z, end_)) return include_end_;
  return cross(start_, z) < 0 && cross(z, end_) < 0;
}

std::vector<LatticeVector> sector_cone(const StabilityData& sd,
                                       const Sector& V) {
  std::vector<LatticeVector> out;
  for (const auto& [gamma, value] : sd.omega) {
    if (value == 0) continue;
    GaussianRat zg = sd.charge(gamma);
    if (zg.is_zero())
      fail(ErrorCode::ZeroCharge,
           "central charge vanishes at " + vec_to_string(gamma));
    if (!V.contains(zg)) continue;
    if (sd.qform) {
      std::vector<Rat> x;
      x.reserve(gamma.coords.size());
      for (auto c : gamma.coords) x.emplace_back(c);
      if (quad_eval(*sd.qform, x) < 0) continue;
    }
    out.push_back(gamma);
  }
  std::sort(out.begin(), out.end(),
            [&](const LatticeVector& a, const LatticeVector& b) {
              GaussianRat za = sd.charge(a), zb = sd.charge(b);
              if (!same_ray(za, zb)) return clockwise_before(za, zb);
              return a < b;
            });
  return out;
}

GroupElement assemble_sector(const StabilityData& sd, const Sector& V,
                             const TruncationCone& cone) {
  std::map<LatticeVector, RayFactor> rays;
  for (const auto& gamma : sector_cone(sd, V)) {
    LatticeVector g0 = gamma.primitive_part();
    std::int64_t n = gamma.content();
    auto [it, inserted] = rays.try_emplace(g0, RayFactor{g0, {}});
    it->second.omega[n] = sd.omega.at(gamma);
  }
  if (rays.empty()) return GroupElement::identity(sd.lattice, cone);

  std::vector<RayFactor> factors;
  factors.reserve(rays.size());
  for (auto& [g0, rf] : rays) factors.push_back(std::move(rf));
  for (const auto& f1 : factors)
    for (const auto& f2 : factors)
      if (f1.gamma0 != f2.gamma0 &&
          same_ray(sd.charge(f1.gamma0), sd.charge(f2.gamma0)))
        fail(ErrorCode::DegenerateCharge,
             "distinct rays share a central-charge direction in the sector");
  std::sort(factors.begin(), factors.end(),
            [&](const RayFactor& a, const RayFactor& b) {
              return clockwise_before(sd.charge(a.gamma0), sd.charge(b.gamma0));
            });
  OrderedFactorization fact(sd.lattice, cone, sd.charge, std::move(factors));
  return assemble(fact);
}

}  // namespace wallcross
