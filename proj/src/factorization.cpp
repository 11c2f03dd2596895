#include "wallcross/factorization.hpp"

#include <algorithm>

namespace wallcross {

CentralCharge::CentralCharge(std::vector<GaussianRat> basis_values)
    : values_(std::move(basis_values)) {
  if (values_.empty())
    fail(ErrorCode::InvalidInput, "central charge needs at least one value");
}

GaussianRat CentralCharge::operator()(const LatticeVector& v) const {
  if (v.rank() != values_.size())
    fail(ErrorCode::InvalidInput, "charge/vector rank mismatch");
  GaussianRat z(Rat(0), Rat(0));
  for (std::size_t i = 0; i < values_.size(); ++i)
    z = z + values_[i] * Rat(v.coords[i]);
  return z;
}

void check_strict_sector(const std::vector<GaussianRat>& values) {
  if (values.size() <= 1) {
    if (!values.empty() && values.front().is_zero())
      fail(ErrorCode::DegenerateCharge, "central charge vanishes on a ray");
    return;
  }
  for (const auto& z : values)
    if (z.is_zero())
      fail(ErrorCode::DegenerateCharge, "central charge vanishes on a ray");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (cross(values[i], values[j]) == 0 && dot(values[i], values[j]) < 0)
        fail(ErrorCode::SectorTooWide, "antipodal rays span at least pi");
  // The minimal enclosing arc starts at one of the values; that value must
  // see every other strictly within the clockwise open half-plane.
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool all_within = true;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i == j) continue;
      Rat c = cross(values[i], values[j]);
      if (!(c < 0 || (c == 0 && dot(values[i], values[j]) > 0))) {
        all_within = false;
        break;
      }
    }
    if (all_within) return;
  }
  fail(ErrorCode::SectorTooWide, "ray images span a sector of width >= pi");
}

OrderedFactorization::OrderedFactorization(ChargeLattice lattice,
                                           TruncationCone cone,
                                           CentralCharge charge,
                                           std::vector<RayFactor> factors)
    : lattice_(std::move(lattice)),
      cone_(std::move(cone)),
      charge_(std::move(charge)),
      factors_(std::move(factors)) {
  std::vector<GaussianRat> zs;
  for (const auto& f : factors_) {
    if (!f.gamma0.is_primitive())
      fail(ErrorCode::NotPrimitive,
           "ray base " + vec_to_string(f.gamma0) + " is not primitive");
    if (!cone_.contains(f.gamma0))
      fail(ErrorCode::SupportOutsideCone,
           "ray base " + vec_to_string(f.gamma0) + " outside cone");
    zs.push_back(charge_(f.gamma0));
  }
  check_strict_sector(zs);
  for (std::size_t i = 0; i + 1 < zs.size(); ++i)
    if (!clockwise_before(zs[i], zs[i + 1]))
      fail(ErrorCode::OrderingViolated,
           "factors are not strictly clockwise at position " +
               std::to_string(i));
}

OmegaTable OrderedFactorization::omega_table() const {
  OmegaTable t;
  for (const auto& f : factors_)
    for (const auto& [n, w] : f.omega)
      if (w != 0) t[f.gamma0 * n] = w;
  return t;
}

GroupElement t_factor(std::int64_t a, std::int64_t b, std::int64_t k,
                      const ChargeLattice& lattice,
                      const TruncationCone& cone) {
  if (k == 0) fail(ErrorCode::BadLattice, "k must be nonzero");
  if (lattice.rank() != 2 || lattice.gram()[0][1] != k)
    fail(ErrorCode::BadLattice, "lattice gram is not [[0,k],[-k,0]]");
  if (a < 0 || b < 0)
    fail(ErrorCode::InvalidInput, "t_factor requires a, b >= 0");
  if (a == 0 && b == 0) fail(ErrorCode::ZeroVector, "t_factor at gamma = 0");
  LatticeVector g{a, b};
  LieSeries h(lattice, cone);
  std::int64_t hg = cone.height(g);
  for (std::int64_t n = 1; n * hg <= cone.max_height(); ++n)
    h.add_term(g * n, Rat(-1, n * n));
  return GroupElement(std::move(h));
}

GroupElement ray_exp(const RayFactor& r, const ChargeLattice& lattice,
                     const TruncationCone& cone) {
  if (!r.gamma0.is_primitive())
    fail(ErrorCode::NotPrimitive,
         "ray base " + vec_to_string(r.gamma0) + " is not primitive");
  OmegaTable omega;
  for (const auto& [n, w] : r.omega) omega[r.gamma0 * n] = w;
  return GroupElement(a_from_omega(omega, lattice, cone));
}

LieSeries a_from_omega(const OmegaTable& omega, const ChargeLattice& lattice,
                       const TruncationCone& cone) {
  LieSeries h(lattice, cone);
  for (const auto& [g, w] : omega) {
    if (w == 0) continue;
    if (g.is_zero()) fail(ErrorCode::ZeroVector, "Omega at gamma = 0");
    if (!cone.contains(g))
      fail(ErrorCode::SupportOutsideCone,
           "Omega support " + vec_to_string(g) + " outside cone");
    std::int64_t hg = cone.height(g);
    for (std::int64_t n = 1; n * hg <= cone.max_height(); ++n)
      h.add_term(g * n, -w / Rat(n * n));
  }
  return h;
}

int mobius(std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

OmegaTable omega_from_a(const LieSeries& h) {
  // Group the coefficients by primitive ray.
  std::map<LatticeVector, std::map<std::int64_t, Rat>> rays;
  for (const auto& [g, c] : h.terms()) {
    std::int64_t m = g.content();
    rays[g.primitive_part()][m] = c;
  }
  OmegaTable omega;
  for (const auto& [g0, alpha] : rays) {
    std::int64_t m_max = alpha.rbegin()->first;
    for (std::int64_t m = 1; m <= m_max; ++m) {
      Rat w(0);
      for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        auto it = alpha.find(m / d);
        if (it == alpha.end()) continue;
        w -= Rat(mu, d * d) * it->second;
      }
      if (w != 0) omega[g0 * m] = w;
    }
  }
  return omega;
}

namespace {

// Clockwise ordering of primitive rays under Z; equal arguments on distinct
// rays are a hard error (the charge sits on a wall).
std::vector<LatticeVector> sort_rays_clockwise(
    std::vector<LatticeVector> rays, const CentralCharge& Z) {
  std::vector<GaussianRat> zs;
  zs.reserve(rays.size());
  for (const auto& r : rays) zs.push_back(Z(r));
  check_strict_sector(zs);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (same_ray(zs[i], zs[j]))
        fail(ErrorCode::DegenerateCharge,
             "distinct rays " + vec_to_string(rays[i]) + " and " +
                 vec_to_string(rays[j]) + " share a central-charge argument");
  std::sort(rays.begin(), rays.end(),
            [&Z](const LatticeVector& a, const LatticeVector& b) {
              return clockwise_before(Z(a), Z(b));
            });
  return rays;
}

}  // namespace

OrderedFactorization factorize(const GroupElement& F, const CentralCharge& Z,
                               const TruncationCone& cone) {
  const ChargeLattice& lattice = F.lattice();
  if (Z.rank() != lattice.rank())
    fail(ErrorCode::InvalidInput, "charge/lattice rank mismatch");
  const int D = cone.max_height();
  std::map<LatticeVector, LieSeries> ray_a;

  for (int d = 1; d <= D; ++d) {
    // Current clockwise factor list.
    std::vector<LatticeVector> order;
    for (const auto& [g0, a] : ray_a) order.push_back(g0);
    order = sort_rays_clockwise(std::move(order), Z);

    // Residual R = P^{-1} F: in the action order F goes first, then the
    // inverted ray factors left-to-right.
    BasisAction act = F.basis_actions();
    for (const auto& g0 : order)
      act = compose_action(act, GroupElement(-ray_a.at(g0)));
    LieSeries residual_log = log_from_action(lattice, cone, act);

    // By induction everything below height d has been matched.
    if (residual_log.min_positive_height() < d)
      fail(ErrorCode::InconsistentAction,
           "factorization residual has unexpected low-height terms");
    LieSeries level = residual_log.homogeneous_part(d);
    for (const auto& [g, c] : level.terms()) {
      LatticeVector g0 = g.primitive_part();
      auto it = ray_a.find(g0);
      if (it == ray_a.end())
        it = ray_a.emplace(g0, LieSeries(lattice, cone)).first;
      it->second.add_term(g, c);
    }
  }

  std::vector<LatticeVector> order;
  for (const auto& [g0, a] : ray_a) order.push_back(g0);
  order = sort_rays_clockwise(std::move(order), Z);

  std::vector<RayFactor> factors;
  for (const auto& g0 : order) {
    OmegaTable omega = omega_from_a(ray_a.at(g0));
    RayFactor rf;
    rf.gamma0 = g0;
    for (const auto& [g, w] : omega) rf.omega[g.content()] = w;
    if (!rf.omega.empty()) factors.push_back(std::move(rf));
  }
  return OrderedFactorization(lattice, cone, Z, std::move(factors));
}

GroupElement assemble(const OrderedFactorization& fact) {
  GroupElement result =
      GroupElement::identity(fact.lattice(), fact.cone());
  std::vector<GroupElement> factors;
  factors.push_back(result);
  for (const auto& f : fact.factors())
    factors.push_back(ray_exp(f, fact.lattice(), fact.cone()));
  return compose(factors);
}

OrderedFactorization refactorize(const OrderedFactorization& fact,
                                 const CentralCharge& Z_new) {
  return factorize(assemble(fact), Z_new, fact.cone());
}

}  // namespace wallcross
