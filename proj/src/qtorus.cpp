#include "wallcross/qtorus.hpp"

namespace wallcross {

QTorusSeries q_mul(const QTorusSeries& f, const QTorusSeries& g) {
  return f * g;
}

QRational quantum_dilog_coefficient(int n) {
  if (n == 0) return QRational(1);
  Poly den(Rat(1));
  // prod_{i=0}^{n-1} (t^{2n} - t^{2i})
  for (int i = 0; i < n; ++i)
    den = den * (Poly::monomial(2 * n) - Poly::monomial(2 * i));
  return QRational(Poly::monomial(n * n), std::move(den));
}

QTorusSeries quantum_dilog(const LatticeVector& gamma,
                           const ChargeLattice& lattice,
                           const TruncationCone& cone) {
  if (gamma.is_zero()) fail(ErrorCode::ZeroVector, "dilog at gamma = 0");
  if (!cone.contains(gamma))
    fail(ErrorCode::SupportOutsideCone,
         vec_to_string(gamma) + " lies outside the cone");
  QTorusSeries e = QTorusSeries::unit(lattice, cone);
  std::int64_t hg = cone.height(gamma);
  for (int n = 1; n * hg <= cone.max_height(); ++n)
    e.add_term(gamma * n, quantum_dilog_coefficient(n));
  return e;
}

QTorusSeries invert_unit(const QTorusSeries& f) {
  QRational c = f.constant_term();
  if (c.is_zero())
    fail(ErrorCode::NonUnitConstantTerm,
         "series has no invertible constant term");
  QTorusSeries unit = QTorusSeries::unit(f.lattice(), f.cone());
  // f = c (1 + N) with N of positive height; the scalar c is central.
  QTorusSeries n = f.scaled(c.inverse()) - unit;
  QTorusSeries result = unit;
  QTorusSeries power = unit;
  const int D = f.cone().max_height();
  std::int64_t step = n.min_positive_height();
  for (int k = 1; !n.is_zero() && k * step <= D; ++k) {
    power = power * n;
    if (power.is_zero()) break;
    result = (k % 2 != 0) ? result - power : result + power;
  }
  return result.scaled(c.inverse());
}

QTorusSeries conjugate(const QTorusSeries& A, const QTorusSeries& x) {
  return A * x * invert_unit(A);
}

QTorusSeries q_pow(const QTorusSeries& f, int n) {
  if (n < 0) return invert_unit(f).pow(-n);
  return f.pow(n);
}

ConeSeries qc_limit(const QTorusSeries& f) {
  ConeSeries r(f.lattice(), f.cone());
  const Rat minus_one(-1);
  for (const auto& [v, c] : f.terms()) {
    if (c.has_pole_at(minus_one))
      fail(ErrorCode::PoleAtMinusOne,
           "coefficient at " + vec_to_string(v) + " has a pole at t = -1");
    r.accumulate(v, c.eval(minus_one));
  }
  return r;
}

}  // namespace wallcross
