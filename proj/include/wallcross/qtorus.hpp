#ifndef WALLCROSS_QTORUS_HPP
#define WALLCROSS_QTORUS_HPP

#include <vector>

#include "wallcross/polyq.hpp"
#include "wallcross/series.hpp"

namespace wallcross {

// Quantum twist: ehat_{g1} ehat_{g2} = t^{<g1,g2>} ehat_{g1+g2}, t = q^{1/2}.
struct QTwist {
  static QRational factor(std::int64_t pairing) {
    return QRational::t_power(static_cast<int>(pairing));
  }
};

// Cone-truncated series over the quantum torus R_{Gamma,q}: coefficients
// are exact rational functions in t.
using QTorusSeries = TorusSeries<QRational, QTwist>;

QTorusSeries q_mul(const QTorusSeries& f, const QTorusSeries& g);

inline QTorusSeries q_unit(const ChargeLattice& lattice,
                           const TruncationCone& cone) {
  return QTorusSeries::unit(lattice, cone);
}

inline QTorusSeries q_generator(const ChargeLattice& lattice,
                                const TruncationCone& cone,
                                const LatticeVector& gamma) {
  return QTorusSeries::term(lattice, cone, gamma, QRational(1));
}

// E(q^{1/2}, ehat_gamma) = sum_n q^{n^2/2} ehat_gamma^n / ((q^n-1)...(q^n-q^{n-1})),
// truncated: coefficient of ehat_{n gamma} is t^{n^2} / prod_{i<n}(t^{2n} - t^{2i}).
QTorusSeries quantum_dilog(const LatticeVector& gamma,
                           const ChargeLattice& lattice,
                           const TruncationCone& cone);

// The n-th dilogarithm coefficient as a bare rational function.
QRational quantum_dilog_coefficient(int n);

// Two-sided inverse of a series with invertible constant term.
QTorusSeries invert_unit(const QTorusSeries& f);

// A x A^{-1}, truncated.
QTorusSeries conjugate(const QTorusSeries& A, const QTorusSeries& x);

// Integer power of a series (negative via invert_unit).
QTorusSeries q_pow(const QTorusSeries& f, int n);

// Quasi-classical limit t -> -1 under ehat_gamma -> e_gamma. Errors with
// PoleAtMinusOne (naming the offending lattice vector) when a reduced
// coefficient has a pole there.
ConeSeries qc_limit(const QTorusSeries& f);

// Orientation of the conjugation that matches the classical torus
// transformations: qc_limit(conjugate(E(ehat_g)^eps, ehat_mu)) equals
// apply(T_g, e_mu). Measured at height 1 and frozen.
inline constexpr int kConjugationOrientation = 1;

}  // namespace wallcross

#endif  // WALLCROSS_QTORUS_HPP
