#ifndef WALLCROSS_RATIONAL_HPP
#define WALLCROSS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wallcross/errors.hpp"

namespace wallcross {

// Exact rational coefficient type. All algebra in the library is done in
// this type (or in rational functions built on it); no floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
Rat parse_rat(const std::string& text);

// Canonical "p" or "p/q" form.
std::string rat_to_string(const Rat& value);

// Gaussian rational: a value in Q(i), used for central charges.
struct GaussianRat {
  Rat re;
  Rat im;

  GaussianRat() = default;
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRat operator+(const GaussianRat& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRat operator-(const GaussianRat& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRat operator*(const GaussianRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRat operator*(const Rat& s) const { return {re * s, im * s}; }
  bool operator==(const GaussianRat& o) const {
    return re == o.re && im == o.im;
  }
  bool operator!=(const GaussianRat& o) const { return !(*this == o); }

  GaussianRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
};

// Im(conj(a) * b): positive iff b is counterclockwise of a (within pi).
inline Rat cross(const GaussianRat& a, const GaussianRat& b) {
  return a.re * b.im - a.im * b.re;
}

// Re(conj(a) * b).
inline Rat dot(const GaussianRat& a, const GaussianRat& b) {
  return a.re * b.re + a.im * b.im;
}

}  // namespace wallcross

#endif  // WALLCROSS_RATIONAL_HPP
