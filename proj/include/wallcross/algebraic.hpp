#ifndef WALLCROSS_ALGEBRAIC_HPP
#define WALLCROSS_ALGEBRAIC_HPP

#include <optional>
#include <vector>

#include "wallcross/polyq.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Real quadratic irrational a + b*sqrt(d) with d a nonnegative integer.
// Rational values are canonicalized to d = 0. Arithmetic stays inside a
// single extension Q(sqrt(d)); comparisons work across extensions.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
  QuadExt(Rat a, Rat b, Int d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator-() const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt scaled(const Rat& s) const;

  int sign() const;

  // sqrt(r) for a nonnegative rational r, with the square part of the
  // radicand extracted.
  static QuadExt sqrt_of(const Rat& r);

 private:
  Rat a_, b_;
  Int d_;
};

// Exact three-way comparison across possibly different extensions.
int compare(const QuadExt& x, const QuadExt& y);

inline bool operator<(const QuadExt& x, const QuadExt& y) {
  return compare(x, y) < 0;
}
inline bool operator==(const QuadExt& x, const QuadExt& y) {
  return compare(x, y) == 0;
}

// Horner evaluation of a rational polynomial at a quadratic irrational.
QuadExt eval_at(const Poly& p, const QuadExt& x);

// Real roots of a rational polynomial of degree <= 2, ascending. The
// empty optional marks a double root (reported as a single entry with
// multiplicity flag instead).
struct QuadraticRoots {
  std::vector<QuadExt> roots;  // ascending, without multiplicity
  bool double_root = false;
  bool identically_zero = false;
};

QuadraticRoots solve_quadratic(const Poly& p);

}  // namespace wallcross

#endif  // WALLCROSS_ALGEBRAIC_HPP
