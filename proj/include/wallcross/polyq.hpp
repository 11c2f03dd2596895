#ifndef WALLCROSS_POLYQ_HPP
#define WALLCROSS_POLYQ_HPP

#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

// Dense univariate polynomial over Q in the variable t = q^{1/2}.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly monomial(int degree, Rat c = Rat(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coefficient(int i) const {
    return i >= 0 && i <= degree() ? coeffs_[i] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Field division with remainder; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

  Rat eval(const Rat& x) const;

  // reverse(p)(t) = t^{deg p} p(1/t).
  Poly reversed() const;

  Poly monic() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;  // ascending degree
};

// gcd, monic; via primitive pseudo-remainder sequence over Z to keep
// coefficient growth in check.
Poly poly_gcd(Poly a, Poly b);

std::string poly_to_string(const Poly& p, const std::string& var = "t");

// Reduced rational function num/den over Q(t) with monic denominator.
// Equality is structural after normalization.
class QRational {
 public:
  QRational() : num_(), den_(Poly(Rat(1))) {}
  QRational(int c) : num_(Poly(Rat(c))), den_(Poly(Rat(1))) {}  // NOLINT
  explicit QRational(Rat c) : num_(Poly(std::move(c))), den_(Poly(Rat(1))) {}
  QRational(Poly num, Poly den);

  // t^k for any integer k.
  static QRational t_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRational operator+(const QRational& o) const;
  QRational operator-(const QRational& o) const;
  QRational operator*(const QRational& o) const;
  QRational operator/(const QRational& o) const;
  bool operator==(const QRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QRational& o) const { return !(*this == o); }

  QRational inverse() const;

  bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }
  // Exact evaluation; errors if x is a pole.
  Rat eval(const Rat& x) const;

  // f(t) -> f(1/t), still reduced.
  QRational subst_inverse_t() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace wallcross

#endif  // WALLCROSS_POLYQ_HPP
