#include "wallcross/polyq.hpp"

#include <algorithm>
#include <sstream>

namespace wallcross {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int degree, Rat c) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& s) const {
  if (s == 0) return Poly();
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c *= s;
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) fail(ErrorCode::InvalidInput, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs_;
  int db = b.degree();
  std::vector<Rat> quot;
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / b.coeffs_[db];
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
  }
  q = Poly(std::move(quot));
  r = Poly(std::move(rem));
}

Rat Poly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::reversed() const {
  std::vector<Rat> v(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

namespace {

// Integer polynomial helpers for the primitive PRS.
using IPoly = std::vector<Int>;

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int icontent(const IPoly& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

void idivide_scalar(IPoly& p, const Int& d) {
  for (auto& c : p) c /= d;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
IPoly iprem(IPoly a, const IPoly& b) {
  int db = ideg(b);
  const Int& lb = b.back();
  while (ideg(a) >= db && !a.empty()) {
    int da = ideg(a);
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    itrim(a);
  }
  return a;
}

IPoly to_integer(const Poly& p) {
  Int l(1);
  for (const auto& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IPoly v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rat s = c * Rat(l);
    v.push_back(s.get_num());
  }
  itrim(v);
  return v;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IPoly r0 = to_integer(a);
  IPoly r1 = to_integer(b);
  if (ideg(r0) < ideg(r1)) std::swap(r0, r1);
  idivide_scalar(r0, icontent(r0));
  idivide_scalar(r1, icontent(r1));
  while (!r1.empty()) {
    IPoly r2 = iprem(r0, r1);
    if (!r2.empty()) idivide_scalar(r2, icontent(r2));
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  std::vector<Rat> v;
  v.reserve(r0.size());
  for (const auto& c : r0) v.emplace_back(c);
  return Poly(std::move(v)).monic();
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coefficient(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QRational::QRational(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void QRational::normalize() {
  if (den_.is_zero())
    fail(ErrorCode::InvalidInput, "zero denominator in rational function");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(Rat(1) / lead);
    num_ = num_.scaled(Rat(1) / lead);
  }
}

QRational QRational::t_power(int k) {
  if (k >= 0) return QRational(Poly::monomial(k), Poly(Rat(1)));
  return QRational(Poly(Rat(1)), Poly::monomial(-k));
}

QRational QRational::operator+(const QRational& o) const {
  return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator-(const QRational& o) const {
  return QRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator*(const QRational& o) const {
  return QRational(num_ * o.num_, den_ * o.den_);
}

QRational QRational::operator/(const QRational& o) const {
  if (o.is_zero())
    fail(ErrorCode::InvalidInput, "division by zero rational function");
  return QRational(num_ * o.den_, den_ * o.num_);
}

QRational QRational::inverse() const {
  if (is_zero())
    fail(ErrorCode::InvalidInput, "inverse of zero rational function");
  return QRational(den_, num_);
}

Rat QRational::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0)
    fail(ErrorCode::PoleAtMinusOne,
         "rational function has a pole at t = " + rat_to_string(x));
  return num_.eval(x) / d;
}

QRational QRational::subst_inverse_t() const {
  int dn = num_.degree();
  int dd = den_.degree();
  Poly n = num_.reversed();
  Poly d = den_.reversed();
  // num(1/t)/den(1/t) = rev(num) t^{dd - dn} / rev(den).
  if (dd >= dn)
    return QRational(n * Poly::monomial(dd - dn), d);
  return QRational(n, d * Poly::monomial(dn - dd));
}

}  // namespace wallcross
