#include "wallcross/algebraic.hpp"

namespace wallcross {

namespace {

int rat_sign(const Rat& r) { return sgn(r); }

// Square-free-ish reduction: pulls out small square factors and whole
// perfect squares; the leftover radicand is canonical for the inputs that
// arise from small rational discriminants.
void reduce_radicand(Rat& b, Int& d) {
  if (d < 0) fail(ErrorCode::InvalidInput, "negative radicand");
  if (d == 0) {
    b = 0;
    return;
  }
  for (Int p = 2; p * p <= d && p <= 1000; ++p) {
    Int sq = p * p;
    while (d % sq == 0) {
      d /= sq;
      b *= Rat(p);
    }
  }
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
  if (rem == 0) {
    b *= Rat(root);
    d = 1;
  }
  if (d == 1) {
    // sqrt(1) = 1 folds into the rational part via b; mark rational.
    d = 0;
  }
}

// Sign of X + Y*sqrt(d) with d > 0 not a perfect square (or any d >= 0).
int one_surd_sign(const Rat& X, const Rat& Y, const Int& d) {
  if (d == 0 || Y == 0) return rat_sign(X);
  if (X == 0) return rat_sign(Y);
  int sx = rat_sign(X), sy = rat_sign(Y);
  if (sx == sy) return sx;
  Rat diff = X * X - Y * Y * Rat(d);
  int s = rat_sign(diff);
  if (s > 0) return sx;
  if (s < 0) return sy;
  return 0;
}

}  // namespace

QuadExt::QuadExt(Rat a, Rat b, Int d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  reduce_radicand(b_, d_);
  if (d_ == 0) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 0;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  if (b_ == 0) return QuadExt(a_ + o.a_, o.b_, o.d_);
  if (o.b_ == 0) return QuadExt(a_ + o.a_, b_, d_);
  if (d_ != o.d_)
    fail(ErrorCode::InvalidInput, "sum of incompatible quadratic extensions");
  return QuadExt(a_ + o.a_, b_ + o.b_, d_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
  if (b_ == 0) return o.scaled(a_);
  if (o.b_ == 0) return scaled(o.a_);
  if (d_ != o.d_)
    fail(ErrorCode::InvalidInput,
         "product of incompatible quadratic extensions");
  return QuadExt(a_ * o.a_ + b_ * o.b_ * Rat(d_), a_ * o.b_ + b_ * o.a_, d_);
}

QuadExt QuadExt::scaled(const Rat& s) const {
  if (s == 0) return QuadExt();
  return QuadExt(a_ * s, b_ * s, d_);
}

int QuadExt::sign() const { return one_surd_sign(a_, b_, d_); }

QuadExt QuadExt::sqrt_of(const Rat& r) {
  if (r < 0) fail(ErrorCode::InvalidInput, "square root of a negative number");
  if (r == 0) return QuadExt();
  // sqrt(n/m) = sqrt(n m) / m
  Int n = r.get_num(), m = r.get_den();
  return QuadExt(Rat(0), Rat(1, m), n * m);
}

int compare(const QuadExt& x, const QuadExt& y) {
  // sign of (x.a - y.a) + x.b sqrt(x.d) - y.b sqrt(y.d)
  Rat A = x.rational_part() - y.rational_part();
  const Rat& B = x.surd_coefficient();
  const Rat& C = y.surd_coefficient();
  const Int& d1 = x.radicand();
  const Int& d2 = y.radicand();
  if (B == 0) return one_surd_sign(A, -C, d2);
  if (C == 0 || d1 == d2) return one_surd_sign(A, C == 0 ? B : B - C, d1);
  // u = A + B sqrt(d1), v = -C sqrt(d2); sign(u + v).
  int su = one_surd_sign(A, B, d1);
  int sv = -rat_sign(C);
  if (su == 0) return sv;
  if (sv == 0) return su;
  if (su == sv) return su;
  // Opposite signs: decide by |u| vs |v| via squares.
  // u^2 = A^2 + B^2 d1 + 2AB sqrt(d1); v^2 = C^2 d2.
  Rat X = A * A + B * B * Rat(d1) - C * C * Rat(d2);
  Rat Y = 2 * A * B;
  int sq = one_surd_sign(X, Y, d1);
  if (sq > 0) return su;
  if (sq < 0) return sv;
  return 0;
}

QuadExt eval_at(const Poly& p, const QuadExt& x) {
  QuadExt v;
  for (int i = p.degree(); i >= 0; --i) v = v * x + QuadExt(p.coefficient(i));
  return v;
}

QuadraticRoots solve_quadratic(const Poly& p) {
  QuadraticRoots out;
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  if (p.degree() > 2)
    fail(ErrorCode::InvalidInput, "root isolation limited to degree 2");
  if (p.degree() == 0) return out;
  if (p.degree() == 1) {
    out.roots.emplace_back(-p.coefficient(0) / p.coefficient(1));
    return out;
  }
  Rat A = p.coefficient(2), B = p.coefficient(1), C = p.coefficient(0);
  Rat disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  if (disc == 0) {
    out.roots.emplace_back(-B / (2 * A));
    out.double_root = true;
    return out;
  }
  QuadExt s = QuadExt::sqrt_of(disc);
  QuadExt r1 = (QuadExt(-B) - s).scaled(Rat(1) / (2 * A));
  QuadExt r2 = (QuadExt(-B) + s).scaled(Rat(1) / (2 * A));
  if (compare(r2, r1) < 0) std::swap(r1, r2);
  out.roots.push_back(std::move(r1));
  out.roots.push_back(std::move(r2));
  return out;
}

}  // namespace wallcross
