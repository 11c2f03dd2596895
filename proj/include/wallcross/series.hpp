#ifndef WALLCROSS_SERIES_HPP
#define WALLCROSS_SERIES_HPP

#include <map>
#include <utility>

#include "wallcross/lattice.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

namespace detail {
inline bool coeff_is_zero(const Rat& c) { return c == 0; }
template <typename C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}
}  // namespace detail

// Cone-supported, height-truncated formal series over the twisted torus
// algebra: keys live in cone u {0} with height <= D, zero coefficients are
// pruned eagerly so equality is structural. The Twist policy supplies the
// coefficient picked up when merging e_{g1} e_{g2} -> e_{g1+g2}.
template <typename Coeff, typename Twist>
class TorusSeries {
 public:
  using TermMap = std::map<LatticeVector, Coeff>;

  TorusSeries(ChargeLattice lattice, TruncationCone cone)
      : lattice_(std::move(lattice)), cone_(std::move(cone)) {}

  static TorusSeries unit(const ChargeLattice& lattice,
                          const TruncationCone& cone) {
    TorusSeries s(lattice, cone);
    s.terms_[LatticeVector(std::vector<std::int64_t>(lattice.rank(), 0))] =
        Coeff(1);
    return s;
  }

  static TorusSeries term(const ChargeLattice& lattice,
                          const TruncationCone& cone, const LatticeVector& v,
                          Coeff c) {
    TorusSeries s(lattice, cone);
    s.add_term(v, std::move(c));
    return s;
  }

  const ChargeLattice& lattice() const { return lattice_; }
  const TruncationCone& cone() const { return cone_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_height() const { return cone_.max_height(); }

  Coeff coefficient(const LatticeVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff constant_term() const {
    return coefficient(
        LatticeVector(std::vector<std::int64_t>(lattice_.rank(), 0)));
  }

  bool has_constant_term() const {
    return !detail::coeff_is_zero(constant_term());
  }

  // Validated insertion (accumulates into any existing coefficient).
  void add_term(const LatticeVector& v, Coeff c) {
    if (detail::coeff_is_zero(c)) return;
    if (!v.is_zero()) {
      if (cone_.height(v) > cone_.max_height())
        fail(ErrorCode::SupportOutsideCone,
             "height of " + vec_to_string(v) + " exceeds truncation bound");
      if (!cone_.contains(v))
        fail(ErrorCode::SupportOutsideCone,
             vec_to_string(v) + " lies outside the cone");
    }
    accumulate(v, std::move(c));
  }

  TorusSeries operator+(const TorusSeries& o) const {
    require_same_context(o);
    TorusSeries r = *this;
    for (const auto& [v, c] : o.terms_) r.accumulate(v, c);
    return r;
  }

  TorusSeries operator-(const TorusSeries& o) const {
    require_same_context(o);
    TorusSeries r = *this;
    for (const auto& [v, c] : o.terms_) r.accumulate(v, Coeff(0) - c);
    return r;
  }

  TorusSeries operator-() const {
    TorusSeries r(lattice_, cone_);
    for (const auto& [v, c] : terms_) r.terms_[v] = Coeff(0) - c;
    return r;
  }

  TorusSeries scaled(const Coeff& s) const {
    TorusSeries r(lattice_, cone_);
    if (detail::coeff_is_zero(s)) return r;
    for (const auto& [v, c] : terms_) {
      Coeff p = c * s;
      if (!detail::coeff_is_zero(p)) r.terms_[v] = std::move(p);
    }
    return r;
  }

  // Twisted product, truncated at max height.
  TorusSeries operator*(const TorusSeries& o) const {
    require_same_context(o);
    TorusSeries r(lattice_, cone_);
    const int D = cone_.max_height();
    for (const auto& [v1, c1] : terms_) {
      std::int64_t h1 = v1.is_zero() ? 0 : cone_.height(v1);
      for (const auto& [v2, c2] : o.terms_) {
        std::int64_t h2 = v2.is_zero() ? 0 : cone_.height(v2);
        if (h1 + h2 > D) continue;
        Coeff c = c1 * c2 * Twist::factor(lattice_.pairing(v1, v2));
        r.accumulate(v1 + v2, std::move(c));
      }
    }
    return r;
  }

  TorusSeries pow(int n) const {
    TorusSeries r = unit(lattice_, cone_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Terms of exact height d (d = 0 means the constant term).
  TorusSeries homogeneous_part(std::int64_t d) const {
    TorusSeries r(lattice_, cone_);
    for (const auto& [v, c] : terms_) {
      std::int64_t h = v.is_zero() ? 0 : cone_.height(v);
      if (h == d) r.terms_[v] = c;
    }
    return r;
  }

  std::int64_t min_positive_height() const {
    std::int64_t best = cone_.max_height() + 1;
    for (const auto& [v, c] : terms_) {
      if (v.is_zero()) continue;
      best = std::min(best, cone_.height(v));
    }
    return best;
  }

  bool operator==(const TorusSeries& o) const {
    return lattice_ == o.lattice_ && cone_ == o.cone_ && terms_ == o.terms_;
  }
  bool operator!=(const TorusSeries& o) const { return !(*this == o); }

  void require_same_context(const TorusSeries& o) const {
    if (!(lattice_ == o.lattice_) || cone_ != o.cone_)
      fail(ErrorCode::ConeMismatch, "series built over different lattice/cone");
  }

  // Internal fast path: v must already be a sum of valid keys.
  void accumulate(const LatticeVector& v, Coeff c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  ChargeLattice lattice_;
  TruncationCone cone_;
  TermMap terms_;
};

// Classical twist: e_{g1} e_{g2} = (-1)^{<g1,g2>} e_{g1+g2}.
struct SignTwist {
  static Rat factor(std::int64_t pairing) {
    return (pairing % 2 != 0) ? Rat(-1) : Rat(1);
  }
};

using ConeSeries = TorusSeries<Rat, SignTwist>;

// Series with no constant term; the Lie algebra g_Gamma lives here. The
// distinction is enforced at the group boundary (exp_group).
using LieSeries = ConeSeries;

ConeSeries twisted_mul(const ConeSeries& f, const ConeSeries& g);

// [e_{g1}, e_{g2}] = (-1)^{<g1,g2>} <g1,g2> e_{g1+g2}, extended bilinearly
// and truncated. Defined on the whole algebra as a biderivation.
LieSeries poisson_bracket(const ConeSeries& f, const ConeSeries& g);

inline LieSeries bracket(const LieSeries& h1, const LieSeries& h2) {
  return poisson_bracket(h1, h2);
}

}  // namespace wallcross

#endif  // WALLCROSS_SERIES_HPP
