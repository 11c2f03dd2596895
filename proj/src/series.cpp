#include "wallcross/series.hpp"

namespace wallcross {

ConeSeries twisted_mul(const ConeSeries& f, const ConeSeries& g) {
  return f * g;
}

LieSeries poisson_bracket(const ConeSeries& f, const ConeSeries& g) {
  f.require_same_context(g);
  LieSeries r(f.lattice(), f.cone());
  const auto& cone = f.cone();
  const int D = cone.max_height();
  for (const auto& [v1, c1] : f.terms()) {
    std::int64_t h1 = v1.is_zero() ? 0 : cone.height(v1);
    for (const auto& [v2, c2] : g.terms()) {
      std::int64_t h2 = v2.is_zero() ? 0 : cone.height(v2);
      if (h1 + h2 > D) continue;
      std::int64_t p = f.lattice().pairing(v1, v2);
      if (p == 0) continue;
      Rat c = c1 * c2 * Rat(p) * SignTwist::factor(p);
      r.accumulate(v1 + v2, std::move(c));
    }
  }
  return r;
}

}  // namespace wallcross
