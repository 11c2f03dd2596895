#include "wallcross/gln.hpp"

#include <algorithm>

#include "wallcross/polyq.hpp"

namespace wallcross {

namespace {

void check_no_collinear(const std::vector<GaussianRat>& z,
                        const std::string& where) {
  int n = static_cast<int>(z.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (cross(z[j] - z[i], z[k] - z[i]) == 0)
          fail(ErrorCode::NonGenericPath,
               "collinear marked points at " + where);
}

void check_distinct(const std::vector<GaussianRat>& z,
                    const std::string& where) {
  int n = static_cast<int>(z.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (z[i] == z[j])
        fail(ErrorCode::NonGenericPath, "coincident marked points at " + where);
}

// One marked point moving linearly: z(s) = p + s q, components as
// rational polynomials in the segment parameter.
struct LinPoint {
  Poly re, im;
};

LinPoint lin_point(const GaussianRat& start, const GaussianRat& end) {
  return {Poly({start.re, end.re - start.re}),
          Poly({start.im, end.im - start.im})};
}

LinPoint operator-(const LinPoint& u, const LinPoint& v) {
  return {u.re - v.re, u.im - v.im};
}

Poly cross_poly(const LinPoint& u, const LinPoint& v) {
  return u.re * v.im - u.im * v.re;
}

Poly dot_poly(const LinPoint& u, const LinPoint& v) {
  return u.re * v.re + u.im * v.im;
}

bool in_open_unit_interval(const QuadExt& s) {
  return QuadExt(Rat(0)) < s && s < QuadExt(Rat(1));
}

// A linear polynomial has a root in [0,1] iff its endpoint values do not
// share a strict sign.
bool linear_root_in_closed_unit(const Poly& p, Rat& root) {
  if (p.degree() != 1) fail(ErrorCode::InvalidInput, "expected linear");
  root = -p.coefficient(0) / p.coefficient(1);
  return root >= 0 && root <= 1;
}

void check_no_collision(const std::vector<LinPoint>& pts, int segment) {
  int n = static_cast<int>(pts.size());
  std::string where = "segment " + std::to_string(segment);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly re = pts[i].re - pts[j].re;
      Poly im = pts[i].im - pts[j].im;
      if (re.is_zero() && im.is_zero())
        fail(ErrorCode::NonGenericPath, "coincident marked points on " + where);
      Rat root;
      if (re.is_zero()) {
        if (im.degree() == 0) continue;
        if (linear_root_in_closed_unit(im, root))
          fail(ErrorCode::NonGenericPath, "point collision on " + where);
      } else if (im.is_zero()) {
        if (re.degree() == 0) continue;
        if (linear_root_in_closed_unit(re, root))
          fail(ErrorCode::NonGenericPath, "point collision on " + where);
      } else if (re.degree() == 1) {
        root = -re.coefficient(0) / re.coefficient(1);
        if (root >= 0 && root <= 1 && im.eval(root) == 0)
          fail(ErrorCode::NonGenericPath, "point collision on " + where);
      } else if (im.degree() == 1) {
        root = -im.coefficient(0) / im.coefficient(1);
        if (root >= 0 && root <= 1 && re.eval(root) == 0)
          fail(ErrorCode::NonGenericPath, "point collision on " + where);
      }
      // Both constant and not both zero: the difference never vanishes.
    }
}

}  // namespace

GlnConfig make_gln_config(int n, std::vector<GaussianRat> z,
                          std::vector<std::vector<Rat>> a,
                          bool require_no_collinear) {
  if (n < 2) fail(ErrorCode::InvalidInput, "gl(n) model needs n >= 2");
  if (static_cast<int>(z.size()) != n)
    fail(ErrorCode::InvalidInput, "marked-point list has wrong length");
  if (!z[0].is_zero())
    fail(ErrorCode::InvalidInput, "configuration must be normalized by z_1 = 0");
  if (static_cast<int>(a.size()) != n)
    fail(ErrorCode::InvalidInput, "matrix has wrong row count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      fail(ErrorCode::InvalidInput, "matrix has wrong column count");
    if (a[i][i] != 0)
      fail(ErrorCode::NotSkewSymmetric, "nonzero diagonal entry");
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != -a[j][i])
        fail(ErrorCode::NotSkewSymmetric,
             "a[" + std::to_string(i) + "][" + std::to_string(j) +
                 "] != -a[" + std::to_string(j) + "][" + std::to_string(i) +
                 "]");
  }
  check_distinct(z, "initial configuration");
  if (require_no_collinear) check_no_collinear(z, "initial configuration");
  return GlnConfig{n, std::move(z), std::move(a)};
}

GlnConfig gln_apply_crossing(const GlnConfig& cfg, int i, int j, int k,
                             int direction) {
  int n = cfg.n;
  if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n || i == j ||
      j == k || i == k)
    fail(ErrorCode::IndexError, "crossing indices must be distinct and in range");
  if (direction != 1 && direction != -1)
    fail(ErrorCode::InvalidInput, "crossing direction must be +1 or -1");
  GlnConfig out = cfg;
  Rat delta = Rat(direction) * cfg.a[i][j] * cfg.a[j][k];
  out.a[i][k] += delta;
  out.a[k][i] -= delta;
  return out;
}

GlnTransportResult gln_transport_detailed(const GlnPath& path) {
  const GlnConfig& init = path.initial;
  if (path.waypoints.empty() || path.waypoints.front() != init.z)
    fail(ErrorCode::InvalidInput,
         "path must start at the initial configuration");
  for (const auto& w : path.waypoints) {
    if (static_cast<int>(w.size()) != init.n)
      fail(ErrorCode::InvalidInput, "waypoint has wrong length");
    if (!w[0].is_zero())
      fail(ErrorCode::InvalidInput, "waypoints must keep z_1 = 0");
  }
  int n = init.n;
  for (std::size_t w = 0; w < path.waypoints.size(); ++w) {
    std::string where = "waypoint " + std::to_string(w);
    check_distinct(path.waypoints[w], where);
    check_no_collinear(path.waypoints[w], where);
  }

  GlnTransportResult result{init, {}};
  for (std::size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    const auto& zs = path.waypoints[seg];
    const auto& ze = path.waypoints[seg + 1];
    std::vector<LinPoint> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(lin_point(zs[i], ze[i]));
    check_no_collision(pts, static_cast<int>(seg));

    std::vector<GlnCrossing> events;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int r = q + 1; r < n; ++r) {
          Poly F = cross_poly(pts[q] - pts[p], pts[r] - pts[p]);
          QuadraticRoots roots = solve_quadratic(F);
          if (roots.identically_zero)
            fail(ErrorCode::NonGenericPath,
                 "persistent collinearity on segment " + std::to_string(seg));
          if (roots.double_root && in_open_unit_interval(roots.roots[0]))
            fail(ErrorCode::NonGenericPath,
                 "tangential collinearity on segment " + std::to_string(seg));
          if (roots.double_root) continue;
          for (const QuadExt& s : roots.roots) {
            if (compare(s, QuadExt(Rat(0))) == 0 ||
                compare(s, QuadExt(Rat(1))) == 0)
              fail(ErrorCode::NonGenericPath,
                   "collinearity at a segment endpoint");
            if (!in_open_unit_interval(s)) continue;
            // Which of the three points sits strictly between the others?
            int triple[3] = {p, q, r};
            int middle = -1;
            for (int m = 0; m < 3; ++m) {
              int j = triple[m];
              int i = triple[(m + 1) % 3];
              int k = triple[(m + 2) % 3];
              QuadExt t1 = eval_at(dot_poly(pts[j] - pts[i], pts[k] - pts[i]), s);
              QuadExt t2 = eval_at(dot_poly(pts[j] - pts[k], pts[i] - pts[k]), s);
              if (t1.sign() > 0 && t2.sign() > 0) {
                middle = m;
                break;
              }
            }
            if (middle < 0) continue;  // collinear but outside the segment
            int j = triple[middle];
            int i = triple[(middle + 1) % 3];
            int k = triple[(middle + 2) % 3];
            if (i > k) std::swap(i, k);
            Poly Fik = cross_poly(pts[j] - pts[i], pts[k] - pts[i]);
            Poly dF(std::vector<Rat>{Fik.coefficient(1),
                                     2 * Fik.coefficient(2)});
            int dir = eval_at(dF, s).sign();
            if (dir == 0)
              fail(ErrorCode::NonGenericPath,
                   "stationary collinearity on segment " + std::to_string(seg));
            events.push_back(
                {static_cast<int>(seg), i, j, k, dir, s});
          }
        }

    for (std::size_t u = 0; u < events.size(); ++u)
      for (std::size_t v = u + 1; v < events.size(); ++v)
        if (compare(events[u].time, events[v].time) == 0)
          fail(ErrorCode::NonGenericPath,
               "simultaneous crossings on segment " + std::to_string(seg));
    std::sort(events.begin(), events.end(),
              [](const GlnCrossing& x, const GlnCrossing& y) {
                return compare(x.time, y.time) < 0;
              });
    for (const GlnCrossing& e : events) {
      result.config =
          gln_apply_crossing(result.config, e.i, e.j, e.k, e.direction);
      result.crossings.push_back(e);
    }
    result.config.z = ze;
  }
  return result;
}

GlnConfig gln_transport(const GlnPath& path) {
  return gln_transport_detailed(path).config;
}

bool gln_monodromy_check(const GlnPath& loop) {
  if (loop.waypoints.empty() || loop.waypoints.back() != loop.initial.z)
    fail(ErrorCode::InvalidInput, "loop must end where it starts");
  GlnConfig final = gln_transport(loop);
  return final.a == loop.initial.a;
}

}  // namespace wallcross
