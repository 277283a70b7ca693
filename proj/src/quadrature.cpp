#include "fig8/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fig8 {

namespace {

// 10-point Gauss-Legendre nodes (positive half) and weights on [-1,1].
constexpr double kGx[5] = {0.1488743389816312, 0.4333953941292472,
                           0.6794095682990244, 0.8650633666889845,
                           0.9739065285171717};
constexpr double kGw[5] = {0.2955242247147529, 0.2692667193099963,
                           0.2190863625159820, 0.1494513491505806,
                           0.0666713443086881};

struct PanelIntegrator {
  const std::function<cplx(cplx)>& f;
  // Parametrization of one segment: t -> (z, dz/dt).
  std::function<std::pair<cplx, cplx>(double)> map;
  long* evaluations;

  cplx sample(double t) const {
    auto [z, dz] = map(t);
    cplx v = f(z);
    ++*evaluations;
    if (!finite(v)) {
      std::ostringstream os;
      os << "integrand not finite at z = (" << z.real() << ", " << z.imag()
         << ")";
      throw Error(ErrorKind::singular_sample, os.str());
    }
    return v * dz;
  }

  cplx gauss10(double a, double b) const {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx acc{0.0, 0.0};
    for (int i = 0; i < 5; ++i) {
      acc += kGw[i] * (sample(c - h * kGx[i]) + sample(c + h * kGx[i]));
    }
    return acc * h;
  }

  // Adaptive bisection; accumulates the value and an error estimate.
  void adaptive(double a, double b, double tol, int depth, int max_depth,
                cplx* value, double* err_acc, bool* tol_missed) const {
    const cplx whole = gauss10(a, b);
    const double mid = 0.5 * (a + b);
    const cplx halves = gauss10(a, mid) + gauss10(mid, b);
    const double err = std::abs(halves - whole);
    if (err <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
      *value += halves;
      *err_acc += err;
      return;
    }
    if (depth >= max_depth) {
      *value += halves;
      *err_acc += err;
      *tol_missed = true;
      return;
    }
    adaptive(a, mid, 0.5 * tol, depth + 1, max_depth, value, err_acc,
             tol_missed);
    adaptive(mid, b, 0.5 * tol, depth + 1, max_depth, value, err_acc,
             tol_missed);
  }
};

std::pair<cplx, cplx> line_map(const ContourPath::Line& s, double t) {
  return {s.a + t * (s.b - s.a), s.b - s.a};
}

std::pair<cplx, cplx> arc_map(const ContourPath::Arc& s, double th) {
  const cplx e{std::cos(th), std::sin(th)};
  return {s.center + s.radius * e, cplx(0.0, 1.0) * s.radius * e};
}

}  // namespace

ContourPath ContourPath::polyline(const std::vector<cplx>& vertices) {
  if (vertices.size() < 2)
    throw Error(ErrorKind::invalid_argument, "polyline needs >= 2 vertices");
  ContourPath p;
  p.move_to(vertices.front());
  for (size_t i = 1; i < vertices.size(); ++i) p.line_to(vertices[i]);
  return p;
}

ContourPath ContourPath::closed_polyline(std::vector<cplx> vertices) {
  if (!vertices.empty()) vertices.push_back(vertices.front());
  return polyline(vertices);
}

void ContourPath::move_to(cplx z) {
  if (!segs_.empty())
    throw Error(ErrorKind::invalid_argument, "move_to only starts a path");
  cursor_ = z;
  has_cursor_ = true;
}

void ContourPath::line_to(cplx z) {
  if (!has_cursor_)
    throw Error(ErrorKind::invalid_argument, "line_to without a current point");
  segs_.push_back(Line{cursor_, z});
  cursor_ = z;
}

void ContourPath::arc(cplx center, double radius, double ang0, double ang1) {
  if (radius <= 0.0)
    throw Error(ErrorKind::invalid_argument, "arc radius must be positive");
  const cplx start = center + radius * cplx(std::cos(ang0), std::sin(ang0));
  if (has_cursor_ &&
      std::abs(start - cursor_) > 1e-12 * (1.0 + std::abs(cursor_)))
    throw Error(ErrorKind::invalid_argument,
                "arc start does not meet the current point");
  if (!has_cursor_) has_cursor_ = true;
  segs_.push_back(Arc{center, radius, ang0, ang1});
  cursor_ = center + radius * cplx(std::cos(ang1), std::sin(ang1));
}

void ContourPath::ray_in(cplx to, cplx dir, double decay) {
  if (!segs_.empty())
    throw Error(ErrorKind::invalid_argument, "ray_in must start the path");
  const double len = std::abs(dir);
  if (len == 0.0) throw Error(ErrorKind::invalid_argument, "ray needs a direction");
  segs_.push_back(Ray{to, dir / len, true, decay});
  cursor_ = to;
  has_cursor_ = true;
}

void ContourPath::ray_out(cplx dir, double decay) {
  if (!has_cursor_)
    throw Error(ErrorKind::invalid_argument, "ray_out without a current point");
  const double len = std::abs(dir);
  if (len == 0.0) throw Error(ErrorKind::invalid_argument, "ray needs a direction");
  segs_.push_back(Ray{cursor_, dir / len, false, decay});
}

ContourPath ContourPath::reversed() const {
  ContourPath r;
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
    if (auto* l = std::get_if<Line>(&*it)) {
      r.segs_.push_back(Line{l->b, l->a});
    } else if (auto* a = std::get_if<Arc>(&*it)) {
      r.segs_.push_back(Arc{a->center, a->radius, a->ang1, a->ang0});
    } else {
      auto& ray = std::get<Ray>(*it);
      r.segs_.push_back(Ray{ray.endpoint, ray.dir, !ray.inward, ray.decay});
    }
  }
  if (!r.segs_.empty()) {
    if (auto* l = std::get_if<Line>(&r.segs_.back())) r.cursor_ = l->b;
    r.has_cursor_ = true;
  }
  return r;
}

cplx integrate_path(const std::function<cplx(cplx)>& f, const ContourPath& path,
                    const QuadratureConfig& cfg, IntegrateDiagnostics* diag) {
  if (path.segments().empty())
    throw Error(ErrorKind::invalid_argument, "empty path");
  if (cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0 || cfg.max_depth < 1)
    throw Error(ErrorKind::invalid_argument, "tolerances must be positive");

  long evals = 0;
  double last_ray_panel = 0.0;

  // Marches one ray with growing panels; tolerance budget halves per panel.
  auto do_ray = [&](const ContourPath::Ray& ray, double tol) -> cplx {
    const double tail =
        cfg.tail_length > 0.0 ? cfg.tail_length
                              : 40.0 / std::min(1.0, std::abs(ray.decay));
    cplx total{0.0, 0.0};
    double err_acc = 0.0;
    bool missed = false;
    double s = 0.0;
    int j = 0;
    while (s < tail) {
      const double h = std::min(std::min(std::ldexp(1.0, std::min(j, 3)), 8.0),
                                tail - s);
      PanelIntegrator pi{f,
                         [&](double t) -> std::pair<cplx, cplx> {
                           return {ray.endpoint + t * ray.dir, ray.dir};
                         },
                         &evals};
      cplx panel{0.0, 0.0};
      double panel_err = 0.0;
      pi.adaptive(s, s + h, std::max(tol * std::ldexp(1.0, -(j + 1)),
                                     0.01 * cfg.abs_tol),
                  0, cfg.max_depth, &panel, &panel_err, &missed);
      total += panel;
      err_acc += panel_err;
      last_ray_panel = std::abs(panel);
      s += h;
      ++j;
      if (j >= 3 && last_ray_panel < 0.01 * cfg.abs_tol) break;
    }
    if (missed && err_acc > tol) {
      std::ostringstream os;
      os << "ray quadrature stalled; best (" << total.real() << ", "
         << total.imag() << "), est error " << err_acc;
      throw Error(ErrorKind::no_convergence, os.str());
    }
    if (ray.inward) total = -total;
    return total;
  };

  // Preliminary non-adaptive pass over the finite segments for the relative
  // tolerance scale.
  double scale = 0.0;
  for (const auto& seg : path.segments()) {
    if (auto* l = std::get_if<ContourPath::Line>(&seg)) {
      PanelIntegrator pi{f, [&](double t) { return line_map(*l, t); }, &evals};
      scale += std::abs(pi.gauss10(0.0, 1.0));
    } else if (auto* a = std::get_if<ContourPath::Arc>(&seg)) {
      PanelIntegrator pi{f, [&](double t) { return arc_map(*a, t); }, &evals};
      scale += std::abs(pi.gauss10(a->ang0, a->ang1));
    }
  }
  const double target = std::max(cfg.abs_tol, cfg.rel_tol * scale);
  const double seg_tol = target / double(path.segments().size());

  cplx total{0.0, 0.0};
  double err_acc = 0.0;
  bool missed = false;
  for (const auto& seg : path.segments()) {
    if (auto* l = std::get_if<ContourPath::Line>(&seg)) {
      PanelIntegrator pi{f, [&](double t) { return line_map(*l, t); }, &evals};
      // Initial split keeps long segments from fooling the error estimate.
      const int init = 4;
      for (int i = 0; i < init; ++i)
        pi.adaptive(i / double(init), (i + 1) / double(init), seg_tol / init, 0,
                    cfg.max_depth, &total, &err_acc, &missed);
    } else if (auto* a = std::get_if<ContourPath::Arc>(&seg)) {
      PanelIntegrator pi{f, [&](double t) { return arc_map(*a, t); }, &evals};
      const int init = 4;
      const double span = a->ang1 - a->ang0;
      for (int i = 0; i < init; ++i)
        pi.adaptive(a->ang0 + span * i / init, a->ang0 + span * (i + 1) / init,
                    seg_tol / init, 0, cfg.max_depth, &total, &err_acc,
                    &missed);
    } else {
      total += do_ray(std::get<ContourPath::Ray>(seg), seg_tol);
    }
  }

  if (missed && err_acc > 2.0 * std::max(target, cfg.rel_tol * std::abs(total))) {
    std::ostringstream os;
    os << "quadrature tolerance not met; best (" << total.real() << ", "
       << total.imag() << "), est error " << err_acc;
    throw Error(ErrorKind::no_convergence, os.str());
  }
  if (diag) {
    diag->est_error = err_acc;
    diag->last_ray_panel_mag = last_ray_panel;
    diag->evaluations = evals;
  }
  return total;
}

std::array<RootSolveResult, 3> solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0) {
  if (std::abs(c3) == 0.0 || !finite(c3))
    throw Error(ErrorKind::degenerate_degree, "leading coefficient is zero");

  const cplx b = c2 / c3, c = c1 / c3, d = c0 / c3;
  const cplx d0 = b * b - 3.0 * c;
  const cplx d1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
  const cplx sq = std::sqrt(d1 * d1 - 4.0 * d0 * d0 * d0);
  cplx big = d1 + sq;
  if (std::abs(d1 - sq) > std::abs(big)) big = d1 - sq;

  std::array<cplx, 3> roots;
  if (std::abs(big) == 0.0) {  // triple root
    roots.fill(-b / 3.0);
  } else {
    const cplx C = std::exp(std::log(0.5 * big) / 3.0);
    const cplx zeta{-0.5, 0.8660254037844386};
    cplx Ck = C;
    for (int k = 0; k < 3; ++k) {
      roots[k] = -(b + Ck + d0 / Ck) / 3.0;
      Ck *= zeta;
    }
  }

  auto p = [&](cplx w) { return ((c3 * w + c2) * w + c1) * w + c0; };
  auto dp = [&](cplx w) { return (3.0 * c3 * w + 2.0 * c2) * w + c1; };

  std::array<RootSolveResult, 3> out;
  for (int k = 0; k < 3; ++k) {
    cplx w = roots[k];
    int iters = 0;
    double res = std::abs(p(w));
    for (; iters < 5; ++iters) {
      const cplx der = dp(w);
      if (std::abs(der) < 1e-300) break;  // multiple root; leave as is
      const cplx wn = w - p(w) / der;
      const double rn = std::abs(p(wn));
      if (rn >= res) break;
      w = wn;
      res = rn;
    }
    out[k] = RootSolveResult{w, res, iters};
  }
  return out;
}

cplx differentiate2(const std::function<cplx(cplx)>& f, cplx z0, double h0) {
  if (!(h0 > 0.0))
    throw Error(ErrorKind::invalid_argument, "h0 must be positive");
  const cplx f0 = f(z0);
  constexpr int kLevels = 7;
  cplx table[kLevels][kLevels];
  cplx best{0.0, 0.0};
  double best_delta = std::numeric_limits<double>::infinity();
  double prev_delta = std::numeric_limits<double>::infinity();
  int worse = 0;
  double h = h0;
  for (int j = 0; j < kLevels; ++j, h *= 0.5) {
    table[j][0] = (f(z0 + h) - 2.0 * f0 + f(z0 - h)) / (h * h);
    double p4 = 4.0;
    for (int k = 1; k <= j; ++k, p4 *= 4.0)
      table[j][k] = (p4 * table[j][k - 1] - table[j - 1][k - 1]) / (p4 - 1.0);
    if (j == 0) continue;
    const double delta = std::abs(table[j][j] - table[j - 1][j - 1]);
    if (delta < best_delta) {
      best_delta = delta;
      best = table[j][j];
      worse = 0;
    } else if (delta > prev_delta) {
      if (++worse >= 2) break;  // rounding noise has taken over
    }
    prev_delta = delta;
    if (delta <= 1e-10 * std::max(1.0, std::abs(best))) return table[j][j];
  }
  if (best_delta > 1e-5 * std::max(1.0, std::abs(best)))
    throw Error(ErrorKind::unstable_differentiation,
                "Richardson table did not settle");
  return best;
}

cplx extrapolate_to_zero(const std::vector<double>& hs,
                         const std::vector<cplx>& ys) {
  if (hs.size() != ys.size() || hs.empty())
    throw Error(ErrorKind::invalid_argument, "mismatched extrapolation data");
  std::vector<cplx> t = ys;
  const size_t m = t.size();
  for (size_t k = 1; k < m; ++k)
    for (size_t i = 0; i + k < m; ++i)
      t[i] = t[i + 1] + (t[i + 1] - t[i]) * hs[i + k] / (hs[i] - hs[i + k]);
  return t[0];
}

}  // namespace fig8
