#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "fig8/types.hpp"

namespace fig8 {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 30;
  // Hard truncation length for infinite rays; 0 means "derive from the decay
  // rate": 40/min(1, |decay|) with the decay rate supplied by the caller.
  double tail_length = 0.0;
  // Semicircle radius for the quantum-dilogarithm contour; 0 means the
  // default 0.5*min(pi/|gamma|, 1).
  double semicircle_radius = 0.0;
};

// Piecewise contour: straight segments, circular arcs, and (at the ends)
// infinite rays.  Built with the cursor-style helpers so consecutive
// endpoints coincide exactly.
class ContourPath {
 public:
  struct Line {
    cplx a, b;
  };
  struct Arc {  // z = center + radius*exp(i*theta), theta from ang0 to ang1
    cplx center;
    double radius, ang0, ang1;
  };
  struct Ray {  // inward: from infinity along -dir to endpoint; outward: endpoint to infinity along dir
    cplx endpoint;
    cplx dir;  // unit vector
    bool inward;
    // Exponential decay rate of |f| along the ray, used for tail truncation.
    double decay = 1.0;
  };
  using Segment = std::variant<Line, Arc, Ray>;

  static ContourPath polyline(const std::vector<cplx>& vertices);
  static ContourPath closed_polyline(std::vector<cplx> vertices);

  void move_to(cplx z);
  void line_to(cplx z);
  void arc(cplx center, double radius, double ang0, double ang1);
  // Start the path with a ray coming in from infinity along direction dir.
  void ray_in(cplx to, cplx dir, double decay = 1.0);
  // End the path with a ray going out to infinity along direction dir.
  void ray_out(cplx dir, double decay = 1.0);

  const std::vector<Segment>& segments() const { return segs_; }
  ContourPath reversed() const;

 private:
  std::vector<Segment> segs_;
  cplx cursor_{0.0, 0.0};
  bool has_cursor_ = false;
};

struct IntegrateDiagnostics {
  double est_error = 0.0;
  double last_ray_panel_mag = 0.0;
  long evaluations = 0;
};

// Adaptive Gauss-Legendre panel quadrature of f along the path.  Estimated
// error <= max(abs_tol, rel_tol*|result|); rays are truncated when a panel
// falls below abs_tol/100 or at the hard tail length.
cplx integrate_path(const std::function<cplx(cplx)>& f, const ContourPath& path,
                    const QuadratureConfig& cfg = {},
                    IntegrateDiagnostics* diag = nullptr);

struct RootSolveResult {
  cplx root;
  double residual = 0.0;  // |p(root)|
  int iterations = 0;     // Newton polishing steps taken
};

// All three roots of c3*w^3 + c2*w^2 + c1*w + c0, closed form plus Newton
// polishing (at most 5 steps per root).
std::array<RootSolveResult, 3> solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0);

// Second derivative of f at z0 by central differences with Richardson
// extrapolation; relative accuracy ~1e-8 for analytic f.
cplx differentiate2(const std::function<cplx(cplx)>& f, cplx z0, double h0);

// Neville extrapolation of samples (h_i, y_i) to h = 0.  Used for the
// sequence-limit checks where the step ratios are not exactly dyadic.
cplx extrapolate_to_zero(const std::vector<double>& hs,
                         const std::vector<cplx>& ys);

}  // namespace fig8
