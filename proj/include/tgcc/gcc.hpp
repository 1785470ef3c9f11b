#ifndef TGCC_GCC_HPP
#define TGCC_GCC_HPP

#include <string>
#include <vector>

#include "tgcc/obsdomain.hpp"
#include "tgcc/rayflow.hpp"

namespace tgcc {

enum class HitStatus { Hit, None, Indeterminate };

struct HitResult {
  HitStatus status = HitStatus::None;
  double t = 0;
};

/// Initial-condition families. Grid families carry the continuous parameters
/// the worst-ray pattern search perturbs; special families carry the
/// adversarial cases (gliding, polygon, rational-slope rays) that grids miss.
enum class RayFamily {
  Interval,        // p0 = x0; i0 = direction sign
  DiskInterior,    // p0 = r, p1 = position angle, p2 = direction angle
  SquareInterior,  // p0 = x, p1 = y, p2 = direction angle
  SphereCircle,    // p0 = node, p1 = inclination, p2 = phase; i0 = orientation
  Gliding,         // p0 = boundary arclength; i0 = orientation
  DiskPolygon,     // p0 = theta0, p1 = phase fraction in [0,1); i0 = n
  SquareRational   // p0 = x, p1 = y; i0, i1 = slope p, q (sign in i0)
};

struct RayParams {
  RayFamily family = RayFamily::Interval;
  double p[4] = {0, 0, 0, 0};
  int i0 = 0, i1 = 0;

  RayState to_state(DomainKind kind) const;
  std::string label() const;
};

struct RaySampling {
  DomainKind kind = DomainKind::Interval01;
  unsigned long long seed = 0;
  std::vector<RayParams> rays;
};

/// Default deterministic sampling: jittered grids per geometry plus the
/// mandatory special families (gliding both orientations, disk polygons
/// n <= 64, square rational slopes p/q <= 12 and axis-parallel rays).
RaySampling make_sampling(DomainKind kind, unsigned long long seed = 0);

struct TgccVerdict {
  bool satisfied = false;
  double T = 0;              // horizon tested (estimate: horizon cap)
  double t0_estimate = 0;    // sup of first-hit times; +inf if a ray never hits
  RayParams worst_ray;
  double margin = 0;         // pattern-search refinement radius
  std::string status;        // finite | exceeded_horizon | indeterminate
  std::vector<HitResult> hit_times;
};

/// Earliest t in (0, horizon) with the ray's position inside the region.
/// 1D standard specs are solved exactly piecewise-linearly; everything else
/// uses bracketing at the region's safe step followed by bisection to 1e-10.
/// Rays starting inside the region at t = 0 report 1e-12.
HitResult first_hit_time(const MovingRegion& region, const RayState& ray,
                         double horizon);

TgccVerdict check_tgcc(const MovingRegion& region, double T,
                       const RaySampling& sampling);

/// t0_estimate = sup over the sample of first-hit times, tightened by a
/// 40-iteration pattern search around the worst ray. A sampling lower bound
/// on the true control time; margin is the refinement radius.
TgccVerdict estimate_T0(const MovingRegion& region,
                        const RaySampling& sampling, double horizon_cap);

/// Boundary observability: a ray hits only via a transversal bounce inside
/// Gamma(t). Gliding rays never hit (disk: NONE; square edge gliding:
/// indeterminate), reproducing the loss of finite control time.
TgccVerdict check_tgcc_boundary(const MovingRegion& region, double T,
                                const RaySampling& sampling);

}  // namespace tgcc

#endif
