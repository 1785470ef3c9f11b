#ifndef TGCC_RAYFLOW_HPP
#define TGCC_RAYFLOW_HPP

#include <vector>

#include "tgcc/geometry.hpp"

namespace tgcc {

/// Gliding rays travel along the boundary at unit arclength speed; they are
/// first-class states, not small-angle approximations.
enum class RayMode { Interior, GlidingCcw, GlidingCw };

/// A point of the generalized ray flow, parametrized by time (wave speed 1).
struct RayState {
  DomainKind kind = DomainKind::Interval01;
  Point pos;
  Vec3 dir;  // unit tangent; 1D uses dir.x = +-1; unused in gliding mode
  double t = 0;
  RayMode mode = RayMode::Interior;

  static RayState interval(double x, double d, double t = 0) {
    RayState r;
    r.kind = DomainKind::Interval01;
    r.pos = Point::of1d(x);
    r.dir = {d >= 0 ? 1.0 : -1.0, 0, 0};
    r.t = t;
    return r;
  }
  static RayState planar(DomainKind kind, double x, double y, double angle,
                         double t = 0) {
    RayState r;
    r.kind = kind;
    r.pos = Point::of2d(x, y);
    r.dir = {std::cos(angle), std::sin(angle), 0};
    r.t = t;
    return r;
  }
  static RayState gliding(DomainKind kind, double s0, bool ccw, double t = 0) {
    RayState r;
    r.kind = kind;
    r.pos = boundary_param(kind, s0);
    r.t = t;
    r.mode = ccw ? RayMode::GlidingCcw : RayMode::GlidingCw;
    return r;
  }
};

/// A boundary reflection. dir_out follows the specular law when transversal,
/// the retroreflection rule at square corners, and equals dir_in otherwise
/// (glancing contact, flagged non-transversal).
struct BounceEvent {
  double t = 0;
  Point point;
  double s = 0;  // boundary arclength
  Vec2 dir_in, dir_out;
  bool transversal = true;
  bool corner = false;
};

/// Disk rays in bounce-angle form: boundary angles advance by the opening
/// angle alpha each bounce, times by 2 sin(alpha/2). Exact near tangency,
/// where Cartesian segment-circle intersection is ill-conditioned.
struct DiskChordRay {
  double theta0 = 0;   // angle of first boundary point
  double alpha = 0;    // opening angle in (0, 2pi); 0 encodes gliding
  double t0 = 0;       // time at the first boundary point
  int orientation = 1; // gliding orientation (+1 ccw, -1 cw); unused for chords

  double edge_time() const { return 2.0 * std::sin(alpha / 2.0); }
};

/// Great-circle rays on the unit sphere: node is the longitude of an equator
/// crossing, inclination in [0, pi/2], phase the angle along the circle at
/// t = 0, orientation the traversal sign.
struct GreatCircleRay {
  double node = 0;
  double inclination = 0;
  double phase = 0;
  int orientation = 1;
};

/// Unfolded square ray: the trajectory is the straight line
/// (x0 + (t-t0) c, y0 + (t-t0) s) folded back by the mod-2 triangle map.
struct UnfoldState {
  double x0 = 0, y0 = 0;
  double c = 1, s = 0;  // direction cosines, c^2 + s^2 = 1
  double t0 = 0;
};

struct Trace {
  std::vector<BounceEvent> events;
  RayState final_state;
};

/// Bounce cap; guards near-tangent chords in event-driven tracing.
inline constexpr long kBounceOverflow = 10'000'000;

/// Exact next ray-boundary intersection. Interior mode only; the sphere is
/// boundaryless and throws.
BounceEvent next_bounce(const RayState& state);

/// Event-driven trace up to t_max. Throws on bounce overflow (> 10^7 events).
Trace trace(const RayState& state, double t_max);

Point eval_square_unfolded(const UnfoldState& u, double t);
Point eval_disk_chord(const DiskChordRay& r, double t);
/// Position on the great circle; Point is the unit 3-vector (use .theta(),
/// .phi() for spherical coordinates).
Point eval_great_circle(const GreatCircleRay& r, double t);

/// Boundary arclength of a gliding ray at time t: s0 +- (t - t0), corners
/// traversed continuously. Disk and square only.
double glide_arclength(DomainKind kind, double s0, int orientation, double t0,
                       double t);

DiskChordRay disk_chord_from_state(const RayState& state);
UnfoldState unfold_from_state(const RayState& state);
GreatCircleRay great_circle_from_state(const RayState& state);

/// O(1)-amortized position evaluator for all geometries and modes, with a
/// cached chord index for monotone time queries on the disk.
class PathEval {
 public:
  explicit PathEval(const RayState& state);

  Point at(double t);
  DomainKind kind() const { return kind_; }
  RayMode mode() const { return mode_; }

 private:
  DomainKind kind_;
  RayMode mode_;
  // 1D
  double x0_ = 0, d1_ = 1, tref_ = 0;
  // disk chord (cached current edge)
  DiskChordRay chord_;
  long cached_k_ = 0;
  Vec2 pk_, pk1_;
  bool cache_valid_ = false;
  // square
  UnfoldState unfold_;
  // sphere
  Vec3 axis_a_, axis_b_;
  double phase_ = 0;
  // gliding
  double s0_ = 0;
  int orient_ = 1;
};

}  // namespace tgcc

#endif
