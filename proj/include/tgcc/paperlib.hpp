#ifndef TGCC_PAPERLIB_HPP
#define TGCC_PAPERLIB_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "tgcc/gcc.hpp"

namespace tgcc {

/// Piecewise closed-form control time of the 1D reflecting window.
/// The (v = 1, delta = 0) cell has no formula and throws. The
/// (v > 1, delta > 0) branch is dimensionally inconsistent with its
/// neighbors; it is evaluated as written and should be reported against the
/// simulated value, never asserted (see estimate_T0).
double t0_1d(double v, double a, double delta);

/// Angular speed of the anticlockwise-precessing bounce pattern of a disk
/// chord with opening angle alpha: alpha / (2 sin(alpha/2)), increasing
/// from (0, 2pi) onto (1, inf).
double precession_ccw(double alpha);

/// Clockwise precession speed (alpha - pi) / (2 sin(alpha/2)), increasing
/// from (pi, 2pi) onto (0, inf).
double precession_cw(double alpha);

double invert_precession_ccw(double v);  // bisection on the monotone formula
double invert_precession_cw(double v);

/// Window speeds for which the disk stop-and-go schedule controls:
/// ((pi-a)/(2 sin(a/2)), (3a-2pi)/(4 sin(a/2))), nonempty for
/// a in (4pi/5, pi).
std::pair<double, double> stop_and_go_interval(double a);

/// Residues {k p mod 2q : k = 1..2q}, sorted. Equals {1..2q} scaled when p
/// is odd and the even residues when p is even.
std::vector<int> polygon_vertex_residues(int p, int q);

/// The residues as angles k pi / q in [0, 2pi).
std::vector<double> polygon_vertex_set(int p, int q);

struct SpeedThresholds {
  double v0 = 0;  // sphere: slow regime bound; disk/square: fast threshold
  double v1 = 0;  // sphere fast threshold; unused elsewhere
};

SpeedThresholds speed_thresholds(DomainKind kind, double a, double eps);

/// Two-sided closed-form bounds on T0 in the regimes where they exist;
/// throws "no closed-form bound" in the intermediate regime.
std::pair<double, double> asymptotic_bounds(DomainKind kind, double v,
                                            double a, double eps);

enum class ObstructionKind {
  SphereRationalSpeed,   // v = p/q
  DiskPolygonResonance,  // alpha = 2pi/n, v = pi p / (q sin(pi/n))
  DiskPrecessionCcw,     // v = w_ccw(alpha), alpha from v by bisection
  DiskPrecessionCw,      // v = w_cw(alpha)
  SquareRationalSlope    // slope p/q ray, v = (num/den) sqrt(p^2+q^2)
};

struct CounterexampleRequest {
  ObstructionKind kind = ObstructionKind::SphereRationalSpeed;
  int p = 1, q = 1;        // rational data (slope for the square)
  int n = 2;               // disk polygon order
  int num = 1, den = 1;    // square rational speed multiplier
  double v_target = 0;     // precession kinds: the speed to match
  double horizon = 200;
};

/// A replay-verified non-observable ray for a rational-speed obstruction,
/// with window-size bounds derived from the measured clearance.
struct Counterexample {
  ObstructionKind kind = ObstructionKind::SphereRationalSpeed;
  DomainKind geometry = DomainKind::UnitSphere;
  int p = 0, q = 0, n = 0, num = 0, den = 0;
  double v = 0;
  double alpha = 0;          // disk chord opening angle where applicable
  RayParams ray;
  double window_start0 = 0;  // window position at t = 0
  double a0 = 0, eps0 = 0;
  double clearance = 0;      // minimal gap between bounce set and window
  double horizon = 0;

  MovingRegion region() const;  // the avoided region (a = a0, eps = eps0)
  MovingRegion region_with(double a, double eps) const;
};

Counterexample make_counterexample(const CounterexampleRequest& req);

void save_counterexample(const Counterexample& c, std::ostream& os);
Counterexample load_counterexample(std::istream& is);

}  // namespace tgcc

#endif
