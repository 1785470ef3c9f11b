#ifndef TGCC_OBSDOMAIN_HPP
#define TGCC_OBSDOMAIN_HPP

#include <functional>
#include <vector>

#include "tgcc/geometry.hpp"

namespace tgcc {

enum class RegionMode { Interior, Boundary };

enum class MotionLaw { Static, ConstantSpeed, Reflecting1D, StopAndGo, Custom };

/// Deterministic seam handling: membership comparisons after mod reduction
/// shrink the window by this guard band.
inline constexpr double kSeamGuard = 1e-12;

/// A time-dependent observation region omega(t) (interior mode) or
/// boundary region Gamma(t) (boundary mode).
///
/// Shapes by geometry:
///   interval: omega(t) = (p(t), p(t)+a), reflecting at the walls with an
///             optional hold of duration delta;
///   sphere:   {|phi| < eps, theta in (theta0(t), theta0(t)+a) mod 2pi};
///   disk:     {1-eps < r <= 1, theta in the angular window} (the boundary
///             circle is included so gliding rays can be captured);
///   square:   ((x-a, x+a) x (y-a, y+a)) intersected with the closed square,
///             center moving anticlockwise along the perimeter at speed v.
/// Boundary mode replaces the region by its boundary arc of length a.
struct MovingDomainSpec {
  DomainKind kind = DomainKind::Interval01;
  RegionMode mode = RegionMode::Interior;
  MotionLaw law = MotionLaw::Static;
  double a = 0;        // angular / linear window length (square: half-width)
  double eps = 0;      // radial / latitudinal width (unused in 1D, square)
  double v = 0;        // window speed
  double delta = 0;    // 1D wall hold duration
  double t_start = 0;  // stop-and-go release time
  double start = 0;    // window start position at t = 0 (arclength / angle)
  bool end0 = false, end1 = true;  // 1D boundary mode: which walls observe
  std::function<double(double)> custom;  // Custom law: t -> window start

  /// Start of the window at time t: 1D left endpoint, disk/sphere theta0(t),
  /// square perimeter coordinate of the center.
  double window_start(double t) const;
  /// 1D reflecting-law period 2((1-a)/v + delta).
  double period() const;
};

/// A union of specs with OR semantics (two-component disk regions), or a
/// shell region around the space-time boundary of a base region.
class MovingRegion {
 public:
  MovingRegion() = default;
  explicit MovingRegion(MovingDomainSpec spec) : specs_{spec} {}
  explicit MovingRegion(std::vector<MovingDomainSpec> specs)
      : specs_(std::move(specs)) {}
  static MovingRegion shell_region(const struct ShellSpec& s);

  bool contains(double t, const Point& p) const;
  double min_feature_timescale() const;
  DomainKind kind() const;
  const std::vector<MovingDomainSpec>& specs() const { return specs_; }
  bool is_shell() const { return static_cast<bool>(shell_); }

  void set_shell(std::function<bool(double, const Point&)> fn,
                 double timescale, DomainKind kind) {
    shell_ = std::move(fn);
    shell_timescale_ = timescale;
    shell_kind_ = kind;
  }

 private:
  std::vector<MovingDomainSpec> specs_;
  std::function<bool(double, const Point&)> shell_;
  double shell_timescale_ = 0;
  DomainKind shell_kind_ = DomainKind::Interval01;
};

/// Thin shell of thickness h around the space-time boundary of
/// Q = base region intersected with [0,T] x closure(domain), end caps
/// included.
struct ShellSpec {
  MovingDomainSpec base;
  double T = 0;
  double h = 0;
};

bool contains(const MovingDomainSpec& spec, double t, const Point& p);

/// Safe bracketing step: tau = min feature / (4 (1 + v_max)); any crossing
/// of the region by a unit-speed ray spans at least two steps.
double min_feature_timescale(const MovingDomainSpec& spec);

MovingRegion boundary_shell(const ShellSpec& s);

}  // namespace tgcc

#endif
