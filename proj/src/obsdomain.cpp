#include "tgcc/obsdomain.hpp"

#include <algorithm>
#include <limits>

namespace tgcc {

namespace {

bool in_window_mod(double x, double x0, double a, double period) {
  if (a >= period - kSeamGuard) return true;
  double d = pos_mod(x - x0, period);
  return d > kSeamGuard && d < a - kSeamGuard;
}

bool contains_interior(const MovingDomainSpec& spec, double t, const Point& p) {
  switch (spec.kind) {
    case DomainKind::Interval01: {
      // Open window (lo, hi), relatively open in [0,1]: the wall itself
      // belongs to the window whenever the window abuts it.
      double lo = spec.window_start(t), hi = lo + spec.a;
      bool left_ok = lo <= kSeamGuard || p.x() > lo;
      bool right_ok = hi >= 1.0 - kSeamGuard || p.x() < hi;
      return left_ok && right_ok;
    }
    case DomainKind::UnitDisk: {
      double r2 = p.x() * p.x() + p.y() * p.y();
      double rin = 1.0 - spec.eps;
      if (r2 <= rin * rin || r2 > 1.0 + 1e-9) return false;
      return in_window_mod(p.theta(), spec.window_start(t), spec.a, kTwoPi);
    }
    case DomainKind::UnitSphere: {
      if (std::abs(p.z()) >= std::sin(spec.eps)) return false;
      return in_window_mod(p.theta(), spec.window_start(t), spec.a, kTwoPi);
    }
    case DomainKind::UnitSquare: {
      Point c = boundary_param(DomainKind::UnitSquare,
                               pos_mod(spec.window_start(t), 4.0));
      return std::abs(p.x() - c.x()) < spec.a - kSeamGuard &&
             std::abs(p.y() - c.y()) < spec.a - kSeamGuard;
    }
  }
  return false;
}

bool contains_boundary(const MovingDomainSpec& spec, double t, const Point& p) {
  switch (spec.kind) {
    case DomainKind::Interval01:
      if (p.x() <= 1e-9) return spec.end0;
      if (p.x() >= 1.0 - 1e-9) return spec.end1;
      return false;
    case DomainKind::UnitDisk:
      return in_window_mod(p.theta(), spec.window_start(t), spec.a, kTwoPi);
    case DomainKind::UnitSquare:
      return in_window_mod(boundary_param_inv(DomainKind::UnitSquare, p),
                           spec.window_start(t), spec.a, 4.0);
    case DomainKind::UnitSphere:
      throw std::domain_error("boundary mode: sphere is boundaryless");
  }
  return false;
}

}  // namespace

double MovingDomainSpec::period() const {
  if (law != MotionLaw::Reflecting1D || v <= 0)
    throw std::domain_error("period: 1D reflecting law only");
  return 2.0 * ((1.0 - a) / v + delta);
}

double MovingDomainSpec::window_start(double t) const {
  switch (law) {
    case MotionLaw::Static:
      return start;
    case MotionLaw::ConstantSpeed:
      return start + v * t;
    case MotionLaw::StopAndGo:
      return t < t_start ? start : start + v * (t - t_start);
    case MotionLaw::Custom:
      return custom(t);
    case MotionLaw::Reflecting1D: {
      if (v <= 0) return 0.0;
      double travel = (1.0 - a) / v;
      double tau = pos_mod(t, 2.0 * (travel + delta));
      if (tau < travel) return v * tau;
      if (tau < travel + delta) return 1.0 - a;
      if (tau < 2.0 * travel + delta) return 1.0 - a - v * (tau - travel - delta);
      return 0.0;
    }
  }
  throw std::logic_error("unreachable");
}

bool contains(const MovingDomainSpec& spec, double t, const Point& p) {
  return spec.mode == RegionMode::Interior ? contains_interior(spec, t, p)
                                           : contains_boundary(spec, t, p);
}

double min_feature_timescale(const MovingDomainSpec& spec) {
  double feature;
  if (spec.kind == DomainKind::UnitDisk || spec.kind == DomainKind::UnitSphere) {
    if (spec.eps <= 0) throw std::invalid_argument("empty region");
    feature = std::min(spec.a, 2.0 * spec.eps);
  } else {
    feature = spec.a;
  }
  if (feature <= 0) throw std::invalid_argument("empty region");
  double v_max = spec.law == MotionLaw::Static ? 0.0 : std::abs(spec.v);
  return feature / (4.0 * (1.0 + v_max));
}

namespace {

struct Polyline {
  std::vector<double> t, x;

  double dist(double pt, double px) const {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      double dt = t[i + 1] - t[i], dx = x[i + 1] - x[i];
      double len2 = dt * dt + dx * dx;
      double u = len2 > 0 ? ((pt - t[i]) * dt + (px - x[i]) * dx) / len2 : 0.0;
      u = std::min(1.0, std::max(0.0, u));
      double et = pt - (t[i] + u * dt), ex = px - (x[i] + u * dx);
      best = std::min(best, std::sqrt(et * et + ex * ex));
    }
    return best;
  }
};

std::vector<double> window_breakpoints(const MovingDomainSpec& b, double T) {
  std::vector<double> ts{0.0, T};
  if (b.law == MotionLaw::Reflecting1D && b.v > 0) {
    double travel = (1.0 - b.a) / b.v;
    double marks[3] = {travel, travel + b.delta, 2.0 * travel + b.delta};
    double period = 2.0 * (travel + b.delta);
    for (double base = 0.0; base < T; base += period)
      for (double m : marks)
        if (base + m < T) ts.push_back(base + m);
  } else if (b.law == MotionLaw::StopAndGo) {
    if (b.t_start > 0 && b.t_start < T) ts.push_back(b.t_start);
  } else if (b.law == MotionLaw::Custom) {
    int n = 4096;
    for (int i = 1; i < n; ++i) ts.push_back(T * i / n);
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

double interval_dist(double x, double lo, double hi) {
  if (x < lo) return lo - x;
  if (x > hi) return x - hi;
  return 0.0;
}

}  // namespace

MovingRegion boundary_shell(const ShellSpec& s) {
  if (s.base.kind != DomainKind::Interval01)
    throw std::domain_error("boundary_shell: 1D bases only");
  if (s.h <= 0) throw std::invalid_argument("boundary_shell: h <= 0");
  if (s.h >= s.base.a / 2.0)
    throw std::invalid_argument("boundary_shell: h exceeds base feature size");

  auto ts = window_breakpoints(s.base, s.T);
  Polyline lo, hi;
  for (double t : ts) {
    double p0 = s.base.window_start(t);
    lo.t.push_back(t);
    lo.x.push_back(p0);
    hi.t.push_back(t);
    hi.x.push_back(p0 + s.base.a);
  }
  double cap0_lo = s.base.window_start(0.0);
  double cap0_hi = cap0_lo + s.base.a;
  double capT_lo = s.base.window_start(s.T);
  double capT_hi = capT_lo + s.base.a;
  double T = s.T, h = s.h;

  MovingRegion region;
  region = MovingRegion();
  struct ShellFn {
    Polyline lo, hi;
    double cap0_lo, cap0_hi, capT_lo, capT_hi, T, h;
    bool operator()(double t, const Point& p) const {
      double x = p.x();
      double d = std::min(lo.dist(t, x), hi.dist(t, x));
      d = std::min(d, std::hypot(t, interval_dist(x, cap0_lo, cap0_hi)));
      d = std::min(d, std::hypot(t - T, interval_dist(x, capT_lo, capT_hi)));
      return d < h;
    }
  };
  ShellFn fn{lo, hi, cap0_lo, cap0_hi, capT_lo, capT_hi, T, h};
  double v_max = s.base.law == MotionLaw::Static ? 0.0 : std::abs(s.base.v);
  region.set_shell(fn, s.h / (2.0 * (1.0 + v_max)), s.base.kind);
  return region;
}

MovingRegion MovingRegion::shell_region(const ShellSpec& s) {
  return boundary_shell(s);
}

bool MovingRegion::contains(double t, const Point& p) const {
  if (shell_) return shell_(t, p);
  for (const auto& s : specs_)
    if (tgcc::contains(s, t, p)) return true;
  return false;
}

double MovingRegion::min_feature_timescale() const {
  if (shell_) return shell_timescale_;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : specs_)
    best = std::min(best, tgcc::min_feature_timescale(s));
  if (!(best < std::numeric_limits<double>::infinity()))
    throw std::invalid_argument("empty region");
  return best;
}

DomainKind MovingRegion::kind() const {
  if (shell_) return shell_kind_;
  if (specs_.empty()) throw std::invalid_argument("empty region");
  return specs_.front().kind;
}

}  // namespace tgcc
