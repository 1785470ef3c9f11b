#include "tgcc/rayflow.hpp"

#include <limits>

namespace tgcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec3 as_vec3(Vec2 v) { return {v.x, v.y, 0}; }

BounceEvent interval_bounce(const RayState& state) {
  BounceEvent e;
  double d = state.dir.x >= 0 ? 1.0 : -1.0;
  double wall = d > 0 ? 1.0 : 0.0;
  e.t = state.t + (d > 0 ? 1.0 - state.pos.x() : state.pos.x());
  e.point = Point::of1d(wall);
  e.s = wall;
  e.dir_in = {d, 0};
  e.dir_out = {-d, 0};
  e.transversal = true;
  return e;
}

BounceEvent disk_bounce(const RayState& state) {
  Vec2 p = state.pos.xy();
  Vec2 d2{state.dir.x, state.dir.y};
  double pd = p.dot(d2);
  double disc = pd * pd + 1.0 - p.dot(p);
  double s_plus = -pd + std::sqrt(std::max(disc, 0.0));
  Vec2 hit = p + d2 * s_plus;
  hit = hit.normalized();
  BounceEvent e;
  e.t = state.t + s_plus;
  e.point = Point::of2d(hit.x, hit.y);
  e.s = e.point.theta();
  e.dir_in = d2;
  e.transversal = !is_glancing(d2, hit);
  e.dir_out = e.transversal ? reflect_specular(d2, hit) : d2;
  return e;
}

BounceEvent square_bounce(const RayState& state) {
  double x = state.pos.x(), y = state.pos.y();
  double c = state.dir.x, s = state.dir.y;
  double dtx = kInf, dty = kInf;
  if (c > 0) dtx = (1.0 - x) / c;
  else if (c < 0) dtx = -x / c;
  if (s > 0) dty = (1.0 - y) / s;
  else if (s < 0) dty = -y / s;
  double dt = std::min(dtx, dty);
  bool hit_x = dtx <= dty;
  bool corner = std::abs(dtx - dty) <= kCornerTol;

  BounceEvent e;
  e.t = state.t + dt;
  double hx = x + dt * c, hy = y + dt * s;
  if (corner || hit_x) hx = c > 0 ? 1.0 : 0.0;
  if (corner || !hit_x) hy = s > 0 ? 1.0 : 0.0;
  hx = std::min(1.0, std::max(0.0, hx));
  hy = std::min(1.0, std::max(0.0, hy));
  e.point = Point::of2d(hx, hy);
  e.s = boundary_param_inv(DomainKind::UnitSquare, e.point);
  e.dir_in = {c, s};
  e.corner = corner;
  if (corner) {
    e.transversal = true;
    e.dir_out = corner_reflect(e.dir_in);
  } else {
    Vec2 n = hit_x ? Vec2{c > 0 ? 1.0 : -1.0, 0.0}
                   : Vec2{0.0, s > 0 ? 1.0 : -1.0};
    e.transversal = !is_glancing(e.dir_in, n);
    e.dir_out = e.transversal ? reflect_specular(e.dir_in, n) : e.dir_in;
  }
  return e;
}

}  // namespace

BounceEvent next_bounce(const RayState& state) {
  if (state.mode != RayMode::Interior)
    throw std::domain_error("next_bounce: interior mode only");
  switch (state.kind) {
    case DomainKind::Interval01: return interval_bounce(state);
    case DomainKind::UnitDisk: return disk_bounce(state);
    case DomainKind::UnitSquare: return square_bounce(state);
    case DomainKind::UnitSphere:
      throw std::domain_error("next_bounce: sphere is boundaryless");
  }
  throw std::logic_error("unreachable");
}

Trace trace(const RayState& state, double t_max) {
  if (!(t_max > state.t)) throw std::invalid_argument("trace: t_max <= t");
  Trace out;
  if (state.mode != RayMode::Interior) {
    int orient = state.mode == RayMode::GlidingCcw ? 1 : -1;
    double s0 = boundary_param_inv(state.kind, state.pos);
    RayState fin = state;
    fin.pos = boundary_param(
        state.kind, glide_arclength(state.kind, s0, orient, state.t, t_max));
    fin.t = t_max;
    out.final_state = fin;
    return out;
  }
  RayState cur = state;
  long bounces = 0;
  for (;;) {
    BounceEvent e = next_bounce(cur);
    if (e.t > t_max) break;
    out.events.push_back(e);
    if (!e.transversal && !e.corner) {
      // Glancing contact: the interior flow does not continue past it.
      cur.pos = e.point;
      cur.t = e.t;
      out.final_state = cur;
      return out;
    }
    cur.pos = e.point;
    cur.dir = as_vec3(e.dir_out);
    cur.t = e.t;
    if (++bounces > kBounceOverflow)
      throw std::runtime_error("trace: bounce overflow");
  }
  double dt = t_max - cur.t;
  if (cur.kind == DomainKind::Interval01) {
    cur.pos = Point::of1d(cur.pos.x() + cur.dir.x * dt);
  } else {
    cur.pos = Point::of2d(cur.pos.x() + cur.dir.x * dt,
                          cur.pos.y() + cur.dir.y * dt);
  }
  cur.t = t_max;
  out.final_state = cur;
  return out;
}

Point eval_square_unfolded(const UnfoldState& u, double t) {
  double dt = t - u.t0;
  return Point::of2d(fold(u.x0 + dt * u.c), fold(u.y0 + dt * u.s));
}

Point eval_disk_chord(const DiskChordRay& r, double t) {
  if (r.alpha == 0.0) {
    double th = r.theta0 + r.orientation * (t - r.t0);
    return Point::of2d(std::cos(th), std::sin(th));
  }
  double L = r.edge_time();
  double raw = (t - r.t0) / L;
  double k = std::floor(raw);
  double thk = r.theta0 + k * r.alpha;
  double thk1 = thk + r.alpha;
  double f = raw - k;
  return Point::of2d(std::cos(thk) + (std::cos(thk1) - std::cos(thk)) * f,
                     std::sin(thk) + (std::sin(thk1) - std::sin(thk)) * f);
}

namespace {
void great_circle_basis(const GreatCircleRay& r, Vec3& a, Vec3& b) {
  double sn = std::sin(r.node), cn = std::cos(r.node);
  double si = std::sin(r.inclination), ci = std::cos(r.inclination);
  a = {cn, sn, 0};
  b = {-sn * ci * r.orientation, cn * ci * r.orientation, si};
}
}  // namespace

Point eval_great_circle(const GreatCircleRay& r, double t) {
  Vec3 a, b;
  great_circle_basis(r, a, b);
  double tau = t + r.phase;
  Vec3 p = (a * std::cos(tau) + b * std::sin(tau)).normalized();
  return Point::of3d(p.x, p.y, p.z);
}

double glide_arclength(DomainKind kind, double s0, int orientation, double t0,
                       double t) {
  return pos_mod(s0 + orientation * (t - t0), square_perimeter(kind));
}

DiskChordRay disk_chord_from_state(const RayState& state) {
  Vec2 p = state.pos.xy();
  Vec2 d{state.dir.x, state.dir.y};
  double pd = p.dot(d);
  double root = std::sqrt(std::max(pd * pd + 1.0 - p.dot(p), 0.0));
  Vec2 p0 = (p + d * (-pd - root)).normalized();
  Vec2 p1 = (p + d * (-pd + root)).normalized();
  DiskChordRay r;
  r.theta0 = std::atan2(p0.y, p0.x);
  double th1 = std::atan2(p1.y, p1.x);
  r.alpha = pos_mod(th1 - r.theta0, kTwoPi);
  r.t0 = state.t + (-pd - root);
  return r;
}

UnfoldState unfold_from_state(const RayState& state) {
  UnfoldState u;
  u.x0 = state.pos.x();
  u.y0 = state.pos.y();
  u.c = state.dir.x;
  u.s = state.dir.y;
  u.t0 = state.t;
  return u;
}

GreatCircleRay great_circle_from_state(const RayState& state) {
  Vec3 p = state.pos.xyz().normalized();
  Vec3 d = state.dir.normalized();
  Vec3 n = p.cross(d).normalized();
  GreatCircleRay r;
  double horiz = std::sqrt(std::max(n.x * n.x + n.y * n.y, 0.0));
  if (horiz < 1e-12) {
    // Equatorial circle: node degenerate, orientation carries the direction.
    r.node = 0;
    r.inclination = 0;
    r.orientation = n.z >= 0 ? 1 : -1;
    double th = std::atan2(p.y, p.x);
    r.phase = r.orientation * th - state.t;
    return r;
  }
  // Ascending node u = z x n / |z x n|; traversal ascends there for any n.
  double ux = -n.y / horiz, uy = n.x / horiz;
  r.node = std::atan2(uy, ux);
  r.inclination = std::atan2(horiz, std::abs(n.z));
  r.orientation = n.z >= 0 ? 1 : -1;
  Vec3 a, b;
  great_circle_basis(r, a, b);
  double tau = std::atan2(p.dot(b), p.dot(a));
  r.phase = tau - state.t;
  return r;
}

PathEval::PathEval(const RayState& state)
    : kind_(state.kind), mode_(state.mode) {
  if (mode_ != RayMode::Interior) {
    s0_ = boundary_param_inv(kind_, state.pos);
    orient_ = mode_ == RayMode::GlidingCcw ? 1 : -1;
    tref_ = state.t;
    return;
  }
  switch (kind_) {
    case DomainKind::Interval01:
      x0_ = state.pos.x();
      d1_ = state.dir.x >= 0 ? 1.0 : -1.0;
      tref_ = state.t;
      break;
    case DomainKind::UnitDisk:
      chord_ = disk_chord_from_state(state);
      break;
    case DomainKind::UnitSquare:
      unfold_ = unfold_from_state(state);
      break;
    case DomainKind::UnitSphere: {
      GreatCircleRay r = great_circle_from_state(state);
      great_circle_basis(r, axis_a_, axis_b_);
      phase_ = r.phase;
      break;
    }
  }
}

Point PathEval::at(double t) {
  if (mode_ != RayMode::Interior)
    return boundary_param(kind_,
                          glide_arclength(kind_, s0_, orient_, tref_, t));
  switch (kind_) {
    case DomainKind::Interval01:
      return Point::of1d(fold(x0_ + d1_ * (t - tref_)));
    case DomainKind::UnitDisk: {
      double L = chord_.edge_time();
      double raw = (t - chord_.t0) / L;
      long k = static_cast<long>(std::floor(raw));
      if (!cache_valid_ || k != cached_k_) {
        if (cache_valid_ && k == cached_k_ + 1) {
          pk_ = pk1_;
          double th = chord_.theta0 + (k + 1) * chord_.alpha;
          pk1_ = {std::cos(th), std::sin(th)};
        } else {
          double th = chord_.theta0 + k * chord_.alpha;
          pk_ = {std::cos(th), std::sin(th)};
          pk1_ = {std::cos(th + chord_.alpha), std::sin(th + chord_.alpha)};
        }
        cached_k_ = k;
        cache_valid_ = true;
      }
      double f = raw - static_cast<double>(k);
      return Point::of2d(pk_.x + (pk1_.x - pk_.x) * f,
                         pk_.y + (pk1_.y - pk_.y) * f);
    }
    case DomainKind::UnitSquare:
      return eval_square_unfolded(unfold_, t);
    case DomainKind::UnitSphere: {
      double tau = t + phase_;
      Vec3 p = (axis_a_ * std::cos(tau) + axis_b_ * std::sin(tau)).normalized();
      return Point::of3d(p.x, p.y, p.z);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace tgcc
