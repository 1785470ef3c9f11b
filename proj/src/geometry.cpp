#include "tgcc/geometry.hpp"

namespace tgcc {

Point boundary_param(DomainKind kind, double s) {
  switch (kind) {
    case DomainKind::Interval01:
      if (s != 0.0 && s != 1.0)
        throw std::domain_error("boundary_param: interval boundary is {0,1}");
      return Point::of1d(s);
    case DomainKind::UnitDisk: {
      double t = pos_mod(s, kTwoPi);
      return Point::of2d(std::cos(t), std::sin(t));
    }
    case DomainKind::UnitSquare: {
      double t = pos_mod(s, 4.0);
      if (t < 1.0) return Point::of2d(t, 0.0);
      if (t < 2.0) return Point::of2d(1.0, t - 1.0);
      if (t < 3.0) return Point::of2d(3.0 - t, 1.0);
      return Point::of2d(0.0, 4.0 - t);
    }
    case DomainKind::UnitSphere:
      throw std::domain_error("boundary_param: sphere has no boundary");
  }
  throw std::logic_error("unreachable");
}

double boundary_param_inv(DomainKind kind, const Point& p) {
  switch (kind) {
    case DomainKind::Interval01:
      return p.x() < 0.5 ? 0.0 : 1.0;
    case DomainKind::UnitDisk:
      return p.theta();
    case DomainKind::UnitSquare: {
      double x = p.x(), y = p.y();
      // Assign by nearest edge; corners resolve by anticlockwise order.
      double d_bottom = y, d_right = 1.0 - x, d_top = 1.0 - y, d_left = x;
      double m = std::min(std::min(d_bottom, d_right), std::min(d_top, d_left));
      if (m == d_bottom) return pos_mod(x, 4.0);
      if (m == d_right) return 1.0 + y;
      if (m == d_top) return 3.0 - x;
      return pos_mod(4.0 - y, 4.0);
    }
    case DomainKind::UnitSphere:
      throw std::domain_error("boundary_param_inv: sphere has no boundary");
  }
  throw std::logic_error("unreachable");
}

Vec2 outward_normal(DomainKind kind, double s) {
  switch (kind) {
    case DomainKind::UnitDisk: {
      double t = pos_mod(s, kTwoPi);
      return {std::cos(t), std::sin(t)};
    }
    case DomainKind::UnitSquare: {
      double t = pos_mod(s, 4.0);
      if (t < 1.0) return {0.0, -1.0};
      if (t < 2.0) return {1.0, 0.0};
      if (t < 3.0) return {0.0, 1.0};
      return {-1.0, 0.0};
    }
    default:
      throw std::domain_error("outward_normal: planar domains only");
  }
}

}  // namespace tgcc
