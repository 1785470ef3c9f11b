#ifndef TGCC_GEOMETRY_HPP
#define TGCC_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>

namespace tgcc {

/// The four model domains. Interval01 is (0,1); UnitDisk is {x^2+y^2<1};
/// UnitSquare is (0,1)^2; UnitSphere is S^2 in R^3 with the induced metric.
enum class DomainKind { Interval01, UnitDisk, UnitSquare, UnitSphere };

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Incidence with |d.n| at or below this is glancing and must be routed
/// to gliding handling; below the chord-length resolution of the event solver.
inline constexpr double kGlancingTol = 1e-9;

/// Square corner hits within this distance of a vertex retroreflect.
inline constexpr double kCornerTol = 1e-9;

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::sqrt(x * x + y * y); }
  Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }
};

/// A point of a model domain. Interpretation depends on the geometry:
/// 1D uses c[0]; planar domains use (c[0], c[1]); sphere points are unit
/// 3-vectors (renormalized after every update to dodge pole singularities).
struct Point {
  double c[3] = {0, 0, 0};

  static Point of1d(double x) { return Point{{x, 0, 0}}; }
  static Point of2d(double x, double y) { return Point{{x, y, 0}}; }
  static Point of3d(double x, double y, double z) { return Point{{x, y, z}}; }
  static Point sphere_angles(double theta, double phi) {
    return Point{{std::cos(phi) * std::cos(theta),
                  std::cos(phi) * std::sin(theta), std::sin(phi)}};
  }

  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double z() const { return c[2]; }
  Vec2 xy() const { return {c[0], c[1]}; }
  Vec3 xyz() const { return {c[0], c[1], c[2]}; }

  /// Longitude in [0, 2pi).
  double theta() const {
    double t = std::atan2(c[1], c[0]);
    return t < 0 ? t + kTwoPi : t;
  }
  /// Latitude in [-pi/2, pi/2] (sphere points only).
  double phi() const { return std::asin(std::max(-1.0, std::min(1.0, c[2]))); }
};

/// x mod m, result in [0, m).
inline double pos_mod(double x, double m) {
  double r = std::fmod(x, m);
  return r < 0 ? r + m : r;
}

/// The 2-periodic triangle map: z mod 2 reduced into [0,1], even about
/// every integer. Used both by the square unfolding and the 1D interval.
inline double fold(double z) {
  double zh = pos_mod(z, 2.0);
  return zh <= 1.0 ? zh : 2.0 - zh;
}

/// Derivative sign of fold at z (+1 on ascending branches, -1 on
/// descending); at the fold points themselves returns the right limit.
inline double fold_sign(double z) {
  double zh = pos_mod(z, 2.0);
  return zh < 1.0 ? 1.0 : -1.0;
}

inline bool is_glancing(Vec2 dir, Vec2 outward_normal) {
  return std::abs(dir.dot(outward_normal)) <= kGlancingTol;
}

/// Specular reflection d' = d - 2 (d.n) n. Requires transversal incidence;
/// glancing rays must be routed to gliding handling by the caller.
inline Vec2 reflect_specular(Vec2 dir, Vec2 outward_normal) {
  if (is_glancing(dir, outward_normal))
    throw std::domain_error("reflect_specular: glancing incidence");
  double dn = dir.dot(outward_normal);
  return dir - outward_normal * (2.0 * dn);
}

/// Retroreflection at a right-angle corner of the square: the composition
/// of the two edge reflections, i.e. -d.
inline Vec2 corner_reflect(Vec2 dir) { return {-dir.x, -dir.y}; }

inline double square_perimeter(DomainKind kind) {
  switch (kind) {
    case DomainKind::UnitDisk: return kTwoPi;
    case DomainKind::UnitSquare: return 4.0;
    default: throw std::domain_error("perimeter: domain has no closed boundary curve");
  }
}

/// Arclength parametrization of the boundary: interval endpoints {0,1};
/// disk angle in [0,2pi); square perimeter in [0,4) anticlockwise from the
/// origin. The sphere has no boundary.
Point boundary_param(DomainKind kind, double s);

/// Inverse of boundary_param (mod perimeter). The point must lie on the
/// boundary of the domain.
double boundary_param_inv(DomainKind kind, const Point& p);

/// Outward unit normal of the planar domains at boundary arclength s.
/// At square corners (within kCornerTol) there is no single normal; this
/// returns the normal of the edge s belongs to by half-open convention.
Vec2 outward_normal(DomainKind kind, double s);

}  // namespace tgcc

#endif
