#include "tgcc/paperlib.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace tgcc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double t0_1d(double v, double a, double delta) {
  if (!(v >= 0) || !(a > 0 && a < 1) || !(delta >= 0))
    throw std::invalid_argument("t0_1d: parameters out of range");
  if (v < 1.0) return 2.0 * (1.0 - a) / (1.0 + v);
  if (v == 1.0) {
    if (delta > 0) return 1.0 - a;
    throw std::domain_error("t0_1d: formula undefined for v = 1, delta = 0");
  }
  if (delta == 0.0) return (1.0 - a) * (3.0 * v + 1.0) / (v * (1.0 + v));
  // Dimensionally inconsistent branch, evaluated as written; report only.
  return (2.0 * (1.0 - a) + v * delta) * (1.0 + v);
}

double precession_ccw(double alpha) {
  if (!(alpha > 0 && alpha < kTwoPi))
    throw std::invalid_argument("precession_ccw: alpha outside (0, 2pi)");
  return alpha / (2.0 * std::sin(alpha / 2.0));
}

double precession_cw(double alpha) {
  if (!(alpha > kPi && alpha < kTwoPi))
    throw std::invalid_argument("precession_cw: alpha outside (pi, 2pi)");
  return (alpha - kPi) / (2.0 * std::sin(alpha / 2.0));
}

namespace {
double bisect_increasing(double (*f)(double), double lo, double hi,
                         double target) {
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace

double invert_precession_ccw(double v) {
  if (!(v > 1.0))
    throw std::invalid_argument("invert_precession_ccw: v must exceed 1");
  return bisect_increasing(&precession_ccw, 1e-9, kTwoPi - 1e-12, v);
}

double invert_precession_cw(double v) {
  if (!(v > 0.0))
    throw std::invalid_argument("invert_precession_cw: v must be positive");
  return bisect_increasing(&precession_cw, kPi + 1e-12, kTwoPi - 1e-12, v);
}

std::pair<double, double> stop_and_go_interval(double a) {
  if (!(a > 0 && a < kTwoPi))
    throw std::invalid_argument("stop_and_go_interval: a outside (0, 2pi)");
  double s = 2.0 * std::sin(a / 2.0);
  return {(kPi - a) / s, (3.0 * a - kTwoPi) / (2.0 * s)};
}

std::vector<int> polygon_vertex_residues(int p, int q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
    throw std::invalid_argument("polygon_vertex_residues: need coprime p, q");
  std::vector<int> out;
  for (int k = 1; k <= 2 * q; ++k) out.push_back(k * p % (2 * q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> polygon_vertex_set(int p, int q) {
  std::vector<double> out;
  for (int r : polygon_vertex_residues(p, q)) out.push_back(r * kPi / q);
  return out;
}

SpeedThresholds speed_thresholds(DomainKind kind, double a, double eps) {
  SpeedThresholds t;
  switch (kind) {
    case DomainKind::UnitSphere:
      t.v0 = a / kTwoPi;
      t.v1 = (kTwoPi - a + 2.0 * eps) / (2.0 * eps);
      return t;
    case DomainKind::UnitDisk:
      t.v0 = (kTwoPi + 2.0 * eps - a) / (2.0 * eps);
      return t;
    case DomainKind::UnitSquare:
      t.v0 = (2.0 - a) / a;
      return t;
    default:
      throw std::domain_error("speed_thresholds: no thresholds in 1D");
  }
}

std::pair<double, double> asymptotic_bounds(DomainKind kind, double v,
                                            double a, double eps) {
  SpeedThresholds t = speed_thresholds(kind, a, eps);
  switch (kind) {
    case DomainKind::UnitSphere:
      if (v >= t.v1) {
        double lo = kPi - 2.0 * eps;
        return {lo, lo + 2.0 * (kPi + eps) / v};
      }
      if (v > 0 && v < t.v0) {
        double lo = (kPi - a) / v;
        return {lo, lo + kTwoPi};
      }
      throw std::domain_error("asymptotic_bounds: no closed-form bound");
    case DomainKind::UnitDisk:
      if (v >= t.v0) {
        double lo = 2.0 - 2.0 * eps;
        return {lo, lo + (kTwoPi + 2.0 * eps) / v};
      }
      throw std::domain_error("asymptotic_bounds: no closed-form bound");
    case DomainKind::UnitSquare:
      if (v >= t.v0) {
        double lo = std::max(std::sqrt(2.0) * (1.0 - 2.0 * a), 0.0);
        return {lo, lo + (4.0 + 2.0 * a) / v};
      }
      throw std::domain_error("asymptotic_bounds: no closed-form bound");
    default:
      throw std::domain_error("asymptotic_bounds: use t0_1d in 1D");
  }
}

// ---------- counterexamples ----------

namespace {

double circ_dist(double x, double period) {
  double d = pos_mod(x, period);
  return std::min(d, period - d);
}

// Window start positions relative to a co-moving frame in which the
// resonant bounce pattern is fixed: the bounce set is {rho + k gamma}.
// Picks rho maximizing the forward gap to the window start while keeping a
// fraction of backward margin for the finite dwell near the boundary.
double pick_rho(double gamma, long K, double period, double* out_clearance) {
  const int grid = 10000;
  std::vector<double> base;
  base.reserve(K + 1);
  for (long k = 0; k <= K; ++k) base.push_back(pos_mod(k * gamma, period));
  double best_score = -1.0, best_rho = 0.0, best_fwd = 0.0;
  for (int i = 0; i < grid; ++i) {
    double rho = period * i / grid;
    double fwd = period, back = period;
    for (double b : base) {
      double m = pos_mod(b + rho, period);
      fwd = std::min(fwd, m);
      back = std::min(back, period - m);
    }
    double score = std::min(fwd, 9.0 * back);
    if (score > best_score) {
      best_score = score;
      best_rho = rho;
      best_fwd = fwd;
    }
  }
  if (!(best_fwd > 1e-6))
    throw std::runtime_error(
        "make_counterexample: no phase with positive clearance found");
  *out_clearance = best_fwd;
  return best_rho;
}

RayParams disk_chord_ray(double theta0, double alpha) {
  double th1 = theta0 + alpha;
  RayParams r;
  r.family = RayFamily::DiskInterior;
  r.p[0] = 1.0;
  r.p[1] = theta0;
  r.p[2] = std::atan2(std::sin(th1) - std::sin(theta0),
                      std::cos(th1) - std::cos(theta0));
  return r;
}

void derive_eps0(Counterexample& c, double eps_init) {
  double eps = eps_init;
  for (int i = 0; i < 60; ++i) {
    HitResult h = first_hit_time(c.region_with(c.a0, eps),
                                 c.ray.to_state(c.geometry), c.horizon);
    if (h.status == HitStatus::None) {
      c.eps0 = eps;
      return;
    }
    eps *= 0.5;
  }
  throw std::runtime_error("make_counterexample: no hit-free eps found");
}

// Bounce events (t, perimeter position) of a square ray over the horizon.
std::vector<std::pair<double, double>> square_bounces(const RayState& state,
                                                      double horizon) {
  UnfoldState u = unfold_from_state(state);
  auto next_crossing = [](double z0, double c, double t) {
    if (c == 0.0) return kInf;
    double z = z0 + c * t;
    double nxt = c > 0 ? std::floor(z) + 1.0 : std::ceil(z) - 1.0;
    return (nxt - z0) / c;
  };
  std::vector<std::pair<double, double>> out;
  double t = 0.0;
  for (;;) {
    double tx = next_crossing(u.x0, u.c, t + 1e-13);
    double ty = next_crossing(u.y0, u.s, t + 1e-13);
    t = std::min(tx, ty);
    if (!(t < horizon)) return out;
    Point p = eval_square_unfolded(u, t);
    double px = p.x(), py = p.y();
    bool corner = std::abs(tx - ty) <= kCornerTol;
    if (corner || tx <= ty) px = px < 0.5 ? 0.0 : 1.0;
    if (corner || ty <= tx) py = py < 0.5 ? 0.0 : 1.0;
    out.emplace_back(t, boundary_param_inv(DomainKind::UnitSquare,
                                           Point::of2d(px, py)));
  }
}

}  // namespace

MovingRegion Counterexample::region() const { return region_with(a0, eps0); }

MovingRegion Counterexample::region_with(double a, double eps) const {
  MovingDomainSpec s;
  s.kind = geometry;
  s.mode = RegionMode::Interior;
  s.law = MotionLaw::ConstantSpeed;
  s.v = v;
  s.a = a;
  s.eps = eps;
  s.start = window_start0;
  return MovingRegion(s);
}

Counterexample make_counterexample(const CounterexampleRequest& req) {
  Counterexample c;
  c.kind = req.kind;
  c.p = req.p;
  c.q = req.q;
  c.n = req.n;
  c.num = req.num;
  c.den = req.den;
  c.horizon = req.horizon;

  switch (req.kind) {
    case ObstructionKind::SphereRationalSpeed: {
      if (req.q <= 0 || req.p <= 0)
        throw std::invalid_argument("sphere counterexample: v = p/q > 0");
      c.geometry = DomainKind::UnitSphere;
      c.v = static_cast<double>(req.p) / req.q;
      // Polar circle: equator crossings every pi, longitudes alternating by
      // pi, so relative window gaps advance by pi (1 - v) each crossing.
      double gamma = kPi * (1.0 - c.v);
      long K = static_cast<long>(req.horizon / kPi) + 1;
      double rho = pick_rho(gamma, K, kTwoPi, &c.clearance);
      c.a0 = c.clearance / 2.0;
      c.ray.family = RayFamily::SphereCircle;
      c.ray.p[0] = rho;  // node longitude
      c.ray.p[1] = kPi / 2;
      c.ray.p[2] = 0.0;
      c.ray.i0 = 1;
      derive_eps0(c, 0.5);
      break;
    }
    case ObstructionKind::DiskPolygonResonance: {
      if (req.n < 2 || req.p <= 0 || req.q <= 0)
        throw std::invalid_argument("disk polygon counterexample: bad input");
      c.geometry = DomainKind::UnitDisk;
      c.alpha = kTwoPi / req.n;
      c.v = kPi * req.p / (req.q * std::sin(kPi / req.n));
      double L = 2.0 * std::sin(c.alpha / 2.0);
      double gamma = c.alpha - c.v * L;
      long K = static_cast<long>(req.horizon / L) + 1;
      double rho = pick_rho(gamma, K, kTwoPi, &c.clearance);
      c.a0 = c.clearance / 2.0;
      c.ray = disk_chord_ray(rho, c.alpha);
      derive_eps0(c, std::min(0.5, (1.0 - std::cos(c.alpha / 2.0)) / 2.0));
      break;
    }
    case ObstructionKind::DiskPrecessionCcw:
    case ObstructionKind::DiskPrecessionCw: {
      c.geometry = DomainKind::UnitDisk;
      c.v = req.v_target;
      c.alpha = req.kind == ObstructionKind::DiskPrecessionCcw
                    ? invert_precession_ccw(c.v)
                    : invert_precession_cw(c.v);
      double L = 2.0 * std::sin(c.alpha / 2.0);
      double gamma = c.alpha - c.v * L;
      long K = static_cast<long>(req.horizon / L) + 1;
      double rho = pick_rho(gamma, K, kTwoPi, &c.clearance);
      c.a0 = c.clearance / 2.0;
      c.ray = disk_chord_ray(rho, c.alpha);
      double depth = 1.0 - std::abs(std::cos(c.alpha / 2.0));
      derive_eps0(c, std::min(0.5, depth / 2.0));
      break;
    }
    case ObstructionKind::SquareRationalSlope: {
      if (req.den <= 0 || req.num <= 0 || (req.p == 0 && req.q == 0))
        throw std::invalid_argument("square counterexample: bad input");
      c.geometry = DomainKind::UnitSquare;
      double root = std::sqrt(double(req.p) * req.p + double(req.q) * req.q);
      c.v = root * req.num / req.den;
      double best_score = -1.0;
      for (int jy = 1; jy <= 16; ++jy) {
        double y0 = jy / 17.0;
        RayParams ray;
        ray.family = RayFamily::SquareRational;
        ray.p[0] = 0.0;
        ray.p[1] = y0;
        ray.i0 = req.p;
        ray.i1 = req.q;
        auto bounces =
            square_bounces(ray.to_state(DomainKind::UnitSquare), req.horizon);
        const int grid = 10000;
        for (int i = 0; i < grid; ++i) {
          double c0 = 4.0 * i / grid;
          double cl = 4.0;
          for (const auto& [tb, sb] : bounces)
            cl = std::min(cl, circ_dist(c0 + c.v * tb - sb, 4.0));
          // Axis-parallel rays also need vertical clearance from the walls.
          if (req.p == 0) cl = std::min(cl, std::min(y0, 1.0 - y0));
          if (req.q == 0) cl = std::min(cl, std::min(y0, 1.0 - y0));
          if (cl > best_score) {
            best_score = cl;
            c.ray = ray;
            c.window_start0 = c0;
            c.clearance = cl;
          }
        }
      }
      if (!(c.clearance > 1e-6))
        throw std::runtime_error(
            "make_counterexample: no phase with positive clearance found");
      c.a0 = c.clearance / 2.0;
      c.eps0 = 0.0;
      break;
    }
  }

  HitResult check = first_hit_time(c.region(), c.ray.to_state(c.geometry),
                                   c.horizon);
  if (check.status != HitStatus::None)
    throw std::runtime_error("make_counterexample: replay verification failed");
  return c;
}

void save_counterexample(const Counterexample& c, std::ostream& os) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "kind %d\ngeometry %d\np %d\nq %d\nn %d\nnum %d\nden %d\n"
                "v %.17g\nalpha %.17g\nfamily %d\nrp0 %.17g\nrp1 %.17g\n"
                "rp2 %.17g\nrp3 %.17g\nri0 %d\nri1 %d\nwindow_start0 %.17g\n"
                "a0 %.17g\neps0 %.17g\nclearance %.17g\nhorizon %.17g\n",
                int(c.kind), int(c.geometry), c.p, c.q, c.n, c.num, c.den, c.v,
                c.alpha, int(c.ray.family), c.ray.p[0], c.ray.p[1], c.ray.p[2],
                c.ray.p[3], c.ray.i0, c.ray.i1, c.window_start0, c.a0, c.eps0,
                c.clearance, c.horizon);
  os << buf;
}

Counterexample load_counterexample(std::istream& is) {
  std::map<std::string, double> kv;
  std::string key;
  double val;
  while (is >> key >> val) kv[key] = val;
  auto need = [&kv](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end())
      throw std::runtime_error("load_counterexample: missing key " + k);
    return it->second;
  };
  Counterexample c;
  c.kind = ObstructionKind(int(need("kind")));
  c.geometry = DomainKind(int(need("geometry")));
  c.p = int(need("p"));
  c.q = int(need("q"));
  c.n = int(need("n"));
  c.num = int(need("num"));
  c.den = int(need("den"));
  c.v = need("v");
  c.alpha = need("alpha");
  c.ray.family = RayFamily(int(need("family")));
  c.ray.p[0] = need("rp0");
  c.ray.p[1] = need("rp1");
  c.ray.p[2] = need("rp2");
  c.ray.p[3] = need("rp3");
  c.ray.i0 = int(need("ri0"));
  c.ray.i1 = int(need("ri1"));
  c.window_start0 = need("window_start0");
  c.a0 = need("a0");
  c.eps0 = need("eps0");
  c.clearance = need("clearance");
  c.horizon = need("horizon");
  return c;
}

}  // namespace tgcc
