#include "tgcc/gcc.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>

namespace tgcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBisectTol = 1e-10;
constexpr double kHitAtZero = 1e-12;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

RayState RayParams::to_state(DomainKind kind) const {
  switch (family) {
    case RayFamily::Interval:
      return RayState::interval(std::min(1.0, std::max(0.0, p[0])),
                                i0 >= 0 ? 1.0 : -1.0);
    case RayFamily::DiskInterior: {
      double r = std::min(1.0, std::max(0.0, p[0]));
      return RayState::planar(DomainKind::UnitDisk, r * std::cos(p[1]),
                              r * std::sin(p[1]), p[2]);
    }
    case RayFamily::SquareInterior:
      return RayState::planar(DomainKind::UnitSquare,
                              std::min(1.0, std::max(0.0, p[0])),
                              std::min(1.0, std::max(0.0, p[1])), p[2]);
    case RayFamily::SphereCircle: {
      GreatCircleRay r;
      r.node = p[0];
      r.inclination = std::min(kPi / 2, std::max(0.0, p[1]));
      r.phase = p[2];
      r.orientation = i0 >= 0 ? 1 : -1;
      Point pos = eval_great_circle(r, 0.0);
      Point ahead = eval_great_circle(r, 1e-6);
      Vec3 d = (ahead.xyz() - pos.xyz()).normalized();
      RayState s;
      s.kind = DomainKind::UnitSphere;
      s.pos = pos;
      s.dir = d;
      return s;
    }
    case RayFamily::Gliding:
      return RayState::gliding(kind, p[0], i0 >= 0);
    case RayFamily::DiskPolygon: {
      DiskChordRay c;
      c.alpha = kTwoPi / i0;
      c.theta0 = p[0];
      double L = c.edge_time();
      c.t0 = -pos_mod(p[1], 1.0) * L;
      Point pos = eval_disk_chord(c, 0.0);
      double th1 = c.theta0 + c.alpha;
      Vec2 d{(std::cos(th1) - std::cos(c.theta0)) / L,
             (std::sin(th1) - std::sin(c.theta0)) / L};
      RayState s;
      s.kind = DomainKind::UnitDisk;
      s.pos = pos;
      s.dir = {d.x, d.y, 0};
      return s;
    }
    case RayFamily::SquareRational: {
      double pp = i0, qq = i1;
      double n = std::sqrt(pp * pp + qq * qq);
      RayState s;
      s.kind = DomainKind::UnitSquare;
      s.pos = Point::of2d(std::min(1.0, std::max(0.0, p[0])),
                          std::min(1.0, std::max(0.0, p[1])));
      s.dir = {qq / n, pp / n, 0};
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

std::string RayParams::label() const {
  switch (family) {
    case RayFamily::Interval:
      return "interval x0=" + fmt("%.9g", p[0]) + " dir=" +
             (i0 >= 0 ? std::string("+1") : std::string("-1"));
    case RayFamily::DiskInterior:
      return "disk r=" + fmt("%.9g", p[0]) + " pos=" + fmt("%.9g", p[1]) +
             " dir=" + fmt("%.9g", p[2]);
    case RayFamily::SquareInterior:
      return "square x=" + fmt("%.9g", p[0]) + " y=" + fmt("%.9g", p[1]) +
             " dir=" + fmt("%.9g", p[2]);
    case RayFamily::SphereCircle:
      return "sphere node=" + fmt("%.9g", p[0]) + " incl=" + fmt("%.9g", p[1]) +
             " phase=" + fmt("%.9g", p[2]) + " orient=" +
             (i0 >= 0 ? std::string("+1") : std::string("-1"));
    case RayFamily::Gliding:
      return "gliding s0=" + fmt("%.9g", p[0]) + " orient=" +
             (i0 >= 0 ? std::string("ccw") : std::string("cw"));
    case RayFamily::DiskPolygon:
      return "polygon n=" + std::to_string(i0) + " theta0=" + fmt("%.9g", p[0]) +
             " phase=" + fmt("%.9g", p[1]);
    case RayFamily::SquareRational:
      return "slope p=" + std::to_string(i0) + " q=" + std::to_string(i1) +
             " x=" + fmt("%.9g", p[0]) + " y=" + fmt("%.9g", p[1]);
  }
  return "";
}

namespace {

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

}  // namespace

RaySampling make_sampling(DomainKind kind, unsigned long long seed) {
  RaySampling s;
  s.kind = kind;
  s.seed = seed;
  std::mt19937_64 rng(seed);
  auto jitter = [&rng](double spacing) {
    return (std::uniform_real_distribution<double>(-1.0, 1.0)(rng)) * 0.1 *
           spacing;
  };
  auto push = [&s](RayFamily f, double a = 0, double b = 0, double c = 0,
                   int i0 = 0, int i1 = 0) {
    RayParams r;
    r.family = f;
    r.p[0] = a;
    r.p[1] = b;
    r.p[2] = c;
    r.i0 = i0;
    r.i1 = i1;
    s.rays.push_back(r);
  };

  switch (kind) {
    case DomainKind::Interval01: {
      for (int d = 0; d < 2; ++d)
        for (int i = 0; i < 512; ++i)
          push(RayFamily::Interval, (i + 0.5) / 512.0, 0, 0, d == 0 ? 1 : -1);
      break;
    }
    case DomainKind::UnitDisk: {
      for (int jr = 0; jr < 16; ++jr) {
        double r = (jr + 0.5) / 16.0 + jitter(1.0 / 16.0);
        for (int jt = 0; jt < 16; ++jt) {
          double th = kTwoPi * (jt + 0.5) / 16.0 + jitter(kTwoPi / 16.0);
          for (int jd = 0; jd < 256; ++jd) {
            double dir = kTwoPi * (jd + 0.5) / 256.0 + jitter(kTwoPi / 256.0);
            push(RayFamily::DiskInterior, r, th, dir);
          }
        }
      }
      for (int o = 0; o < 2; ++o)
        for (int i = 0; i < 64; ++i)
          push(RayFamily::Gliding, kTwoPi * i / 64.0, 0, 0, o == 0 ? 1 : -1);
      for (int n = 2; n <= 64; ++n)
        for (int jt = 0; jt < 16; ++jt)
          for (int jp = 0; jp < 8; ++jp)
            push(RayFamily::DiskPolygon, kTwoPi * (jt + 0.5) / 16.0,
                 (jp + 0.5) / 8.0, 0, n);
      break;
    }
    case DomainKind::UnitSquare: {
      for (int jx = 0; jx < 23; ++jx)
        for (int jy = 0; jy < 23; ++jy) {
          double x = (jx + 0.5) / 23.0 + jitter(1.0 / 23.0);
          double y = (jy + 0.5) / 23.0 + jitter(1.0 / 23.0);
          for (int jd = 0; jd < 256; ++jd)
            push(RayFamily::SquareInterior, x, y,
                 kTwoPi * (jd + 0.5) / 256.0 + jitter(kTwoPi / 256.0));
        }
      for (int o = 0; o < 2; ++o)
        for (int i = 0; i < 64; ++i)
          push(RayFamily::Gliding, 4.0 * i / 64.0, 0, 0, o == 0 ? 1 : -1);
      // Rational slopes incl. axis-parallel; four sign combinations each.
      for (int q = 0; q <= 12; ++q)
        for (int pp = 0; pp <= 12; ++pp) {
          if (pp == 0 && q == 0) continue;
          if (gcd_int(std::max(pp, q), std::min(pp, q)) != 1) continue;
          for (int sp = 0; sp < 2; ++sp)
            for (int sq = 0; sq < 2; ++sq) {
              if (pp == 0 && sp == 1) continue;
              if (q == 0 && sq == 1) continue;
              for (int k = 0; k < 8; ++k) {
                double x = (k + 0.37) / 8.0, y = pos_mod(0.31 + 0.41 * k, 1.0);
                push(RayFamily::SquareRational, x, y, 0,
                     sp == 0 ? pp : -pp, sq == 0 ? q : -q);
              }
            }
        }
      break;
    }
    case DomainKind::UnitSphere: {
      for (int jn = 0; jn < 64; ++jn) {
        double node = kTwoPi * (jn + 0.5) / 64.0 + jitter(kTwoPi / 64.0);
        for (int ji = 0; ji < 64; ++ji) {
          double incl = (kPi / 2) * (ji + 0.5) / 64.0 + jitter(kPi / 128.0);
          for (int jp = 0; jp < 32; ++jp) {
            double phase = kTwoPi * (jp + 0.5) / 32.0 + jitter(kTwoPi / 32.0);
            push(RayFamily::SphereCircle, node, incl, phase, 1);
            push(RayFamily::SphereCircle, node, incl, phase, -1);
          }
        }
      }
      // Equatorial family: inclination exactly zero, both directions.
      for (int o = 0; o < 2; ++o)
        for (int jp = 0; jp < 128; ++jp)
          push(RayFamily::SphereCircle, 0.0, 0.0, kTwoPi * jp / 128.0,
               o == 0 ? 1 : -1);
      break;
    }
  }
  return s;
}

namespace {

// ---------- exact 1D first hit ----------

bool exact_1d_applicable(const MovingRegion& region, const RayState& ray) {
  if (region.is_shell()) return false;
  if (ray.mode != RayMode::Interior) return false;
  for (const auto& sp : region.specs()) {
    if (sp.kind != DomainKind::Interval01) return false;
    if (sp.mode != RegionMode::Interior) return false;
    if (sp.law == MotionLaw::Custom) return false;
  }
  return !region.specs().empty();
}

void spec_breakpoints_1d(const MovingDomainSpec& sp, double horizon,
                         std::vector<double>& ts) {
  if (sp.law == MotionLaw::Reflecting1D && sp.v > 0) {
    double travel = (1.0 - sp.a) / sp.v;
    double period = 2.0 * (travel + sp.delta);
    double marks[4] = {travel, travel + sp.delta, 2.0 * travel + sp.delta,
                       period};
    for (double base = 0.0; base < horizon; base += period)
      for (double m : marks)
        if (base + m < horizon) ts.push_back(base + m);
  } else if (sp.law == MotionLaw::StopAndGo) {
    if (sp.t_start > 0 && sp.t_start < horizon) ts.push_back(sp.t_start);
  }
}

HitResult first_hit_1d_exact(const MovingRegion& region, const RayState& ray,
                             double horizon) {
  double x0 = ray.pos.x();
  double d = ray.dir.x >= 0 ? 1.0 : -1.0;

  std::vector<double> ts{0.0, horizon};
  // Ray kinks: x0 + d t crosses an integer every 1.0 time units.
  double first = d > 0 ? 1.0 - x0 : x0;
  for (double t = first; t < horizon; t += 1.0) ts.push_back(t);
  for (const auto& sp : region.specs()) spec_breakpoints_1d(sp, horizon, ts);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-15; }),
           ts.end());

  double best = kInf;
  for (size_t i = 0; i + 1 < ts.size() && ts[i] < best; ++i) {
    double ta = ts[i], tb = ts[i + 1];
    if (tb - ta < 1e-15) continue;
    double tm = 0.5 * (ta + tb);
    double slope = fold_sign(x0 + d * tm) * d;
    double xa = fold(x0 + d * ta);
    for (const auto& sp : region.specs()) {
      double la = sp.window_start(ta), lb = sp.window_start(tb);
      double ha = la + sp.a, hb = lb + sp.a;
      double xb = xa + slope * (tb - ta);
      // Relative openness at the walls: ignore a window edge resting on it.
      bool skip_lo = la <= kSeamGuard && lb <= kSeamGuard;
      bool skip_hi = ha >= 1.0 - kSeamGuard && hb >= 1.0 - kSeamGuard;
      double t_lo = ta, t_hi = tb;
      bool empty = false;
      auto restrict_pos = [&](double fa, double fb) {
        if (fa <= 0 && fb <= 0) { empty = true; return; }
        if (fa <= 0 && fb > 0) t_lo = std::max(t_lo, ta + (tb - ta) * (-fa) / (fb - fa));
        else if (fa > 0 && fb <= 0) t_hi = std::min(t_hi, ta + (tb - ta) * fa / (fa - fb));
      };
      if (!skip_lo) restrict_pos(xa - la, xb - lb);
      if (!empty && !skip_hi) restrict_pos(ha - xa, hb - xb);
      if (!empty && t_lo < t_hi) best = std::min(best, t_lo);
    }
  }
  if (best < horizon) return {HitStatus::Hit, best <= 0 ? kHitAtZero : best};
  return {HitStatus::None, 0};
}

// ---------- generic bracketing ----------

HitResult first_hit_bracketing(const MovingRegion& region, const RayState& ray,
                               double horizon) {
  double tau = region.min_feature_timescale();
  PathEval path(ray);
  if (region.contains(0.0, path.at(0.0))) return {HitStatus::Hit, kHitAtZero};
  double prev = 0.0;
  long n = static_cast<long>(std::ceil(horizon / tau));
  for (long i = 1; i <= n; ++i) {
    double t = std::min(i * tau, horizon);
    if (region.contains(t, path.at(t))) {
      double lo = prev, hi = t;
      while (hi - lo > kBisectTol) {
        double mid = 0.5 * (lo + hi);
        if (region.contains(mid, path.at(mid))) hi = mid;
        else lo = mid;
      }
      double hit = 0.5 * (lo + hi);
      return {HitStatus::Hit, hit <= 0 ? kHitAtZero : hit};
    }
    prev = t;
  }
  return {HitStatus::None, 0};
}

}  // namespace

HitResult first_hit_time(const MovingRegion& region, const RayState& ray,
                         double horizon) {
  if (!(horizon > 0)) throw std::invalid_argument("first_hit_time: horizon");
  if (exact_1d_applicable(region, ray))
    return first_hit_1d_exact(region, ray, horizon);
  return first_hit_bracketing(region, ray, horizon);
}

namespace {

// Rays synchronized with the 1D window's wall arrivals. The sup defining the
// control time is attained only on this measure-zero family once the window
// outruns the rays (v > 1): a ray reaching the wall at the exact moment the
// window touches it slips past and survives a full extra chase.
void append_interval_specials(const MovingRegion& region,
                              std::vector<RayParams>& rays) {
  if (region.is_shell()) return;
  auto push = [&](double x0, int dir) {
    RayParams r;
    r.family = RayFamily::Interval;
    r.p[0] = x0;
    r.i0 = dir;
    rays.push_back(r);
  };
  push(0.0, 1);
  push(1.0, -1);
  for (const auto& sp : region.specs()) {
    if (sp.kind != DomainKind::Interval01) continue;
    if (sp.law != MotionLaw::Reflecting1D || sp.v <= 0) continue;
    double travel = (1.0 - sp.a) / sp.v;
    double period = 2.0 * (travel + sp.delta);
    // wall = 1 while the window rests on the right end, 0 on the left
    const double events[4][2] = {{travel, 1.0},
                                 {travel + sp.delta, 1.0},
                                 {2.0 * travel + sp.delta, 0.0},
                                 {period, 0.0}};
    for (int k = 0; k < 2; ++k)
      for (const auto& e : events) {
        double m = pos_mod(e[1] - (k * period + e[0]), 2.0);
        if (m < 1.0) push(m, 1);
        else push(2.0 - m, -1);
      }
  }
}

TgccVerdict sweep_rays(const MovingRegion& region, double horizon,
                       const RaySampling& sampling) {
  if (sampling.rays.empty()) throw std::invalid_argument("empty sampling");
  std::vector<RayParams> rays = sampling.rays;
  if (sampling.kind == DomainKind::Interval01)
    append_interval_specials(region, rays);
  TgccVerdict v;
  v.T = horizon;
  v.hit_times.reserve(rays.size());
  double sup = -kInf;
  size_t worst = 0;
  bool any_none = false;
  for (size_t i = 0; i < rays.size(); ++i) {
    HitResult h =
        first_hit_time(region, rays[i].to_state(sampling.kind), horizon);
    v.hit_times.push_back(h);
    if (h.status == HitStatus::None) {
      if (!any_none) worst = i;
      any_none = true;
    } else if (!any_none && h.t > sup) {
      sup = h.t;
      worst = i;
    }
  }
  v.worst_ray = rays[worst];
  if (any_none) {
    v.t0_estimate = kInf;
    v.status = "exceeded_horizon";
    v.satisfied = false;
  } else {
    v.t0_estimate = sup;
    v.status = "finite";
    v.satisfied = sup < horizon;
  }
  return v;
}

int param_count(RayFamily f) {
  switch (f) {
    case RayFamily::Interval:
    case RayFamily::Gliding: return 1;
    case RayFamily::DiskPolygon:
    case RayFamily::SquareRational: return 2;
    default: return 3;
  }
}

void initial_steps(RayFamily f, double* st) {
  switch (f) {
    case RayFamily::Interval: st[0] = 1.0 / 1024; break;
    case RayFamily::Gliding: st[0] = 0.05; break;
    case RayFamily::DiskInterior: st[0] = 1.0 / 32; st[1] = kTwoPi / 32; st[2] = kTwoPi / 512; break;
    case RayFamily::SquareInterior: st[0] = 1.0 / 46; st[1] = 1.0 / 46; st[2] = kTwoPi / 512; break;
    case RayFamily::SphereCircle: st[0] = kTwoPi / 128; st[1] = kPi / 256; st[2] = kTwoPi / 64; break;
    case RayFamily::DiskPolygon: st[0] = kTwoPi / 32; st[1] = 1.0 / 16; break;
    case RayFamily::SquareRational: st[0] = 1.0 / 16; st[1] = 1.0 / 16; break;
  }
}

void clamp_params(RayParams& r) {
  switch (r.family) {
    case RayFamily::Interval:
      r.p[0] = std::min(1.0, std::max(0.0, r.p[0]));
      break;
    case RayFamily::DiskInterior:
      r.p[0] = std::min(1.0, std::max(0.0, r.p[0]));
      break;
    case RayFamily::SquareInterior:
    case RayFamily::SquareRational:
      r.p[0] = std::min(1.0, std::max(0.0, r.p[0]));
      r.p[1] = std::min(1.0, std::max(0.0, r.p[1]));
      break;
    case RayFamily::SphereCircle:
      r.p[1] = std::min(kPi / 2, std::max(0.0, r.p[1]));
      break;
    default:
      break;
  }
}

}  // namespace

TgccVerdict check_tgcc(const MovingRegion& region, double T,
                       const RaySampling& sampling) {
  if (!(T > 0)) throw std::invalid_argument("check_tgcc: T <= 0");
  return sweep_rays(region, T, sampling);
}

TgccVerdict estimate_T0(const MovingRegion& region,
                        const RaySampling& sampling, double horizon_cap) {
  if (!(horizon_cap > 0)) throw std::invalid_argument("estimate_T0: cap <= 0");
  TgccVerdict v = sweep_rays(region, horizon_cap, sampling);
  if (v.status != "finite") return v;

  // Pattern search around the worst ray; the sup never decreases.
  RayParams cur = v.worst_ray;
  double cur_val = v.t0_estimate;
  int np = param_count(cur.family);
  double step[3] = {0, 0, 0};
  initial_steps(cur.family, step);
  auto objective = [&](const RayParams& r) -> double {
    HitResult h = first_hit_time(region, r.to_state(sampling.kind), horizon_cap);
    return h.status == HitStatus::Hit ? h.t : kInf;
  };
  for (int it = 0; it < 40; ++it) {
    RayParams best = cur;
    double best_val = cur_val;
    for (int j = 0; j < np; ++j)
      for (int sgn = -1; sgn <= 1; sgn += 2) {
        RayParams cand = cur;
        cand.p[j] += sgn * step[j];
        clamp_params(cand);
        double val = objective(cand);
        if (val > best_val) {
          best = cand;
          best_val = val;
        }
      }
    if (best_val == kInf) {
      v.t0_estimate = kInf;
      v.status = "exceeded_horizon";
      v.satisfied = false;
      v.worst_ray = best;
      return v;
    }
    if (best_val > cur_val) {
      cur = best;
      cur_val = best_val;
    } else {
      for (int j = 0; j < np; ++j) step[j] *= 0.5;
    }
  }
  v.worst_ray = cur;
  v.t0_estimate = cur_val;
  v.margin = std::max(1e-6, 4.0 * *std::max_element(step, step + np));
  v.satisfied = cur_val < horizon_cap;
  return v;
}

namespace {

HitResult boundary_hit_one(const MovingRegion& region, const RayParams& rp,
                           DomainKind kind, double T) {
  const RayState state = rp.to_state(kind);
  if (state.mode != RayMode::Interior)
    return {kind == DomainKind::UnitSquare ? HitStatus::Indeterminate
                                           : HitStatus::None,
            0};
  switch (kind) {
    case DomainKind::Interval01: {
      double x0 = state.pos.x();
      double d = state.dir.x >= 0 ? 1.0 : -1.0;
      double t = d > 0 ? 1.0 - x0 : x0;
      double wall = d > 0 ? 1.0 : 0.0;
      while (t < T) {
        if (t > 0 && region.contains(t, Point::of1d(wall))) return {HitStatus::Hit, t};
        t += 1.0;
        wall = 1.0 - wall;
      }
      return {HitStatus::None, 0};
    }
    case DomainKind::UnitDisk: {
      DiskChordRay c = disk_chord_from_state(state);
      double sh = std::sin(c.alpha / 2.0);
      if (sh <= kGlancingTol) return {HitStatus::Indeterminate, 0};
      double L = 2.0 * sh;
      if (T / L > static_cast<double>(kBounceOverflow))
        return {HitStatus::Indeterminate, 0};
      long k = static_cast<long>(std::ceil(-c.t0 / L));
      double t = c.t0 + k * L;
      if (t <= 0) { ++k; t += L; }
      for (; t < T; ++k, t = c.t0 + k * L) {
        double th = c.theta0 + k * c.alpha;
        if (region.contains(t, Point::of2d(std::cos(th), std::sin(th))))
          return {HitStatus::Hit, t};
      }
      return {HitStatus::None, 0};
    }
    case DomainKind::UnitSquare: {
      UnfoldState u = unfold_from_state(state);
      auto next_crossing = [](double z0, double c, double t) {
        if (c == 0.0) return kInf;
        double z = z0 + c * t;
        double nxt = c > 0 ? std::floor(z) + 1.0 : std::ceil(z) - 1.0;
        return (nxt - z0) / c;
      };
      double t = 0.0;
      long guard = 0;
      for (;;) {
        double tx = next_crossing(u.x0, u.c, t + 1e-13);
        double ty = next_crossing(u.y0, u.s, t + 1e-13);
        t = std::min(tx, ty);
        if (!(t < T)) return {HitStatus::None, 0};
        if (++guard > kBounceOverflow) return {HitStatus::Indeterminate, 0};
        Point p = eval_square_unfolded(u, t);
        double px = p.x(), py = p.y();
        bool corner = std::abs(tx - ty) <= kCornerTol;
        if (corner || tx <= ty) px = px < 0.5 ? 0.0 : 1.0;
        if (corner || ty <= tx) py = py < 0.5 ? 0.0 : 1.0;
        if (t > 0 && region.contains(t, Point::of2d(px, py)))
          return {HitStatus::Hit, t};
      }
    }
    case DomainKind::UnitSphere:
      throw std::domain_error("check_tgcc_boundary: sphere is boundaryless");
  }
  return {HitStatus::None, 0};
}

}  // namespace

TgccVerdict check_tgcc_boundary(const MovingRegion& region, double T,
                                const RaySampling& sampling) {
  if (sampling.kind == DomainKind::UnitSphere)
    throw std::domain_error("check_tgcc_boundary: sphere is boundaryless");
  TgccVerdict v;
  v.T = T;
  v.hit_times.reserve(sampling.rays.size());
  double sup = -kInf;
  size_t worst = 0;
  bool any_none = false, any_indet = false;
  for (size_t i = 0; i < sampling.rays.size(); ++i) {
    HitResult h = boundary_hit_one(region, sampling.rays[i], sampling.kind, T);
    v.hit_times.push_back(h);
    if (h.status == HitStatus::Indeterminate) {
      if (!any_indet && !any_none) worst = i;
      any_indet = true;
    } else if (h.status == HitStatus::None) {
      if (!any_none) worst = i;
      any_none = true;
    } else if (!any_none && !any_indet && h.t > sup) {
      sup = h.t;
      worst = i;
    }
  }
  v.worst_ray = sampling.rays[worst];
  if (any_none || any_indet) {
    v.satisfied = false;
    v.t0_estimate = kInf;
    v.status = any_indet && !any_none ? "indeterminate" : "exceeded_horizon";
  } else {
    v.satisfied = sup < T;
    v.t0_estimate = sup;
    v.status = "finite";
  }
  return v;
}

}  // namespace tgcc
