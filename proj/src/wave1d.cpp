#include "tgcc/wave1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tgcc {

namespace {

// ---------- Gauss-Legendre nodes on [-1, 1] ----------

struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    r.x[i] = t;
    r.w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return r;
}

const GaussRule& rule16() {
  static const GaussRule r = gauss_rule(16);
  return r;
}
const GaussRule& rule8() {
  static const GaussRule r = gauss_rule(8);
  return r;
}

template <class F>
double gauss_panel(const GaussRule& g, double a, double b, F&& f) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a), sum = 0;
  for (size_t i = 0; i < g.x.size(); ++i) sum += g.w[i] * f(mid + half * g.x[i]);
  return sum * half;
}

// ---------- odd 2-periodic extensions ----------

double ext_odd(const std::function<double(double)>& f, double z) {
  double zh = pos_mod(z, 2.0);
  return zh <= 1.0 ? f(zh) : -f(2.0 - zh);
}

// Derivative of the odd extension of u0 is the even extension of du0.
double ext_even(const std::function<double(double)>& f, double z) {
  return f(fold(z));
}

struct Fields {
  double u, ut, ux;
};

Fields eval_fields(const InitialData1D& d, double t, double x) {
  double fp = ext_even(d.du0, x + t), fm = ext_even(d.du0, x - t);
  double gp = ext_odd(d.u1, x + t), gm = ext_odd(d.u1, x - t);
  Fields out;
  out.u = 0.5 * (ext_odd(d.u0, x + t) + ext_odd(d.u0, x - t)) +
          0.5 * (ext_even(d.iu1, x + t) - ext_even(d.iu1, x - t));
  out.ut = 0.5 * (fp - fm) + 0.5 * (gp + gm);
  out.ux = 0.5 * (fp + fm) + 0.5 * (gp - gm);
  return out;
}

// x in [0,1] where x + t or x - t meets a data kink modulo 2.
void char_kinks(const InitialData1D& d, double t, std::vector<double>& xs) {
  std::vector<double> base{0.0, 1.0};
  base.insert(base.end(), d.kinks.begin(), d.kinks.end());
  for (double b : base)
    for (double s : {b, -b})
      for (double c : {s - t, s + t}) {
        double r = pos_mod(c, 2.0);
        if (r <= 1.0) xs.push_back(r);
      }
}

double integrate_x(const GaussRule& g, const InitialData1D& d, double t,
                   double xl, double xr, bool ut_only) {
  if (!(xr > xl)) return 0.0;
  std::vector<double> xs{xl, xr};
  char_kinks(d, t, xs);
  std::sort(xs.begin(), xs.end());
  double sum = 0;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = std::max(xs[i], xl), b = std::min(xs[i + 1], xr);
    if (b - a < 1e-14) continue;
    sum += gauss_panel(g, a, b, [&](double x) {
      Fields f = eval_fields(d, t, x);
      return ut_only ? f.ut * f.ut : 0.5 * (f.ut * f.ut + f.ux * f.ux);
    });
  }
  return sum;
}

}  // namespace

InitialData1D InitialData1D::eigenmode(int k) {
  if (k <= 0) throw std::invalid_argument("eigenmode: k must be positive");
  InitialData1D d;
  double w = k * kPi;
  d.u0 = [w](double x) { return std::sin(w * x); };
  d.du0 = [w](double x) { return w * std::cos(w * x); };
  d.u1 = [](double) { return 0.0; };
  d.iu1 = [](double) { return 0.0; };
  d.family = "eigenmode(" + std::to_string(k) + ")";
  return d;
}

InitialData1D InitialData1D::packet(double x0, int dir, double sigma) {
  if (!(sigma > 0) || x0 - sigma < 0 || x0 + sigma > 1)
    throw std::invalid_argument("packet: support must lie inside (0,1)");
  auto psi = [x0, sigma](double x) {
    double u = (x - x0) / sigma;
    if (std::abs(u) >= 1.0) return 0.0;
    double w = 1.0 - u * u;
    return w * w * w;
  };
  auto dpsi = [x0, sigma](double x) {
    double u = (x - x0) / sigma;
    if (std::abs(u) >= 1.0) return 0.0;
    double w = 1.0 - u * u;
    return -6.0 * u * w * w / sigma;
  };
  InitialData1D d;
  d.u0 = psi;
  d.du0 = dpsi;
  double s = dir >= 0 ? 1.0 : -1.0;
  d.u1 = [dpsi, s](double x) { return -s * dpsi(x); };
  d.iu1 = [psi, s](double x) { return -s * psi(x); };
  d.family = "packet";
  d.kinks = {x0 - sigma, x0 + sigma};
  return d;
}

std::pair<double, double> dalembert_eval(const InitialData1D& data, double t,
                                         double x) {
  Fields f = eval_fields(data, t, x);
  return {f.u, f.ut};
}

double energy_at(const InitialData1D& data, double t) {
  return integrate_x(rule16(), data, t, 0.0, 1.0, false);
}

namespace {

std::vector<double> outer_breakpoints(const InitialData1D& d,
                                      const MovingDomainSpec& spec, double T) {
  std::vector<double> ts{0.0, T};
  // Motion-law kinks.
  if (spec.law == MotionLaw::Reflecting1D && spec.v > 0) {
    double travel = (1.0 - spec.a) / spec.v;
    double period = 2.0 * (travel + spec.delta);
    double marks[4] = {travel, travel + spec.delta, 2.0 * travel + spec.delta,
                       period};
    for (double base = 0.0; base < T; base += period)
      for (double m : marks)
        if (base + m < T) ts.push_back(base + m);
  } else if (spec.law == MotionLaw::StopAndGo && spec.t_start < T) {
    ts.push_back(spec.t_start);
  }
  // Characteristic lines x = c -+ t crossing the window edges, per linear
  // segment of the edge trajectories.
  std::vector<double> seg(ts);
  std::sort(seg.begin(), seg.end());
  std::vector<double> kb{0.0, 1.0};
  kb.insert(kb.end(), d.kinks.begin(), d.kinks.end());
  for (size_t i = 0; i + 1 < seg.size(); ++i) {
    double ta = seg[i], tb = seg[i + 1];
    if (tb - ta < 1e-14) continue;
    double la = spec.window_start(ta), lb = spec.window_start(tb);
    double B = (lb - la) / (tb - ta);
    for (double off : {0.0, spec.a}) {
      // edge e(t) = la + off + B (t - ta); solve e -+ t = +-b mod 2.
      for (double b : kb)
        for (double sb : {b, -b})
          for (double schar : {1.0, -1.0}) {
            double denom = B + schar;
            if (std::abs(denom) < 1e-12) continue;
            // la + off + B (t-ta) + schar*t = sb + 2m
            double c0 = la + off - B * ta;
            for (int m = -4; m <= 4; ++m) {
              double t = (sb + 2.0 * m - c0) / denom;
              if (t > ta + 1e-14 && t < tb - 1e-14) ts.push_back(t);
            }
          }
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [](double a, double b) { return b - a < 1e-13; }),
           ts.end());
  return ts;
}

double observed_with(const GaussRule& g, const InitialData1D& data,
                     const MovingDomainSpec& spec,
                     const std::vector<double>& ts) {
  double sum = 0;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] < 1e-14) continue;
    sum += gauss_panel(g, ts[i], ts[i + 1], [&](double t) {
      double lo = spec.window_start(t);
      double xl = std::max(lo, 0.0), xr = std::min(lo + spec.a, 1.0);
      return integrate_x(g, data, t, xl, xr, true);
    });
  }
  return sum;
}

}  // namespace

ObservedEnergyReport observed_energy(const InitialData1D& data,
                                     const MovingDomainSpec& spec, double T) {
  if (spec.kind != DomainKind::Interval01)
    throw std::domain_error("observed_energy: 1D specs only");
  if (!(T > 0)) throw std::invalid_argument("observed_energy: T <= 0");
  auto ts = outer_breakpoints(data, spec, T);
  ObservedEnergyReport rep;
  rep.observed = observed_with(rule16(), data, spec, ts);
  double coarse = observed_with(rule8(), data, spec, ts);
  rep.total = 2.0 * energy_at(data, 0.0);
  rep.ratio = rep.observed / rep.total;
  rep.quad_error =
      std::abs(rep.observed - coarse) / std::max(std::abs(rep.observed), 1e-300);
  rep.converged = rep.quad_error <= 1e-6 || rep.observed < 1e-12 * rep.total;
  return rep;
}

double obs_ratio_infimum(const MovingDomainSpec& spec, double T,
                         const std::vector<InitialData1D>& family) {
  if (family.empty()) throw std::invalid_argument("obs_ratio_infimum: empty");
  double inf = std::numeric_limits<double>::infinity();
  for (const auto& d : family)
    inf = std::min(inf, observed_energy(d, spec, T).ratio);
  return inf;
}

std::vector<InitialData1D> default_family(double worst_x0, int worst_dir,
                                          const std::vector<double>& sigmas) {
  std::vector<InitialData1D> fam;
  for (int k = 1; k <= 32; ++k) fam.push_back(InitialData1D::eigenmode(k));
  for (double s : sigmas) {
    double x0 = std::min(1.0 - s - 1e-6, std::max(s + 1e-6, worst_x0));
    fam.push_back(InitialData1D::packet(x0, worst_dir, s));
  }
  return fam;
}

namespace {

struct FdRun {
  std::vector<double> prev, cur;
  double dx, dt;
  int n;

  FdRun(const InitialData1D& data, int grid_n)
      : dx(1.0 / grid_n), dt(0.5 / grid_n), n(grid_n) {
    prev.assign(n + 1, 0.0);
    cur.assign(n + 1, 0.0);
    for (int j = 1; j < n; ++j) prev[j] = data.u0(j * dx);
    // Second-order start: u(dt) = u0 + dt u1 + dt^2/2 u0_xx.
    for (int j = 1; j < n; ++j) {
      double lap = (prev[j + 1] - 2.0 * prev[j] + prev[j - 1]) / (dx * dx);
      cur[j] = prev[j] + dt * data.u1(j * dx) + 0.5 * dt * dt * lap;
    }
  }

  // Advance from step m (cur holds u^m) to m+1.
  void step(long m, const MovingDomainSpec* spec) {
    double t = m * dt;
    double lo = 0, hi = 0;
    if (spec) {
      lo = spec->window_start(t);
      hi = lo + spec->a;
    }
    double lam2 = (dt / dx) * (dt / dx);
    std::vector<double>& nxt = prev;  // reuse storage
    double left = 0.0;
    for (int j = 1; j < n; ++j) {
      double chi = 0.0;
      if (spec) {
        double x = j * dx;
        if (x > lo && x < hi) chi = 1.0;
      }
      double lap = cur[j + 1] - 2.0 * cur[j] + cur[j - 1];
      double val = 2.0 * cur[j] - prev[j] + lam2 * lap +
                   chi * dt / 2.0 * prev[j];
      val /= 1.0 + chi * dt / 2.0;
      prev[j - 1] = left;  // store already-final value of previous index
      left = val;
    }
    prev[n - 1] = left;
    prev[n] = 0.0;
    prev[0] = 0.0;
    std::swap(prev, cur);
    (void)nxt;
  }

  double energy() const {
    // Staggered-in-time energy around step boundary (prev = u^{m-1},
    // cur = u^m): trapezoid in ut, midpoint in ux.
    double e = 0;
    for (int j = 1; j < n; ++j) {
      double ut = (cur[j] - prev[j]) / dt;
      e += ut * ut;
    }
    double eg = 0;
    for (int j = 0; j < n; ++j) {
      double gx = (cur[j + 1] - cur[j]) / dx;
      double gxp = (prev[j + 1] - prev[j]) / dx;
      eg += gx * gxp;
    }
    return 0.5 * dx * (e + eg);
  }
};

}  // namespace

DecayFit damped_decay_rate(const MovingDomainSpec& spec,
                           const InitialData1D& data, int grid_n,
                           double horizon, bool damped) {
  if (spec.kind != DomainKind::Interval01)
    throw std::domain_error("damped_decay_rate: 1D specs only");
  double period;
  switch (spec.law) {
    case MotionLaw::Reflecting1D:
      period = spec.period();
      break;
    case MotionLaw::Static:
      period = 2.0;
      break;
    default:
      throw std::domain_error("damped_decay_rate: spec must be periodic");
  }
  FdRun run(data, grid_n);
  long steps = static_cast<long>(std::ceil(horizon / run.dt));
  long per_period = std::max<long>(1, static_cast<long>(period / run.dt));
  DecayFit fit;
  std::vector<double> sample_t;
  for (long m = 1; m < steps; ++m) {
    run.step(m, damped ? &spec : nullptr);
    if ((m + 1) % per_period == 0) {
      fit.energies.push_back(run.energy());
      sample_t.push_back((m + 1) * run.dt);
    }
  }
  size_t first = fit.energies.size() / 5;  // fit over the last 80%
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t cnt = 0;
  for (size_t i = first; i < fit.energies.size(); ++i) {
    if (fit.energies[i] <= 0) continue;
    double x = sample_t[i], y = std::log(fit.energies[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt < 3) throw std::runtime_error("damped_decay_rate: fit underflow");
  double denom = cnt * sxx - sx * sx;
  double slope = (cnt * sxy - sx * sy) / denom;
  double icept = (sy - slope * sx) / cnt;
  fit.nu = -slope;
  double e0 = fit.energies.front();
  fit.mu = std::exp(icept) / e0;
  double ss = 0;
  for (size_t i = first; i < fit.energies.size(); ++i) {
    if (fit.energies[i] <= 0) continue;
    double r = std::log(fit.energies[i]) - (icept + slope * sample_t[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / cnt);
  return fit;
}

double fd_energy_at(const InitialData1D& data, int grid_n, double t) {
  FdRun run(data, grid_n);
  long target = std::lround(t / run.dt);
  if (std::abs(target * run.dt - t) > 1e-9)
    throw std::invalid_argument("fd_energy_at: t must be a step multiple");
  for (long m = 1; m < target; ++m) run.step(m, nullptr);
  return run.energy();
}

}  // namespace tgcc
