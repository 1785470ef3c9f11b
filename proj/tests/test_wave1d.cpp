#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "tgcc/wave1d.hpp"

using namespace tgcc;

namespace {

MovingDomainSpec window1d(double v, double a, double delta) {
  MovingDomainSpec s;
  s.kind = DomainKind::Interval01;
  s.law = v == 0 ? MotionLaw::Static : MotionLaw::Reflecting1D;
  s.v = v;
  s.a = a;
  s.delta = delta;
  return s;
}

MovingDomainSpec full_window() {
  MovingDomainSpec s;
  s.kind = DomainKind::Interval01;
  s.law = MotionLaw::Static;
  s.a = 1.0;
  return s;
}

}  // namespace

TEST_CASE("d'Alembert evaluation of an eigenmode") {
  InitialData1D d = InitialData1D::eigenmode(1);
  auto [u, ut] = dalembert_eval(d, 0.5, 0.5);
  CHECK(u == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ut == doctest::Approx(-kPi).epsilon(1e-10));
  // closed form cos(k pi t) sin(k pi x) everywhere
  for (double t : {0.1, 0.7, 2.3}) {
    for (double x : {0.2, 0.55, 0.9}) {
      auto [uu, uut] = dalembert_eval(d, t, x);
      CHECK(uu ==
            doctest::Approx(std::cos(kPi * t) * std::sin(kPi * x)).epsilon(1e-10));
      CHECK(uut == doctest::Approx(-kPi * std::sin(kPi * t) *
                                   std::sin(kPi * x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("identity at t = 0 and Dirichlet ends") {
  InitialData1D d = InitialData1D::packet(0.4, 1, 0.1);
  for (double x : {0.1, 0.35, 0.4, 0.52, 0.95}) {
    auto [u, ut] = dalembert_eval(d, 0.0, x);
    CHECK(u == doctest::Approx(d.u0(x)).epsilon(1e-12));
    CHECK(ut == doctest::Approx(d.u1(x)).epsilon(1e-12));
  }
  for (double t : {0.13, 0.7, 1.9, 3.4}) {
    for (double x : {0.0, 1.0}) {
      auto [u, ut] = dalembert_eval(d, t, x);
      (void)ut;
      CHECK(std::abs(u) < 1e-10);
    }
  }
}

TEST_CASE("packet travels rigidly before first reflection") {
  InitialData1D d = InitialData1D::packet(0.3, 1, 0.08);
  for (double t : {0.05, 0.15, 0.3}) {
    for (double x : {0.25, 0.3, 0.42, 0.6}) {
      auto [u, ut] = dalembert_eval(d, t, x);
      (void)ut;
      CHECK(u == doctest::Approx(d.u0(x - t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("time symmetry with negated velocity") {
  InitialData1D d = InitialData1D::packet(0.45, 1, 0.1);
  InitialData1D dm = d;
  auto u1 = d.u1, iu1 = d.iu1;
  dm.u1 = [u1](double x) { return -u1(x); };
  dm.iu1 = [iu1](double x) { return -iu1(x); };
  for (double t : {0.2, 0.9, 1.7}) {
    for (double x : {0.15, 0.5, 0.85}) {
      auto [a, at] = dalembert_eval(d, t, x);
      auto [b, bt] = dalembert_eval(dm, -t, x);
      CHECK(a == doctest::Approx(b).epsilon(1e-10));
      CHECK(at == doctest::Approx(-bt).epsilon(1e-10));
    }
  }
}

TEST_CASE("energy conservation to 1e-8") {
  for (const InitialData1D& d :
       {InitialData1D::eigenmode(3), InitialData1D::packet(0.35, -1, 0.07)}) {
    double e0 = energy_at(d, 0.0);
    REQUIRE(e0 > 0);
    for (double t : {0.17, 0.5, 1.3, 2.8, 5.9}) {
      CHECK(std::abs(energy_at(d, t) - e0) / e0 < 1e-8);
    }
  }
}

TEST_CASE("observed energy over the full window") {
  InitialData1D d = InitialData1D::eigenmode(1);
  ObservedEnergyReport rep = observed_energy(d, full_window(), 2.0);
  CHECK(rep.observed == doctest::Approx(kPi * kPi / 2).epsilon(1e-8));
  CHECK(rep.total == doctest::Approx(kPi * kPi / 2).epsilon(1e-8));
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rep.converged);
}

TEST_CASE("empty window observes nothing") {
  InitialData1D d = InitialData1D::eigenmode(2);
  MovingDomainSpec s = full_window();
  s.a = 1e-9;
  s.start = 0.0;
  ObservedEnergyReport rep = observed_energy(d, s, 1.0);
  CHECK(rep.observed < 1e-8);
}

TEST_CASE("observability above and below the control time") {
  MovingDomainSpec s = window1d(0.5, 0.25, 0.0);
  // T = 1.3 > T0 = 1: positive infimum over the default family
  std::vector<InitialData1D> fam = default_family(0.25, 1, {0.04, 0.02, 0.01});
  double inf = obs_ratio_infimum(s, 1.3, fam);
  CHECK(inf > 1e-3);
  // T = 0.8 < T0: packet ratios decrease monotonically as sigma shrinks
  double prev = 1e9;
  for (double sigma : {0.04, 0.02, 0.01}) {
    InitialData1D pk = InitialData1D::packet(0.25, 1, sigma);
    double r = observed_energy(pk, s, 0.8).ratio;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("FD solver converges at second order") {
  InitialData1D d = InitialData1D::eigenmode(1);
  double t = 3.25;
  double exact = energy_at(d, 0.0);
  double e1 = std::abs(fd_energy_at(d, 128, t) - exact);
  double e2 = std::abs(fd_energy_at(d, 256, t) - exact);
  double e3 = std::abs(fd_energy_at(d, 512, t) - exact);
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
  CHECK(e2 / e3 > 3.5);
  CHECK(e2 / e3 < 4.5);
}

TEST_CASE("undamped FD run conserves energy in the fit") {
  MovingDomainSpec s = window1d(0.5, 0.25, 0.0);
  InitialData1D d = InitialData1D::eigenmode(2);
  DecayFit fit = damped_decay_rate(s, d, 512, 40.0, false);
  CHECK(std::abs(fit.nu) < 1e-3);
}

TEST_CASE("full damping decays") {
  MovingDomainSpec s = full_window();
  InitialData1D d = InitialData1D::eigenmode(1);
  DecayFit fit = damped_decay_rate(s, d, 512, 40.0, true);
  CHECK(fit.nu > 0.0);
  CHECK(fit.residual < 0.1);
}

TEST_CASE("moving window damping decays") {
  MovingDomainSpec s = window1d(0.5, 0.25, 0.0);
  InitialData1D d = InitialData1D::eigenmode(1);
  DecayFit fit = damped_decay_rate(s, d, 512, 40.0, true);
  CHECK(fit.nu > 0.0);
  CHECK(fit.residual < 0.1);
}

TEST_CASE("damping rate shrinks with the window") {
  InitialData1D d = InitialData1D::eigenmode(1);
  double prev = 1e9;
  for (double a : {0.45, 0.25, 0.1}) {
    DecayFit fit = damped_decay_rate(window1d(0.5, a, 0.0), d, 384, 40.0);
    CHECK(fit.nu > 0.0);
    CHECK(fit.nu <= prev + 0.02);
    prev = fit.nu;
  }
}
