#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tgcc/rayflow.hpp"

using namespace tgcc;

TEST_CASE("next bounce examples") {
  // disk chord with opening pi/2 starting at theta = 0
  RayState s = RayState::planar(DomainKind::UnitDisk, 1, 0, 3.0 * kPi / 4.0);
  BounceEvent ev = next_bounce(s);
  CHECK(ev.t == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ev.point.theta() == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(ev.transversal);

  s = RayState::interval(0.3, 1.0);
  ev = next_bounce(s);
  CHECK(ev.t == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(ev.point.x() == doctest::Approx(1.0));

  s = RayState::planar(DomainKind::UnitSquare, 0.25, 0.5, 0.0);
  ev = next_bounce(s);
  CHECK(ev.t == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(ev.point.x() == doctest::Approx(1.0));
  CHECK(ev.point.y() == doctest::Approx(0.5));
  CHECK(ev.transversal);

  RayState sphere;
  sphere.kind = DomainKind::UnitSphere;
  CHECK_THROWS(next_bounce(sphere));
}

TEST_CASE("square diagonal period and corner flag") {
  // slope 1/1 from the corner: periodic with period 2 sqrt(2)
  RayState s = RayState::planar(DomainKind::UnitSquare, 0, 0, kPi / 4.0);
  double period = 2.0 * std::sqrt(2.0);
  Trace tr = trace(s, 3.0 * period + 0.1);
  REQUIRE(!tr.events.empty());
  bool saw_corner = false;
  for (const auto& ev : tr.events) saw_corner = saw_corner || ev.corner;
  CHECK(saw_corner);
  PathEval pe(s);
  for (int k = 1; k <= 3; ++k) {
    Point p = pe.at(k * period);
    CHECK(std::abs(p.x() - 0.0) < 1e-9);
    CHECK(std::abs(p.y() - 0.0) < 1e-9);
  }
}

TEST_CASE("disk diameter ray is 4-periodic") {
  RayState s = RayState::planar(DomainKind::UnitDisk, 1, 0, kPi);
  PathEval pe(s);
  Point p0 = pe.at(0.0);
  Point p = pe.at(4.0);
  CHECK(std::abs(p.x() - p0.x()) < 1e-9);
  CHECK(std::abs(p.y() - p0.y()) < 1e-9);
  Point mid = pe.at(1.0);  // passes through the origin
  CHECK(std::abs(mid.x()) < 1e-9);
  CHECK(std::abs(mid.y()) < 1e-9);
}

TEST_CASE("interval bounce cadence") {
  Trace tr = trace(RayState::interval(0.5, 1.0), 3.0);
  REQUIRE(tr.events.size() == 3);
  CHECK(tr.events[0].t == doctest::Approx(0.5));
  CHECK(tr.events[1].t == doctest::Approx(1.5));
  CHECK(tr.events[2].t == doctest::Approx(2.5));
}

TEST_CASE("square unfolding evaluator examples") {
  UnfoldState u;
  u.c = u.s = std::sqrt(2.0) / 2.0;
  Point p = eval_square_unfolded(u, std::sqrt(2.0));
  CHECK(p.x() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.y() == doctest::Approx(1.0).epsilon(1e-12));

  u = UnfoldState{};
  u.x0 = 0.2;
  u.c = 1;
  u.s = 0;
  p = eval_square_unfolded(u, 1.4);
  CHECK(p.x() == doctest::Approx(0.4).epsilon(1e-12));

  u.t0 = 2.0;
  p = eval_square_unfolded(u, 2.0);
  CHECK(p.x() == doctest::Approx(0.2));
  CHECK(p.y() == doctest::Approx(0.0));
}

TEST_CASE("unfolding agrees with event-driven trace") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(0.02, 0.98), ang(0, kTwoPi);
  for (int trial = 0; trial < 1000; ++trial) {
    RayState s =
        RayState::planar(DomainKind::UnitSquare, pos(rng), pos(rng), ang(rng));
    UnfoldState u = unfold_from_state(s);
    // ~100 bounces: horizon of 60 crossings of the unit square
    double T = 60.0;
    Trace tr = trace(s, T);
    for (const auto& ev : tr.events) {
      Point p = eval_square_unfolded(u, ev.t);
      CHECK(std::abs(p.x() - ev.point.x()) < 1e-9);
      CHECK(std::abs(p.y() - ev.point.y()) < 1e-9);
    }
    Point pf = eval_square_unfolded(u, tr.final_state.t);
    CHECK(std::abs(pf.x() - tr.final_state.pos.x()) < 1e-9);
    CHECK(std::abs(pf.y() - tr.final_state.pos.y()) < 1e-9);
  }
}

TEST_CASE("disk chord recursion") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> th(0, kTwoPi), al(0.05, kTwoPi - 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    double theta0 = th(rng), alpha = al(rng);
    DiskChordRay ray{theta0, alpha, 0.0, 1};
    RayState s;
    {
      Point a = eval_disk_chord(ray, 0.0);
      Point b = eval_disk_chord(ray, ray.edge_time());
      Vec2 d = (b.xy() - a.xy()).normalized();
      s = RayState::planar(DomainKind::UnitDisk, a.x(), a.y(),
                           std::atan2(d.y, d.x));
    }
    Trace tr = trace(s, 20.0 * ray.edge_time() + 1e-6);
    double prev_theta = theta0, prev_t = 0.0;
    for (const auto& ev : tr.events) {
      double dtheta = pos_mod(ev.point.theta() - prev_theta, kTwoPi);
      CHECK(std::abs(dtheta - alpha) < 1e-10);
      CHECK(std::abs((ev.t - prev_t) - ray.edge_time()) < 1e-10);
      prev_theta = ev.point.theta();
      prev_t = ev.t;
    }
    CHECK(tr.events.size() >= 19);
  }
}

TEST_CASE("polygon and rational-slope periodicity") {
  for (int n : {3, 4, 5, 6, 17}) {
    double alpha = kTwoPi / n;
    DiskChordRay ray{0.4, alpha, 0.0, 1};
    double period = 2.0 * n * std::sin(kPi / n);
    Point p0 = eval_disk_chord(ray, 0.123);
    Point p1 = eval_disk_chord(ray, 0.123 + period);
    CHECK(std::abs(p0.x() - p1.x()) < 1e-9);
    CHECK(std::abs(p0.y() - p1.y()) < 1e-9);
  }
  struct PQ {
    int p, q;
  };
  for (PQ pq : {PQ{1, 1}, PQ{1, 2}, PQ{3, 4}, PQ{5, 12}}) {
    double h = std::hypot((double)pq.p, (double)pq.q);
    UnfoldState u{0.37, 0.21, pq.q / h, pq.p / h, 0.0};
    double period = 2.0 * h;
    Point p0 = eval_square_unfolded(u, 0.05);
    Point p1 = eval_square_unfolded(u, 0.05 + period);
    CHECK(std::abs(p0.x() - p1.x()) < 1e-9);
    CHECK(std::abs(p0.y() - p1.y()) < 1e-9);
  }
}

TEST_CASE("unit speed on interior segments") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pos(0.05, 0.95), ang(0, kTwoPi);
  for (DomainKind kind : {DomainKind::UnitDisk, DomainKind::UnitSquare}) {
    for (int trial = 0; trial < 50; ++trial) {
      double x = pos(rng) - (kind == DomainKind::UnitDisk ? 0.5 : 0.0);
      double y = pos(rng) - (kind == DomainKind::UnitDisk ? 0.5 : 0.0);
      RayState s = RayState::planar(kind, x, y, ang(rng));
      PathEval pe(s);
      Trace tr = trace(s, 8.0);
      double prev_end = 0.0;
      for (const auto& ev : tr.events) {
        // probe strictly inside the segment
        double ta = prev_end + 1e-6, tb = ev.t - 1e-6;
        if (tb > ta) {
          Point a = pe.at(ta), b = pe.at(tb);
          double dist = (b.xy() - a.xy()).norm();
          CHECK(std::abs(dist / (tb - ta) - 1.0) < 1e-10);
        }
        prev_end = ev.t;
      }
    }
  }
}

TEST_CASE("sphere great-circle speed is one") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    GreatCircleRay r{u01(rng) * kTwoPi, u01(rng) * kPi / 2, u01(rng) * kTwoPi,
                     u01(rng) < 0.5 ? 1 : -1};
    double h = 1e-6;
    for (double t : {0.3, 1.7, 4.4}) {
      Vec3 a = eval_great_circle(r, t).xyz();
      Vec3 b = eval_great_circle(r, t + h).xyz();
      // chordal speed approximates geodesic speed to O(h^2)
      CHECK(std::abs((b - a).norm() / h - 1.0) < 1e-6);
      CHECK(std::abs(a.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("great-circle equator crossings spaced pi") {
  GreatCircleRay r{1.1, 0.8, 0.35, 1};
  double t0 = -0.35;  // phase 0.35: position angle crosses zero at t = -phase
  for (int k = 0; k < 6; ++k) {
    Point p = eval_great_circle(r, t0 + k * kPi);
    CHECK(std::abs(p.phi()) < 1e-12);
  }
  // meridian through the poles
  GreatCircleRay polar{0.0, kPi / 2, 0.0, 1};
  CHECK(eval_great_circle(polar, kPi / 2).phi() ==
        doctest::Approx(kPi / 2).epsilon(1e-9));
  // equatorial ray
  GreatCircleRay eq{0.5, 0.0, 0.0, 1};
  Point p = eval_great_circle(eq, 1.3);
  CHECK(std::abs(p.phi()) < 1e-12);
  CHECK(p.theta() == doctest::Approx(1.8).epsilon(1e-9));
}

TEST_CASE("great-circle canonicalization round-trips") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u01(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    GreatCircleRay r{u01(rng) * kTwoPi, u01(rng) * kPi / 2 * 0.999,
                     u01(rng) * kTwoPi, u01(rng) < 0.5 ? 1 : -1};
    double t = 10.0 * u01(rng);
    Point p = eval_great_circle(r, t);
    Vec3 d = (eval_great_circle(r, t + 1e-7).xyz() - p.xyz()).normalized();
    RayState s;
    s.kind = DomainKind::UnitSphere;
    s.pos = p;
    s.dir = d;
    s.t = t;
    GreatCircleRay r2 = great_circle_from_state(s);
    for (double dt : {0.0, 0.9, 3.7}) {
      Point a = eval_great_circle(r, t + dt);
      Point b = eval_great_circle(r2, t + dt);
      CHECK(std::abs(a.x() - b.x()) < 1e-6);
      CHECK(std::abs(a.y() - b.y()) < 1e-6);
      CHECK(std::abs(a.z() - b.z()) < 1e-6);
    }
  }
}

TEST_CASE("gliding arclength and chord limit") {
  CHECK(glide_arclength(DomainKind::UnitDisk, 0.0, 1, 0.0, kPi) ==
        doctest::Approx(kPi));
  CHECK(glide_arclength(DomainKind::UnitSquare, 0.5, 1, 0.0, 1.0) ==
        doctest::Approx(1.5));
  Point p = boundary_param(DomainKind::UnitSquare,
                           glide_arclength(DomainKind::UnitSquare, 0.5, 1,
                                           0.0, 1.0));
  CHECK(p.x() == doctest::Approx(1.0));
  CHECK(p.y() == doctest::Approx(0.5));
  // alpha -> 0: bounce gap alpha, time gap 2 sin(alpha/2) -> alpha
  double alpha = 1e-5;
  DiskChordRay ray{0.0, alpha, 0.0, 1};
  CHECK(ray.edge_time() == doctest::Approx(alpha).epsilon(1e-9));
}

TEST_CASE("time reversal retraces the path") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> pos(0.1, 0.9), ang(0, kTwoPi);
  for (DomainKind kind : {DomainKind::UnitDisk, DomainKind::UnitSquare}) {
    for (int trial = 0; trial < 30; ++trial) {
      double x = pos(rng) - (kind == DomainKind::UnitDisk ? 0.5 : 0.0);
      double y = pos(rng) - (kind == DomainKind::UnitDisk ? 0.5 : 0.0);
      double a = ang(rng);
      RayState fwd = RayState::planar(kind, x, y, a);
      double T = 5.0;
      PathEval pf(fwd);
      Point end = pf.at(T);
      // reverse from the endpoint
      Point before = pf.at(T - 1e-7);
      Vec2 d = (before.xy() - end.xy()).normalized();
      RayState bwd =
          RayState::planar(kind, end.x(), end.y(), std::atan2(d.y, d.x));
      PathEval pb(bwd);
      for (double tau : {0.7, 1.9, 3.3, 4.6}) {
        Point pfwd = pf.at(T - tau);
        Point pbwd = pb.at(tau);
        CHECK(std::abs(pfwd.x() - pbwd.x()) < 1e-6);
        CHECK(std::abs(pfwd.y() - pbwd.y()) < 1e-6);
      }
    }
  }
}

TEST_CASE("near-tangent chord traces do not overflow prematurely") {
  DiskChordRay ray{0.0, 1e-4, 0.0, 1};
  Point a = eval_disk_chord(ray, 0.0);
  Point b = eval_disk_chord(ray, ray.edge_time() * 0.999);
  CHECK(a.xy().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.xy().norm() <= 1.0 + 1e-12);
}
