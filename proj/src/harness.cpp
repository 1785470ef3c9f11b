#include "tgcc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "tgcc/paperlib.hpp"
#include "tgcc/wave1d.hpp"

namespace tgcc {

namespace {

const std::set<std::string> kSpecKeys = {
    "domain", "mode",    "law",   "a",    "eps",  "v",
    "delta",  "t_start", "start", "end0", "end1",
};

double to_double(const std::string& key, const std::string& val) {
  try {
    size_t pos = 0;
    double d = std::stod(val, &pos);
    if (pos != val.size()) throw std::invalid_argument(val);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for key '" + key + "': " + val);
  }
}

int to_int(const std::string& key, const std::string& val) {
  try {
    size_t pos = 0;
    int i = std::stoi(val, &pos);
    if (pos != val.size()) throw std::invalid_argument(val);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for key '" + key + "': " + val);
  }
}

struct Args {
  const std::map<std::string, std::string>& kv;

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  std::string str(const std::string& k, const std::string& dflt = "") const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
  double num(const std::string& k, double dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : to_double(k, it->second);
  }
  double req(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end()) throw ConfigError("missing required key: " + k);
    return to_double(k, it->second);
  }
  int integer(const std::string& k, int dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : to_int(k, it->second);
  }
  void check_known(const std::set<std::string>& extra) const {
    for (const auto& [k, v] : kv) {
      if (kSpecKeys.count(k) || extra.count(k)) continue;
      throw ConfigError("unknown key: " + k);
    }
  }
};

}  // namespace

void apply_kv_args(SweepConfig& cfg, const std::vector<std::string>& tokens) {
  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (cfg.command.empty())
        cfg.command = tok;
      else
        throw ConfigError("unexpected bare argument: " + tok);
    } else {
      cfg.args[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
}

void apply_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.front() == '[' && line.back() == ']') continue;  // section header
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed config line: " + line);
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      size_t b2 = s.find_first_not_of(" \t");
      size_t e2 = s.find_last_not_of(" \t");
      s = b2 == std::string::npos ? "" : s.substr(b2, e2 - b2 + 1);
    };
    strip(key);
    strip(val);
    if (key == "command") {
      if (cfg.command.empty()) cfg.command = val;
    } else if (!cfg.args.count(key)) {
      cfg.args[key] = val;  // CLI key=value overrides the file
    }
  }
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::string cell;
  std::istringstream is(text);
  while (std::getline(is, cell, ':')) parts.push_back(cell);
  if (parts.size() == 1) return {to_double("range", parts[0])};
  if (parts.size() != 3) throw ConfigError("bad range (start:stop:step): " + text);
  double start = to_double("range", parts[0]);
  double stop = to_double("range", parts[1]);
  double step = to_double("range", parts[2]);
  if (!(step > 0)) throw ConfigError("range step must be positive: " + text);
  std::vector<double> out;
  for (double x = start; x <= stop + 1e-9 * std::max(1.0, std::abs(stop));
       x += step)
    out.push_back(x);
  if (out.empty()) throw ConfigError("empty range: " + text);
  return out;
}

MovingDomainSpec spec_from_args(const std::map<std::string, std::string>& kv) {
  Args a{kv};
  MovingDomainSpec s;
  s.kind = kind_from_name(a.str("domain", "interval"));
  std::string mode = a.str("mode", "interior");
  if (mode == "interior")
    s.mode = RegionMode::Interior;
  else if (mode == "boundary")
    s.mode = RegionMode::Boundary;
  else
    throw ConfigError("unknown mode: " + mode);
  s.a = a.num("a", 0.25);
  s.eps = a.num("eps", 0.1);
  s.v = a.num("v", 0.0);
  s.delta = a.num("delta", 0.0);
  s.t_start = a.num("t_start", 0.0);
  s.start = a.num("start", 0.0);
  s.end0 = a.integer("end0", 0) != 0;
  s.end1 = a.integer("end1", 1) != 0;
  std::string law = a.str("law", "");
  if (law.empty()) {
    if (a.has("t_start"))
      s.law = MotionLaw::StopAndGo;
    else if (s.v == 0.0)
      s.law = MotionLaw::Static;
    else
      s.law = s.kind == DomainKind::Interval01 ? MotionLaw::Reflecting1D
                                               : MotionLaw::ConstantSpeed;
  } else if (law == "static") {
    s.law = MotionLaw::Static;
  } else if (law == "constant") {
    s.law = MotionLaw::ConstantSpeed;
  } else if (law == "reflecting") {
    s.law = MotionLaw::Reflecting1D;
  } else if (law == "stopandgo") {
    s.law = MotionLaw::StopAndGo;
  } else {
    throw ConfigError("unknown law: " + law);
  }
  return s;
}

namespace {

CsvRow row_from(const MovingDomainSpec& s, const TgccVerdict& vd,
                bool timing, double wall_ms) {
  CsvRow r;
  r.geometry = kind_name(s.kind);
  r.mode = s.mode == RegionMode::Interior ? "interior" : "boundary";
  r.v = s.v;
  r.a = s.a;
  if (s.kind == DomainKind::UnitDisk || s.kind == DomainKind::UnitSphere)
    r.eps = s.eps;
  if (s.kind == DomainKind::Interval01) r.delta = s.delta;
  r.T = vd.T;
  if (std::isfinite(vd.t0_estimate)) r.t0_estimate = vd.t0_estimate;
  r.status = vd.status;
  r.worst_ray = vd.worst_ray.label();
  if (timing) r.wall_ms = wall_ms;
  return r;
}

void write_rows(const std::string& out_dir, const std::string& name,
                const std::vector<CsvRow>& rows) {
  std::filesystem::create_directories(out_dir);
  std::ofstream os(out_dir + "/" + name);
  if (!os) throw std::runtime_error("cannot write " + out_dir + "/" + name);
  write_csv(os, rows);
}

RayState ray_from_args(DomainKind kind, const Args& a) {
  if (a.integer("gliding", 0) != 0)
    return RayState::gliding(kind, a.num("s0", 0.0), a.integer("ccw", 1) != 0,
                             0.0);
  switch (kind) {
    case DomainKind::Interval01:
      return RayState::interval(a.num("x0", 0.5), a.integer("dir", 1), 0.0);
    case DomainKind::UnitDisk:
    case DomainKind::UnitSquare:
      return RayState::planar(kind, a.num("x", kind == DomainKind::UnitDisk ? 0.0 : 0.5),
                              a.num("y", kind == DomainKind::UnitDisk ? 0.0 : 0.5),
                              a.num("angle", 0.0), 0.0);
    case DomainKind::UnitSphere: {
      RayParams rp;
      rp.family = RayFamily::SphereCircle;
      rp.p[0] = a.num("node", 0.0);
      rp.p[1] = a.num("incl", 0.0);
      rp.p[2] = a.num("phase", 0.0);
      rp.i0 = a.integer("orient", 1);
      return rp.to_state(kind);
    }
  }
  throw std::logic_error("ray_from_args: bad kind");
}

std::vector<Point> sample_polyline(const RayState& state, double T, int n) {
  PathEval pe(state);
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i) pts.push_back(pe.at(T * i / n));
  return pts;
}

void emit_svg(const SweepConfig& cfg, const MovingDomainSpec& spec, double T,
              const RayState* state, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream os(cfg.out_dir + "/" + name);
  if (spec.kind == DomainKind::Interval01) {
    std::vector<double> starts;
    if (state) starts.push_back(state->pos.x());
    write_svg_interval(os, spec, T, starts);
  } else {
    std::vector<Point> poly;
    if (state) poly = sample_polyline(*state, std::min(T, 20.0), 800);
    write_svg_planar(os, MovingRegion(spec), T, poly);
  }
}

InitialData1D data_from_args(const Args& a) {
  std::string d = a.str("data", "eigenmode:1");
  std::vector<std::string> parts;
  std::string cell;
  std::istringstream is(d);
  while (std::getline(is, cell, ':')) parts.push_back(cell);
  if (parts[0] == "eigenmode" && parts.size() == 2)
    return InitialData1D::eigenmode(to_int("data", parts[1]));
  if (parts[0] == "packet" && parts.size() == 4)
    return InitialData1D::packet(to_double("data", parts[1]),
                                 to_int("data", parts[2]),
                                 to_double("data", parts[3]));
  throw ConfigError("bad data spec (eigenmode:k | packet:x0:dir:sigma): " + d);
}

int cmd_trace(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "x0", "dir", "x", "y", "angle", "node", "incl", "phase",
                 "orient", "gliding", "s0", "ccw"});
  MovingDomainSpec spec = spec_from_args(cfg.args);
  double T = a.num("T", 10.0);
  RayState state = ray_from_args(spec.kind, a);
  Trace tr = trace(state, T);
  log << "trace: " << tr.events.size() << " bounces over T=" << T << "\n";
  for (const auto& ev : tr.events)
    log << "  t=" << ev.t << " s=" << ev.s
        << (ev.corner ? " corner" : (ev.transversal ? "" : " glancing"))
        << "\n";
  if (cfg.svg) emit_svg(cfg, spec, T, &state, "trace.svg");
  return 0;
}

int cmd_check(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "timing"});
  MovingDomainSpec spec = spec_from_args(cfg.args);
  double T = a.req("T");
  RaySampling sampling = make_sampling(spec.kind, cfg.seed);
  MovingRegion region(spec);
  auto t0c = std::chrono::steady_clock::now();
  TgccVerdict vd = spec.mode == RegionMode::Boundary
                       ? check_tgcc_boundary(region, T, sampling)
                       : check_tgcc(region, T, sampling);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0c)
                  .count();
  write_rows(cfg.out_dir, "check.csv",
             {row_from(spec, vd, a.integer("timing", 0) != 0, ms)});
  log << "check: " << (vd.satisfied ? "satisfied" : "violated")
      << " status=" << vd.status << " worst=" << vd.worst_ray.label() << "\n";
  if (cfg.svg) {
    RayState ws = vd.worst_ray.to_state(spec.kind);
    emit_svg(cfg, spec, T, &ws, "check.svg");
  }
  return vd.satisfied ? 0 : 1;
}

int cmd_t0(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "timing"});
  MovingDomainSpec spec = spec_from_args(cfg.args);
  double horizon = a.num("T", 100.0);
  RaySampling sampling = make_sampling(spec.kind, cfg.seed);
  auto t0c = std::chrono::steady_clock::now();
  TgccVerdict vd = estimate_T0(MovingRegion(spec), sampling, horizon);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0c)
                  .count();
  write_rows(cfg.out_dir, "t0.csv",
             {row_from(spec, vd, a.integer("timing", 0) != 0, ms)});
  log << "t0: estimate=" << vd.t0_estimate << " status=" << vd.status
      << " margin=" << vd.margin << " worst=" << vd.worst_ray.label() << "\n";
  if (cfg.svg) {
    RayState ws = vd.worst_ray.to_state(spec.kind);
    emit_svg(cfg, spec, std::min(horizon, vd.t0_estimate * 1.25 + 1.0), &ws,
             "t0.svg");
  }
  return 0;
}

int cmd_sweep(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "timing"});
  double horizon = a.num("T", 100.0);
  bool timing = a.integer("timing", 0) != 0;
  std::vector<double> vs = parse_range(a.str("v", "0"));
  std::vector<double> as = parse_range(a.str("a", "0.25"));
  std::vector<double> es = parse_range(a.str("eps", "0.1"));
  std::vector<double> ds = parse_range(a.str("delta", "0"));
  struct Cell {
    double v, a, eps, delta;
  };
  std::vector<Cell> grid;
  for (double v : vs)
    for (double aa : as)
      for (double e : es)
        for (double d : ds) grid.push_back({v, aa, e, d});
  std::vector<CsvRow> rows(grid.size());
  auto work = [&](size_t i) {
    auto kv = cfg.args;
    char buf[40];
    auto put = [&](const char* k, double x) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      kv[k] = buf;
    };
    put("v", grid[i].v);
    put("a", grid[i].a);
    put("eps", grid[i].eps);
    put("delta", grid[i].delta);
    MovingDomainSpec spec = spec_from_args(kv);
    RaySampling sampling = make_sampling(spec.kind, cfg.seed);
    auto t0c = std::chrono::steady_clock::now();
    TgccVerdict vd = estimate_T0(MovingRegion(spec), sampling, horizon);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0c)
                    .count();
    rows[i] = row_from(spec, vd, timing, ms);
  };
  int threads = std::max(1, cfg.threads);
  if (threads == 1 || grid.size() < 2) {
    for (size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < grid.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }
  write_rows(cfg.out_dir, "sweep.csv", rows);
  log << "sweep: " << rows.size() << " rows\n";
  return 0;
}

int cmd_counterexample(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"kind", "p", "q", "n", "num", "den", "v_target", "horizon",
                 "file"});
  CounterexampleRequest req;
  std::string kind = a.str("kind", "sphere");
  if (kind == "sphere")
    req.kind = ObstructionKind::SphereRationalSpeed;
  else if (kind == "disk_polygon")
    req.kind = ObstructionKind::DiskPolygonResonance;
  else if (kind == "disk_ccw")
    req.kind = ObstructionKind::DiskPrecessionCcw;
  else if (kind == "disk_cw")
    req.kind = ObstructionKind::DiskPrecessionCw;
  else if (kind == "square")
    req.kind = ObstructionKind::SquareRationalSlope;
  else
    throw ConfigError("unknown counterexample kind: " + kind);
  req.p = a.integer("p", 1);
  req.q = a.integer("q", 1);
  req.n = a.integer("n", 2);
  req.num = a.integer("num", 1);
  req.den = a.integer("den", 1);
  req.v_target = a.num("v_target", 0.0);
  req.horizon = a.num("horizon", 200.0);
  Counterexample ce = make_counterexample(req);
  std::filesystem::create_directories(cfg.out_dir);
  std::string file = a.str("file", "counterexample.txt");
  std::ofstream os(cfg.out_dir + "/" + file);
  save_counterexample(ce, os);
  log << "counterexample: v=" << ce.v << " clearance=" << ce.clearance
      << " a0=" << ce.a0 << " eps0=" << ce.eps0 << " ray=" << ce.ray.label()
      << " -> " << cfg.out_dir << "/" << file << "\n";
  return 0;
}

int cmd_replay(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"file"});
  std::string file = a.str("file", "");
  if (file.empty()) throw ConfigError("missing required key: file");
  std::ifstream is(file);
  if (!is) throw ConfigError("cannot open replay file: " + file);
  Counterexample ce = load_counterexample(is);
  MovingRegion region = ce.region();
  HitResult hr =
      first_hit_time(region, ce.ray.to_state(ce.geometry), ce.horizon);
  if (hr.status == HitStatus::None) {
    log << "no hit over horizon " << ce.horizon
        << " (clearance " << ce.clearance << ")\n";
    return 0;
  }
  log << "hit at t=" << hr.t << "\n";
  return 1;
}

int cmd_wave1d(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "data", "fit", "grid_n", "horizon"});
  MovingDomainSpec spec = spec_from_args(cfg.args);
  if (spec.kind != DomainKind::Interval01)
    throw ConfigError("wave1d requires domain=interval");
  InitialData1D data = data_from_args(a);
  if (a.integer("fit", 0) != 0) {
    DecayFit fit = damped_decay_rate(spec, data, a.integer("grid_n", 512),
                                     a.num("horizon", 60.0));
    log << "decay fit: nu=" << fit.nu << " mu=" << fit.mu
        << " residual=" << fit.residual << " samples=" << fit.energies.size()
        << "\n";
    return 0;
  }
  double T = a.req("T");
  ObservedEnergyReport rep = observed_energy(data, spec, T);
  log << "observed=" << rep.observed << " total=" << rep.total
      << " ratio=" << rep.ratio << " quad_error=" << rep.quad_error << "\n";
  if (cfg.svg) emit_svg(cfg, spec, T, nullptr, "wave1d.svg");
  return 0;
}

int cmd_shell(const SweepConfig& cfg, std::ostream& log) {
  Args a{cfg.args};
  a.check_known({"T", "h", "T_check"});
  MovingDomainSpec spec = spec_from_args(cfg.args);
  ShellSpec ss;
  ss.base = spec;
  ss.T = a.req("T");
  ss.h = a.req("h");
  MovingRegion region = boundary_shell(ss);
  double Tc = a.num("T_check", 2.0 * ss.T);
  RaySampling sampling = make_sampling(spec.kind, cfg.seed);
  TgccVerdict vd = check_tgcc(region, Tc, sampling);
  log << "shell check at T=" << Tc << ": "
      << (vd.satisfied ? "satisfied" : "violated") << " status=" << vd.status
      << "\n";
  return vd.satisfied ? 0 : 1;
}

}  // namespace

int run(const SweepConfig& cfg, std::ostream& log) {
  try {
    if (cfg.command == "trace") return cmd_trace(cfg, log);
    if (cfg.command == "check") return cmd_check(cfg, log);
    if (cfg.command == "t0") return cmd_t0(cfg, log);
    if (cfg.command == "sweep") return cmd_sweep(cfg, log);
    if (cfg.command == "counterexample") return cmd_counterexample(cfg, log);
    if (cfg.command == "replay") return cmd_replay(cfg, log);
    if (cfg.command == "wave1d") return cmd_wave1d(cfg, log);
    if (cfg.command == "shell") return cmd_shell(cfg, log);
    log << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tgcc
