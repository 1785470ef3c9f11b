#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tgcc/harness.hpp"

using namespace tgcc;

namespace {

// strict well-formedness scan: declaration, quoted attributes, balanced tags
bool xml_well_formed(const std::string& s) {
  size_t i = 0;
  std::vector<std::string> stack;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  if (s.compare(i, 5, "<?xml") == 0) {
    size_t end = s.find("?>", i);
    if (end == std::string::npos) return false;
    i = end + 2;
  }
  while (i < s.size()) {
    if (std::isspace((unsigned char)s[i])) {
      ++i;
      continue;
    }
    if (s[i] != '<') {
      if (stack.empty()) return false;  // text outside the root
      ++i;
      continue;
    }
    ++i;
    bool closing = i < s.size() && s[i] == '/';
    if (closing) ++i;
    size_t name_start = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == ':' ||
                            s[i] == '-' || s[i] == '_'))
      ++i;
    std::string name = s.substr(name_start, i - name_start);
    if (name.empty()) return false;
    bool self_close = false;
    // attributes
    while (i < s.size() && s[i] != '>') {
      if (s[i] == '/') {
        self_close = true;
        ++i;
        continue;
      }
      if (s[i] == '"') {
        size_t end = s.find('"', i + 1);
        if (end == std::string::npos) return false;
        i = end + 1;
        continue;
      }
      ++i;
    }
    if (i >= s.size()) return false;
    ++i;  // consume '>'
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_close) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("key=value argument parsing") {
  SweepConfig cfg;
  apply_kv_args(cfg, {"t0", "domain=interval", "v=0.5", "a=0.25"});
  CHECK(cfg.command == "t0");
  CHECK(cfg.args.at("v") == "0.5");
  CHECK_THROWS_AS(apply_kv_args(cfg, {"extra_bare"}), ConfigError);
}

TEST_CASE("config file parsing with sections and overrides") {
  std::string path = "/tmp/tgcc_test_config.ini";
  {
    std::ofstream os(path);
    os << "# comment\n[domain]\ndomain = interval\nv = 0.5\na = 0.25\n"
       << "[command]\ncommand = t0\nT = 20\n";
  }
  SweepConfig cfg;
  apply_kv_args(cfg, {"v=0.75"});  // CLI wins over the file
  apply_config_file(cfg, path);
  CHECK(cfg.command == "t0");
  CHECK(cfg.args.at("v") == "0.75");
  CHECK(cfg.args.at("a") == "0.25");
  CHECK(cfg.args.at("T") == "20");
  CHECK_THROWS_AS(apply_config_file(cfg, "/nonexistent/x.ini"), ConfigError);
}

TEST_CASE("range parsing") {
  auto r = parse_range("0.1:0.5:0.2");
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(0.1));
  CHECK(r[2] == doctest::Approx(0.5));
  auto single = parse_range("2.5");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(2.5));
  CHECK_THROWS_AS(parse_range("1:2"), ConfigError);
  CHECK_THROWS_AS(parse_range("1:2:-0.5"), ConfigError);
}

TEST_CASE("spec construction infers the motion law") {
  std::map<std::string, std::string> kv{{"domain", "interval"},
                                        {"v", "0.5"},
                                        {"a", "0.25"}};
  MovingDomainSpec s = spec_from_args(kv);
  CHECK((s.law == MotionLaw::Reflecting1D));
  kv["v"] = "0";
  s = spec_from_args(kv);
  CHECK((s.law == MotionLaw::Static));
  kv["domain"] = "disk";
  kv["v"] = "2";
  s = spec_from_args(kv);
  CHECK((s.law == MotionLaw::ConstantSpeed));
  kv["domain"] = "nowhere";
  CHECK_THROWS(spec_from_args(kv));
}

TEST_CASE("CSV round-trip") {
  std::vector<CsvRow> rows;
  CsvRow r;
  r.geometry = "disk";
  r.mode = "interior";
  r.v = 50.0;
  r.a = kPi / 2;
  r.eps = 0.1;
  r.T = 30.0;
  r.t0_estimate = 1.84321;
  r.status = "finite";
  r.worst_ray = "disk_interior 0.5 1.25 2.75";
  rows.push_back(r);
  CsvRow empty;
  empty.geometry = "interval";
  empty.mode = "interior";
  empty.status = "exceeded_horizon";
  rows.push_back(empty);
  std::stringstream ss;
  write_csv(ss, rows);
  std::vector<CsvRow> back = parse_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(csv_format(back[0]) == csv_format(rows[0]));
  CHECK(csv_format(back[1]) == csv_format(rows[1]));
  CHECK(!back[1].v.has_value());
  CHECK(!back[1].wall_ms.has_value());
  // empty cells never serialize as NaN
  CHECK(ss.str().find("nan") == std::string::npos);
}

TEST_CASE("SVG emitters are well-formed XML") {
  MovingDomainSpec s;
  s.kind = DomainKind::Interval01;
  s.law = MotionLaw::Reflecting1D;
  s.v = 0.5;
  s.a = 0.25;
  std::stringstream one;
  write_svg_interval(one, s, 6.0, {0.25, 0.8});
  CHECK(xml_well_formed(one.str()));

  MovingDomainSpec d;
  d.kind = DomainKind::UnitDisk;
  d.law = MotionLaw::ConstantSpeed;
  d.v = 1.0;
  d.a = 1.0;
  d.eps = 0.2;
  std::vector<Point> poly;
  for (int i = 0; i <= 100; ++i) {
    double th = kTwoPi * 3.0 * i / 100.0;
    poly.push_back(Point::of2d(std::cos(th) * 0.9, std::sin(th) * 0.9));
  }
  std::stringstream two;
  write_svg_planar(two, MovingRegion(d), 3.0, poly);
  CHECK(xml_well_formed(two.str()));

  // empty trace still yields a valid document with the outline
  std::stringstream three;
  write_svg_planar(three, MovingRegion(d), 3.0, {});
  CHECK(xml_well_formed(three.str()));
  CHECK(three.str().find("circle") != std::string::npos);
}

TEST_CASE("t0 command matches the 1D closed form") {
  SweepConfig cfg;
  cfg.command = "t0";
  cfg.out_dir = "/tmp/tgcc_test_t0";
  apply_kv_args(cfg, {"domain=interval", "v=0.5", "a=0.25", "delta=0",
                      "T=20"});
  std::stringstream log;
  int rc = run(cfg, log);
  CHECK(rc == 0);
  std::ifstream csv(cfg.out_dir + "/t0.csv");
  auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].t0_estimate.has_value());
  CHECK(*rows[0].t0_estimate == doctest::Approx(1.0).epsilon(0.02));
  CHECK(rows[0].status == "finite");
  CHECK(!rows[0].wall_ms.has_value());
}

TEST_CASE("check command exit codes") {
  SweepConfig cfg;
  cfg.command = "check";
  cfg.out_dir = "/tmp/tgcc_test_check";
  apply_kv_args(cfg, {"domain=disk", "v=0", "a=6.2832", "eps=0.2", "T=1.5"});
  std::stringstream log;
  CHECK(run(cfg, log) == 1);  // T below the static ring control time 1.6
  cfg.args["T"] = "1.7";
  CHECK(run(cfg, log) == 0);
}

TEST_CASE("unknown keys give exit code 2") {
  SweepConfig cfg;
  cfg.command = "t0";
  apply_kv_args(cfg, {"domain=interval", "v=0.5", "a=0.25", "bogus=1"});
  std::stringstream log;
  CHECK(run(cfg, log) == 2);
  CHECK(log.str().find("bogus") != std::string::npos);
}

TEST_CASE("counterexample then replay") {
  SweepConfig cfg;
  cfg.command = "counterexample";
  cfg.out_dir = "/tmp/tgcc_test_ce";
  apply_kv_args(cfg, {"kind=square", "p=0", "q=1", "num=1", "den=2",
                      "horizon=200", "file=ce.txt"});
  std::stringstream log;
  REQUIRE(run(cfg, log) == 0);
  SweepConfig rep;
  rep.command = "replay";
  rep.args["file"] = cfg.out_dir + "/ce.txt";
  std::stringstream rlog;
  CHECK(run(rep, rlog) == 0);
  CHECK(rlog.str().find("no hit over horizon") != std::string::npos);
}

TEST_CASE("sweep determinism: identical config gives identical bytes") {
  auto run_once = [](const std::string& dir) {
    SweepConfig cfg;
    cfg.command = "sweep";
    cfg.out_dir = dir;
    cfg.seed = 9;
    apply_kv_args(cfg,
                  {"domain=interval", "v=0.25:0.75:0.25", "a=0.25", "T=30"});
    std::stringstream log;
    REQUIRE(run(cfg, log) == 0);
  };
  run_once("/tmp/tgcc_det_a");
  run_once("/tmp/tgcc_det_b");
  std::string a = slurp("/tmp/tgcc_det_a/sweep.csv");
  std::string b = slurp("/tmp/tgcc_det_b/sweep.csv");
  REQUIRE(!a.empty());
  CHECK(a == b);
  std::stringstream sa(a);
  auto rows = parse_csv(sa);
  CHECK(rows.size() == 3);  // lexicographic grid, one row per point
}

TEST_CASE("wave1d command reports the observability ratio") {
  SweepConfig cfg;
  cfg.command = "wave1d";
  cfg.out_dir = "/tmp/tgcc_test_w";
  apply_kv_args(cfg, {"domain=interval", "v=0", "a=1", "data=eigenmode:1",
                      "T=2"});
  std::stringstream log;
  CHECK(run(cfg, log) == 0);
  CHECK(log.str().find("ratio=1") != std::string::npos);
}

TEST_CASE("shell command verifies the few-sensors region") {
  SweepConfig cfg;
  cfg.command = "shell";
  apply_kv_args(cfg, {"domain=interval", "v=0", "a=0.25", "start=0.3",
                      "T=2", "h=0.02", "T_check=4"});
  std::stringstream log;
  CHECK(run(cfg, log) == 0);
  CHECK(log.str().find("satisfied") != std::string::npos);
}
