#include "tgcc/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tgcc {

const char* kCsvHeader =
    "geometry,mode,v,a,eps,delta,T,t0_estimate,status,worst_ray,wall_ms";

namespace {

std::string num(const std::optional<double>& x) {
  if (!x) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", *x);
  return buf;
}

std::optional<double> parse_num(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

std::string csv_format(const CsvRow& r) {
  std::string out;
  out += r.geometry;
  out += ',';
  out += r.mode;
  out += ',';
  out += num(r.v);
  out += ',';
  out += num(r.a);
  out += ',';
  out += num(r.eps);
  out += ',';
  out += num(r.delta);
  out += ',';
  out += num(r.T);
  out += ',';
  out += num(r.t0_estimate);
  out += ',';
  out += r.status;
  out += ',';
  out += r.worst_ray;
  out += ',';
  out += num(r.wall_ms);
  return out;
}

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_format(r) << '\n';
}

std::vector<CsvRow> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("csv: empty input");
  if (line != kCsvHeader) throw std::runtime_error("csv: bad header");
  std::vector<CsvRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    while (f.size() < 11) f.push_back("");
    if (f.size() != 11) throw std::runtime_error("csv: bad field count");
    CsvRow r;
    r.geometry = f[0];
    r.mode = f[1];
    r.v = parse_num(f[2]);
    r.a = parse_num(f[3]);
    r.eps = parse_num(f[4]);
    r.delta = parse_num(f[5]);
    r.T = parse_num(f[6]);
    r.t0_estimate = parse_num(f[7]);
    r.status = f[8];
    r.worst_ray = f[9];
    r.wall_ms = parse_num(f[10]);
    rows.push_back(r);
  }
  return rows;
}

std::string kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::Interval01:
      return "interval";
    case DomainKind::UnitDisk:
      return "disk";
    case DomainKind::UnitSquare:
      return "square";
    case DomainKind::UnitSphere:
      return "sphere";
  }
  throw std::logic_error("kind_name: bad kind");
}

DomainKind kind_from_name(const std::string& name) {
  if (name == "interval") return DomainKind::Interval01;
  if (name == "disk") return DomainKind::UnitDisk;
  if (name == "square") return DomainKind::UnitSquare;
  if (name == "sphere") return DomainKind::UnitSphere;
  throw std::invalid_argument("unknown geometry: " + name);
}

namespace {

constexpr int kW = 640, kH = 480;

void svg_open(std::ostream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
     << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH
     << "\">\n<rect width=\"" << kW << "\" height=\"" << kH
     << "\" fill=\"white\"/>\n";
}

void svg_close(std::ostream& os) { os << "</svg>\n"; }

std::string pt(double x, double y) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f,%.2f", x, y);
  return buf;
}

}  // namespace

void write_svg_interval(std::ostream& os, const MovingDomainSpec& spec,
                        double T, const std::vector<double>& ray_starts) {
  svg_open(os);
  const double mx = 60, my = 30;
  auto X = [&](double x) { return mx + x * (kW - 2 * mx); };
  auto Y = [&](double t) { return kH - my - (t / T) * (kH - 2 * my); };
  // shaded window
  const int N = 600;
  for (int i = 0; i < N; ++i) {
    double t0 = T * i / N, t1 = T * (i + 1) / N;
    double lo = spec.window_start(0.5 * (t0 + t1));
    double hi = std::min(lo + spec.a, 1.0);
    lo = std::max(lo, 0.0);
    os << "<rect x=\"" << X(lo) << "\" y=\"" << Y(t1) << "\" width=\""
       << (X(hi) - X(lo)) << "\" height=\"" << (Y(t0) - Y(t1))
       << "\" fill=\"#9ecae1\" stroke=\"none\"/>\n";
  }
  os << "<rect x=\"" << X(0) << "\" y=\"" << Y(T) << "\" width=\""
     << (X(1) - X(0)) << "\" height=\"" << (Y(0) - Y(T))
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  // characteristics with reflections, both directions
  for (double x0 : ray_starts) {
    for (int dir : {1, -1}) {
      os << "<polyline fill=\"none\" stroke=\""
         << (dir > 0 ? "#d62728" : "#2ca02c") << "\" points=\"";
      const int M = 400;
      for (int i = 0; i <= M; ++i) {
        double t = T * i / M;
        os << pt(X(fold(x0 + dir * t)), Y(t)) << ' ';
      }
      os << "\"/>\n";
    }
  }
  svg_close(os);
}

void write_svg_planar(std::ostream& os, const MovingRegion& region, double T,
                      const std::vector<Point>& ray_polyline) {
  svg_open(os);
  DomainKind kind = region.kind();
  auto X = [&](double x) { return kW / 2.0 + x * 200.0; };
  auto Y = [&](double y) { return kH / 2.0 - y * 200.0; };
  auto Xs = [&](double x) { return kW / 2.0 + (x - 0.5) * 400.0; };
  auto Ys = [&](double y) { return kH / 2.0 - (y - 0.5) * 400.0; };
  bool square = kind == DomainKind::UnitSquare;
  if (square) {
    os << "<rect x=\"" << Xs(0) << "\" y=\"" << Ys(1) << "\" width=\"400\" "
       << "height=\"400\" fill=\"none\" stroke=\"black\"/>\n";
  } else {
    os << "<circle cx=\"" << kW / 2.0 << "\" cy=\"" << kH / 2.0
       << "\" r=\"200\" fill=\"none\" stroke=\"black\"/>\n";
  }
  // region snapshots at a few times: probe on a grid, mark covered points
  for (int snap = 0; snap < 3; ++snap) {
    double t = T * snap / 2.0;
    const char* col = snap == 0 ? "#9ecae1" : (snap == 1 ? "#fdae6b" : "#a1d99b");
    const int G = 60;
    for (int i = 0; i <= G; ++i)
      for (int j = 0; j <= G; ++j) {
        double px, py, pz = 0;
        if (square) {
          px = double(i) / G;
          py = double(j) / G;
        } else {
          px = 2.0 * i / G - 1.0;
          py = 2.0 * j / G - 1.0;
          if (px * px + py * py > 1.0) continue;
          if (kind == DomainKind::UnitSphere) {
            double r2 = px * px + py * py;
            pz = std::sqrt(std::max(0.0, 1.0 - r2));
            double s = std::sqrt(px * px + py * py + pz * pz);
            px /= s;
            py /= s;
            pz /= s;
          }
        }
        Point p = square ? Point::of2d(px, py)
                         : (kind == DomainKind::UnitSphere
                                ? Point::of3d(px, py, pz)
                                : Point::of2d(px, py));
        if (!region.contains(t, p)) continue;
        double cx = square ? Xs(px) : X(px);
        double cy = square ? Ys(py) : Y(py);
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy
           << "\" r=\"1.5\" fill=\"" << col << "\"/>\n";
      }
  }
  if (!ray_polyline.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#d62728\" points=\"";
    for (const Point& p : ray_polyline) {
      double cx = square ? Xs(p.x()) : X(p.x());
      double cy = square ? Ys(p.y()) : Y(p.y());
      os << pt(cx, cy) << ' ';
    }
    os << "\"/>\n";
  }
  svg_close(os);
}

}  // namespace tgcc
