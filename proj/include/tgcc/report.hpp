#ifndef TGCC_REPORT_HPP
#define TGCC_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgcc/gcc.hpp"
#include "tgcc/obsdomain.hpp"

namespace tgcc {

/// One sweep result. Unset fields serialize as empty cells, never NaN.
struct CsvRow {
  std::string geometry, mode, status, worst_ray;
  std::optional<double> v, a, eps, delta, T, t0_estimate, wall_ms;
};

extern const char* kCsvHeader;  // fixed column order

std::string csv_format(const CsvRow& row);
void write_csv(std::ostream& os, const std::vector<CsvRow>& rows);
std::vector<CsvRow> parse_csv(std::istream& is);

std::string kind_name(DomainKind kind);
DomainKind kind_from_name(const std::string& name);

/// Space-time diagram of a 1D region with sample characteristics, or a 2D
/// domain outline with region snapshots and a traced ray polyline.
void write_svg_interval(std::ostream& os, const MovingDomainSpec& spec,
                        double T, const std::vector<double>& ray_starts);
void write_svg_planar(std::ostream& os, const MovingRegion& region, double T,
                      const std::vector<Point>& ray_polyline);

}  // namespace tgcc

#endif
