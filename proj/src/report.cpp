#include "pbnn/report.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pbnn {

PeriodDistribution cumulative_distribution(std::vector<std::int64_t> periods,
                                           bool distinct_periods) {
  PeriodDistribution d;
  if (periods.empty()) return d;
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t p : periods) counts[p] += 1;
  std::int64_t running = 0;
  for (const auto& [period, count] : counts) {
    running += distinct_periods ? 1 : count;
    d.points.emplace_back(period, running);
  }
  d.p_max = counts.rbegin()->first;
  return d;
}

PeriodDistribution cumulative_distribution(const ExternalPopulation& ep,
                                           bool distinct_periods) {
  std::vector<std::int64_t> periods;
  periods.reserve(ep.size());
  for (const ArchiveEntry& e : ep.entries()) periods.push_back(e.period);
  return cumulative_distribution(std::move(periods), distinct_periods);
}

std::string raster_text(const std::vector<BinaryState>& trajectory) {
  if (trajectory.empty()) {
    throw std::invalid_argument("raster needs a non-empty trajectory");
  }
  std::string out;
  const int n = trajectory.front().n();
  out.reserve(trajectory.size() * static_cast<std::size_t>(n + 1));
  for (const BinaryState& x : trajectory) {
    for (int i = 1; i <= n; ++i) out += (x.component(i) > 0) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::string raster_pbm(const std::vector<BinaryState>& trajectory,
                       const std::vector<std::string>& comments) {
  if (trajectory.empty()) {
    throw std::invalid_argument("raster needs a non-empty trajectory");
  }
  const int n = trajectory.front().n();
  std::ostringstream out;
  out << "P1\n";
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << n << " " << trajectory.size() << "\n";
  for (const BinaryState& x : trajectory) {
    for (int i = 1; i <= n; ++i) {
      if (i > 1) out << ' ';
      out << ((x.component(i) > 0) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

void write_distribution_csv(const PeriodDistribution& d, std::ostream& out,
                            const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "period,cumulative_count\n";
  for (const auto& [period, cumulative] : d.points) {
    out << period << "," << cumulative << "\n";
  }
}

PeriodDistribution read_distribution_csv(std::istream& in) {
  PeriodDistribution d;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "period,cumulative_count") {
        throw ParseError("expected header 'period,cumulative_count', got '" +
                             line + "'",
                         line_no);
      }
      header_seen = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("malformed distribution row '" + line + "'", line_no);
    }
    try {
      d.points.emplace_back(std::stoll(line.substr(0, comma)),
                            std::stoll(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ParseError("malformed distribution row '" + line + "'", line_no);
    }
  }
  if (!header_seen) throw ParseError("missing distribution header", line_no);
  if (!d.points.empty()) d.p_max = d.points.back().first;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    if (i > 0 && (d.points[i].first <= d.points[i - 1].first ||
                  d.points[i].second < d.points[i - 1].second)) {
      throw ParseError("distribution rows must be ascending", i);
    }
  }
  return d;
}

}  // namespace pbnn
