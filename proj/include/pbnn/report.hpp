#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pbnn/evolve.hpp"
#include "pbnn/state.hpp"

namespace pbnn {

// Cumulative period distribution of an archive: for each observed period x,
// the number of counted items with period <= x.
struct PeriodDistribution {
  std::vector<std::pair<std::int64_t, std::int64_t>> points;  // (period, cumulative)
  std::int64_t p_max = 0;

  std::int64_t total() const {
    return points.empty() ? 0 : points.back().second;
  }
};

// Counts one unit per archive entry; with distinct_periods, one unit per
// distinct period value instead (the two readings of "distribution of
// periods" an archive supports).
PeriodDistribution cumulative_distribution(const ExternalPopulation& ep,
                                           bool distinct_periods = false);
PeriodDistribution cumulative_distribution(std::vector<std::int64_t> periods,
                                           bool distinct_periods = false);

// Space-time raster of a trajectory: rows are time steps, columns are
// neurons 1..n left to right, '#' for +1 and '.' for -1.
std::string raster_text(const std::vector<BinaryState>& trajectory);

// Same grid as a portable bitmap (P1); +1 renders as a set pixel. Comment
// lines are embedded after the magic number.
std::string raster_pbm(const std::vector<BinaryState>& trajectory,
                       const std::vector<std::string>& comments = {});

// Two-column CSV `period,cumulative_count`, ascending, with a header row;
// `comments` become leading '#' lines.
void write_distribution_csv(const PeriodDistribution& d, std::ostream& out,
                            const std::vector<std::string>& comments = {});

// Inverse of write_distribution_csv; '#' lines are skipped.
PeriodDistribution read_distribution_csv(std::istream& in);

}  // namespace pbnn
