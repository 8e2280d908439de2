#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nem/welfare.hpp"

namespace nem {

enum class SeriesKind { Price, Generation };

struct TimeSeriesRow {
  std::int64_t epoch_seconds = 0;  // timestamp on a civil UTC clock
  std::string timestamp;           // original ISO-8601 text
  double value = 0.0;              // $/kWh for prices, kWh for generation
};

// Parses a `timestamp,value` CSV. Timestamps must be ISO-8601
// (YYYY-MM-DDTHH:MM[:SS], 'T' or space separator, optional trailing 'Z') and
// strictly increasing; generation values must be non-negative. Errors name
// the offending line.
std::vector<TimeSeriesRow> load_timeseries(const std::filesystem::path& path,
                                           SeriesKind kind);

// Buckets both series into resample_hours-wide bins (mean price, summed
// generation) and joins them on the bins covered by both series, equally
// weighted. resample_hours must divide 24.
ScenarioSet build_scenarios(const std::vector<TimeSeriesRow>& prices,
                            const std::vector<TimeSeriesRow>& generation,
                            int resample_hours);

}  // namespace nem
