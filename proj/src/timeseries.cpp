#include "nem/timeseries.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

#include "nem/errors.hpp"

namespace nem {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, int month, int day) {
  year -= month <= 2;
  const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(year - era * 400);
  const unsigned doy =
      (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
      static_cast<unsigned>(day) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool all_digits(const std::string& text, std::size_t begin, std::size_t count) {
  if (begin + count > text.size()) {
    return false;
  }
  for (std::size_t i = begin; i < begin + count; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      return false;
    }
  }
  return true;
}

int to_int(const std::string& text, std::size_t begin, std::size_t count) {
  int value = 0;
  for (std::size_t i = begin; i < begin + count; ++i) {
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

// YYYY-MM-DDTHH:MM[:SS], 'T' or space separator, optional trailing 'Z'.
bool parse_iso8601(const std::string& text, std::int64_t* epoch_seconds) {
  std::string ts = text;
  if (!ts.empty() && ts.back() == 'Z') {
    ts.pop_back();
  }
  if (ts.size() != 16 && ts.size() != 19) {
    return false;
  }
  if (!all_digits(ts, 0, 4) || ts[4] != '-' || !all_digits(ts, 5, 2) || ts[7] != '-' ||
      !all_digits(ts, 8, 2) || (ts[10] != 'T' && ts[10] != ' ') ||
      !all_digits(ts, 11, 2) || ts[13] != ':' || !all_digits(ts, 14, 2)) {
    return false;
  }
  int seconds = 0;
  if (ts.size() == 19) {
    if (ts[16] != ':' || !all_digits(ts, 17, 2)) {
      return false;
    }
    seconds = to_int(ts, 17, 2);
  }
  const int year = to_int(ts, 0, 4);
  const int month = to_int(ts, 5, 2);
  const int day = to_int(ts, 8, 2);
  const int hour = to_int(ts, 11, 2);
  const int minute = to_int(ts, 14, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
      seconds > 59) {
    return false;
  }
  *epoch_seconds = days_from_civil(year, month, day) * 86400 + hour * 3600 +
                   minute * 60 + seconds;
  return true;
}

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return text.substr(begin, end - begin);
}

std::int64_t floor_div(std::int64_t value, std::int64_t divisor) {
  std::int64_t quotient = value / divisor;
  if ((value % divisor) != 0 && (value < 0)) {
    --quotient;
  }
  return quotient;
}

}  // namespace

std::vector<TimeSeriesRow> load_timeseries(const std::filesystem::path& path,
                                           SeriesKind kind) {
  std::ifstream in(path);
  if (!in) {
    throw DataError(path.string() + ": cannot open file");
  }
  const std::string where = path.filename().string();

  std::string line;
  if (!std::getline(in, line)) {
    throw DataError(where + ": empty file");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (trim(line) != "timestamp,value") {
    throw DataError(where + ":1: expected header 'timestamp,value', got '" + line + "'");
  }

  std::vector<TimeSeriesRow> rows;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (trim(line).empty()) {
      continue;
    }
    const std::string at = where + ":" + std::to_string(line_number) + ": ";
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw DataError(at + "expected exactly two comma-separated fields");
    }
    TimeSeriesRow row;
    row.timestamp = trim(line.substr(0, comma));
    if (!parse_iso8601(row.timestamp, &row.epoch_seconds)) {
      throw DataError(at + "malformed timestamp '" + row.timestamp + "'");
    }
    const std::string value_text = trim(line.substr(comma + 1));
    char* parse_end = nullptr;
    row.value = std::strtod(value_text.c_str(), &parse_end);
    if (value_text.empty() || parse_end != value_text.c_str() + value_text.size() ||
        !std::isfinite(row.value)) {
      throw DataError(at + "malformed value '" + value_text + "'");
    }
    if (kind == SeriesKind::Generation && row.value < 0.0) {
      throw DataError(at + "generation must be >= 0, got " + value_text);
    }
    if (!rows.empty() && row.epoch_seconds <= rows.back().epoch_seconds) {
      throw DataError(at + "timestamps must be strictly increasing");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw DataError(where + ": no data rows");
  }
  return rows;
}

ScenarioSet build_scenarios(const std::vector<TimeSeriesRow>& prices,
                            const std::vector<TimeSeriesRow>& generation,
                            int resample_hours) {
  if (resample_hours < 1 || resample_hours > 24 || 24 % resample_hours != 0) {
    throw DataError("build_scenarios: resample_hours must divide 24");
  }
  if (prices.empty() || generation.empty()) {
    throw DataError("build_scenarios: both series must be non-empty");
  }
  const std::int64_t width = 3600LL * resample_hours;

  struct PriceBucket {
    double sum = 0.0;
    int count = 0;
  };
  std::map<std::int64_t, PriceBucket> price_buckets;
  for (const TimeSeriesRow& row : prices) {
    PriceBucket& bucket = price_buckets[floor_div(row.epoch_seconds, width)];
    bucket.sum += row.value;
    bucket.count += 1;
  }
  std::map<std::int64_t, double> generation_buckets;
  for (const TimeSeriesRow& row : generation) {
    generation_buckets[floor_div(row.epoch_seconds, width)] += row.value;
  }

  ScenarioSet set;
  for (const auto& [bucket_id, price] : price_buckets) {
    const auto gen = generation_buckets.find(bucket_id);
    if (gen == generation_buckets.end()) {
      continue;
    }
    Scenario scen;
    scen.index = static_cast<int>(set.scenarios.size());
    scen.wholesale_price = price.sum / price.count;
    scen.renewable = gen->second;
    scen.hour = static_cast<int>((floor_div(bucket_id * width, 3600)) % 24);
    if (scen.hour < 0) {
      scen.hour += 24;
    }
    set.scenarios.push_back(scen);
  }
  if (set.scenarios.empty()) {
    throw DataError("build_scenarios: price and generation series do not overlap");
  }
  const double weight = 1.0 / static_cast<double>(set.scenarios.size());
  for (Scenario& scen : set.scenarios) {
    scen.weight = weight;
  }
  return set;
}

}  // namespace nem
