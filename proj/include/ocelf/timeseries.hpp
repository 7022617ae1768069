#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocelf/event_log.hpp"
#include "ocelf/features.hpp"

namespace ocelf {

enum class SeriesAggregation { kAvg, kSum, kCount };

/// Throws InvalidSpec for anything but "avg", "sum" or "count".
SeriesAggregation parse_series_aggregation(std::string_view text);

struct SeriesPoint {
  Timestamp window_start = 0.0;
  FeatureValue value;

  bool operator==(const SeriesPoint&) const = default;
};

/// Splits the log into consecutive windows [start, start + window) aligned to
/// its earliest completion time and aggregates an event-local feature over
/// the events completing in each window. avg and sum use the defined values;
/// count is the number of events with a defined non-zero value. Windows
/// without events, or without any defined value for avg/sum, are missing.
/// Throws UnsupportedSpec for features needing an execution and InvalidSpec
/// for families or a non-positive window.
std::vector<SeriesPoint> sublog_timeseries(const EventLog& log, double window, const FeatureSpec& spec,
                                           SeriesAggregation agg);

/// Two columns: window_start (ISO-8601) and value.
std::string timeseries_to_csv(const std::vector<SeriesPoint>& series);

}  // namespace ocelf
