#include "ocelf/timeseries.hpp"

#include <cmath>

#include "ocelf/error.hpp"
#include "ocelf/text.hpp"

namespace ocelf {

SeriesAggregation parse_series_aggregation(std::string_view text) {
  if (text == "avg") return SeriesAggregation::kAvg;
  if (text == "sum") return SeriesAggregation::kSum;
  if (text == "count") return SeriesAggregation::kCount;
  throw Error(ErrorCode::kInvalidSpec, "unknown aggregation '" + std::string(text) + "' (avg, sum or count)");
}

std::vector<SeriesPoint> sublog_timeseries(const EventLog& log, double window, const FeatureSpec& spec,
                                           SeriesAggregation agg) {
  if (!(window > 0.0) || !std::isfinite(window)) {
    throw Error(ErrorCode::kInvalidSpec, "window must be a positive number of seconds");
  }
  if (!is_event_local(spec)) {
    throw Error(ErrorCode::kUnsupportedSpec,
                "feature '" + to_string(spec) + "' needs an execution context; time series take event-local features");
  }
  if (is_family(spec)) {
    throw Error(ErrorCode::kInvalidSpec, "feature family '" + to_string(spec) + "' needs a concrete parameter");
  }
  if (log.event_count() == 0) return {};

  FeatureEngine engine(log);
  const Timestamp origin = log.complete_time(EventIndex(std::size_t{0}));
  const Timestamp last = log.complete_time(EventIndex(log.event_count() - 1));
  const auto windows = static_cast<std::size_t>(std::floor((last - origin) / window)) + 1;

  struct Bucket {
    std::size_t events = 0;
    std::size_t defined = 0;
    std::size_t nonzero = 0;
    double sum = 0.0;
  };
  std::vector<Bucket> buckets(windows);
  for (std::size_t i = 0; i < log.event_count(); ++i) {
    EventIndex e(i);
    auto slot = static_cast<std::size_t>(std::floor((log.complete_time(e) - origin) / window));
    slot = std::min(slot, windows - 1);
    auto& b = buckets[slot];
    ++b.events;
    if (auto v = engine.compute_local(e, spec)) {
      ++b.defined;
      b.sum += *v;
      b.nonzero += *v != 0.0;
    }
  }

  std::vector<SeriesPoint> out;
  out.reserve(windows);
  for (std::size_t w = 0; w < windows; ++w) {
    const auto& b = buckets[w];
    SeriesPoint p{origin + static_cast<double>(w) * window, std::nullopt};
    if (b.events > 0) {
      switch (agg) {
        case SeriesAggregation::kAvg:
          if (b.defined) p.value = b.sum / static_cast<double>(b.defined);
          break;
        case SeriesAggregation::kSum:
          if (b.defined) p.value = b.sum;
          break;
        case SeriesAggregation::kCount:
          p.value = static_cast<double>(b.nonzero);
          break;
      }
    }
    out.push_back(p);
  }
  return out;
}

std::string timeseries_to_csv(const std::vector<SeriesPoint>& series) {
  std::string out = "window_start,value\n";
  for (const auto& p : series) {
    out += format_iso8601(p.window_start);
    out += ',';
    if (p.value) out += format_number(*p.value);
    out += '\n';
  }
  return out;
}

}  // namespace ocelf
