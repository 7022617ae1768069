#include "ocelf/features.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "ocelf/error.hpp"
#include "ocelf/parallel.hpp"
#include "ocelf/text.hpp"

namespace ocelf {

struct FeatureEngine::ResourceTimeline {
  // Completion times per resource value, ascending.
  std::map<std::string, std::vector<Timestamp>, std::less<>> times;
};

namespace {

std::optional<std::string> resource_text(const EventLog& log, EventIndex e, const std::string& attribute) {
  const auto* v = log.attribute(e, attribute);
  if (v == nullptr) return std::nullopt;
  if (const auto* s = as_string(*v)) return *s;
  return format_number(*as_number(*v));
}

std::size_t count_in_window(std::span<const Timestamp> sorted, Timestamp from, Timestamp to) {
  auto lo = std::lower_bound(sorted.begin(), sorted.end(), from);
  auto hi = std::upper_bound(sorted.begin(), sorted.end(), to);
  return hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
}

FeatureValue aggregate(const std::vector<double>& values, Aggregation agg) {
  if (values.empty()) return std::nullopt;
  switch (agg) {
    case Aggregation::kAvg:
      return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    case Aggregation::kSum: return std::accumulate(values.begin(), values.end(), 0.0);
    case Aggregation::kMin: return *std::min_element(values.begin(), values.end());
    case Aggregation::kMax: return *std::max_element(values.begin(), values.end());
    case Aggregation::kLast: return values.back();
  }
  return std::nullopt;
}

// Completion-time spread of a set of predecessor links.
double spread(const EventLog& log, std::span<const ObjectLink> links) {
  if (links.size() < 2) return 0.0;
  auto lo = std::numeric_limits<double>::infinity();
  auto hi = -lo;
  for (const auto& l : links) {
    lo = std::min(lo, log.complete_time(l.event));
    hi = std::max(hi, log.complete_time(l.event));
  }
  return hi - lo;
}

}  // namespace

FeatureEngine::FeatureEngine(const EventLog& log) : log_(log) {
  for (std::size_t o = 0; o < log.object_count(); ++o) {
    auto trace = log.trace(ObjectIndex(o));
    if (trace.empty()) continue;
    Timestamp first = std::numeric_limits<Timestamp>::infinity();
    for (EventIndex e : trace) first = std::min(first, log.complete_time(e));
    first_seen_.push_back(first);
  }
  std::sort(first_seen_.begin(), first_seen_.end());
}

FeatureEngine::~FeatureEngine() = default;

const FeatureEngine::ResourceTimeline& FeatureEngine::timeline(const std::string& attribute) const {
  std::lock_guard lock(mutex_);
  auto it = timelines_.find(attribute);
  if (it != timelines_.end()) return *it->second;
  auto tl = std::make_unique<ResourceTimeline>();
  for (std::size_t i = 0; i < log_.event_count(); ++i) {
    EventIndex e(i);
    if (auto r = resource_text(log_, e, attribute)) tl->times[*r].push_back(log_.complete_time(e));
  }
  // Events are stored in completion order, so every list is already sorted.
  return *timelines_.emplace(attribute, std::move(tl)).first->second;
}

FeatureValue FeatureEngine::compute_local(EventIndex e, const FeatureSpec& spec) const {
  if (is_family(spec)) throw Error(ErrorCode::kInvalidSpec, "feature family '" + to_string(spec) + "' must be expanded");
  switch (spec.key) {
    case FeatureKey::kCurrentActivity:
      return log_.activity(e) == spec.activity ? 1.0 : 0.0;
    case FeatureKey::kValue: {
      const auto* v = log_.attribute(e, spec.attribute);
      if (v == nullptr) return std::nullopt;
      if (const double* d = as_number(*v)) return *d;
      throw Error(ErrorCode::kTypeMismatch, "attribute '" + spec.attribute + "' of event '" + log_.event_id(e) +
                                                "' is not numeric");
    }
    case FeatureKey::kResourceIs: {
      auto r = resource_text(log_, e, spec.resource_attribute);
      if (!r) return std::nullopt;
      return *r == spec.resource_value ? 1.0 : 0.0;
    }
    case FeatureKey::kServiceTime:
      return log_.complete_time(e) - log_.start_time(e);
    case FeatureKey::kObjectCount:
      return static_cast<double>(log_.objects_of(e).size());
    case FeatureKey::kTypeCount: {
      auto type = log_.type(spec.type);
      std::size_t n = 0;
      for (ObjectIndex o : log_.objects_of(e)) n += log_.type_of(o) == type;
      return static_cast<double>(n);
    }
    default:
      throw Error(ErrorCode::kUnsupportedSpec, "feature '" + to_string(spec) + "' needs an execution context");
  }
}

FeatureValue FeatureEngine::compute(const ProcessExecution& p, const ExecutionGraph& g, EventIndex e,
                                    const FeatureSpec& spec) const {
  auto pos = g.position(e);
  if (!pos || !p.contains(e)) {
    throw Error(ErrorCode::kNotInExecution,
                "event '" + log_.event_id(e) + "' is not in execution " + std::to_string(p.exec_id));
  }
  if (is_event_local(spec)) return compute_local(e, spec);
  if (is_family(spec)) throw Error(ErrorCode::kInvalidSpec, "feature family '" + to_string(spec) + "' must be expanded");

  const Timestamp ct = log_.complete_time(e);
  const auto& events = p.events;
  // Execution events strictly before / after e in time. Events are sorted by
  // completion time, so both are contiguous ranges.
  const auto before_end = static_cast<std::size_t>(
      std::partition_point(events.begin(), events.end(), [&](EventIndex x) { return log_.complete_time(x) < ct; }) -
      events.begin());
  const auto after_begin = static_cast<std::size_t>(
      std::partition_point(events.begin(), events.end(), [&](EventIndex x) { return log_.complete_time(x) <= ct; }) -
      events.begin());
  const auto links = g.incoming(*pos);

  auto numeric = [&](EventIndex x) -> std::optional<double> {
    const auto* v = log_.attribute(x, spec.attribute);
    if (v == nullptr) return std::nullopt;
    if (const double* d = as_number(*v)) return *d;
    throw Error(ErrorCode::kTypeMismatch, "attribute '" + spec.attribute + "' of event '" + log_.event_id(x) +
                                              "' is not numeric");
  };
  auto count_activity = [&](std::size_t from, std::size_t to) {
    std::size_t n = 0;
    for (std::size_t i = from; i < to; ++i) n += log_.activity(events[i]) == spec.activity;
    return static_cast<double>(n);
  };
  auto previous_objects = [&](std::optional<TypeIndex> type) {
    std::set<ObjectIndex> seen;
    for (std::size_t i = 0; i < before_end; ++i) {
      for (ObjectIndex o : log_.objects_of(events[i])) {
        if (!std::binary_search(p.objects.begin(), p.objects.end(), o)) continue;
        if (type && log_.type_of(o) != *type) continue;
        seen.insert(o);
      }
    }
    return static_cast<double>(seen.size());
  };
  auto waiting = [&] {
    if (links.empty()) return 0.0;
    Timestamp latest = -std::numeric_limits<Timestamp>::infinity();
    for (const auto& l : links) latest = std::max(latest, log_.complete_time(l.event));
    return std::max(0.0, log_.start_time(e) - latest);
  };

  switch (spec.key) {
    case FeatureKey::kCurrentActivities: {
      // Sinks of the execution graph restricted to events completed by ct(e).
      for (std::size_t i = 0; i < after_begin; ++i) {
        if (log_.activity(events[i]) != spec.activity) continue;
        auto succ = g.successors(i);
        bool sink = std::none_of(succ.begin(), succ.end(), [&](EventIndex s) { return log_.complete_time(s) <= ct; });
        if (sink) return 1.0;
      }
      return 0.0;
    }
    case FeatureKey::kPrecedingActivity: {
      for (EventIndex prev : g.predecessor_events(*pos)) {
        if (log_.activity(prev) == spec.activity) return 1.0;
      }
      return 0.0;
    }
    case FeatureKey::kPreviousActivityCount:
      return count_activity(0, before_end);
    case FeatureKey::kFollowingActivityCount:
      return count_activity(after_begin, events.size());

    case FeatureKey::kPreviousValue: {
      std::vector<double> values;
      for (std::size_t i = 0; i < before_end; ++i) {
        if (auto v = numeric(events[i])) values.push_back(*v);
      }
      return aggregate(values, spec.aggregation);
    }
    case FeatureKey::kPrecedingValue: {
      std::vector<double> values;
      for (EventIndex prev : g.predecessor_events(*pos)) {
        if (auto v = numeric(prev)) values.push_back(*v);
      }
      return aggregate(values, spec.aggregation);
    }

    case FeatureKey::kResourceWorkload: {
      auto r = resource_text(log_, e, spec.resource_attribute);
      if (!r) return std::nullopt;
      const auto& times = timeline(spec.resource_attribute).times.find(*r)->second;
      return static_cast<double>(count_in_window(times, ct - spec.window, ct) - 1);
    }
    case FeatureKey::kSystemWorkload:
      return static_cast<double>(count_in_window(log_.complete_times(), ct - spec.window, ct) - 1);

    case FeatureKey::kElapsedTime:
      return ct - log_.complete_time(events.front());
    case FeatureKey::kRemainingTime:
      return log_.complete_time(events.back()) - ct;
    case FeatureKey::kExecutionDuration:
      return log_.complete_time(events.back()) - log_.complete_time(events.front());
    case FeatureKey::kSynchronizationTime:
      return spread(log_, links);
    case FeatureKey::kPoolingTime: {
      auto type = log_.type(spec.type);
      std::vector<ObjectLink> typed;
      for (const auto& l : links) {
        if (log_.type_of(l.object) == type) typed.push_back(l);
      }
      return spread(log_, typed);
    }
    case FeatureKey::kLaggingTime: {
      auto type = log_.type(spec.type);
      auto inf = std::numeric_limits<Timestamp>::infinity();
      Timestamp first_all = inf, first_typed = inf;
      for (const auto& l : links) {
        first_all = std::min(first_all, log_.complete_time(l.event));
        if (log_.type_of(l.object) == type) first_typed = std::min(first_typed, log_.complete_time(l.event));
      }
      return first_typed == inf ? 0.0 : first_typed - first_all;
    }
    case FeatureKey::kWaitingTime:
      return waiting();
    case FeatureKey::kSojournTime:
      return waiting() + (ct - log_.start_time(e));
    case FeatureKey::kFlowTime:
      return spread(log_, links) + waiting() + (ct - log_.start_time(e));

    case FeatureKey::kSystemObjectCount:
      return static_cast<double>(std::upper_bound(first_seen_.begin(), first_seen_.end(), ct) - first_seen_.begin());
    case FeatureKey::kPreviousObjectCount:
      return previous_objects(std::nullopt);
    case FeatureKey::kPreviousTypeCount:
      return previous_objects(log_.type(spec.type));

    case FeatureKey::kEventObjects:
      throw Error(ErrorCode::kUnsupportedSpec, "O4 is a label feature and has no numeric value");
    default:
      break;
  }
  throw Error(ErrorCode::kUnsupportedSpec, "unhandled feature '" + to_string(spec) + "'");
}

FeatureValue compute(const EventLog& log, const ProcessExecution& p, const ExecutionGraph& g, EventIndex e,
                     const FeatureSpec& spec) {
  return FeatureEngine(log).compute(p, g, e, spec);
}

std::vector<ExecutionGraph> build_execution_graphs(const EventLog& log, std::span<const ProcessExecution> executions,
                                                   std::size_t threads) {
  std::vector<ExecutionGraph> graphs(executions.size());
  parallel_for(executions.size(), threads, [&](std::size_t i) { graphs[i] = build_execution_graph(log, executions[i]); });
  return graphs;
}

FeatureMatrix compute_matrix(const EventLog& log, std::span<const ProcessExecution> executions,
                             std::span<const ExecutionGraph> graphs, std::span<const FeatureSpec> specs,
                             std::size_t threads) {
  if (graphs.size() != executions.size()) {
    throw Error(ErrorCode::kInvalidSpec, "one execution graph per execution is required");
  }
  FeatureMatrix m;
  m.columns = expand_specs(log, specs);
  for (const auto& c : m.columns) m.column_names.push_back(to_string(c));

  std::vector<std::size_t> order(executions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return executions[a].exec_id < executions[b].exec_id; });

  std::vector<std::size_t> offset(executions.size() + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) offset[k + 1] = offset[k] + executions[order[k]].events.size();
  m.rows.resize(offset.back());
  m.values.resize(offset.back() * m.columns.size());

  FeatureEngine engine(log);
  parallel_for(order.size(), threads, [&](std::size_t k) {
    const auto& p = executions[order[k]];
    const auto& g = graphs[order[k]];
    for (std::size_t i = 0; i < p.events.size(); ++i) {
      const std::size_t row = offset[k] + i;
      m.rows[row] = {p.events[i], p.exec_id, order[k]};
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        try {
          m.values[row * m.columns.size() + c] = engine.compute(p, g, p.events[i], m.columns[c]);
        } catch (const Error& err) {
          throw Error(err.code(), "event '" + log.event_id(p.events[i]) + "', execution " +
                                      std::to_string(p.exec_id) + ", feature " + m.column_names[c] + ": " +
                                      err.what());
        }
      }
    }
  });
  return m;
}

}  // namespace ocelf
