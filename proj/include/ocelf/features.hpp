#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocelf/event_log.hpp"
#include "ocelf/executions.hpp"
#include "ocelf/feature_spec.hpp"

namespace ocelf {

/// Feature value; nullopt where the feature is undefined for the event
/// (e.g. the attribute is absent). Missing values are never zero-filled.
using FeatureValue = std::optional<double>;

/// Evaluates catalog features against one log. Holds log-wide indices
/// (completion times, per-resource timelines, object first appearances) so
/// repeated evaluations stay cheap. Safe to share between threads.
class FeatureEngine {
 public:
  explicit FeatureEngine(const EventLog& log);
  ~FeatureEngine();

  const EventLog& log() const { return log_; }

  /// Value of a concrete (non-family) spec for event e in execution p.
  /// Throws NotInExecution, TypeMismatch (numeric feature over a string
  /// attribute), InvalidSpec for families and UnsupportedSpec for label-only
  /// keys.
  FeatureValue compute(const ProcessExecution& p, const ExecutionGraph& g, EventIndex e,
                       const FeatureSpec& spec) const;

  /// Event-local features only (see is_event_local); throws UnsupportedSpec
  /// otherwise.
  FeatureValue compute_local(EventIndex e, const FeatureSpec& spec) const;

 private:
  struct ResourceTimeline;
  const ResourceTimeline& timeline(const std::string& attribute) const;

  const EventLog& log_;
  std::vector<Timestamp> first_seen_;  // per object with a non-empty trace, ascending
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::unique_ptr<ResourceTimeline>, std::less<>> timelines_;
};

/// Convenience wrapper building a throwaway engine.
FeatureValue compute(const EventLog& log, const ProcessExecution& p, const ExecutionGraph& g, EventIndex e,
                     const FeatureSpec& spec);

struct RowKey {
  EventIndex event;
  std::size_t exec_id = 0;
  /// Position of the execution in the list handed to compute_matrix.
  std::size_t execution = 0;

  bool operator==(const RowKey&) const = default;
};

/// One row per (event, execution) pair, one column per expanded spec. Rows
/// are ordered by exec id, then stable event order.
struct FeatureMatrix {
  std::vector<FeatureSpec> columns;
  std::vector<std::string> column_names;
  std::vector<RowKey> rows;
  std::vector<FeatureValue> values;  // row-major

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }
  const FeatureValue& at(std::size_t row, std::size_t column) const { return values[row * columns.size() + column]; }
  std::span<const FeatureValue> row(std::size_t r) const {
    return std::span<const FeatureValue>(values).subspan(r * columns.size(), columns.size());
  }
};

/// Computes every expanded spec for every (event, execution) pair. Output is
/// identical for any thread count. Errors are rethrown with the row named.
FeatureMatrix compute_matrix(const EventLog& log, std::span<const ProcessExecution> executions,
                             std::span<const ExecutionGraph> graphs, std::span<const FeatureSpec> specs,
                             std::size_t threads = 1);

/// Builds one execution graph per execution, in order.
std::vector<ExecutionGraph> build_execution_graphs(const EventLog& log, std::span<const ProcessExecution> executions,
                                                   std::size_t threads = 1);

}  // namespace ocelf
