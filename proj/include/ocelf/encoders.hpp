#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocelf/event_log.hpp"
#include "ocelf/executions.hpp"
#include "ocelf/features.hpp"

namespace ocelf {

/// Output switches shared by the serializers.
struct EncodeOptions {
  /// Write 0 instead of an empty CSV cell / JSON null for missing values.
  bool impute_zero = false;
};

// --- tabular ---------------------------------------------------------------

struct TabularRow {
  std::string event_id;
  std::size_t exec_id = 0;
  std::vector<FeatureValue> values;
};

/// One row per (event, execution); header is event_id, exec_id, then the
/// feature columns.
struct TabularEncoding {
  std::vector<std::string> header;
  std::vector<TabularRow> rows;
};

TabularEncoding encode_tabular(const EventLog& log, const FeatureMatrix& matrix);
/// RFC-4180 CSV with a header row and LF line endings.
std::string to_csv(const TabularEncoding& table, const EncodeOptions& options = {});

// --- sequential ------------------------------------------------------------

struct SequenceStep {
  std::string event_id;
  std::string activity;
  std::vector<std::string> objects;
  std::vector<FeatureValue> features;
};

struct ExecutionSequence {
  std::size_t exec_id = 0;
  std::vector<SequenceStep> steps;  // stable time order
};

struct SequentialEncoding {
  std::vector<std::string> feature_names;
  std::vector<ExecutionSequence> sequences;
};

SequentialEncoding encode_sequential(const EventLog& log, const FeatureMatrix& matrix,
                                     std::span<const ProcessExecution> executions);
/// One JSON object per line: {"exec_id", "steps": [{"event", "activity",
/// "objects", "features"}]}.
std::string to_jsonl(const SequentialEncoding& encoding, const EncodeOptions& options = {});
std::string sequence_to_json(const SequentialEncoding& encoding, const ExecutionSequence& sequence,
                             const EncodeOptions& options = {});

// --- graph -----------------------------------------------------------------

struct GraphNode {
  std::string event_id;
  std::string activity;
  std::vector<std::string> objects;
  std::vector<FeatureValue> features;
};

struct FeatureGraph {
  std::size_t exec_id = 0;
  std::vector<GraphNode> nodes;                            // stable time order
  std::vector<std::pair<std::string, std::string>> edges;  // lexicographic
};

struct GraphEncoding {
  std::vector<std::string> feature_names;
  std::vector<FeatureGraph> graphs;
};

GraphEncoding encode_graph(const EventLog& log, const FeatureMatrix& matrix,
                           std::span<const ProcessExecution> executions, std::span<const ExecutionGraph> graphs);

/// JSON array of node-link graphs {"exec_id", "nodes": [{"id", "activity",
/// "objects", "features"}], "edges": [[src, dst], ...]}.
std::string to_node_link_json(const GraphEncoding& encoding, const EncodeOptions& options = {});
std::string graph_to_json(const GraphEncoding& encoding, const FeatureGraph& graph, const EncodeOptions& options = {});

/// Graphviz digraph per execution; nodes read "activity\nobjects" and the
/// events of each object share a lane.
std::string to_dot(const GraphEncoding& encoding);
std::string graph_to_dot(const FeatureGraph& graph);

}  // namespace ocelf
