#include "ocelf/encoders.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ocelf/text.hpp"

namespace ocelf {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> object_labels(const EventLog& log, EventIndex e) {
  std::vector<std::string> out;
  for (ObjectIndex o : log.objects_of(e)) out.push_back(log.object_id(o));
  return out;
}

ordered_json feature_object(std::span<const std::string> names, std::span<const FeatureValue> values,
                            const EncodeOptions& options) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (values[i]) {
      out[names[i]] = *values[i];
    } else if (options.impute_zero) {
      out[names[i]] = 0.0;
    } else {
      out[names[i]] = nullptr;
    }
  }
  return out;
}

// Row ranges of the matrix per execution position.
std::vector<std::vector<std::size_t>> rows_by_execution(const FeatureMatrix& matrix, std::size_t executions) {
  std::vector<std::vector<std::size_t>> out(executions);
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) out[matrix.rows[r].execution].push_back(r);
  return out;
}

std::vector<std::size_t> by_exec_id(std::span<const ProcessExecution> executions) {
  std::vector<std::size_t> order(executions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return executions[a].exec_id < executions[b].exec_id; });
  return order;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

TabularEncoding encode_tabular(const EventLog& log, const FeatureMatrix& matrix) {
  TabularEncoding t;
  t.header = {"event_id", "exec_id"};
  t.header.insert(t.header.end(), matrix.column_names.begin(), matrix.column_names.end());
  t.rows.reserve(matrix.row_count());
  for (std::size_t r = 0; r < matrix.row_count(); ++r) {
    auto values = matrix.row(r);
    t.rows.push_back({log.event_id(matrix.rows[r].event), matrix.rows[r].exec_id, {values.begin(), values.end()}});
  }
  return t;
}

std::string to_csv(const TabularEncoding& table, const EncodeOptions& options) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.header[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    out += csv_field(row.event_id);
    out += ',';
    out += std::to_string(row.exec_id);
    for (const auto& v : row.values) {
      out += ',';
      if (v) {
        out += format_number(*v);
      } else if (options.impute_zero) {
        out += '0';
      }
    }
    out += '\n';
  }
  return out;
}

SequentialEncoding encode_sequential(const EventLog& log, const FeatureMatrix& matrix,
                                     std::span<const ProcessExecution> executions) {
  SequentialEncoding enc;
  enc.feature_names = matrix.column_names;
  auto rows = rows_by_execution(matrix, executions.size());
  for (std::size_t k : by_exec_id(executions)) {
    ExecutionSequence seq;
    seq.exec_id = executions[k].exec_id;
    for (std::size_t r : rows[k]) {
      EventIndex e = matrix.rows[r].event;
      auto values = matrix.row(r);
      seq.steps.push_back({log.event_id(e), log.activity(e), object_labels(log, e), {values.begin(), values.end()}});
    }
    enc.sequences.push_back(std::move(seq));
  }
  return enc;
}

std::string sequence_to_json(const SequentialEncoding& encoding, const ExecutionSequence& sequence,
                             const EncodeOptions& options) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : sequence.steps) {
    steps.push_back({{"event", s.event_id},
                     {"activity", s.activity},
                     {"objects", s.objects},
                     {"features", feature_object(encoding.feature_names, s.features, options)}});
  }
  ordered_json doc = {{"exec_id", sequence.exec_id}, {"steps", std::move(steps)}};
  return doc.dump();
}

std::string to_jsonl(const SequentialEncoding& encoding, const EncodeOptions& options) {
  std::string out;
  for (const auto& seq : encoding.sequences) {
    out += sequence_to_json(encoding, seq, options);
    out += '\n';
  }
  return out;
}

GraphEncoding encode_graph(const EventLog& log, const FeatureMatrix& matrix,
                           std::span<const ProcessExecution> executions, std::span<const ExecutionGraph> graphs) {
  GraphEncoding enc;
  enc.feature_names = matrix.column_names;
  auto rows = rows_by_execution(matrix, executions.size());
  for (std::size_t k : by_exec_id(executions)) {
    FeatureGraph fg;
    fg.exec_id = executions[k].exec_id;
    for (std::size_t r : rows[k]) {
      EventIndex e = matrix.rows[r].event;
      auto values = matrix.row(r);
      fg.nodes.push_back({log.event_id(e), log.activity(e), object_labels(log, e), {values.begin(), values.end()}});
    }
    for (auto [from, to] : graphs[k].edges()) fg.edges.emplace_back(log.event_id(from), log.event_id(to));
    std::sort(fg.edges.begin(), fg.edges.end());
    enc.graphs.push_back(std::move(fg));
  }
  return enc;
}

std::string graph_to_json(const GraphEncoding& encoding, const FeatureGraph& graph, const EncodeOptions& options) {
  ordered_json nodes = ordered_json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back({{"id", n.event_id},
                     {"activity", n.activity},
                     {"objects", n.objects},
                     {"features", feature_object(encoding.feature_names, n.features, options)}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : graph.edges) edges.push_back({from, to});
  ordered_json doc = {{"exec_id", graph.exec_id}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  return doc.dump();
}

std::string to_node_link_json(const GraphEncoding& encoding, const EncodeOptions& options) {
  std::string out = "[";
  for (std::size_t i = 0; i < encoding.graphs.size(); ++i) {
    out += i ? ",\n" : "\n";
    out += graph_to_json(encoding, encoding.graphs[i], options);
  }
  out += "\n]\n";
  return out;
}

std::string graph_to_dot(const FeatureGraph& graph) {
  std::ostringstream os;
  os << "digraph exec_" << graph.exec_id << " {\n";
  os << "  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& n : graph.nodes) {
    // Nodes sharing a group are kept on one straight lane by dot.
    os << "  " << dot_quote(n.event_id) << " [label=" << dot_quote(n.activity + "\n" + join(n.objects, ", "));
    if (!n.objects.empty()) os << ", group=" << dot_quote(n.objects.front());
    os << "];\n";
  }
  for (const auto& [from, to] : graph.edges) os << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const GraphEncoding& encoding) {
  std::string out;
  for (const auto& g : encoding.graphs) out += graph_to_dot(g);
  return out;
}

}  // namespace ocelf
