#include "cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ocelf/encoders.hpp"
#include "ocelf/error.hpp"
#include "ocelf/executions.hpp"
#include "ocelf/feature_spec.hpp"
#include "ocelf/features.hpp"
#include "ocelf/object_graph.hpp"
#include "ocelf/ocel_io.hpp"
#include "ocelf/parallel.hpp"
#include "ocelf/timeseries.hpp"
#include "ocelf/validate.hpp"

namespace ocelf::cli {
namespace {

using nlohmann::ordered_json;

struct GlobalFlags {
  std::optional<std::size_t> threads;
  bool json = false;
};

struct StrategyFlags {
  std::string strategy = "components";
  std::string lead_type;
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& flags) {
  cmd->add_option("--strategy", flags.strategy, "Execution extraction: components or leading")
      ->check(CLI::IsMember({"components", "leading"}));
  cmd->add_option("--lead-type", flags.lead_type, "Leading object type (with --strategy leading)");
}

ExtractionOptions to_options(const StrategyFlags& flags, std::size_t threads) {
  ExtractionOptions opts;
  opts.threads = threads;
  if (flags.strategy == "leading") {
    if (flags.lead_type.empty()) throw Error(ErrorCode::kUnknownType, "--strategy leading needs --lead-type");
    opts.strategy = Strategy::kLeadingType;
    opts.lead_type = flags.lead_type;
  }
  return opts;
}

std::vector<FeatureSpec> parse_specs(const std::vector<std::string>& texts) {
  std::vector<FeatureSpec> specs;
  for (const auto& t : texts) specs.push_back(parse_feature_spec(t));
  return specs;
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

int validate_cmd(const std::string& path, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  EventLog log = parse_ocel(path);
  auto report = validate(log);
  if (g.json) {
    ordered_json doc = {{"schema_version", kSchemaVersion},
                        {"clean", report.is_clean()},
                        {"events", log.event_count()},
                        {"objects", log.object_count()},
                        {"violations", ordered_json::array()}};
    for (const auto& v : report.violations) {
      doc["violations"].push_back({{"kind", v.kind}, {"subject", v.subject}, {"detail", v.detail}});
    }
    out << doc.dump(2) << "\n";
  }
  if (report.is_clean()) {
    err << "clean: " << log.event_count() << " events, " << log.object_count() << " objects\n";
    return kOk;
  }
  for (const auto& v : report.violations) err << v.kind << " " << v.subject << ": " << v.detail << "\n";
  err << report.violations.size() << " violation(s)\n";
  return kDomainError;
}

ordered_json execution_json(const EventLog& log, const ProcessExecution& p) {
  ordered_json objects = ordered_json::array();
  for (ObjectIndex o : p.objects) objects.push_back(log.object_id(o));
  ordered_json events = ordered_json::array();
  for (EventIndex e : p.events) events.push_back(log.event_id(e));
  return {{"exec_id", p.exec_id},
          {"leading_object", p.leading_object ? ordered_json(log.object_id(*p.leading_object)) : ordered_json()},
          {"object_count", p.objects.size()},
          {"event_count", p.events.size()},
          {"objects", std::move(objects)},
          {"events", std::move(events)}};
}

int extract_cmd(const std::string& path, const StrategyFlags& sf, const std::string& out_path, const GlobalFlags& g,
                std::ostream& out) {
  EventLog log = parse_ocel(path);
  ObjectGraph graph = build_object_graph(log);
  auto result = extract(log, graph, to_options(sf, resolve_thread_count(g.threads)));

  ordered_json doc = {{"schema_version", kSchemaVersion},
                      {"strategy", sf.strategy},
                      {"lead_type", sf.strategy == "leading" ? ordered_json(sf.lead_type) : ordered_json()},
                      {"execution_count", result.executions.size()},
                      {"executions", ordered_json::array()},
                      {"dropped", ordered_json::array()},
                      {"shared_events", ordered_json::object()}};
  for (const auto& p : result.executions) doc["executions"].push_back(execution_json(log, p));
  for (const auto& d : result.dropped) {
    doc["dropped"].push_back(
        {{"leading_object", log.object_id(d.leading_object)}, {"contained_in", log.object_id(d.contained_in)}});
  }
  for (const auto& [e, ids] : shared_events(result.executions)) doc["shared_events"][log.event_id(e)] = ids;

  if (!out_path.empty()) write_text_file(out_path, doc.dump(2) + "\n");
  if (g.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << result.executions.size() << " execution(s)\n";
    for (const auto& p : result.executions) {
      out << "  #" << p.exec_id << ": " << p.objects.size() << " object(s), " << p.events.size() << " event(s)";
      if (p.leading_object) out << ", lead " << log.object_id(*p.leading_object);
      out << "\n";
    }
    if (!result.dropped.empty()) out << result.dropped.size() << " contained execution(s) dropped\n";
  }
  return kOk;
}

struct FeaturizeFlags {
  StrategyFlags strategy;
  std::vector<std::string> features;
  std::string encoding = "tabular";
  std::string out_path;
  std::string dot_path;
  bool impute_zero = false;
};

int featurize_cmd(const std::string& path, const FeaturizeFlags& f, const GlobalFlags& g, std::ostream& out) {
  auto specs = parse_specs(f.features);
  const std::size_t threads = resolve_thread_count(g.threads);
  EventLog log = parse_ocel(path);
  ObjectGraph graph = build_object_graph(log);
  auto result = extract(log, graph, to_options(f.strategy, threads));
  auto graphs = build_execution_graphs(log, result.executions, threads);
  auto matrix = compute_matrix(log, result.executions, graphs, specs, threads);
  EncodeOptions opts{f.impute_zero};

  ordered_json summary = {{"schema_version", kSchemaVersion},
                          {"encoding", f.encoding},
                          {"executions", result.executions.size()},
                          {"rows", matrix.row_count()},
                          {"columns", matrix.column_names},
                          {"shared_events", shared_events(result.executions).size()}};
  if (f.encoding == "tabular") {
    emit(f.out_path, to_csv(encode_tabular(log, matrix), opts), out);
  } else if (f.encoding == "sequential") {
    emit(f.out_path, to_jsonl(encode_sequential(log, matrix, result.executions), opts), out);
  } else {
    auto enc = encode_graph(log, matrix, result.executions, graphs);
    emit(f.out_path, to_node_link_json(enc, opts), out);
    if (!f.dot_path.empty()) write_text_file(f.dot_path, to_dot(enc));
    std::size_t edges = 0;
    for (const auto& fg : enc.graphs) edges += fg.edges.size();
    summary["edges"] = edges;
  }

  if (f.out_path.empty() || f.out_path == "-") return kOk;
  if (g.json) {
    out << summary.dump(2) << "\n";
  } else if (f.encoding == "tabular") {
    out << matrix.row_count() << " row(s), " << matrix.column_count() << " feature column(s)\n";
  } else if (f.encoding == "sequential") {
    out << result.executions.size() << " sequence(s), " << matrix.row_count() << " step(s)\n";
  } else {
    out << result.executions.size() << " graph(s), " << matrix.row_count() << " node(s), " << summary["edges"]
        << " edge(s)\n";
  }
  if (auto shared = summary["shared_events"].get<std::size_t>(); shared > 0) {
    out << shared << " event(s) appear in more than one execution\n";
  }
  return kOk;
}

struct TimeseriesFlags {
  double window = 604800.0;
  std::string feature;
  std::string agg = "avg";
  std::string out_path;
};

int timeseries_cmd(const std::string& path, const TimeseriesFlags& t, const GlobalFlags& g, std::ostream& out) {
  auto spec = parse_feature_spec(t.feature);
  auto agg = parse_series_aggregation(t.agg);
  EventLog log = parse_ocel(path);
  auto series = sublog_timeseries(log, t.window, spec, agg);
  emit(t.out_path, timeseries_to_csv(series), out);
  if (t.out_path.empty() || t.out_path == "-") return kOk;
  if (g.json) {
    out << ordered_json({{"schema_version", kSchemaVersion}, {"windows", series.size()}}).dump(2) << "\n";
  } else {
    out << series.size() << " window(s)\n";
  }
  return kOk;
}

struct VariantFlags {
  StrategyFlags strategy;
  std::size_t exec_id = 0;
  std::string format = "dot";
  std::vector<std::string> features;
  std::string out_path;
};

int variant_cmd(const std::string& path, const VariantFlags& v, const GlobalFlags& g, std::ostream& out) {
  auto specs = parse_specs(v.features);
  const std::size_t threads = resolve_thread_count(g.threads);
  EventLog log = parse_ocel(path);
  ObjectGraph graph = build_object_graph(log);
  auto result = extract(log, graph, to_options(v.strategy, threads));
  auto it = std::find_if(result.executions.begin(), result.executions.end(),
                         [&](const ProcessExecution& p) { return p.exec_id == v.exec_id; });
  if (it == result.executions.end()) {
    throw Error(ErrorCode::kUnknownExecution, "no execution with id " + std::to_string(v.exec_id) + " (have " +
                                                  std::to_string(result.executions.size()) + ")");
  }
  std::vector<ProcessExecution> one{*it};
  auto graphs = build_execution_graphs(log, one, threads);
  auto matrix = compute_matrix(log, one, graphs, specs, threads);

  std::string content;
  if (v.format == "seq") {
    auto enc = encode_sequential(log, matrix, one);
    content = sequence_to_json(enc, enc.sequences.front()) + "\n";
  } else {
    auto enc = encode_graph(log, matrix, one, graphs);
    content = v.format == "dot" ? graph_to_dot(enc.graphs.front()) : graph_to_json(enc, enc.graphs.front()) + "\n";
  }
  emit(v.out_path, content, out);
  if (!v.out_path.empty() && v.out_path != "-" && !g.json) {
    out << "execution " << v.exec_id << ": " << one.front().events.size() << " event(s)\n";
  }
  return kOk;
}

int stats_cmd(const std::string& path, const std::string& dot_path, const GlobalFlags& g, std::ostream& out) {
  EventLog log = parse_ocel(path);
  ObjectGraph graph = build_object_graph(log);
  if (!dot_path.empty()) emit(dot_path, object_graph_to_dot(log, graph), out);
  ordered_json doc = {{"schema_version", kSchemaVersion},
                      {"events", log.event_count()},
                      {"objects", log.object_count()},
                      {"object_types", std::vector<std::string>(log.type_names().begin(), log.type_names().end())},
                      {"activities", std::vector<std::string>(log.activity_names().begin(), log.activity_names().end())},
                      {"object_graph_edges", graph.edge_count()},
                      {"components", graph.components().size()}};
  if (dot_path == "-") return kOk;
  if (g.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "events: " << log.event_count() << "\nobjects: " << log.object_count()
        << "\nobject types: " << log.type_count() << "\nactivities: " << log.activity_count()
        << "\nobject graph edges: " << graph.edge_count() << "\ncomponents: " << graph.components().size() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Object-centric event log feature extraction and encoding", "ocelf"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--threads", global.threads, "Worker threads (default: OCELF_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", global.json, "Machine-readable output");

  std::string path;
  auto add_path = [&](CLI::App* cmd) { cmd->add_option("log", path, "OCEL JSON file")->required(); };

  auto* validate_app = app.add_subcommand("validate", "Check the event log invariants");
  add_path(validate_app);

  StrategyFlags extract_flags;
  std::string extract_out;
  auto* extract_app = app.add_subcommand("extract", "Extract process executions");
  add_path(extract_app);
  add_strategy_flags(extract_app, extract_flags);
  extract_app->add_option("--out", extract_out, "Write the JSON execution report here");

  FeaturizeFlags featurize;
  auto* featurize_app = app.add_subcommand("featurize", "Compute features and write an encoding");
  add_path(featurize_app);
  add_strategy_flags(featurize_app, featurize.strategy);
  featurize_app->add_option("--feature", featurize.features, "Feature spec, e.g. O5, C3[pick item], D1[amount,avg]");
  featurize_app->add_option("--encoding", featurize.encoding, "tabular, sequential or graph")
      ->check(CLI::IsMember({"tabular", "sequential", "graph"}));
  featurize_app->add_option("--out", featurize.out_path, "Output file (stdout when omitted)");
  featurize_app->add_option("--dot", featurize.dot_path, "Also write Graphviz DOT (graph encoding)");
  featurize_app->add_flag("--impute-zero", featurize.impute_zero, "Write 0 for missing values");

  TimeseriesFlags series;
  auto* series_app = app.add_subcommand("timeseries", "Aggregate an event-local feature per time window");
  add_path(series_app);
  series_app->add_option("--window", series.window, "Window length in seconds")->check(CLI::PositiveNumber);
  series_app->add_option("--feature", series.feature, "Event-local feature spec")->required();
  series_app->add_option("--agg", series.agg, "avg, sum or count");
  series_app->add_option("--out", series.out_path, "Output CSV (stdout when omitted)");

  VariantFlags variant;
  auto* variant_app = app.add_subcommand("variant", "Render one execution as a graph or step sequence");
  add_path(variant_app);
  add_strategy_flags(variant_app, variant.strategy);
  variant_app->add_option("--exec-id", variant.exec_id, "Execution id")->required();
  variant_app->add_option("--format", variant.format, "dot, json or seq")
      ->check(CLI::IsMember({"dot", "json", "seq"}));
  variant_app->add_option("--feature", variant.features, "Feature specs to attach");
  variant_app->add_option("--out", variant.out_path, "Output file (stdout when omitted)");

  std::string dot_path;
  auto* stats_app = app.add_subcommand("stats", "Summarize the log and its object graph");
  add_path(stats_app);
  stats_app->add_option("--object-graph-dot", dot_path, "Write the object graph as Graphviz DOT");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*validate_app) return validate_cmd(path, global, out, err);
    if (*extract_app) return extract_cmd(path, extract_flags, extract_out, global, out);
    if (*featurize_app) return featurize_cmd(path, featurize, global, out);
    if (*series_app) return timeseries_cmd(path, series, global, out);
    if (*variant_app) return variant_cmd(path, variant, global, out);
    if (*stats_app) return stats_cmd(path, dot_path, global, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParse:
      case ErrorCode::kSchema:
      case ErrorCode::kIo:
        return kInputError;
      default:
        return kDomainError;
    }
  }
  return kInputError;
}

}  // namespace ocelf::cli
