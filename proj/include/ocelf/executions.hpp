#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocelf/event_log.hpp"
#include "ocelf/object_graph.hpp"

namespace ocelf {

/// A set of connected objects plus every event that touches at least one of
/// them. Events are ascending, which is the log's stable time order.
struct ProcessExecution {
  std::size_t exec_id = 0;
  ObjectSet objects;
  std::vector<EventIndex> events;
  std::optional<ObjectIndex> leading_object;

  bool contains(EventIndex e) const;
  bool operator==(const ProcessExecution&) const = default;
};

/// Events referencing any of `objects`, ascending.
std::vector<EventIndex> events_touching(const EventLog& log, const ObjectSet& objects);

/// One execution per connected component of the object graph. Every event
/// and every object lands in exactly one execution; exec ids follow the
/// smallest member object id.
std::vector<ProcessExecution> extract_components(const EventLog& log, const ObjectGraph& graph);

/// A leading-type execution removed because another execution contains it.
struct DroppedExecution {
  ObjectIndex leading_object;
  ObjectIndex contained_in;
};

/// One execution per object of type `lead`. Another object of the leader's
/// component joins unless an object of the same type lies strictly closer to
/// the leader (ties keep both); distances are taken in the full component.
/// Only the part of the kept objects still connected to the leader remains.
/// Executions whose objects are contained in another's are dropped and
/// reported through `dropped`. Exec ids follow the leading object id.
/// Throws UnknownType.
std::vector<ProcessExecution> extract_leading_type(const EventLog& log, const ObjectGraph& graph,
                                                   std::string_view lead, std::size_t threads = 1,
                                                   std::vector<DroppedExecution>* dropped = nullptr);

enum class Strategy { kComponents, kLeadingType };

struct ExtractionOptions {
  Strategy strategy = Strategy::kComponents;
  /// Required for kLeadingType.
  std::string lead_type;
  std::size_t threads = 1;
};

struct ExtractionResult {
  std::vector<ProcessExecution> executions;
  std::vector<DroppedExecution> dropped;
};

ExtractionResult extract(const EventLog& log, const ObjectGraph& graph, const ExtractionOptions& options);

/// Events that belong to more than one execution, with the exec ids holding
/// them. Always empty for component extraction.
std::map<EventIndex, std::vector<std::size_t>> shared_events(std::span<const ProcessExecution> executions);

struct ObjectLink {
  ObjectIndex object;
  EventIndex event;

  bool operator==(const ObjectLink&) const = default;
  auto operator<=>(const ObjectLink&) const = default;
};

using EventEdge = std::pair<EventIndex, EventIndex>;

/// Directed event graph of an execution: e -> e' when e' directly follows e
/// in the trace of one of the execution's objects.
class ExecutionGraph {
 public:
  std::span<const EventIndex> nodes() const { return nodes_; }
  /// Deduplicated, ascending.
  std::span<const EventEdge> edges() const { return edges_; }
  std::optional<std::size_t> position(EventIndex e) const;

  /// (object, previous event) per object whose trace leads into the node at
  /// `pos`, ascending by object.
  std::span<const ObjectLink> incoming(std::size_t pos) const { return incoming_[pos]; }
  /// Distinct direct successors of the node at `pos`, ascending.
  std::span<const EventIndex> successors(std::size_t pos) const { return successors_[pos]; }
  /// Distinct direct predecessors of the node at `pos`, ascending.
  std::span<const EventIndex> predecessor_events(std::size_t pos) const { return predecessor_events_[pos]; }

 private:
  friend ExecutionGraph build_execution_graph(const EventLog& log, const ProcessExecution& execution);

  std::vector<EventIndex> nodes_;
  std::vector<EventEdge> edges_;
  std::vector<std::vector<ObjectLink>> incoming_;
  std::vector<std::vector<EventIndex>> successors_;
  std::vector<std::vector<EventIndex>> predecessor_events_;
};

ExecutionGraph build_execution_graph(const EventLog& log, const ProcessExecution& execution);

/// Throws UnknownEvent when e is not a node of the graph.
std::vector<ObjectLink> predecessors(const ExecutionGraph& graph, EventIndex e);

}  // namespace ocelf
