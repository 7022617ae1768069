#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ocelf/event_log.hpp"

namespace ocelf {

using ObjectSet = std::vector<ObjectIndex>;  // ascending, unique

/// Undirected graph over all objects of a log; {o, o'} is an edge when some
/// event references both. Immutable after construction. Connected components
/// are computed up front; BFS distances are memoized per source and the cache
/// is safe to use from several threads.
class ObjectGraph {
 public:
  ObjectGraph();
  ObjectGraph(ObjectGraph&&) noexcept;
  ObjectGraph& operator=(ObjectGraph&&) noexcept;
  ~ObjectGraph();

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const ObjectIndex> neighbors(ObjectIndex o) const { return adjacency_[o.value]; }
  bool has_edge(ObjectIndex a, ObjectIndex b) const;
  /// Every edge once as (smaller, larger), ascending.
  std::vector<std::pair<ObjectIndex, ObjectIndex>> edges() const;

  /// Maximal connected object sets, each ascending, ordered by smallest member.
  const std::vector<ObjectSet>& components() const { return components_; }
  std::size_t component_of(ObjectIndex o) const { return component_of_[o.value]; }
  /// Position of o inside components()[component_of(o)].
  std::size_t position_in_component(ObjectIndex o) const { return position_[o.value]; }

  /// Edge-count distances from `source` to every member of its component,
  /// indexed like components()[component_of(source)]. Not memoized.
  std::vector<std::uint32_t> bfs_from(ObjectIndex source) const;

  /// Shortest-path length; nullopt when the objects are disconnected.
  /// Throws UnknownObject for indices outside the graph.
  std::optional<std::size_t> distance(ObjectIndex from, ObjectIndex to) const;

 private:
  friend ObjectGraph build_object_graph(const EventLog& log);
  struct DistanceCache;

  std::vector<std::vector<ObjectIndex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<ObjectSet> components_;
  std::vector<std::size_t> component_of_;
  std::vector<std::size_t> position_;
  std::unique_ptr<DistanceCache> cache_;
};

ObjectGraph build_object_graph(const EventLog& log);

/// Partition of the graph's nodes into maximal connected sets.
std::vector<ObjectSet> connected_components(const ObjectGraph& graph);

std::optional<std::size_t> distance(const ObjectGraph& graph, ObjectIndex from, ObjectIndex to);
/// Id-based variant; throws UnknownObject.
std::optional<std::size_t> distance(const EventLog& log, const ObjectGraph& graph, std::string_view from,
                                    std::string_view to);

/// Graphviz rendering: one node per object (labelled "id : type"), one
/// undirected edge per interaction.
std::string object_graph_to_dot(const EventLog& log, const ObjectGraph& graph);

}  // namespace ocelf
