#include "ocelf/executions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "ocelf/error.hpp"
#include "ocelf/parallel.hpp"

namespace ocelf {

bool ProcessExecution::contains(EventIndex e) const { return std::binary_search(events.begin(), events.end(), e); }

std::vector<EventIndex> events_touching(const EventLog& log, const ObjectSet& objects) {
  std::vector<EventIndex> events;
  for (ObjectIndex o : objects) {
    auto trace = log.trace(o);
    events.insert(events.end(), trace.begin(), trace.end());
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());
  return events;
}

std::vector<ProcessExecution> extract_components(const EventLog& log, const ObjectGraph& graph) {
  const auto& components = graph.components();
  std::vector<ProcessExecution> out(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    out[i].exec_id = i;
    out[i].objects = components[i];
    out[i].events = events_touching(log, components[i]);
  }
  return out;
}

namespace {

// Objects of the leader's component that no same-type object beats on
// distance, restricted to the part still connected to the leader.
ObjectSet lead_members(const EventLog& log, const ObjectGraph& graph, ObjectIndex leader) {
  const auto& members = graph.components()[graph.component_of(leader)];
  const auto dist = graph.bfs_from(leader);

  // Untyped objects (invalid logs only) share one pseudo type.
  constexpr std::uint32_t kNoType = std::numeric_limits<std::uint32_t>::max();
  auto type_key = [&](ObjectIndex o) {
    auto t = log.type_of(o);
    return t ? t->value : kNoType;
  };
  std::map<std::uint32_t, std::uint32_t> closest;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto [it, fresh] = closest.try_emplace(type_key(members[i]), dist[i]);
    if (!fresh) it->second = std::min(it->second, dist[i]);
  }
  std::vector<char> kept(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    kept[i] = dist[i] == closest[type_key(members[i])];
  }

  std::vector<char> reached(members.size(), 0);
  std::deque<ObjectIndex> queue{leader};
  reached[graph.position_in_component(leader)] = 1;
  ObjectSet result;
  while (!queue.empty()) {
    ObjectIndex cur = queue.front();
    queue.pop_front();
    result.push_back(cur);
    for (ObjectIndex nb : graph.neighbors(cur)) {
      auto pos = graph.position_in_component(nb);
      if (kept[pos] && !reached[pos]) {
        reached[pos] = 1;
        queue.push_back(nb);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<ProcessExecution> extract_leading_type(const EventLog& log, const ObjectGraph& graph,
                                                   std::string_view lead, std::size_t threads,
                                                   std::vector<DroppedExecution>* dropped) {
  const TypeIndex lead_type = log.type(lead);
  std::vector<ObjectIndex> leaders;
  for (std::size_t i = 0; i < log.object_count(); ++i) {
    if (log.type_of(ObjectIndex(i)) == lead_type) leaders.emplace_back(i);
  }

  std::vector<ProcessExecution> candidates(leaders.size());
  parallel_for(leaders.size(), threads, [&](std::size_t i) {
    auto& p = candidates[i];
    p.leading_object = leaders[i];
    p.objects = lead_members(log, graph, leaders[i]);
    p.events = events_touching(log, p.objects);
  });

  // Maximality: a candidate contained in another one is not an execution of
  // its own. Any container must hold the candidate's leader, so only those
  // candidates are compared.
  std::map<ObjectIndex, std::vector<std::size_t>> holding;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (ObjectIndex o : candidates[i].objects) holding[o].push_back(i);
  }
  std::vector<char> drop(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& mine = candidates[i].objects;
    for (std::size_t j : holding[*candidates[i].leading_object]) {
      if (j == i || drop[j]) continue;
      const auto& theirs = candidates[j].objects;
      bool contained = std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end());
      // Equal sets: keep the earlier leader.
      if (contained && (theirs.size() > mine.size() || j < i)) {
        drop[i] = 1;
        if (dropped) dropped->push_back({*candidates[i].leading_object, *candidates[j].leading_object});
        break;
      }
    }
  }

  std::vector<ProcessExecution> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (drop[i]) continue;
    candidates[i].exec_id = out.size();
    out.push_back(std::move(candidates[i]));
  }
  return out;
}

ExtractionResult extract(const EventLog& log, const ObjectGraph& graph, const ExtractionOptions& options) {
  ExtractionResult result;
  if (options.strategy == Strategy::kComponents) {
    result.executions = extract_components(log, graph);
  } else {
    result.executions = extract_leading_type(log, graph, options.lead_type, options.threads, &result.dropped);
  }
  return result;
}

std::map<EventIndex, std::vector<std::size_t>> shared_events(std::span<const ProcessExecution> executions) {
  std::map<EventIndex, std::vector<std::size_t>> holders;
  for (const auto& p : executions) {
    for (EventIndex e : p.events) holders[e].push_back(p.exec_id);
  }
  std::erase_if(holders, [](const auto& kv) { return kv.second.size() < 2; });
  return holders;
}

std::optional<std::size_t> ExecutionGraph::position(EventIndex e) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), e);
  if (it == nodes_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

ExecutionGraph build_execution_graph(const EventLog& log, const ProcessExecution& execution) {
  ExecutionGraph g;
  g.nodes_ = execution.events;
  const std::size_t n = g.nodes_.size();
  g.incoming_.assign(n, {});
  g.successors_.assign(n, {});
  g.predecessor_events_.assign(n, {});

  for (ObjectIndex o : execution.objects) {
    auto trace = log.trace(o);
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
      EventIndex from = trace[k], to = trace[k + 1];
      if (from == to) continue;
      auto from_pos = g.position(from);
      auto to_pos = g.position(to);
      if (!from_pos || !to_pos) continue;
      g.edges_.emplace_back(from, to);
      g.incoming_[*to_pos].push_back({o, from});
      g.successors_[*from_pos].push_back(to);
      g.predecessor_events_[*to_pos].push_back(from);
    }
  }
  auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(g.edges_);
  for (std::size_t i = 0; i < n; ++i) {
    tidy(g.incoming_[i]);
    tidy(g.successors_[i]);
    tidy(g.predecessor_events_[i]);
  }
  return g;
}

std::vector<ObjectLink> predecessors(const ExecutionGraph& graph, EventIndex e) {
  auto pos = graph.position(e);
  if (!pos) throw Error(ErrorCode::kUnknownEvent, "event is not a node of the execution graph");
  auto in = graph.incoming(*pos);
  return {in.begin(), in.end()};
}

}  // namespace ocelf
