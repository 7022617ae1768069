#include "ocelf/object_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "ocelf/error.hpp"
#include "ocelf/text.hpp"
#include "ocelf/union_find.hpp"

namespace ocelf {

struct ObjectGraph::DistanceCache {
  std::mutex mutex;
  std::unordered_map<std::uint32_t, std::shared_ptr<const std::vector<std::uint32_t>>> by_source;
};

ObjectGraph::ObjectGraph() : cache_(std::make_unique<DistanceCache>()) {}
ObjectGraph::ObjectGraph(ObjectGraph&&) noexcept = default;
ObjectGraph& ObjectGraph::operator=(ObjectGraph&&) noexcept = default;
ObjectGraph::~ObjectGraph() = default;

bool ObjectGraph::has_edge(ObjectIndex a, ObjectIndex b) const {
  const auto& adj = adjacency_[a.value];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::pair<ObjectIndex, ObjectIndex>> ObjectGraph::edges() const {
  std::vector<std::pair<ObjectIndex, ObjectIndex>> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (ObjectIndex b : adjacency_[a]) {
      if (ObjectIndex(a) < b) out.emplace_back(ObjectIndex(a), b);
    }
  }
  return out;
}

std::vector<std::uint32_t> ObjectGraph::bfs_from(ObjectIndex source) const {
  const auto& members = components_[component_of_[source.value]];
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(members.size(), kUnseen);
  std::deque<ObjectIndex> queue{source};
  dist[position_[source.value]] = 0;
  while (!queue.empty()) {
    ObjectIndex cur = queue.front();
    queue.pop_front();
    std::uint32_t next = dist[position_[cur.value]] + 1;
    for (ObjectIndex nb : adjacency_[cur.value]) {
      auto& d = dist[position_[nb.value]];
      if (d == kUnseen) {
        d = next;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> ObjectGraph::distance(ObjectIndex from, ObjectIndex to) const {
  if (from.value >= node_count() || to.value >= node_count()) {
    throw Error(ErrorCode::kUnknownObject, "object index outside the object graph");
  }
  if (component_of_[from.value] != component_of_[to.value]) return std::nullopt;
  if (from == to) return 0;

  std::shared_ptr<const std::vector<std::uint32_t>> dist;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_source.find(from.value);
    if (it != cache_->by_source.end()) dist = it->second;
  }
  if (!dist) {
    auto computed = std::make_shared<const std::vector<std::uint32_t>>(bfs_from(from));
    std::lock_guard lock(cache_->mutex);
    dist = cache_->by_source.try_emplace(from.value, std::move(computed)).first->second;
  }
  return (*dist)[position_[to.value]];
}

ObjectGraph build_object_graph(const EventLog& log) {
  ObjectGraph g;
  const std::size_t n = log.object_count();
  g.adjacency_.assign(n, {});
  UnionFind sets(n);
  for (std::size_t i = 0; i < log.event_count(); ++i) {
    auto objs = log.objects_of(EventIndex(i));
    for (std::size_t a = 0; a < objs.size(); ++a) {
      for (std::size_t b = a + 1; b < objs.size(); ++b) {
        g.adjacency_[objs[a].value].push_back(objs[b]);
        g.adjacency_[objs[b].value].push_back(objs[a]);
      }
      if (a > 0) sets.unite(objs[0].value, objs[a].value);
    }
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;

  // Objects are visited in ascending order, so components come out ordered by
  // their smallest member and each member list is ascending.
  std::unordered_map<std::uint32_t, std::size_t> slot_of_root;
  g.component_of_.assign(n, 0);
  g.position_.assign(n, 0);
  for (std::uint32_t o = 0; o < n; ++o) {
    auto root = sets.find(o);
    auto [it, fresh] = slot_of_root.try_emplace(root, g.components_.size());
    if (fresh) g.components_.emplace_back();
    auto& members = g.components_[it->second];
    g.component_of_[o] = it->second;
    g.position_[o] = members.size();
    members.push_back(ObjectIndex(o));
  }
  return g;
}

std::vector<ObjectSet> connected_components(const ObjectGraph& graph) { return graph.components(); }

std::optional<std::size_t> distance(const ObjectGraph& graph, ObjectIndex from, ObjectIndex to) {
  return graph.distance(from, to);
}

std::optional<std::size_t> distance(const EventLog& log, const ObjectGraph& graph, std::string_view from,
                                    std::string_view to) {
  return graph.distance(log.object(from), log.object(to));
}

std::string object_graph_to_dot(const EventLog& log, const ObjectGraph& graph) {
  std::ostringstream os;
  os << "graph object_graph {\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    ObjectIndex o(i);
    auto type = log.type_of(o);
    os << "  " << dot_quote(log.object_id(o)) << " [label="
       << dot_quote(log.object_id(o) + " : " + (type ? log.type_name(*type) : std::string("?"))) << "];\n";
  }
  for (auto [a, b] : graph.edges()) {
    os << "  " << dot_quote(log.object_id(a)) << " -- " << dot_quote(log.object_id(b)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ocelf
