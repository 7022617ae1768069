#include "ocelf/event_log.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ocelf/error.hpp"

namespace ocelf {

std::optional<EventIndex> EventLog::find_event(std::string_view id) const {
  auto it = event_lookup_.find(std::string(id));
  if (it == event_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ObjectIndex> EventLog::find_object(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<TypeIndex> EventLog::find_type(std::string_view name) const {
  auto it = std::lower_bound(type_names_.begin(), type_names_.end(), name);
  if (it == type_names_.end() || *it != name) return std::nullopt;
  return TypeIndex(static_cast<std::size_t>(it - type_names_.begin()));
}

std::optional<ActivityIndex> EventLog::find_activity(std::string_view name) const {
  auto it = std::lower_bound(activity_names_.begin(), activity_names_.end(), name);
  if (it == activity_names_.end() || *it != name) return std::nullopt;
  return ActivityIndex(static_cast<std::size_t>(it - activity_names_.begin()));
}

EventIndex EventLog::event(std::string_view id) const {
  if (auto e = find_event(id)) return *e;
  throw Error(ErrorCode::kUnknownEvent, "unknown event '" + std::string(id) + "'");
}

ObjectIndex EventLog::object(std::string_view id) const {
  if (auto o = find_object(id)) return *o;
  throw Error(ErrorCode::kUnknownObject, "unknown object '" + std::string(id) + "'");
}

TypeIndex EventLog::type(std::string_view name) const {
  if (auto t = find_type(name)) return *t;
  throw Error(ErrorCode::kUnknownType, "unknown object type '" + std::string(name) + "'");
}

const AttributeValue* EventLog::attribute(EventIndex e, std::string_view name) const {
  const auto& attrs = attributes_[e.value];
  auto it = attrs.find(name);
  return it == attrs.end() ? nullptr : &it->second;
}

std::optional<TypeIndex> EventLog::type_of(ObjectIndex o) const {
  auto t = type_of_[o.value];
  if (t == kUntyped) return std::nullopt;
  return TypeIndex(t);
}

std::vector<std::string> EventLog::objects_of(std::string_view event_id) const {
  std::vector<std::string> ids;
  for (ObjectIndex o : objects_of(event(event_id))) ids.push_back(object_ids_[o.value]);
  return ids;
}

EventView EventLog::view(EventIndex e) const {
  EventView v{e, objects_of(e), {}};
  for (ObjectIndex o : v.objects) {
    if (auto t = type_of(o)) v.objects_of_type[*t].push_back(o);
  }
  return v;
}

EventLogBuilder& EventLogBuilder::add_object_type(std::string name) {
  extra_types_.push_back(std::move(name));
  return *this;
}

EventLogBuilder& EventLogBuilder::add_object(std::string id, std::string type) {
  auto [it, inserted] = objects_.try_emplace(std::move(id), type);
  if (!inserted && it->second != type) {
    throw Error(ErrorCode::kSchema, "object '" + it->first + "' declared with types '" + it->second +
                                        "' and '" + type + "'");
  }
  return *this;
}

EventLogBuilder& EventLogBuilder::add_event(EventRecord record) {
  if (event_positions_.contains(record.id)) {
    throw Error(ErrorCode::kSchema, "duplicate event id '" + record.id + "'");
  }
  event_positions_.emplace(record.id, events_.size());
  events_.push_back(std::move(record));
  return *this;
}

EventLogBuilder& EventLogBuilder::set_trace(std::string object_id, std::vector<std::string> event_ids) {
  explicit_traces_[std::move(object_id)] = std::move(event_ids);
  return *this;
}

EventLog EventLogBuilder::build() const {
  EventLog log;

  // Events in stable order: (complete time, id).
  std::vector<std::size_t> order(events_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = events_[a];
    const auto& eb = events_[b];
    if (ea.complete_time != eb.complete_time) return ea.complete_time < eb.complete_time;
    return ea.id < eb.id;
  });

  std::set<std::string, std::less<>> activities;
  for (const auto& ev : events_) activities.insert(ev.activity);
  log.activity_names_.assign(activities.begin(), activities.end());

  const std::size_t n = events_.size();
  log.event_ids_.reserve(n);
  log.complete_.reserve(n);
  log.start_.reserve(n);
  log.activity_of_.reserve(n);
  log.attributes_.reserve(n);
  for (std::size_t pos : order) {
    const auto& ev = events_[pos];
    log.event_lookup_.emplace(ev.id, EventIndex(log.event_ids_.size()));
    log.event_ids_.push_back(ev.id);
    log.complete_.push_back(ev.complete_time);
    log.start_.push_back(ev.start_time.value_or(ev.complete_time));
    log.activity_of_.push_back(*log.find_activity(ev.activity));
    log.attributes_.push_back(ev.attributes);
  }

  // Objects: declared ones plus any referenced only by events or traces.
  std::set<std::string, std::less<>> object_ids;
  for (const auto& [id, type] : objects_) object_ids.insert(id);
  for (const auto& ev : events_) object_ids.insert(ev.objects.begin(), ev.objects.end());
  for (const auto& [id, trace] : explicit_traces_) object_ids.insert(id);
  log.object_ids_.assign(object_ids.begin(), object_ids.end());
  for (std::size_t i = 0; i < log.object_ids_.size(); ++i) {
    log.object_lookup_.emplace(log.object_ids_[i], ObjectIndex(i));
  }

  std::set<std::string, std::less<>> types(extra_types_.begin(), extra_types_.end());
  for (const auto& [id, type] : objects_) types.insert(type);
  log.type_names_.assign(types.begin(), types.end());
  log.type_of_.assign(log.object_ids_.size(), EventLog::kUntyped);
  for (const auto& [id, type] : objects_) {
    log.type_of_[log.object_lookup_.at(id).value] = log.find_type(type)->value;
  }

  // Traces. Derived traces follow the stable event order automatically.
  log.traces_.assign(log.object_ids_.size(), {});
  for (std::size_t e = 0; e < n; ++e) {
    const auto& ev = events_[order[e]];
    for (const auto& oid : ev.objects) {
      if (explicit_traces_.contains(oid)) continue;
      auto& trace = log.traces_[log.object_lookup_.at(oid).value];
      if (trace.empty() || trace.back() != EventIndex(e)) trace.push_back(EventIndex(e));
    }
  }
  for (const auto& [oid, eids] : explicit_traces_) {
    auto& trace = log.traces_[log.object_lookup_.at(oid).value];
    for (const auto& eid : eids) trace.push_back(log.event(eid));
  }

  log.objects_of_.assign(n, {});
  for (std::size_t o = 0; o < log.traces_.size(); ++o) {
    for (EventIndex e : log.traces_[o]) log.objects_of_[e.value].push_back(ObjectIndex(o));
  }
  for (auto& objs : log.objects_of_) {
    std::sort(objs.begin(), objs.end());
    objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  }
  return log;
}

}  // namespace ocelf
