#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ocelf/ids.hpp"
#include "ocelf/timestamp.hpp"

namespace ocelf {

/// Event attribute value. Only the numeric alternative feeds numeric features;
/// strings act as labels (resources, filters).
using AttributeValue = std::variant<double, std::string>;
using Attributes = std::map<std::string, AttributeValue, std::less<>>;

inline const double* as_number(const AttributeValue& v) { return std::get_if<double>(&v); }
inline const std::string* as_string(const AttributeValue& v) { return std::get_if<std::string>(&v); }

struct EventView {
  EventIndex id;
  std::span<const ObjectIndex> objects;
  std::map<TypeIndex, std::vector<ObjectIndex>> objects_of_type;
};

/// An object-centric event log. Immutable once built (see EventLogBuilder).
///
/// Events are stored in the stable total order (complete time, then event id),
/// so comparing EventIndex values compares events in time. Objects, types and
/// activities are indexed in lexicographic order of their names.
class EventLog {
 public:
  EventLog() = default;

  std::size_t event_count() const { return event_ids_.size(); }
  std::size_t object_count() const { return object_ids_.size(); }
  std::size_t type_count() const { return type_names_.size(); }
  std::size_t activity_count() const { return activity_names_.size(); }

  const std::string& event_id(EventIndex e) const { return event_ids_[e.value]; }
  const std::string& object_id(ObjectIndex o) const { return object_ids_[o.value]; }
  const std::string& type_name(TypeIndex t) const { return type_names_[t.value]; }
  const std::string& activity_name(ActivityIndex a) const { return activity_names_[a.value]; }

  std::span<const std::string> event_ids() const { return event_ids_; }
  std::span<const std::string> object_ids() const { return object_ids_; }
  std::span<const std::string> type_names() const { return type_names_; }
  std::span<const std::string> activity_names() const { return activity_names_; }

  std::optional<EventIndex> find_event(std::string_view id) const;
  std::optional<ObjectIndex> find_object(std::string_view id) const;
  std::optional<TypeIndex> find_type(std::string_view name) const;
  std::optional<ActivityIndex> find_activity(std::string_view name) const;

  // Throwing lookups: UnknownEvent / UnknownObject / UnknownType.
  EventIndex event(std::string_view id) const;
  ObjectIndex object(std::string_view id) const;
  TypeIndex type(std::string_view name) const;

  Timestamp complete_time(EventIndex e) const { return complete_[e.value]; }
  Timestamp start_time(EventIndex e) const { return start_[e.value]; }
  /// Completion times indexed by event, hence ascending.
  std::span<const Timestamp> complete_times() const { return complete_; }
  ActivityIndex activity_of(EventIndex e) const { return activity_of_[e.value]; }
  const std::string& activity(EventIndex e) const { return activity_names_[activity_of_[e.value].value]; }
  const Attributes& attributes(EventIndex e) const { return attributes_[e.value]; }
  const AttributeValue* attribute(EventIndex e, std::string_view name) const;

  /// Type of an object; nullopt for an object referenced by a trace but never
  /// declared (a validation violation).
  std::optional<TypeIndex> type_of(ObjectIndex o) const;

  std::span<const EventIndex> trace(ObjectIndex o) const { return traces_[o.value]; }

  /// Objects whose trace contains the event, ascending.
  std::span<const ObjectIndex> objects_of(EventIndex e) const { return objects_of_[e.value]; }
  /// Same, by event id. Throws UnknownEvent.
  std::vector<std::string> objects_of(std::string_view event_id) const;

  EventView view(EventIndex e) const;

  bool operator==(const EventLog&) const = default;

 private:
  friend class EventLogBuilder;

  std::vector<std::string> event_ids_;
  std::vector<std::string> object_ids_;
  std::vector<std::string> type_names_;
  std::vector<std::string> activity_names_;

  std::vector<Timestamp> complete_;
  std::vector<Timestamp> start_;
  std::vector<ActivityIndex> activity_of_;
  std::vector<Attributes> attributes_;

  static constexpr std::uint32_t kUntyped = 0xffffffffu;
  std::vector<std::uint32_t> type_of_;
  std::vector<std::vector<EventIndex>> traces_;
  std::vector<std::vector<ObjectIndex>> objects_of_;

  std::unordered_map<std::string, EventIndex> event_lookup_;
  std::unordered_map<std::string, ObjectIndex> object_lookup_;
};

struct EventRecord {
  std::string id;
  std::string activity;
  Timestamp complete_time = 0.0;
  /// Defaults to complete_time when absent.
  std::optional<Timestamp> start_time;
  /// Object references in input order; duplicates are ignored.
  std::vector<std::string> objects;
  Attributes attributes;
};

/// Collects events and objects and produces a canonical EventLog.
///
/// Traces are derived from each event's object references and sorted by
/// (complete time, event id), unless set explicitly with set_trace(), which
/// keeps the given order verbatim. Objects referenced without a declaration
/// are kept untyped so validate() can report them.
class EventLogBuilder {
 public:
  EventLogBuilder& add_object_type(std::string name);
  /// Throws SchemaError when the id is redeclared with a different type.
  EventLogBuilder& add_object(std::string id, std::string type);
  /// Throws SchemaError on duplicate event ids.
  EventLogBuilder& add_event(EventRecord record);
  EventLogBuilder& set_trace(std::string object_id, std::vector<std::string> event_ids);

  /// Throws UnknownEvent when an explicit trace names an undeclared event.
  EventLog build() const;

 private:
  std::vector<std::string> extra_types_;
  std::map<std::string, std::string, std::less<>> objects_;
  std::vector<EventRecord> events_;
  std::unordered_map<std::string, std::size_t> event_positions_;
  std::map<std::string, std::vector<std::string>, std::less<>> explicit_traces_;
};

}  // namespace ocelf
