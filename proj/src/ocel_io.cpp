#include "ocelf/ocel_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ocelf/error.hpp"

namespace ocelf {
namespace {

using nlohmann::json;

constexpr const char* kStartKey = "start_timestamp";

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorCode::kSchema, message); }

const json* member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& object_member(const json& obj, const char* key, const std::string& where) {
  static const json empty = json::object();
  const json* m = member(obj, key);
  if (m == nullptr || m->is_null()) return empty;
  if (!m->is_object()) schema_error(where + ": \"" + key + "\" must be an object");
  return *m;
}

std::optional<AttributeValue> to_attribute(const json& v, const std::string& where) {
  switch (v.type()) {
    case json::value_t::number_float:
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return v.get<double>();
    case json::value_t::string:
      return v.get<std::string>();
    case json::value_t::boolean:
      return v.get<bool>() ? 1.0 : 0.0;
    case json::value_t::null:
      return std::nullopt;
    default:
      schema_error(where + ": attribute values must be numbers or strings");
  }
}

}  // namespace

EventLog parse_ocel_string(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    auto [line, column] = line_and_column(text, err.byte);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + err.what(),
                     line, column);
  }
  if (!doc.is_object()) schema_error("top-level value must be a JSON object");

  EventLogBuilder builder;
  const json& global = object_member(doc, "ocel:global-log", "ocel:global-log");
  if (const json* types = member(global, "ocel:object-types"); types != nullptr && types->is_array()) {
    for (const auto& t : *types) {
      if (t.is_string()) builder.add_object_type(t.get<std::string>());
    }
  }

  std::set<std::string, std::less<>> declared;
  for (const auto& [oid, body] : object_member(doc, "ocel:objects", "document").items()) {
    if (!body.is_object()) schema_error("object '" + oid + "' must be a JSON object");
    const json* type = member(body, "ocel:type");
    if (type == nullptr || !type->is_string()) schema_error("object '" + oid + "' lacks a string \"ocel:type\"");
    builder.add_object(oid, type->get<std::string>());
    declared.insert(oid);
  }

  for (const auto& [eid, body] : object_member(doc, "ocel:events", "document").items()) {
    const std::string where = "event '" + eid + "'";
    if (!body.is_object()) schema_error(where + " must be a JSON object");
    EventRecord rec;
    rec.id = eid;

    const json* activity = member(body, "ocel:activity");
    if (activity == nullptr || !activity->is_string()) schema_error(where + " lacks a string \"ocel:activity\"");
    rec.activity = activity->get<std::string>();

    const json* ts = member(body, "ocel:timestamp");
    if (ts == nullptr || !ts->is_string()) schema_error(where + " lacks a string \"ocel:timestamp\"");
    auto complete = parse_iso8601(ts->get<std::string>());
    if (!complete) schema_error(where + ": unparseable timestamp '" + ts->get<std::string>() + "'");
    rec.complete_time = *complete;

    if (const json* omap = member(body, "ocel:omap"); omap != nullptr && !omap->is_null()) {
      if (!omap->is_array()) schema_error(where + ": \"ocel:omap\" must be an array");
      for (const auto& ref : *omap) {
        if (!ref.is_string()) schema_error(where + ": omap entries must be strings");
        auto oid = ref.get<std::string>();
        if (!declared.contains(oid)) schema_error(where + " references undeclared object '" + oid + "'");
        rec.objects.push_back(std::move(oid));
      }
    }

    for (const auto& [name, value] : object_member(body, "ocel:vmap", where).items()) {
      if (name == kStartKey && value.is_string()) {
        if (auto st = parse_iso8601(value.get<std::string>())) {
          rec.start_time = *st;
          continue;
        }
      }
      if (auto attr = to_attribute(value, where + " attribute '" + name + "'")) {
        rec.attributes.emplace(name, std::move(*attr));
      }
    }
    builder.add_event(std::move(rec));
  }
  return builder.build();
}

EventLog parse_ocel(const std::filesystem::path& path) { return parse_ocel_string(read_text_file(path)); }

std::string serialize_ocel(const EventLog& log) {
  json events = json::object();
  std::set<std::string> attribute_names;
  for (std::size_t i = 0; i < log.event_count(); ++i) {
    EventIndex e(i);
    json omap = json::array();
    for (ObjectIndex o : log.objects_of(e)) omap.push_back(log.object_id(o));
    json vmap = json::object();
    for (const auto& [name, value] : log.attributes(e)) {
      attribute_names.insert(name);
      if (const double* d = as_number(value)) {
        vmap[name] = *d;
      } else {
        vmap[name] = *as_string(value);
      }
    }
    if (log.start_time(e) != log.complete_time(e)) vmap[kStartKey] = format_iso8601(log.start_time(e));
    events[log.event_id(e)] = {
        {"ocel:activity", log.activity(e)},
        {"ocel:timestamp", format_iso8601(log.complete_time(e))},
        {"ocel:omap", std::move(omap)},
        {"ocel:vmap", std::move(vmap)},
    };
  }

  json objects = json::object();
  for (std::size_t i = 0; i < log.object_count(); ++i) {
    ObjectIndex o(i);
    auto type = log.type_of(o);
    objects[log.object_id(o)] = {
        {"ocel:type", type ? log.type_name(*type) : std::string()},
        {"ocel:ovmap", json::object()},
    };
  }

  json doc = {
      {"ocel:global-log",
       {{"ocel:version", "1.0"},
        {"ocel:ordering", "timestamp"},
        {"ocel:attribute-names", attribute_names},
        {"ocel:object-types", std::vector<std::string>(log.type_names().begin(), log.type_names().end())}}},
      {"ocel:events", std::move(events)},
      {"ocel:objects", std::move(objects)},
  };
  return doc.dump(2) + "\n";
}

void write_ocel(const EventLog& log, const std::filesystem::path& path) {
  write_text_file(path, serialize_ocel(log));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
}

}  // namespace ocelf
