#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ocelf/event_log.hpp"

namespace ocelf {

/// Reads an OCEL 1.0 JSON document ("ocel:events", "ocel:objects", ...).
///
/// Start times come from the vmap key "start_timestamp" when it holds an
/// ISO-8601 string; that key is then consumed rather than kept as an
/// attribute. Throws ParseError (with line/column) on malformed JSON and
/// SchemaError on structural problems such as undeclared objects.
EventLog parse_ocel_string(std::string_view text);
EventLog parse_ocel(const std::filesystem::path& path);

/// Canonical serialization: sorted keys, millisecond UTC timestamps.
std::string serialize_ocel(const EventLog& log);
/// Throws IoError when the file cannot be written.
void write_ocel(const EventLog& log, const std::filesystem::path& path);

/// Whole-file helpers shared by the I/O layers. Both throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ocelf
