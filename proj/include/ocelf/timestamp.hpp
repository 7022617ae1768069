#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ocelf {

/// Seconds since the Unix epoch, UTC. Sub-second precision is kept.
using Timestamp = double;

/// Parses ISO-8601 date-times such as "2021-03-04T10:15:00.250Z",
/// "2021-03-04 10:15:00+01:00" or a bare "2021-03-04". A missing offset is
/// read as UTC. Returns nullopt for anything else.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// Formats as "YYYY-MM-DDTHH:MM:SS.mmmZ", rounded to the nearest millisecond.
std::string format_iso8601(Timestamp t);

}  // namespace ocelf
