#pragma once

#include <string>
#include <string_view>

namespace ocelf {

/// Shortest decimal text that reads back to exactly `value`.
std::string format_number(double value);

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Double-quoted Graphviz ID with quotes and backslashes escaped; "\n" in the
/// input becomes a DOT line break.
std::string dot_quote(std::string_view text);

}  // namespace ocelf
