#pragma once

#include <string>
#include <vector>

#include "ocelf/event_log.hpp"

namespace ocelf {

struct Violation {
  /// One of "start_after_complete", "unsorted_trace", "orphan_event",
  /// "dangling_object".
  std::string kind;
  /// Id of the offending event or object.
  std::string subject;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool is_clean() const { return violations.empty(); }
};

/// Checks the event log invariants. Never throws on content.
ValidationReport validate(const EventLog& log);

}  // namespace ocelf
