#include "ocelf/validate.hpp"

#include <sstream>

namespace ocelf {

ValidationReport validate(const EventLog& log) {
  ValidationReport report;
  auto add = [&](std::string kind, const std::string& subject, std::string detail) {
    report.violations.push_back({std::move(kind), subject, std::move(detail)});
  };

  for (std::size_t i = 0; i < log.event_count(); ++i) {
    EventIndex e(i);
    if (log.start_time(e) > log.complete_time(e)) {
      std::ostringstream os;
      os << "start " << log.start_time(e) << " > complete " << log.complete_time(e);
      add("start_after_complete", log.event_id(e), os.str());
    }
    if (log.objects_of(e).empty()) add("orphan_event", log.event_id(e), "event is in no object's trace");
  }

  for (std::size_t i = 0; i < log.object_count(); ++i) {
    ObjectIndex o(i);
    if (!log.type_of(o)) add("dangling_object", log.object_id(o), "object referenced but never declared");
    auto trace = log.trace(o);
    for (std::size_t k = 1; k < trace.size(); ++k) {
      if (log.complete_time(trace[k - 1]) > log.complete_time(trace[k])) {
        add("unsorted_trace", log.object_id(o),
            "event '" + log.event_id(trace[k]) + "' completes before its trace predecessor '" +
                log.event_id(trace[k - 1]) + "'");
        break;
      }
    }
  }
  return report;
}

}  // namespace ocelf
