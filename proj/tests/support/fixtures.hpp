#pragma once

#include <string>

#include "ocelf/event_log.hpp"

namespace ocelf::test {

std::string data_path(const std::string& name);

// Order/item running example: 11 events, o1 o2 (order), i1 i2 i3 (item).
EventLog fig1();
std::string fig1_path();

// Same log put together through the builder instead of the parser.
EventLog fig1_built();

}  // namespace ocelf::test
