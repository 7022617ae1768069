#include "fixtures.hpp"

#include "ocelf/ocel_io.hpp"

namespace ocelf::test {

std::string data_path(const std::string& name) { return std::string(OCELF_TEST_DATA_DIR) + "/" + name; }

std::string fig1_path() { return data_path("fig1.jsonocel"); }

EventLog fig1() { return parse_ocel(fig1_path()); }

EventLog fig1_built() {
  EventLogBuilder b;
  b.add_object("o1", "order").add_object("o2", "order");
  b.add_object("i1", "item").add_object("i2", "item").add_object("i3", "item");
  struct Row {
    const char* id;
    const char* activity;
    std::vector<std::string> objects;
    double ct;
    double cost;  // < 0: absent
    const char* resource;
    double st;  // < 0: same as ct
  };
  const Row rows[] = {
      {"e1", "place order", {"o1", "i1", "i2"}, 100, 10, "alice", -1},
      {"e2", "place order", {"o2", "i3"}, 105, 20, "bob", -1},
      {"e3", "pick item", {"i1"}, 110, 3, "carol", 108},
      {"e4", "pick item", {"i2"}, 115, 4, "carol", 111},
      {"e5", "pay order", {"o1"}, 120, 50, "alice", -1},
      {"e6", "pick item", {"i3"}, 125, 6, "carol", -1},
      {"e7", "pay order", {"o2"}, 130, 70, "bob", -1},
      {"e8", "send delivery", {"i1", "i2"}, 135, 8, "dave", -1},
      {"e9", "send delivery", {"i3"}, 140, 9, "dave", -1},
      {"e10", "delivery received", {"i1", "i2"}, 145, -1, nullptr, -1},
      {"e11", "delivery received", {"i3"}, 150, -1, nullptr, -1},
  };
  for (const auto& r : rows) {
    EventRecord rec{r.id, r.activity, r.ct, std::nullopt, r.objects, {}};
    if (r.st >= 0) rec.start_time = r.st;
    if (r.cost >= 0) rec.attributes["cost"] = r.cost;
    if (r.resource) rec.attributes["resource"] = std::string(r.resource);
    b.add_event(std::move(rec));
  }
  return b.build();
}

}  // namespace ocelf::test
