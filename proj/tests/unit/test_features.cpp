#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ocelf/error.hpp"
#include "ocelf/features.hpp"
#include "random_log.hpp"

using namespace ocelf;

namespace {

// Component executions of fig1 with their graphs.
struct Fig1 {
  EventLog log = test::fig1();
  ObjectGraph graph = build_object_graph(log);
  std::vector<ProcessExecution> executions = extract_components(log, graph);
  std::vector<ExecutionGraph> graphs = build_execution_graphs(log, executions);
  FeatureEngine engine{log};

  FeatureValue at(const std::string& spec, const std::string& event) {
    EventIndex e = log.event(event);
    for (std::size_t i = 0; i < executions.size(); ++i) {
      if (executions[i].contains(e)) return engine.compute(executions[i], graphs[i], e, parse_feature_spec(spec));
    }
    throw std::logic_error("event in no execution");
  }
};

ErrorCode error_of(Fig1& f, const std::string& spec, const std::string& event) {
  try {
    f.at(spec, event);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kParse;
}

}  // namespace

TEST_CASE("hand values on fig1") {
  Fig1 f;
  CHECK(f.at("P2", "e5") == 20.0);
  CHECK(f.at("P3", "e5") == 25.0);
  CHECK(f.at("P5", "e8") == 5.0);
  CHECK(f.at("P5", "e1") == 0.0);
  CHECK(f.at("O2", "e5") == 3.0);
  CHECK(f.at("O5", "e1") == 3.0);
  CHECK(f.at("O6[item]", "e1") == 2.0);
  CHECK(f.at("execution_duration", "e3") == 45.0);
}

TEST_CASE("control flow") {
  Fig1 f;
  // sinks of the prefix up to e4 are the two picks
  CHECK(f.at("C1[pick item]", "e4") == 1.0);
  CHECK(f.at("C1[place order]", "e4") == 0.0);
  CHECK(f.at("C1[place order]", "e1") == 1.0);
  CHECK(f.at("C2[place order]", "e4") == 1.0);
  CHECK(f.at("C2[pick item]", "e4") == 0.0);
  CHECK(f.at("C2[pick item]", "e8") == 1.0);
  CHECK(f.at("C3[pick item]", "e8") == 2.0);
  CHECK(f.at("C3[pick item]", "e1") == 0.0);
  CHECK(f.at("C4[delivery received]", "e5") == 1.0);
  CHECK(f.at("C5[pay order]", "e5") == 1.0);
  CHECK(f.at("C5[pay order]", "e4") == 0.0);
}

TEST_CASE("data flow") {
  Fig1 f;
  CHECK(f.at("D1[cost,avg]", "e5") == doctest::Approx(17.0 / 3.0));
  CHECK(f.at("D1[cost,sum]", "e5") == 17.0);
  CHECK(f.at("D1[cost,max]", "e5") == 10.0);
  CHECK(f.at("D1[cost,min]", "e5") == 3.0);
  CHECK(f.at("D1[cost,last]", "e5") == 4.0);
  CHECK_FALSE(f.at("D1[cost]", "e1"));
  CHECK(f.at("D2[cost,avg]", "e8") == 3.5);
  CHECK(f.at("D2[cost]", "e10") == 8.0);
  CHECK_FALSE(f.at("D2[cost]", "e1"));
  CHECK(f.at("D3[cost]", "e5") == 50.0);
  CHECK_FALSE(f.at("D3[cost]", "e10"));
  CHECK_FALSE(f.at("D3[weight]", "e5"));
  CHECK(error_of(f, "D3[resource]", "e5") == ErrorCode::kTypeMismatch);
}

TEST_CASE("resource") {
  Fig1 f;
  CHECK(f.at("R1", "e3") == 0.0);
  CHECK(f.at("R1", "e6") == 2.0);
  CHECK(f.at("R1[10]", "e6") == 1.0);
  CHECK_FALSE(f.at("R1", "e10"));
  CHECK(f.at("R2[10]", "e5") == 2.0);
  CHECK(f.at("R2", "e11") == 10.0);
  CHECK(f.at("R3[carol]", "e3") == 1.0);
  CHECK(f.at("R3[carol]", "e5") == 0.0);
  CHECK_FALSE(f.at("R3[carol]", "e10"));
}

TEST_CASE("performance") {
  Fig1 f;
  CHECK(f.at("P7[item]", "e8") == 5.0);
  CHECK(f.at("P7[order]", "e8") == 0.0);
  CHECK(f.at("P8[item]", "e8") == 0.0);
  CHECK(f.at("P8[item]", "e5") == 0.0);
  CHECK(f.at("service_time", "e3") == 2.0);
  CHECK(f.at("service_time", "e5") == 0.0);
  CHECK(f.at("waiting_time", "e3") == 8.0);
  CHECK(f.at("waiting_time", "e4") == 11.0);
  CHECK(f.at("waiting_time", "e1") == 0.0);
  CHECK(f.at("sojourn_time", "e3") == 10.0);
  CHECK(f.at("flow_time", "e3") == 10.0);
  CHECK(f.at("flow_time", "e8") == 5.0 + 20.0);
}

TEST_CASE("lagging time between types") {
  EventLogBuilder b;
  b.add_object("x", "order").add_object("y", "item");
  b.add_event({"a", "create", 0, std::nullopt, {"x"}, {}});
  b.add_event({"b", "pick", 5, std::nullopt, {"y"}, {}});
  b.add_event({"c", "ship", 10, std::nullopt, {"x", "y"}, {}});
  auto log = b.build();
  auto g = build_object_graph(log);
  auto xs = extract_components(log, g);
  auto eg = build_execution_graph(log, xs[0]);
  auto c = log.event("c");
  CHECK(compute(log, xs[0], eg, c, parse_feature_spec("P8[item]")) == 5.0);
  CHECK(compute(log, xs[0], eg, c, parse_feature_spec("P8[order]")) == 0.0);
  CHECK(compute(log, xs[0], eg, c, parse_feature_spec("P5")) == 5.0);
  CHECK(compute(log, xs[0], eg, c, parse_feature_spec("P7[item]")) == 0.0);
}

TEST_CASE("objects") {
  Fig1 f;
  CHECK(f.at("O1", "e1") == 3.0);
  CHECK(f.at("O1", "e5") == 5.0);
  CHECK(f.at("O2", "e1") == 0.0);
  CHECK(f.at("O3[item]", "e5") == 2.0);
  CHECK(f.at("O3[order]", "e5") == 1.0);
  CHECK(f.at("O6[order]", "e8") == 0.0);
  CHECK(error_of(f, "O4", "e1") == ErrorCode::kUnsupportedSpec);
}

TEST_CASE("error cases") {
  Fig1 f;
  auto e2 = f.log.event("e2");
  try {
    f.engine.compute(f.executions[0], f.graphs[0], e2, parse_feature_spec("O5"));
    FAIL("expected NotInExecution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInExecution);
  }
  CHECK(error_of(f, "C5", "e1") == ErrorCode::kInvalidSpec);
  CHECK_THROWS_AS(f.engine.compute_local(e2, parse_feature_spec("P3")), Error);
  CHECK(f.engine.compute_local(e2, parse_feature_spec("O5")) == 2.0);
}

TEST_CASE("feature matrix") {
  Fig1 f;
  std::vector<FeatureSpec> o5{parse_feature_spec("O5")};
  auto m = compute_matrix(f.log, f.executions, f.graphs, o5);
  CHECK(m.row_count() == 11);
  CHECK(m.column_names == std::vector<std::string>{"O5"});
  for (const auto& v : m.values) {
    REQUIRE(v);
    CHECK(*v >= 1.0);
    CHECK(*v <= 3.0);
  }

  auto none = compute_matrix(f.log, f.executions, f.graphs, {});
  CHECK(none.row_count() == 11);
  CHECK(none.column_count() == 0);
  CHECK(f.log.event_id(none.rows[0].event) == "e1");
  CHECK(f.log.event_id(none.rows[6].event) == "e2");

  auto lead = extract_leading_type(f.log, f.graph, "item");
  auto lead_graphs = build_execution_graphs(f.log, lead);
  auto lm = compute_matrix(f.log, lead, lead_graphs, o5);
  CHECK(lm.row_count() == 15);
  CHECK(std::count_if(lm.rows.begin(), lm.rows.end(), [&](const RowKey& r) { return r.event == f.log.event("e1"); }) ==
        2);

  std::vector<FeatureSpec> bad{parse_feature_spec("D3[resource]")};
  try {
    compute_matrix(f.log, f.executions, f.graphs, bad);
    FAIL("expected TypeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTypeMismatch);
    CHECK(std::string(e.what()).find("event 'e1'") != std::string::npos);
  }
}

TEST_CASE("matrix is identical for any thread count") {
  std::vector<FeatureSpec> specs;
  for (const char* s : {"C1", "C2", "C3", "C4", "D1[cost]", "D2[cost,max]", "R1[5]", "R2", "P2", "P3", "P5", "P7",
                        "P8", "waiting_time", "flow_time", "O1", "O2", "O3", "O5", "O6"})
    specs.push_back(parse_feature_spec(s));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto log = test::random_log(seed, {10, 60});
    auto g = build_object_graph(log);
    for (const auto& type : log.type_names()) {
      auto xs = extract_leading_type(log, g, type);
      auto gs = build_execution_graphs(log, xs);
      auto one = compute_matrix(log, xs, gs, specs, 1);
      auto many = compute_matrix(log, xs, gs, specs, 8);
      CHECK(one.values == many.values);
      CHECK(one.rows == many.rows);
    }
  }
}

TEST_CASE("catalog invariants on random logs") {
  std::vector<FeatureSpec> specs;
  for (const char* s : {"P2", "P3", "execution_duration", "P5", "P7", "P8", "service_time", "waiting_time",
                        "sojourn_time", "flow_time", "O5", "O6", "C5", "O1", "O2"})
    specs.push_back(parse_feature_spec(s));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto log = test::random_log(500 + seed);
    auto g = build_object_graph(log);
    auto xs = extract_components(log, g);
    auto gs = build_execution_graphs(log, xs);
    auto m = compute_matrix(log, xs, gs, specs);
    auto col = [&](const std::string& prefix) {
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < m.column_count(); ++c)
        if (m.column_names[c].rfind(prefix, 0) == 0) out.push_back(c);
      return out;
    };
    auto one = [&](const std::string& name) { return col(name).front(); };
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      auto v = [&](std::size_t c) { return *m.at(r, c); };
      CHECK(std::abs(v(one("P2")) + v(one("P3")) - v(one("execution_duration"))) <= 1e-9);
      for (std::size_t c : col("P7[")) CHECK(v(one("P5")) >= v(c));
      double types = 0;
      for (std::size_t c : col("O6[")) types += v(c);
      CHECK(types == v(one("O5")));
      double acts = 0;
      for (std::size_t c : col("C5[")) acts += v(c);
      CHECK(acts == 1.0);
      for (const char* name : {"P2", "P3", "P5", "P7", "P8", "waiting_time", "sojourn_time", "flow_time"})
        for (std::size_t c : col(name)) CHECK(v(c) >= 0.0);
      // monotone along an execution's events
      if (r > 0 && m.rows[r - 1].execution == m.rows[r].execution) {
        CHECK(v(one("O1")) >= *m.at(r - 1, one("O1")));
        CHECK(v(one("O2")) >= *m.at(r - 1, one("O2")));
      }
    }
  }
}
