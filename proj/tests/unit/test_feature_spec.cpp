#include <doctest.h>

#include "fixtures.hpp"
#include "ocelf/error.hpp"
#include "ocelf/feature_spec.hpp"

using namespace ocelf;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_feature_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::kParse;
}

std::vector<std::string> names(const std::vector<FeatureSpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) out.push_back(to_string(s));
  return out;
}

}  // namespace

TEST_CASE("codes and semantic names") {
  CHECK(parse_feature_spec("O5").key == FeatureKey::kObjectCount);
  CHECK(parse_feature_spec("object_count").key == FeatureKey::kObjectCount);
  CHECK(parse_feature_spec("service_time").key == FeatureKey::kServiceTime);
  CHECK(parse_feature_spec(" P5 ").key == FeatureKey::kSynchronizationTime);
}

TEST_CASE("positional and named parameters") {
  auto c3 = parse_feature_spec("C3[place order]");
  CHECK(c3.key == FeatureKey::kPreviousActivityCount);
  CHECK(c3.activity == "place order");

  auto d1 = parse_feature_spec("D1[amount,sum]");
  CHECK(d1.attribute == "amount");
  CHECK(d1.aggregation == Aggregation::kSum);
  CHECK(parse_feature_spec("D1[amount]").aggregation == Aggregation::kAvg);
  CHECK(parse_feature_spec("D2[agg=max, attribute=amount]") == parse_feature_spec("D2[amount,max]"));

  auto r1 = parse_feature_spec("R1[3600,worker]");
  CHECK(r1.window == 3600.0);
  CHECK(r1.resource_attribute == "worker");
  CHECK(parse_feature_spec("R1").window == 86400.0);
  CHECK(parse_feature_spec("R1").resource_attribute == "resource");

  auto r3 = parse_feature_spec("R3[alice, resource=worker]");
  CHECK(r3.resource_value == "alice");
  CHECK(r3.resource_attribute == "worker");

  CHECK(parse_feature_spec("P7[item]").type == "item");
  CHECK(parse_feature_spec("O6[type=offer]").type == "offer");
}

TEST_CASE("bad specs") {
  CHECK(code_of("Q9") == ErrorCode::kInvalidSpec);
  CHECK(code_of("") == ErrorCode::kInvalidSpec);
  CHECK(code_of("C3[a") == ErrorCode::kInvalidSpec);
  CHECK(code_of("D1") == ErrorCode::kInvalidSpec);
  CHECK(code_of("D1[amount,median]") == ErrorCode::kInvalidSpec);
  CHECK(code_of("R1[-5]") == ErrorCode::kInvalidSpec);
  CHECK(code_of("R1[soon]") == ErrorCode::kInvalidSpec);
  CHECK(code_of("O5[x]") == ErrorCode::kInvalidSpec);
  CHECK(code_of("C3[type=item]") == ErrorCode::kInvalidSpec);
  try {
    parse_feature_spec("Q9");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Q9") != std::string::npos);
  }
}

TEST_CASE("canonical text round trips") {
  for (const char* text : {"C1", "C2[pick item]", "D1[cost,avg]", "D2[cost,last]", "D3[cost]", "R1", "R1[3600]",
                           "R1[86400,worker]", "R2[60]", "R3", "R3[dave]", "R3[resource=worker]", "R3[x,worker]",
                           "P2", "P7[item]", "P8", "service_time", "flow_time", "execution_duration", "O1", "O3[order]",
                           "O4", "O6[item]"}) {
    auto spec = parse_feature_spec(text);
    CHECK(to_string(spec) == text);
    CHECK(parse_feature_spec(to_string(spec)) == spec);
  }
  CHECK(to_string(parse_feature_spec("R1[1.5]")) == "R1[1.5]");
}

TEST_CASE("families") {
  CHECK(is_family(parse_feature_spec("C5")));
  CHECK_FALSE(is_family(parse_feature_spec("C5[pay order]")));
  CHECK(is_family(parse_feature_spec("O6")));
  CHECK(is_family(parse_feature_spec("R3")));
  CHECK_FALSE(is_family(parse_feature_spec("P5")));
  CHECK(is_event_local(parse_feature_spec("D3[cost]")));
  CHECK_FALSE(is_event_local(parse_feature_spec("P3")));
}

TEST_CASE("expansion over fig1") {
  auto log = test::fig1();
  std::vector<FeatureSpec> specs{parse_feature_spec("C5"), parse_feature_spec("O6"), parse_feature_spec("O4"),
                                 parse_feature_spec("O5"), parse_feature_spec("object_count"),
                                 parse_feature_spec("R3")};
  CHECK(names(expand_specs(log, specs)) ==
        std::vector<std::string>{"C5[delivery received]", "C5[pay order]", "C5[pick item]", "C5[place order]",
                                 "C5[send delivery]", "O6[item]", "O6[order]", "O5", "R3[alice]", "R3[bob]", "R3[carol]", "R3[dave]"});
  std::vector<FeatureSpec> unknown{parse_feature_spec("O6[pallet]")};
  CHECK_THROWS_AS(expand_specs(log, unknown), Error);
  // an activity absent from the log is allowed and simply never fires
  std::vector<FeatureSpec> absent{parse_feature_spec("C5[refund]")};
  CHECK(expand_specs(log, absent).size() == 1);
}
