#include "ocelf/feature_spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "ocelf/error.hpp"
#include "ocelf/text.hpp"

namespace ocelf {
namespace {

enum class Params { kNone, kActivity, kType, kAttributeAgg, kAttribute, kWindowResource, kWindow, kResourceValue };

struct KeyInfo {
  FeatureKey key;
  std::string_view code;
  std::string_view name;
  Params params;
};

constexpr std::array kKeys{
    KeyInfo{FeatureKey::kCurrentActivities, "C1", "current_activities", Params::kActivity},
    KeyInfo{FeatureKey::kPrecedingActivity, "C2", "preceding_activity", Params::kActivity},
    KeyInfo{FeatureKey::kPreviousActivityCount, "C3", "previous_activity_count", Params::kActivity},
    KeyInfo{FeatureKey::kFollowingActivityCount, "C4", "following_activity_count", Params::kActivity},
    KeyInfo{FeatureKey::kCurrentActivity, "C5", "current_activity", Params::kActivity},
    KeyInfo{FeatureKey::kPreviousValue, "D1", "previous_value", Params::kAttributeAgg},
    KeyInfo{FeatureKey::kPrecedingValue, "D2", "preceding_value", Params::kAttributeAgg},
    KeyInfo{FeatureKey::kValue, "D3", "value", Params::kAttribute},
    KeyInfo{FeatureKey::kResourceWorkload, "R1", "resource_workload", Params::kWindowResource},
    KeyInfo{FeatureKey::kSystemWorkload, "R2", "system_workload", Params::kWindow},
    KeyInfo{FeatureKey::kResourceIs, "R3", "resource_is", Params::kResourceValue},
    KeyInfo{FeatureKey::kElapsedTime, "P2", "elapsed_time", Params::kNone},
    KeyInfo{FeatureKey::kRemainingTime, "P3", "remaining_time", Params::kNone},
    KeyInfo{FeatureKey::kSynchronizationTime, "P5", "synchronization_time", Params::kNone},
    KeyInfo{FeatureKey::kPoolingTime, "P7", "pooling_time", Params::kType},
    KeyInfo{FeatureKey::kLaggingTime, "P8", "lagging_time", Params::kType},
    KeyInfo{FeatureKey::kServiceTime, "", "service_time", Params::kNone},
    KeyInfo{FeatureKey::kWaitingTime, "", "waiting_time", Params::kNone},
    KeyInfo{FeatureKey::kSojournTime, "", "sojourn_time", Params::kNone},
    KeyInfo{FeatureKey::kFlowTime, "", "flow_time", Params::kNone},
    KeyInfo{FeatureKey::kExecutionDuration, "", "execution_duration", Params::kNone},
    KeyInfo{FeatureKey::kSystemObjectCount, "O1", "system_object_count", Params::kNone},
    KeyInfo{FeatureKey::kPreviousObjectCount, "O2", "previous_object_count", Params::kNone},
    KeyInfo{FeatureKey::kPreviousTypeCount, "O3", "previous_type_count", Params::kType},
    KeyInfo{FeatureKey::kEventObjects, "O4", "event_objects", Params::kNone},
    KeyInfo{FeatureKey::kObjectCount, "O5", "object_count", Params::kNone},
    KeyInfo{FeatureKey::kTypeCount, "O6", "type_count", Params::kType},
};

const KeyInfo& info(FeatureKey key) {
  for (const auto& k : kKeys) {
    if (k.key == key) return k;
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown feature key");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const double kDefaultWindow = FeatureSpec{}.window;
const std::string kDefaultResource = FeatureSpec{}.resource_attribute;

}  // namespace

std::string_view to_string(Aggregation agg) {
  switch (agg) {
    case Aggregation::kAvg: return "avg";
    case Aggregation::kSum: return "sum";
    case Aggregation::kMin: return "min";
    case Aggregation::kMax: return "max";
    case Aggregation::kLast: return "last";
  }
  return "avg";
}

std::string_view key_code(FeatureKey key) {
  const auto& k = info(key);
  return k.code.empty() ? k.name : k.code;
}

bool is_family(FeatureKey key) {
  auto p = info(key).params;
  return p == Params::kActivity || p == Params::kType || p == Params::kResourceValue;
}

bool is_family(const FeatureSpec& spec) {
  switch (info(spec.key).params) {
    case Params::kActivity: return spec.activity.empty();
    case Params::kType: return spec.type.empty();
    case Params::kResourceValue: return spec.resource_value.empty();
    default: return false;
  }
}

bool is_event_local(const FeatureSpec& spec) {
  switch (spec.key) {
    case FeatureKey::kCurrentActivity:
    case FeatureKey::kValue:
    case FeatureKey::kResourceIs:
    case FeatureKey::kServiceTime:
    case FeatureKey::kObjectCount:
    case FeatureKey::kTypeCount:
      return true;
    default:
      return false;
  }
}

FeatureSpec parse_feature_spec(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const std::string& why) -> FeatureSpec {
    throw Error(ErrorCode::kInvalidSpec, "invalid feature spec '" + original + "': " + why);
  };

  text = trim(text);
  std::string_view key_text = text;
  std::vector<std::string_view> params;
  if (auto open = text.find('['); open != std::string_view::npos) {
    if (text.back() != ']') return fail("missing closing ']'");
    key_text = trim(text.substr(0, open));
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    if (!trim(inner).empty()) {
      std::size_t start = 0;
      for (;;) {
        auto comma = inner.find(',', start);
        params.push_back(trim(inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
  }

  auto found = std::find_if(kKeys.begin(), kKeys.end(),
                            [&](const KeyInfo& k) { return k.code == key_text || k.name == key_text; });
  if (key_text.empty() || found == kKeys.end()) return fail("unknown key '" + std::string(key_text) + "'");

  FeatureSpec spec;
  spec.key = found->key;

  std::vector<std::string_view> slots;
  switch (found->params) {
    case Params::kNone: break;
    case Params::kActivity: slots = {"activity"}; break;
    case Params::kType: slots = {"type"}; break;
    case Params::kAttributeAgg: slots = {"attribute", "agg"}; break;
    case Params::kAttribute: slots = {"attribute"}; break;
    case Params::kWindowResource: slots = {"window", "resource"}; break;
    case Params::kWindow: slots = {"window"}; break;
    case Params::kResourceValue: slots = {"value", "resource"}; break;
  }

  auto assign = [&](std::string_view slot, std::string_view value) {
    if (std::find(slots.begin(), slots.end(), slot) == slots.end()) {
      fail("parameter '" + std::string(slot) + "' does not apply to " + std::string(key_text));
    }
    const std::string v(value);
    if (slot == "activity") {
      spec.activity = v;
    } else if (slot == "type") {
      spec.type = v;
    } else if (slot == "attribute") {
      spec.attribute = v;
    } else if (slot == "agg") {
      static constexpr std::array aggs{Aggregation::kAvg, Aggregation::kSum, Aggregation::kMin,
                                       Aggregation::kMax, Aggregation::kLast};
      auto it = std::find_if(aggs.begin(), aggs.end(), [&](Aggregation a) { return to_string(a) == value; });
      if (it == aggs.end()) fail("unknown aggregation '" + v + "'");
      spec.aggregation = *it;
    } else if (slot == "window") {
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), w);
      if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(w) || w < 0.0) {
        fail("window must be a non-negative number of seconds");
      }
      spec.window = w;
    } else if (slot == "resource") {
      spec.resource_attribute = v;
    } else if (slot == "value") {
      spec.resource_value = v;
    }
  };

  std::size_t next_positional = 0;
  for (auto p : params) {
    auto eq = p.find('=');
    if (eq != std::string_view::npos) {
      auto name = trim(p.substr(0, eq));
      if (name == "aggregation") name = "agg";
      if (name == "resource_attribute") name = "resource";
      static constexpr std::array known{"activity", "type", "attribute", "agg", "window", "resource", "value"};
      if (std::find(known.begin(), known.end(), name) != known.end()) {
        assign(name, trim(p.substr(eq + 1)));
        continue;
      }
    }
    if (next_positional >= slots.size()) fail("too many parameters");
    assign(slots[next_positional++], p);
  }

  if ((found->params == Params::kAttributeAgg || found->params == Params::kAttribute) && spec.attribute.empty()) {
    fail("an attribute name is required");
  }
  if ((found->params == Params::kWindowResource || found->params == Params::kResourceValue) &&
      spec.resource_attribute.empty()) {
    fail("the resource attribute name must not be empty");
  }
  return spec;
}

std::string to_string(const FeatureSpec& spec) {
  const auto& k = info(spec.key);
  std::string out(key_code(spec.key));
  std::vector<std::string> params;
  switch (k.params) {
    case Params::kNone: break;
    case Params::kActivity:
      if (!spec.activity.empty()) params.push_back(spec.activity);
      break;
    case Params::kType:
      if (!spec.type.empty()) params.push_back(spec.type);
      break;
    case Params::kAttributeAgg:
      params = {spec.attribute, std::string(to_string(spec.aggregation))};
      break;
    case Params::kAttribute:
      params = {spec.attribute};
      break;
    case Params::kWindowResource:
      if (spec.resource_attribute != kDefaultResource) {
        params = {format_number(spec.window), spec.resource_attribute};
      } else if (spec.window != kDefaultWindow) {
        params = {format_number(spec.window)};
      }
      break;
    case Params::kWindow:
      if (spec.window != kDefaultWindow) params = {format_number(spec.window)};
      break;
    case Params::kResourceValue:
      if (!spec.resource_value.empty()) params.push_back(spec.resource_value);
      if (spec.resource_attribute != kDefaultResource) {
        params.push_back(spec.resource_value.empty() ? "resource=" + spec.resource_attribute
                                                     : spec.resource_attribute);
      }
      break;
  }
  if (!params.empty()) {
    out += '[';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += params[i];
    }
    out += ']';
  }
  return out;
}

std::vector<FeatureSpec> expand_specs(const EventLog& log, std::span<const FeatureSpec> specs) {
  std::vector<FeatureSpec> out;
  std::set<std::string> seen;
  auto emit = [&](FeatureSpec s) {
    if (seen.insert(to_string(s)).second) out.push_back(std::move(s));
  };

  for (const auto& spec : specs) {
    if (spec.key == FeatureKey::kEventObjects) continue;
    const auto params = info(spec.key).params;
    if (params == Params::kType && !spec.type.empty()) log.type(spec.type);
    if (!is_family(spec)) {
      emit(spec);
      continue;
    }
    if (params == Params::kActivity) {
      for (const auto& a : log.activity_names()) {
        auto s = spec;
        s.activity = a;
        emit(std::move(s));
      }
    } else if (params == Params::kType) {
      for (const auto& t : log.type_names()) {
        auto s = spec;
        s.type = t;
        emit(std::move(s));
      }
    } else {
      std::set<std::string> values;
      for (std::size_t i = 0; i < log.event_count(); ++i) {
        if (const auto* v = log.attribute(EventIndex(i), spec.resource_attribute)) {
          values.insert(as_string(*v) ? *as_string(*v) : format_number(*as_number(*v)));
        }
      }
      for (const auto& v : values) {
        auto s = spec;
        s.resource_value = v;
        emit(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace ocelf
