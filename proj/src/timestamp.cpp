#include "ocelf/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace ocelf {
namespace {

// Reads exactly `width` decimal digits at `pos`.
std::optional<int> read_digits(std::string_view text, std::size_t& pos, std::size_t width) {
  if (pos + width > text.size()) return std::nullopt;
  int value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    char c = text[pos + i];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  pos += width;
  return value;
}

bool consume(std::string_view text, std::size_t& pos, char c) {
  if (pos < text.size() && text[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  std::size_t pos = 0;
  auto year = read_digits(text, pos, 4);
  if (!year || !consume(text, pos, '-')) return std::nullopt;
  auto month = read_digits(text, pos, 2);
  if (!month || !consume(text, pos, '-')) return std::nullopt;
  auto day = read_digits(text, pos, 2);
  if (!day) return std::nullopt;

  year_month_day ymd{std::chrono::year{*year}, std::chrono::month{static_cast<unsigned>(*month)},
                     std::chrono::day{static_cast<unsigned>(*day)}};
  if (!ymd.ok()) return std::nullopt;
  std::int64_t whole = static_cast<std::int64_t>(sys_days{ymd}.time_since_epoch().count()) * 86400;

  int hour = 0, minute = 0, second = 0;
  std::int64_t millis = 0;
  std::optional<double> long_fraction;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == 't' || text[pos] == ' ')) {
    ++pos;
    auto h = read_digits(text, pos, 2);
    if (!h || !consume(text, pos, ':')) return std::nullopt;
    auto m = read_digits(text, pos, 2);
    if (!m) return std::nullopt;
    hour = *h;
    minute = *m;
    if (consume(text, pos, ':')) {
      auto s = read_digits(text, pos, 2);
      if (!s) return std::nullopt;
      second = *s;
      if (consume(text, pos, '.') || consume(text, pos, ',')) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        std::size_t digits = pos - start;
        if (digits == 0) return std::nullopt;
        if (digits <= 3) {
          for (std::size_t i = 0; i < 3; ++i) {
            millis = millis * 10 + (i < digits ? text[start + i] - '0' : 0);
          }
        } else {
          std::string frac = "0.";
          frac.append(text.substr(start, digits));
          double value = 0.0;
          auto [ptr, ec] = std::from_chars(frac.data(), frac.data() + frac.size(), value);
          if (ec != std::errc{}) return std::nullopt;
          long_fraction = value;
        }
      }
    }
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;

    if (pos < text.size()) {
      char sign = text[pos];
      if (sign == 'Z' || sign == 'z') {
        ++pos;
      } else if (sign == '+' || sign == '-') {
        ++pos;
        auto oh = read_digits(text, pos, 2);
        if (!oh) return std::nullopt;
        int om = 0;
        if (pos < text.size()) {
          consume(text, pos, ':');
          auto parsed = read_digits(text, pos, 2);
          if (!parsed) return std::nullopt;
          om = *parsed;
        }
        std::int64_t offset = (*oh * 3600 + om * 60) * (sign == '+' ? 1 : -1);
        whole -= offset;
      }
    }
  }
  if (pos != text.size()) return std::nullopt;

  whole += hour * 3600 + minute * 60 + second;
  if (long_fraction) return static_cast<double>(whole) + *long_fraction;
  return static_cast<double>(whole * 1000 + millis) / 1000.0;
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  auto total_ms = static_cast<std::int64_t>(std::llround(t * 1000.0));
  std::int64_t ms = total_ms % 1000;
  std::int64_t secs = total_ms / 1000;
  if (ms < 0) {
    ms += 1000;
    secs -= 1;
  }
  std::int64_t days = secs / 86400;
  std::int64_t rem = secs % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[48];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60),
                static_cast<int>(ms));
  return buf;
}

}  // namespace ocelf
