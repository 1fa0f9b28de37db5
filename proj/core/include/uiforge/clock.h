#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace uiforge {

using TimePoint = std::chrono::system_clock::time_point;
using Clock = std::function<TimePoint()>;

Clock system_clock();

// "2026-03-01T12:00:00.000Z"
std::string format_timestamp(TimePoint tp);
std::optional<TimePoint> parse_timestamp(std::string_view text);

}  // namespace uiforge
