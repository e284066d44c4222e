#pragma once

#include <string>
#include <string_view>

#include "netmap/portrait.hpp"
#include "netmap/presentation.hpp"

namespace netmap {

// Line-oriented format with '#' comments:
//   matrix: a c b d          (columns (a,c) and (b,d))
//   translation: x y         (optional, default 0 0)
//   arc: x1 y1 -> x2 y2      (exactly four)
NetMapPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const NetMapPresentation& p);

DynamicPortrait parse_portrait_json(std::string_view text);
std::string serialize_portrait_json(const DynamicPortrait& g);
std::string portrait_to_dot(const DynamicPortrait& g);

std::string read_file(const std::string& path);

}  // namespace netmap
