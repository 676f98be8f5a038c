#pragma once

#include <array>
#include <string>
#include <string_view>

#include "oscillometer/error.hpp"

namespace oscillometer {

enum class SpaceTag { bmo_circle, bloch, qk, weighted, lip, rect_bmo };

inline constexpr std::array<SpaceTag, 6> all_space_tags{SpaceTag::bmo_circle, SpaceTag::bloch, SpaceTag::qk,
                                                       SpaceTag::weighted,   SpaceTag::lip,   SpaceTag::rect_bmo};

inline constexpr std::string_view to_string(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::bmo_circle: return "bmo_circle";
    case SpaceTag::bloch: return "bloch";
    case SpaceTag::qk: return "qk";
    case SpaceTag::weighted: return "weighted";
    case SpaceTag::lip: return "lip";
    case SpaceTag::rect_bmo: return "rect_bmo";
  }
  return "unknown";
}

inline SpaceTag space_tag_from_string(std::string_view name) {
  for (auto tag : all_space_tags)
    if (to_string(tag) == name) return tag;
  throw ConfigError("unknown space '" + std::string(name) + "'");
}

}  // namespace oscillometer
