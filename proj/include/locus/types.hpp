#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace locus {

/// Text position (suffix start).
using Pos = std::uint32_t;
/// Dense suffix-tree node id. Leaves are numbered by suffix rank, internal
/// nodes follow at ids >= n.
using NodeId = std::uint32_t;
/// Weight of a node in an I-tree.
using Weight = std::int32_t;

inline constexpr Pos kNoPos = std::numeric_limits<Pos>::max();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
/// Root weight of every I-tree; larger than any weight a real node can carry.
inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max();

enum class Direction : std::uint8_t { kLeft = 0, kRight = 1 };

inline constexpr Direction kBothDirections[] = {Direction::kLeft, Direction::kRight};

constexpr int dir_index(Direction d) { return static_cast<int>(d); }

constexpr std::string_view to_string(Direction d) {
  return d == Direction::kLeft ? "left" : "right";
}

}  // namespace locus
