#pragma once

// Worked example: a partition of [±12], its image under the bijection, and
// their complements.

#include "bpart/core.hpp"

namespace bpart::testing {

inline SignedPartition example_pi() {
  return make_partition({{1}, {2}, {3, 11, 12}, {4, -7, 9, 10}, {5, 6, -8}}, GroundSet::full(12));
}

inline SignedPartition example_sigma() {
  return make_partition({{1, 2, 12}, {3, 10}, {4, -7}, {5}, {6, -8}, {9}, {11}}, GroundSet::full(12));
}

inline SignedPartition example_pi_complement() {
  return make_partition({{1, 2, 10}, {3, 4, -6, 9}, {5, -7, -8}, {11}, {12}}, GroundSet::full(12));
}

inline SignedPartition example_sigma_complement() {
  return make_partition({{1, 11, 12}, {2}, {3, 10}, {4}, {5, -7}, {6, -9}, {8}}, GroundSet::full(12));
}

inline SignedPartition on(GroundSet ground, std::vector<std::vector<int>> blocks) {
  return make_partition(blocks, std::move(ground));
}

}  // namespace bpart::testing
