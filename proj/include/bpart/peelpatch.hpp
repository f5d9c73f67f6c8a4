#pragma once

// Peeling and patching.
//
// Peeling repeatedly strips the singleton pairs and the left (or right)
// points of every adjacency until a core with neither remains. Patching
// rebuilds a partition from the layers in reverse order with the two roles
// interchanged: peeled singletons come back as side points of an adjacency,
// peeled side points come back as singletons.
//
//   psi         = patch(peel(p, left), right)
//   psi_inverse = patch(peel(p, right), left)
//   involution  = complement(psi(p), n)

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "bpart/core.hpp"

namespace bpart {

enum class Side { left, right };

constexpr Side opposite(Side side) noexcept { return side == Side::left ? Side::right : Side::left; }

inline const char *to_string(Side side) noexcept { return side == Side::left ? "left" : "right"; }

/// One peeling step: S_j, the side points P_j (L_j or R_j), and the remainder
/// partition left after removing ±x for every x in S_j and P_j.
struct PeelLayer {
  std::size_t step = 0;
  std::vector<int> singletons;
  std::vector<int> side_points;
  Side side = Side::left;
  SignedPartition remainder;

  friend bool operator==(const PeelLayer &, const PeelLayer &) = default;
};

struct PeelTrace {
  std::vector<PeelLayer> layers;
  SignedPartition core;
  GroundSet original_ground;
  Side side = Side::left;

  /// Ground of the partition that layer `step` (1-based) was peeled from.
  const GroundSet &ground_before(std::size_t step) const {
    return step <= 1 ? original_ground : layers[step - 2].remainder.ground();
  }

  friend bool operator==(const PeelTrace &, const PeelTrace &) = default;
};

namespace detail {

inline SignedPartition remove_elements(const SignedPartition &p, const std::vector<int> &removed) {
  std::vector<unsigned char> drop(static_cast<std::size_t>(p.ground().max_element()) + 1, 0);
  for (int x : removed) drop[static_cast<std::size_t>(x)] = 1;

  std::vector<int> ground;
  ground.reserve(p.ground().size());
  for (int t : p.ground().elements())
    if (!drop[static_cast<std::size_t>(t)]) ground.push_back(t);

  std::vector<SignedBlock> blocks;
  for (const auto &block : p.blocks()) {
    std::vector<int> kept;
    for (int m : block.members())
      if (!drop[static_cast<std::size_t>(std::abs(m))]) kept.push_back(m);
    if (!kept.empty()) blocks.emplace_back(std::move(kept));
  }
  return SignedPartition(GroundSet(std::move(ground)), std::move(blocks));
}

inline bool sorted_disjoint(const std::vector<int> &a, const std::vector<int> &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace detail

/// Removes the singleton pairs and the side points of one layer.
inline PeelLayer peel_step(const SignedPartition &p, Side side, std::size_t step = 1) {
  const auto stats = statistics(p);
  if (stats.singletons == 0 && stats.adjacencies == 0)
    throw Error(ErrorKind::AlreadyCore, "partition has no singleton or adjacency pair");

  PeelLayer layer;
  layer.step = step;
  layer.side = side;
  layer.singletons = stats.singleton_elements;
  // For a ground of size 1 the element is recorded as a singleton only.
  if (p.ground().size() > 1)
    layer.side_points = side == Side::left ? left_points(p) : right_points(p);

  std::vector<int> removed = layer.singletons;
  removed.insert(removed.end(), layer.side_points.begin(), layer.side_points.end());
  layer.remainder = detail::remove_elements(p, removed);
  return layer;
}

/// Peels until the core has neither singletons nor adjacencies.
inline PeelTrace peel(const SignedPartition &p, Side side) {
  PeelTrace trace;
  trace.original_ground = p.ground();
  trace.side = side;
  SignedPartition current = p;
  for (;;) {
    const auto stats = statistics(current);
    if (stats.singletons == 0 && stats.adjacencies == 0) break;
    PeelLayer layer = peel_step(current, side, trace.layers.size() + 1);
    current = layer.remainder;
    trace.layers.push_back(std::move(layer));
  }
  trace.core = std::move(current);
  return trace;
}

/// Puts one layer back into `sigma`. Elements of layer.singletons re-enter as
/// `attach`-side points of adjacencies; layer.side_points re-enter as
/// singleton pairs.
inline SignedPartition patch_step(const SignedPartition &sigma, const PeelLayer &layer, Side attach,
                                  const GroundSet &target) {
  if (attach != opposite(layer.side))
    throw Error(ErrorKind::MalformedLayer, "attach side must be opposite to the peel side");
  if (layer.singletons.empty() && layer.side_points.empty())
    throw Error(ErrorKind::MalformedLayer, "empty layer");
  if (!detail::sorted_disjoint(layer.singletons, layer.side_points))
    throw Error(ErrorKind::MalformedLayer, "singletons and side points overlap");

  {
    std::vector<int> expected(sigma.ground().elements().begin(), sigma.ground().elements().end());
    expected.insert(expected.end(), layer.singletons.begin(), layer.singletons.end());
    expected.insert(expected.end(), layer.side_points.begin(), layer.side_points.end());
    std::sort(expected.begin(), expected.end());
    if (!std::equal(expected.begin(), expected.end(), target.elements().begin(), target.elements().end()))
      throw Error(ErrorKind::GroundMismatch, "target ground is not ground(sigma) + S + P");
  }

  if (sigma.empty()) {
    std::vector<SignedBlock> blocks;
    if (layer.singletons.empty()) {
      for (int t : target.elements()) blocks.emplace_back(std::vector<int>{t});
    } else if (layer.side_points.empty()) {
      blocks.emplace_back(std::vector<int>(target.elements().begin(), target.elements().end()));
    } else {
      throw Error(ErrorKind::MalformedLayer, "empty core with both singletons and side points");
    }
    return SignedPartition(target, std::move(blocks));
  }

  const std::size_t r = target.size();
  std::vector<unsigned char> in_run(r, 0);
  for (int x : layer.singletons) in_run[target.index_of(x)] = 1;

  std::vector<std::vector<int>> members;
  members.reserve(sigma.block_pairs() + layer.side_points.size());
  for (const auto &block : sigma.blocks())
    members.emplace_back(block.members().begin(), block.members().end());
  const auto where = sigma.locations();

  auto attach_run = [&](std::size_t first, std::size_t last) {
    const int anchor = attach == Side::right ? target[target.prev_index(first)] : target[target.next_index(last)];
    if (!sigma.ground().contains(anchor))
      throw Error(ErrorKind::AnchorMissing, "anchor " + std::to_string(anchor) + " is not in the partition");
    const Location at = where[static_cast<std::size_t>(anchor)];
    for (std::size_t i = first;; i = target.next_index(i)) {
      members[at.block].push_back(at.sign * target[i]);
      if (i == last) break;
    }
  };

  // Maximal cyclic runs, scanned from a position outside every run.
  std::size_t start = 0;
  while (in_run[start]) ++start;
  for (std::size_t k = 1; k <= r; ++k) {
    const std::size_t i = (start + k) % r;
    if (!in_run[i] || in_run[target.prev_index(i)]) continue;
    std::size_t last = i;
    while (in_run[target.next_index(last)]) last = target.next_index(last);
    attach_run(i, last);
  }

  for (int x : layer.side_points) members.push_back({x});

  std::vector<SignedBlock> blocks;
  blocks.reserve(members.size());
  for (auto &m : members) blocks.emplace_back(std::move(m));
  return SignedPartition(target, std::move(blocks));
}

/// Every patch stage: element j is sigma_j, from sigma_k = core down to sigma_0.
inline std::vector<SignedPartition> patch_stages(const PeelTrace &trace, Side attach) {
  const std::size_t k = trace.layers.size();
  std::vector<SignedPartition> stages(k + 1);
  stages[k] = trace.core;
  for (std::size_t j = k; j >= 1; --j)
    stages[j - 1] = patch_step(stages[j], trace.layers[j - 1], attach, trace.ground_before(j));
  return stages;
}

inline SignedPartition patch(const PeelTrace &trace, Side attach) {
  return patch_stages(trace, attach).front();
}

namespace detail {

inline void require_full_ground(const SignedPartition &p, const char *op) {
  if (!p.ground().is_full())
    throw Error(ErrorKind::NotFullGround, std::string(op) + " requires the ground [n]");
}

}  // namespace detail

/// The peeling and patching bijection; swaps the singleton and adjacency counts.
inline SignedPartition psi(const SignedPartition &p) {
  detail::require_full_ground(p, "psi");
  return patch(peel(p, Side::left), Side::right);
}

inline SignedPartition psi_inverse(const SignedPartition &p) {
  detail::require_full_ground(p, "psi_inverse");
  return patch(peel(p, Side::right), Side::left);
}

/// complement after psi; an involution on zero-block-free partitions of [n].
inline SignedPartition involution(const SignedPartition &p) {
  detail::require_full_ground(p, "involution");
  return complement(psi(p), static_cast<int>(p.ground().size()));
}

}  // namespace bpart
