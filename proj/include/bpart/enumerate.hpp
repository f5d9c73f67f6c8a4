#pragma once

// Exhaustive generation of all zero-block-free symmetric partitions of [±n].
//
// Elements are placed in increasing order. Element i either opens a new block
// pair {i}, or joins an existing pair as +i (into the representative) or as -i
// (into its negation). Choice order: new block, pair 1 as +, pair 1 as -,
// pair 2 as +, ... with pairs ordered by creation. The tree has
// sum_j 2^(n-j) S(n,j) leaves.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "bpart/core.hpp"

namespace bpart {

/// A node of the generation tree: elements 1..depth placed. assignment[i-1]
/// is +(b+1) if element i is in representative block b, -(b+1) if in its
/// negation.
struct EnumerationState {
  int n = 0;
  int depth = 0;
  int block_count = 0;
  std::vector<int> assignment;

  /// The partial structure as a partition of {1..depth}.
  SignedPartition partition() const {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(block_count));
    for (int i = 1; i <= depth; ++i) {
      const int a = assignment[static_cast<std::size_t>(i - 1)];
      members[static_cast<std::size_t>(std::abs(a) - 1)].push_back(a > 0 ? i : -i);
    }
    std::vector<SignedBlock> blocks;
    blocks.reserve(members.size());
    for (auto &m : members) blocks.emplace_back(std::move(m));
    return SignedPartition(GroundSet::full(depth), std::move(blocks));
  }

  friend bool operator==(const EnumerationState &, const EnumerationState &) = default;
};

struct EnumerationResult {
  std::uint64_t visits = 0;
  bool completed = true;
};

namespace detail {

template <class Visitor>
bool call_visitor(Visitor &visitor, const SignedPartition &p) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visitor &, const SignedPartition &>, bool>) {
    return visitor(p);
  } else {
    visitor(p);
    return true;
  }
}

template <class Visitor>
bool descend(EnumerationState &state, Visitor &visitor, EnumerationResult &result) {
  if (state.depth == state.n) {
    ++result.visits;
    return call_visitor(visitor, state.partition());
  }
  const int element = ++state.depth;
  const int blocks = state.block_count;

  state.assignment.push_back(blocks + 1);
  ++state.block_count;
  bool go_on = descend(state, visitor, result);
  --state.block_count;
  state.assignment.pop_back();

  for (int b = 1; go_on && b <= blocks; ++b) {
    for (int sign : {1, -1}) {
      state.assignment.push_back(sign * b);
      go_on = descend(state, visitor, result);
      state.assignment.pop_back();
      if (!go_on) break;
    }
  }
  state.depth = element - 1;
  return go_on;
}

template <class Emit>
void collect_states(EnumerationState &state, int target_depth, Emit &emit) {
  if (state.depth == target_depth) {
    emit(state);
    return;
  }
  ++state.depth;
  const int blocks = state.block_count;
  state.assignment.push_back(blocks + 1);
  ++state.block_count;
  collect_states(state, target_depth, emit);
  --state.block_count;
  state.assignment.pop_back();
  for (int b = 1; b <= blocks; ++b) {
    for (int sign : {1, -1}) {
      state.assignment.push_back(sign * b);
      collect_states(state, target_depth, emit);
      state.assignment.pop_back();
    }
  }
  --state.depth;
}

}  // namespace detail

/// Visits every completion of `state` in generation order. A visitor that
/// returns bool stops the walk by returning false.
template <class Visitor>
EnumerationResult complete(EnumerationState state, Visitor &&visitor) {
  EnumerationResult result;
  result.completed = detail::descend(state, visitor, result);
  return result;
}

/// Visits every partition of V_n exactly once. n = 0 yields the empty partition.
template <class Visitor>
EnumerationResult for_each(int n, Visitor &&visitor) {
  EnumerationState root;
  root.n = n;
  root.assignment.reserve(static_cast<std::size_t>(n));
  return complete(std::move(root), std::forward<Visitor>(visitor));
}

/// Independent subtree roots at depth d, in generation order.
inline std::vector<EnumerationState> slice(int n, int depth) {
  if (depth < 1 || depth > n) throw std::invalid_argument("slice depth must satisfy 1 <= d <= n");
  std::vector<EnumerationState> states;
  EnumerationState root;
  root.n = n;
  auto emit = [&states](const EnumerationState &s) { states.push_back(s); };
  detail::collect_states(root, depth, emit);
  return states;
}

/// Runs `work(state) -> R` over the slices of V_n on `jobs` threads and
/// returns the per-slice results in slice order.
template <class Work>
auto map_slices(int n, unsigned jobs, Work work) {
  using R = std::invoke_result_t<Work &, const EnumerationState &>;
  std::vector<EnumerationState> roots;
  if (n <= 0) {
    EnumerationState root;
    roots.push_back(root);
  } else {
    roots = slice(n, std::min(n, 5));
  }
  std::vector<R> results(roots.size());
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < roots.size(); ++i) results[i] = work(roots[i]);
    return results;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < roots.size(); i += jobs) results[i] = work(roots[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : workers) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace bpart
