#pragma once

// Symmetric signed partitions of a ground set {±t_1, ..., ±t_r}.
//
// A block pair {B, -B} is stored once, as its representative: the member of
// minimum absolute value is positive. Zero-blocks (B = -B) cannot be
// represented at all.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bpart {

enum class ErrorKind {
  DuplicateElement,
  GroundMismatch,
  ZeroBlock,
  InvalidGround,
  NotFullGround,
  SyntaxError,
  AlreadyCore,
  MalformedLayer,
  AnchorMissing,
  TooLarge,
};

inline const char *to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::ZeroBlock: return "ZeroBlock";
    case ErrorKind::InvalidGround: return "InvalidGround";
    case ErrorKind::NotFullGround: return "NotFullGround";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::AlreadyCore: return "AlreadyCore";
    case ErrorKind::MalformedLayer: return "MalformedLayer";
    case ErrorKind::AnchorMissing: return "AnchorMissing";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Raised for invalid input or a violated operation precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a property that must always hold is found broken. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered positive support t_1 < ... < t_r, read cyclically (t_{r+1} = t_1).
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<int> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] < 1)
        throw Error(ErrorKind::InvalidGround, "ground elements must be positive");
      if (i > 0 && elements_[i - 1] >= elements_[i])
        throw Error(ErrorKind::InvalidGround, "ground elements must be strictly increasing");
    }
  }

  GroundSet(std::initializer_list<int> elements) : GroundSet(std::vector<int>(elements)) {}

  /// The full ground [n] = {1, ..., n}.
  static GroundSet full(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidGround, "negative ground size");
    std::vector<int> elements(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elements[static_cast<std::size_t>(i)] = i + 1;
    GroundSet g;
    g.elements_ = std::move(elements);
    return g;
  }

  /// Sorts and deduplicates an arbitrary collection of positive integers.
  static GroundSet from_unsorted(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return GroundSet(std::move(elements));
  }

  std::span<const int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  int operator[](std::size_t i) const { return elements_[i]; }
  int max_element() const noexcept { return elements_.empty() ? 0 : elements_.back(); }

  bool contains(int t) const {
    return std::binary_search(elements_.begin(), elements_.end(), t);
  }

  std::size_t index_of(int t) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
    if (it == elements_.end() || *it != t)
      throw Error(ErrorKind::GroundMismatch, std::to_string(t) + " is not in the ground set");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::size_t next_index(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev_index(std::size_t i) const noexcept { return i == 0 ? size() - 1 : i - 1; }

  int successor(int t) const { return elements_[next_index(index_of(t))]; }
  int predecessor(int t) const { return elements_[prev_index(index_of(t))]; }

  /// True when the ground is exactly [r].
  bool is_full() const noexcept {
    return elements_.empty() || elements_.back() == static_cast<int>(elements_.size());
  }

  friend bool operator==(const GroundSet &, const GroundSet &) = default;

 private:
  std::vector<int> elements_;
};

/// Representative of a block pair {B, -B}: members sorted by absolute value,
/// the first one positive.
class SignedBlock {
 public:
  explicit SignedBlock(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorKind::GroundMismatch, "empty block");
    std::sort(members_.begin(), members_.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] == 0) throw Error(ErrorKind::GroundMismatch, "0 is not a valid element");
      if (i > 0 && std::abs(members_[i - 1]) == std::abs(members_[i])) {
        if (members_[i - 1] != members_[i])
          throw Error(ErrorKind::ZeroBlock,
                      "block contains both " + std::to_string(members_[i - 1]) + " and " +
                          std::to_string(members_[i]));
        throw Error(ErrorKind::DuplicateElement,
                    std::to_string(members_[i]) + " appears twice in one block");
      }
    }
    if (members_.front() < 0)
      for (int &m : members_) m = -m;
  }

  SignedBlock(std::initializer_list<int> members) : SignedBlock(std::vector<int>(members)) {}

  std::span<const int> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  int min_element() const noexcept { return members_.front(); }

  friend bool operator==(const SignedBlock &, const SignedBlock &) = default;
  friend auto operator<=>(const SignedBlock &a, const SignedBlock &b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<int> members_;
};

/// Where +t lives: representative block index, and +1 if +t is a member of the
/// representative itself or -1 if it is a member of the negated block.
struct Location {
  std::size_t block = 0;
  int sign = 0;

  friend bool operator==(const Location &, const Location &) = default;
};

/// A symmetric partition of {±t : t in ground} without zero-block, in
/// canonical form. Equality is structural.
class SignedPartition {
 public:
  SignedPartition() = default;

  SignedPartition(GroundSet ground, std::vector<SignedBlock> blocks)
      : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(),
              [](const SignedBlock &a, const SignedBlock &b) { return a.min_element() < b.min_element(); });
    std::vector<unsigned char> seen(static_cast<std::size_t>(ground_.max_element()) + 1, 0);
    std::size_t covered = 0;
    for (const auto &block : blocks_) {
      for (int m : block.members()) {
        int t = std::abs(m);
        if (!ground_.contains(t))
          throw Error(ErrorKind::GroundMismatch, std::to_string(t) + " is not in the ground set");
        auto &flag = seen[static_cast<std::size_t>(t)];
        if (flag) throw Error(ErrorKind::DuplicateElement, std::to_string(t) + " appears in two blocks");
        flag = 1;
        ++covered;
      }
    }
    if (covered != ground_.size())
      throw Error(ErrorKind::GroundMismatch, "blocks do not cover the ground set");
  }

  const GroundSet &ground() const noexcept { return ground_; }
  std::span<const SignedBlock> blocks() const noexcept { return blocks_; }
  std::size_t block_pairs() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  /// Locations of every ground element, indexed by absolute value.
  std::vector<Location> locations() const {
    std::vector<Location> where(static_cast<std::size_t>(ground_.max_element()) + 1);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (int m : blocks_[b].members())
        where[static_cast<std::size_t>(std::abs(m))] = Location{b, m > 0 ? 1 : -1};
    return where;
  }

  friend bool operator==(const SignedPartition &, const SignedPartition &) = default;

 private:
  GroundSet ground_;
  std::vector<SignedBlock> blocks_;
};

/// Builds a canonical partition from blocks written with either representative
/// of each pair, e.g. {-4, 7} for ±{4, -7}.
inline SignedPartition make_partition(const std::vector<std::vector<int>> &blocks, GroundSet ground) {
  std::vector<SignedBlock> normalized;
  normalized.reserve(blocks.size());
  for (const auto &b : blocks) normalized.emplace_back(b);
  return SignedPartition(std::move(ground), std::move(normalized));
}

/// Singleton and adjacency statistics.
///
/// adjacency_positions holds 0-based indices j into the ground such that
/// t_j and t_{(j+1) mod r} lie in the same signed block (same orientation).
struct Statistics {
  std::size_t singletons = 0;
  std::size_t adjacencies = 0;
  std::vector<int> singleton_elements;
  std::vector<std::size_t> adjacency_positions;

  friend bool operator==(const Statistics &, const Statistics &) = default;
};

inline Statistics statistics(const SignedPartition &p) {
  Statistics stats;
  const GroundSet &g = p.ground();
  const std::size_t r = g.size();
  if (r == 0) return stats;

  for (const auto &block : p.blocks())
    if (block.size() == 1) stats.singleton_elements.push_back(block.min_element());
  std::sort(stats.singleton_elements.begin(), stats.singleton_elements.end());

  if (r == 1) {
    // A lone pair ±{t_1} is both a singleton and its own adjacency ±(t_1, t_1).
    stats.adjacency_positions.push_back(0);
  } else {
    const auto where = p.locations();
    for (std::size_t j = 0; j < r; ++j) {
      const auto here = static_cast<std::size_t>(g[j]);
      const auto next = static_cast<std::size_t>(g[g.next_index(j)]);
      if (where[here] == where[next]) stats.adjacency_positions.push_back(j);
    }
  }
  stats.singletons = stats.singleton_elements.size();
  stats.adjacencies = stats.adjacency_positions.size();
  return stats;
}

/// (t_j, t_{j+1}) for every adjacency, in position order.
inline std::vector<std::pair<int, int>> adjacency_pairs(const SignedPartition &p) {
  const auto stats = statistics(p);
  const GroundSet &g = p.ground();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(stats.adjacencies);
  for (std::size_t j : stats.adjacency_positions) pairs.emplace_back(g[j], g[g.next_index(j)]);
  return pairs;
}

inline std::vector<int> left_points(const SignedPartition &p) {
  std::vector<int> points;
  for (auto [left, right] : adjacency_pairs(p)) points.push_back(left);
  std::sort(points.begin(), points.end());
  return points;
}

inline std::vector<int> right_points(const SignedPartition &p) {
  std::vector<int> points;
  for (auto [left, right] : adjacency_pairs(p)) points.push_back(right);
  std::sort(points.begin(), points.end());
  return points;
}

/// The complement map i -> n+1-i, -i -> -(n+1-i). Requires ground [n].
inline SignedPartition complement(const SignedPartition &p, int n) {
  if (p.ground() != GroundSet::full(n))
    throw Error(ErrorKind::NotFullGround, "complement requires ground [" + std::to_string(n) + "]");
  std::vector<SignedBlock> blocks;
  blocks.reserve(p.block_pairs());
  for (const auto &block : p.blocks()) {
    std::vector<int> members;
    members.reserve(block.size());
    for (int m : block.members()) members.push_back(m > 0 ? n + 1 - m : -(n + 1 + m));
    blocks.emplace_back(std::move(members));
  }
  return SignedPartition(p.ground(), std::move(blocks));
}

}  // namespace bpart

template <>
struct std::hash<bpart::SignedPartition> {
  std::size_t operator()(const bpart::SignedPartition &p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::int64_t v) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    };
    for (int t : p.ground().elements()) mix(t);
    mix(0);
    for (const auto &block : p.blocks()) {
      for (int m : block.members()) mix(m);
      mix(0);
    }
    return static_cast<std::size_t>(h);
  }
};
