#pragma once

// Exhaustive property checks over V_n.

#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bpart/core.hpp"
#include "bpart/counting.hpp"
#include "bpart/enumerate.hpp"
#include "bpart/peelpatch.hpp"
#include "bpart/textio.hpp"

namespace bpart {

/// Checks that every patch stage sigma_j has the statistics of pi_j swapped,
/// and that peeling sigma_{j-1} from the other side gives back layer j with
/// its roles exchanged and sigma_j as remainder. Returns a description of the
/// first defect, or nothing.
inline std::optional<std::string> stage_swap_defect(const SignedPartition &p, Side side = Side::left) {
  const PeelTrace trace = peel(p, side);
  const auto stages = patch_stages(trace, opposite(side));
  const std::size_t k = trace.layers.size();
  for (std::size_t j = 0; j <= k; ++j) {
    const SignedPartition &pi = j == 0 ? p : trace.layers[j - 1].remainder;
    const auto sp = statistics(pi);
    const auto ss = statistics(stages[j]);
    if (ss.singletons != sp.adjacencies || ss.adjacencies != sp.singletons)
      return "stage " + std::to_string(j) + ": (s,a) of " + format(stages[j]) + " is not the swap of " + format(pi);
  }
  for (std::size_t j = 1; j <= k; ++j) {
    if (trace.ground_before(j).size() < 2) continue;
    const PeelLayer &layer = trace.layers[j - 1];
    const PeelLayer again = peel_step(stages[j - 1], opposite(side), j);
    if (again.singletons != layer.side_points || again.side_points != layer.singletons || again.remainder != stages[j])
      return "stage " + std::to_string(j - 1) + ": re-peeling " + format(stages[j - 1]) +
             " does not return layer " + std::to_string(j) + " with roles exchanged";
  }
  return std::nullopt;
}

struct PropertyResult {
  std::string property;
  int n = 0;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string witness;
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool all_passed() const {
    for (const auto &r : results)
      if (!r.passed) return false;
    return true;
  }
};

namespace detail {

enum PerPartition : std::size_t {
  kTextRoundTrip,
  kStatisticsConsistency,
  kComplement,
  kStatisticSwap,
  kPsiRoundTrip,
  kInvolution,
  kStageSwap,
  kPerPartitionCount,
};

inline constexpr std::array<const char *, kPerPartitionCount> kPerPartitionNames{
    "text_round_trip", "statistics_consistency", "complement_involution", "statistic_swap",
    "psi_round_trip",  "involution",             "stage_swap",
};

struct SliceOutcome {
  std::uint64_t visits = 0;
  std::vector<std::uint64_t> dist;
  std::vector<std::uint64_t> by_blocks;
  std::array<std::optional<std::string>, kPerPartitionCount> witness;
  std::vector<std::string> seen;
  std::vector<std::string> images;
};

inline std::optional<std::string> check_partition(std::size_t property, const SignedPartition &p, int n) {
  const auto stats = statistics(p);
  switch (property) {
    case kTextRoundTrip:
      if (parse(format(p), GroundSet::full(n)) != p) return "parse(format(p)) != p";
      if (make_partition([&] {
            std::vector<std::vector<int>> raw;
            for (const auto &b : p.blocks()) raw.emplace_back(b.members().begin(), b.members().end());
            return raw;
          }(), p.ground()) != p)
        return "re-validation changed the partition";
      return std::nullopt;
    case kStatisticsConsistency: {
      const auto left = left_points(p);
      const auto right = right_points(p);
      if (left.size() != stats.adjacencies || right.size() != stats.adjacencies) return "|L| or |R| != a";
      if (n >= 2 && (!sorted_disjoint(stats.singleton_elements, left) ||
                     !sorted_disjoint(stats.singleton_elements, right)))
        return "a singleton is also a side point";
      return std::nullopt;
    }
    case kComplement: {
      const auto w = complement(p, n);
      if (complement(w, n) != p) return "complement is not an involution";
      const auto sw = statistics(w);
      if (sw.singletons != stats.singletons || sw.adjacencies != stats.adjacencies)
        return "complement changed (s,a)";
      return std::nullopt;
    }
    case kStatisticSwap: {
      const auto image = statistics(psi(p));
      if (image.singletons != stats.adjacencies || image.adjacencies != stats.singletons)
        return "(s,a) of psi(p) is not swapped";
      return std::nullopt;
    }
    case kPsiRoundTrip:
      if (psi_inverse(psi(p)) != p) return "psi_inverse(psi(p)) != p";
      if (psi(psi_inverse(p)) != p) return "psi(psi_inverse(p)) != p";
      return std::nullopt;
    case kInvolution: {
      const auto once = involution(p);
      if (involution(once) != p) return "(omega psi)^2 (p) != p";
      if (complement(psi(p), n) != psi_inverse(complement(p, n))) return "omega(psi(p)) != psi_inverse(omega(p))";
      return std::nullopt;
    }
    case kStageSwap:
      return stage_swap_defect(p);
    default:
      return std::nullopt;
  }
}

}  // namespace detail

struct VerifyOptions {
  unsigned jobs = 1;
  /// Largest n for which duplicate visits and psi injectivity are checked by
  /// hashing every partition.
  int hash_limit = 8;
};

/// Runs every property for each n in [1, max_n].
inline VerifyReport verify(int max_n, VerifyOptions options = {}) {
  VerifyReport report;
  const auto egf = singleton_free_egf(static_cast<std::size_t>(std::max(max_n, 0)));
  for (int n = 1; n <= max_n; ++n) {
    const auto width = static_cast<std::size_t>(n) + 1;
    const bool hashing = n <= options.hash_limit;
    auto outcomes = map_slices(n, options.jobs, [&](const EnumerationState &root) {
      detail::SliceOutcome out;
      out.dist.assign(width * width, 0);
      out.by_blocks.assign(width, 0);
      complete(root, [&](const SignedPartition &p) {
        ++out.visits;
        const auto stats = statistics(p);
        ++out.dist[stats.singletons * width + stats.adjacencies];
        ++out.by_blocks[p.block_pairs()];
        for (std::size_t prop = 0; prop < detail::kPerPartitionCount; ++prop) {
          if (out.witness[prop]) continue;
          std::optional<std::string> defect;
          try {
            defect = detail::check_partition(prop, p, n);
          } catch (const std::exception &e) {
            defect = std::string("exception: ") + e.what();
          }
          if (defect) out.witness[prop] = format(p) + " (" + *defect + ")";
        }
        if (hashing) {
          out.seen.push_back(format(p));
          try {
            out.images.push_back(format(psi(p)));
          } catch (const std::exception &) {
            // Reported by the per-partition checks.
          }
        }
      });
      return out;
    });

    std::uint64_t visits = 0;
    std::vector<std::uint64_t> dist(width * width, 0), by_blocks(width, 0);
    std::array<std::optional<std::string>, detail::kPerPartitionCount> witness;
    std::unordered_set<std::string> seen, images;
    for (auto &out : outcomes) {
      visits += out.visits;
      for (std::size_t i = 0; i < dist.size(); ++i) dist[i] += out.dist[i];
      for (std::size_t i = 0; i < width; ++i) by_blocks[i] += out.by_blocks[i];
      for (std::size_t prop = 0; prop < detail::kPerPartitionCount; ++prop)
        if (!witness[prop] && out.witness[prop]) witness[prop] = out.witness[prop];
      seen.insert(out.seen.begin(), out.seen.end());
      images.insert(out.images.begin(), out.images.end());
    }

    auto add = [&](std::string name, bool ok, std::uint64_t checked, std::string why) {
      report.results.push_back(PropertyResult{std::move(name), n, ok, checked, ok ? std::string() : std::move(why)});
    };

    const BigInt total = total_count(static_cast<std::size_t>(n));
    add("enumeration_count", total == BigInt(static_cast<unsigned long>(visits)), visits,
        "visited " + std::to_string(visits) + ", expected " + total.get_str());
    if (hashing) {
      add("unique_visits", seen.size() == visits, visits,
          std::to_string(visits - seen.size()) + " duplicate visits");
      add("psi_injective", images.size() == visits && images == seen, visits,
          "psi image has " + std::to_string(images.size()) + " distinct elements");
    }
    for (std::size_t prop = 0; prop < detail::kPerPartitionCount; ++prop)
      add(detail::kPerPartitionNames[prop], !witness[prop], visits, witness[prop].value_or(""));

    BivariateDistribution poly(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < width; ++s)
      for (std::size_t a = 0; a < width; ++a) poly.at(s, a) = BigInt(static_cast<unsigned long>(dist[s * width + a]));
    add("polynomial_symmetry", poly.is_symmetric(), visits, "c[s][a] != c[a][s] for some (s,a)");
    const BigInt free_s = poly.evaluate(0, 1);
    const BigInt free_a = poly.evaluate(1, 0);
    add("corollary", free_s == free_a, visits,
        "P(0,1) = " + free_s.get_str() + " but P(1,0) = " + free_a.get_str());
    const BigInt ie = singleton_free_ie(static_cast<std::size_t>(n));
    const bool counts_agree = free_s == ie && ie == egf[static_cast<std::size_t>(n)] && poly.evaluate(1, 1) == total;
    add("count_agreement", counts_agree, visits,
        "P(0,1) = " + free_s.get_str() + ", inclusion-exclusion = " + ie.get_str() +
            ", egf = " + egf[static_cast<std::size_t>(n)].get_str());
    bool blocks_ok = true;
    std::string blocks_why;
    for (std::size_t j = 0; j < width; ++j) {
      const BigInt expected = pow2(static_cast<std::size_t>(n) - j) * stirling2(static_cast<std::size_t>(n), j);
      if (expected != BigInt(static_cast<unsigned long>(by_blocks[j]))) {
        blocks_ok = false;
        blocks_why = std::to_string(by_blocks[j]) + " partitions with " + std::to_string(2 * j) +
                     " blocks, expected " + expected.get_str();
        break;
      }
    }
    add("block_counts", blocks_ok, visits, blocks_why);
  }
  return report;
}

}  // namespace bpart
