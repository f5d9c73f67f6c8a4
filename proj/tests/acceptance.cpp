// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bpart/bpart.hpp"
#include "fixtures.hpp"

using namespace bpart;
using bpart::testing::on;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int id, const std::string &title, const Outcome &outcome, double elapsed, double limit) {
  const bool in_time = limit <= 0 || elapsed < limit;
  const bool pass = outcome.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.6f s", pass ? "PASS" : "FAIL", id, title.c_str(), elapsed);
  if (limit > 0) std::printf(", limit %.3f s", limit);
  std::printf(")");
  if (!outcome.ok) std::printf(" -- %s", outcome.detail.c_str());
  if (!in_time) std::printf(" -- too slow");
  std::printf("\n");
}

struct Row {
  std::vector<int> singletons;
  std::vector<int> side_points;
  SignedPartition partition;
};

void compare_layers(Outcome &o, const PeelTrace &trace, const std::vector<Row> &rows, const char *table) {
  o.require(trace.layers.size() == rows.size(), std::string(table) + ": wrong number of rows");
  for (std::size_t j = 0; j < rows.size() && j < trace.layers.size(); ++j) {
    const auto &l = trace.layers[j];
    const std::string where = std::string(table) + " row " + std::to_string(j + 1);
    o.require(l.singletons == rows[j].singletons, where + ": S_j");
    o.require(l.side_points == rows[j].side_points, where + ": side points");
    o.require(l.remainder == rows[j].partition, where + ": remainder");
  }
}

// Stages listed from j = k down to 1, as in the patch tables.
void compare_stages(Outcome &o, const std::vector<SignedPartition> &stages, const std::vector<SignedPartition> &rows,
                    const char *table) {
  o.require(stages.size() == rows.size() + 1, std::string(table) + ": wrong number of stages");
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k && k < stages.size(); ++i)
    o.require(stages[k - i] == rows[i], std::string(table) + " row j=" + std::to_string(k - i));
}

void criterion_forward_example() {
  const auto pi = bpart::testing::example_pi();
  const auto start = Clock::now();
  const auto trace = peel(pi, Side::left);
  const auto stages = patch_stages(trace, Side::right);
  const auto image = psi(pi);
  const double elapsed = seconds_since(start);

  Outcome o;
  o.require(image == bpart::testing::example_sigma(), "psi(pi) != sigma_0");
  o.require(stages.front() == image, "patch stages do not end at psi(pi)");
  compare_layers(o, trace,
                 {{{1, 2}, {5, 9, 11}, on({3, 4, 6, 7, 8, 10, 12}, {{3, 12}, {4, -7, 10}, {6, -8}})},
                  {{}, {12}, on({3, 4, 6, 7, 8, 10}, {{3}, {4, -7, 10}, {6, -8}})},
                  {{3}, {}, on({4, 6, 7, 8, 10}, {{4, -7, 10}, {6, -8}})},
                  {{}, {10}, on({4, 6, 7, 8}, {{4, -7}, {6, -8}})}},
                 "Table 1");
  compare_stages(o, stages,
                 {on({4, 6, 7, 8}, {{4, -7}, {6, -8}}), on({4, 6, 7, 8, 10}, {{4, -7}, {6, -8}, {10}}),
                  on({3, 4, 6, 7, 8, 10}, {{4, -7}, {6, -8}, {3, 10}}),
                  on({3, 4, 6, 7, 8, 10, 12}, {{4, -7}, {6, -8}, {3, 10}, {12}})},
                 "Table 2");
  report(1, "worked example, forward: psi(pi) = sigma_0 with Tables 1-2", o, elapsed, 1e-3);
}

void criterion_inverse_example() {
  const auto omega_pi = bpart::testing::example_pi_complement();
  const auto start = Clock::now();
  const auto trace = peel(omega_pi, Side::right);
  const auto stages = patch_stages(trace, Side::left);
  const auto image = psi_inverse(omega_pi);
  const auto lhs = complement(psi(bpart::testing::example_pi()), 12);
  const double elapsed = seconds_since(start);

  Outcome o;
  o.require(complement(bpart::testing::example_pi(), 12) == omega_pi, "omega(pi) differs from the stated input");
  o.require(image == bpart::testing::example_sigma_complement(), "psi_inverse(omega(pi)) != omega(sigma_0)");
  o.require(lhs == image, "omega(psi(pi)) != psi_inverse(omega(pi))");
  compare_layers(o, trace,
                 {{{11, 12}, {2, 4, 8}, on({1, 3, 5, 6, 7, 9, 10}, {{1, 10}, {3, -6, 9}, {5, -7}})},
                  {{}, {1}, on({3, 5, 6, 7, 9, 10}, {{10}, {3, -6, 9}, {5, -7}})},
                  {{10}, {}, on({3, 5, 6, 7, 9}, {{3, -6, 9}, {5, -7}})},
                  {{}, {3}, on({5, 6, 7, 9}, {{5, -7}, {6, -9}})}},
                 "Table 3");
  compare_stages(o, stages,
                 {on({5, 6, 7, 9}, {{5, -7}, {6, -9}}), on({3, 5, 6, 7, 9}, {{3}, {5, -7}, {6, -9}}),
                  on({3, 5, 6, 7, 9, 10}, {{3, 10}, {5, -7}, {6, -9}}),
                  on({1, 3, 5, 6, 7, 9, 10}, {{1}, {3, 10}, {5, -7}, {6, -9}})},
                 "Table 4");
  o.require(stages.front() == image, "Table 4 does not end at omega(sigma_0)");
  report(2, "worked example, inverse: psi^-1(omega(pi)) = omega(sigma_0) with Tables 3-4", o, elapsed, 1e-3);
}

void criterion_polynomials() {
  const auto start = Clock::now();
  const auto p2 = distribution(2), p3 = distribution(3), p4 = distribution(4);
  const double elapsed = seconds_since(start);

  Outcome o;
  auto expect = [&](const BivariateDistribution &d, std::vector<std::tuple<int, int, int>> terms, const char *name) {
    BivariateDistribution want(d.n());
    for (auto [s, a, c] : terms) want.at(static_cast<std::size_t>(s), static_cast<std::size_t>(a)) = c;
    o.require(d == want, std::string(name) + " coefficients differ");
  };
  expect(p2, {{2, 0, 1}, {0, 2, 1}, {0, 0, 1}}, "P_2");
  expect(p3, {{3, 0, 1}, {0, 3, 1}, {1, 1, 3}, {1, 0, 3}, {0, 1, 3}}, "P_3");
  expect(p4,
         {{4, 0, 1}, {0, 4, 1}, {2, 1, 4}, {1, 2, 4}, {2, 0, 8}, {0, 2, 8}, {1, 1, 8}, {1, 0, 4}, {0, 1, 4}, {0, 0, 7}},
         "P_4");
  report(3, "P_2, P_3, P_4 reproduced exactly", o, elapsed, 1.0);
}

void criterion_symmetry() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    const auto d = distribution(n);
    o.require(d.is_symmetric(), "c[s][a] != c[a][s] at n = " + std::to_string(n));
    o.require(d.total() == total_count(static_cast<std::size_t>(n)), "table total != |V_n| at n = " + std::to_string(n));
  }
  report(4, "joint distribution symmetric for n = 1..8", o, seconds_since(start), 30.0);
}

void criterion_bijection() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 7; ++n) {
    std::unordered_set<SignedPartition> images;
    const auto visits = for_each(n, [&](const SignedPartition &p) {
                          const auto image = psi(p);
                          images.insert(image);
                          const auto a = statistics(p), b = statistics(image);
                          if (b.singletons != a.adjacencies || b.adjacencies != a.singletons)
                            o.require(false, "statistics not swapped for " + format(p));
                          if (psi_inverse(image) != p) o.require(false, "psi_inverse(psi(p)) != p for " + format(p));
                        }).visits;
    o.require(images.size() == visits, "psi not injective at n = " + std::to_string(n));
    for (const auto &image : images)
      if (image.ground() != GroundSet::full(n)) o.require(false, "psi image outside V_n");
  }
  report(5, "psi bijective with (s,a) swapped, n <= 7", o, seconds_since(start), 60.0);
}

void criterion_involution() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 7; ++n) {
    for_each(n, [&](const SignedPartition &p) {
      if (involution(involution(p)) != p) o.require(false, "(omega psi)^2 != id for " + format(p));
    });
  }
  report(6, "(omega psi)^2 = id, n <= 7", o, seconds_since(start), 60.0);
}

void criterion_corollary() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 8; ++n) {
    const auto d = distribution(n);
    o.require(d.evaluate(0, 1) == d.evaluate(1, 0), "P_n(0,1) != P_n(1,0) at n = " + std::to_string(n));
  }
  report(7, "singleton-free count equals adjacency-free count, n <= 8", o, seconds_since(start), 0);
}

void criterion_counts() {
  Outcome o;
  const auto egf_start = Clock::now();
  const auto egf = singleton_free_egf(30);
  const double egf_elapsed = seconds_since(egf_start);
  o.require(egf_elapsed < 1.0, "series expansion to order 30 took " + std::to_string(egf_elapsed) + " s");

  const auto start = Clock::now();
  for (std::size_t n = 0; n <= 30; ++n)
    o.require(singleton_free_ie(n) == egf[n], "inclusion-exclusion != series at n = " + std::to_string(n));
  o.require(egf[2] == 2 && egf[3] == 4 && egf[4] == 20, "anchor values s_2, s_3, s_4");
  o.require(total_count(2) == 3, "total_count(2) != 3");
  for (int n = 1; n <= 10; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const auto d = distribution(n, {12, 1});
    const auto visits = for_each(n, [](const SignedPartition &) {}).visits;
    o.require(d.evaluate(0, 1) == egf[un], "enumerated singleton-free count differs at n = " + std::to_string(n));
    o.require(total_count(un) == BigInt(static_cast<unsigned long>(visits)),
              "total_count != enumeration count at n = " + std::to_string(n));
  }
  report(8, "counting pipelines agree (series, inclusion-exclusion, enumeration)", o,
         egf_elapsed + seconds_since(start), 0);
}

void criterion_stage_swap() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    for_each(n, [&](const SignedPartition &p) {
      if (auto defect = stage_swap_defect(p, Side::left)) o.require(false, format(p) + ": " + *defect);
    });
  }
  report(9, "every patch stage swaps the statistics of its peel stage, n <= 6", o, seconds_since(start), 0);
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> criteria{
      {1, criterion_forward_example}, {2, criterion_inverse_example}, {3, criterion_polynomials},
      {4, criterion_symmetry},        {5, criterion_bijection},       {6, criterion_involution},
      {7, criterion_corollary},       {8, criterion_counts},          {9, criterion_stage_swap},
  };
  for (const auto &[id, run] : criteria) {
    try {
      run();
    } catch (const std::exception &e) {
      ++failures;
      std::printf("[FAIL] criterion %d: exception: %s\n", id, e.what());
    }
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "PASSED", failures, criteria.size());
  return failures ? 1 : 0;
}
