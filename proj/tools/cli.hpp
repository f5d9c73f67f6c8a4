#pragma once

// bpart command-line driver.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input partition,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bpart/bpart.hpp"

namespace bpart::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBadInput = 2, kInternal = 3 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement:
    case ErrorKind::GroundMismatch:
    case ErrorKind::ZeroBlock:
    case ErrorKind::InvalidGround:
    case ErrorKind::NotFullGround:
    case ErrorKind::SyntaxError:
      return kBadInput;
    case ErrorKind::TooLarge:
      return kUsage;
    default:
      return kInternal;
  }
}

struct Io {
  std::ostream &out;
  std::ostream &err;
  std::istream &in;
};

namespace detail {

struct PartitionArgs {
  std::string text;
  int n = 0;
  bool from_stdin = false;
};

inline void add_partition_args(CLI::App *cmd, PartitionArgs &args) {
  cmd->add_option("partition", args.text, "partition, e.g. \"1 / 2,-3\"");
  cmd->add_option("--n", args.n, "force ground [n]")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--stdin", args.from_stdin, "read one partition per line from stdin");
}

inline SignedPartition read_partition(const std::string &text, int n) {
  if (n > 0) return parse(text, GroundSet::full(n));
  return parse(text);
}

/// Applies `each` to the positional partition, or to every non-blank stdin line.
inline int for_each_input(const PartitionArgs &args, Io io,
                          const std::function<void(const SignedPartition &)> &each) {
  auto handle = [&](const std::string &text, const std::string &where) -> int {
    try {
      each(read_partition(text, args.n));
      return kOk;
    } catch (const Error &e) {
      io.err << "error" << where << ": " << e.what() << '\n';
      return exit_code_for(e.kind());
    }
  };
  if (!args.from_stdin) {
    if (args.text.empty()) {
      io.err << "error: missing partition argument\n";
      return kUsage;
    }
    return handle(args.text, "");
  }
  std::string line;
  std::size_t number = 0;
  while (std::getline(io.in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (int code = handle(line, " (line " + std::to_string(number) + ")"); code != kOk) return code;
  }
  return kOk;
}

inline std::string format_pairs(const std::vector<std::pair<int, int>> &pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ' ';
    out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string> &args, Io io) {
  CLI::App app{"Type B set partitions: singleton/adjacency statistics and the peeling-patching bijection",
               "bpart"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "reduce output")->configurable();

  std::string format_choice = "text";
  auto add_format = [&](CLI::App *cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", format_choice, "output format")->check(CLI::IsMember(std::move(choices)));
  };
  auto add_quiet = [&](CLI::App *cmd) { cmd->add_flag("--quiet", quiet, "reduce output"); };

  detail::PartitionArgs part;

  auto *stats_cmd = app.add_subcommand("stats", "singleton and adjacency statistics");
  detail::add_partition_args(stats_cmd, part);
  add_format(stats_cmd, {"text", "records"});
  add_quiet(stats_cmd);

  struct Transform {
    const char *name;
    const char *help;
    std::function<SignedPartition(const SignedPartition &)> apply;
  };
  const std::vector<Transform> transforms{
      {"psi", "apply the peeling-patching bijection", [](const SignedPartition &p) { return psi(p); }},
      {"psi-inv", "apply the inverse bijection", [](const SignedPartition &p) { return psi_inverse(p); }},
      {"involution", "apply complement after psi", [](const SignedPartition &p) { return involution(p); }},
      {"complement", "apply i -> n+1-i",
       [](const SignedPartition &p) { return complement(p, static_cast<int>(p.ground().size())); }},
  };
  std::vector<CLI::App *> transform_cmds;
  for (const auto &t : transforms) {
    auto *cmd = app.add_subcommand(t.name, t.help);
    detail::add_partition_args(cmd, part);
    add_quiet(cmd);
    transform_cmds.push_back(cmd);
  }

  auto *trace_cmd = app.add_subcommand("trace", "print the peel trace (and patch stages with --patch)");
  detail::add_partition_args(trace_cmd, part);
  std::string side_choice = "left";
  bool with_patch = false;
  trace_cmd->add_option("--side", side_choice, "peel side")->check(CLI::IsMember({"left", "right"}));
  trace_cmd->add_flag("--patch", with_patch, "also print the patch stages");
  add_format(trace_cmd, {"table", "text", "records"});
  add_quiet(trace_cmd);

  int n = 0;
  auto *enum_cmd = app.add_subcommand("enumerate", "list every zero-block-free partition of [±n]");
  bool with_stats = false;
  enum_cmd->add_option("--n", n, "ground size")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--stats", with_stats, "annotate each line with s and a");
  add_quiet(enum_cmd);

  auto *poly_cmd = app.add_subcommand("poly", "joint distribution P_n(x,y) of (s, a)");
  int guard = 12;
  unsigned jobs = 1;
  poly_cmd->add_option("--n", n, "ground size")->required()->check(CLI::PositiveNumber);
  poly_cmd->add_option("--guard", guard, "largest n allowed for enumeration");
  poly_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_quiet(poly_cmd);

  auto *count_cmd = app.add_subcommand("count", "exact counts");
  bool singleton_free = false, total = false, egf = false;
  int upto = -1;
  count_cmd->add_option("--n", n, "ground size")->check(CLI::NonNegativeNumber);
  auto *sf_flag = count_cmd->add_flag("--singleton-free", singleton_free, "partitions without singleton pairs");
  auto *total_flag = count_cmd->add_flag("--total", total, "all zero-block-free partitions");
  auto *egf_flag = count_cmd->add_flag("--egf", egf, "singleton-free counts from the generating function");
  count_cmd->add_option("--upto", upto, "largest n for --egf")->check(CLI::NonNegativeNumber);
  sf_flag->excludes(total_flag)->excludes(egf_flag);
  total_flag->excludes(egf_flag);
  add_quiet(count_cmd);

  auto *verify_cmd = app.add_subcommand("verify", "exhaustive property checks for n = 1..max-n");
  int max_n = 0;
  verify_cmd->add_option("--max-n", max_n, "largest n")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_quiet(verify_cmd);

  std::vector<std::string> argv_storage{"bpart"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (stats_cmd->parsed()) {
      return detail::for_each_input(part, io, [&](const SignedPartition &p) {
        const auto s = statistics(p);
        const auto pairs = adjacency_pairs(p);
        if (format_choice == "records") {
          nlohmann::ordered_json record;
          record["partition"] = format(p);
          record["s"] = s.singletons;
          record["a"] = s.adjacencies;
          record["singletons"] = s.singleton_elements;
          record["adjacencies"] = pairs;
          io.out << record.dump() << '\n';
          return;
        }
        io.out << "s=" << s.singletons << " a=" << s.adjacencies << '\n';
        if (!quiet) {
          io.out << "singletons: " << format_set(s.singleton_elements) << '\n';
          io.out << "adjacencies: " << detail::format_pairs(pairs) << '\n';
        }
      });
    }

    for (std::size_t i = 0; i < transforms.size(); ++i) {
      if (!transform_cmds[i]->parsed()) continue;
      return detail::for_each_input(part, io, [&](const SignedPartition &p) {
        io.out << format(transforms[i].apply(p)) << '\n';
      });
    }

    if (trace_cmd->parsed()) {
      const Side side = side_choice == "left" ? Side::left : Side::right;
      const TraceMode mode = format_choice == "records" ? TraceMode::records : TraceMode::table;
      return detail::for_each_input(part, io, [&](const SignedPartition &p) {
        const PeelTrace trace = peel(p, side);
        io.out << format_trace(trace, mode);
        if (with_patch) io.out << format_patch(trace, patch_stages(trace, opposite(side)), mode);
      });
    }

    if (enum_cmd->parsed()) {
      for_each(n, [&](const SignedPartition &p) {
        io.out << format(p);
        if (with_stats) {
          const auto s = statistics(p);
          io.out << "\ts=" << s.singletons << " a=" << s.adjacencies;
        }
        io.out << '\n';
      });
      return kOk;
    }

    if (poly_cmd->parsed()) {
      const auto dist = distribution(n, DistributionOptions{guard, jobs});
      for (std::size_t s = 0; s <= dist.n(); ++s)
        for (std::size_t a = 0; a <= dist.n(); ++a)
          if (dist.at(s, a) != 0) io.out << s << ' ' << a << ' ' << dist.at(s, a).get_str() << '\n';
      const bool symmetric = dist.is_symmetric();
      io.out << (symmetric ? "SYMMETRIC" : "ASYMMETRIC") << '\n';
      return symmetric ? kOk : kInternal;
    }

    if (count_cmd->parsed()) {
      if (egf) {
        if (upto < 0) upto = n;
        const auto counts = singleton_free_egf(static_cast<std::size_t>(upto));
        for (std::size_t k = 0; k < counts.size(); ++k) io.out << k << ' ' << counts[k].get_str() << '\n';
        return kOk;
      }
      if (count_cmd->count("--n") == 0) {
        io.err << "error: count needs --n (or --egf --upto M)\n";
        return kUsage;
      }
      const auto size = static_cast<std::size_t>(n);
      io.out << (total ? total_count(size) : singleton_free_ie(size)).get_str() << '\n';
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const auto report = verify(max_n, VerifyOptions{jobs});
      std::size_t passed = 0;
      for (const auto &r : report.results) {
        if (r.passed) ++passed;
        if (r.passed && quiet) continue;
        io.out << "n=" << r.n << ' ' << r.property << ' ' << (r.passed ? "PASS" : "FAIL") << " (" << r.checked
               << " checked)";
        if (!r.passed) io.out << " witness: " << r.witness;
        io.out << '\n';
      }
      io.out << "summary: " << passed << '/' << report.results.size() << " passed\n";
      return report.all_passed() ? kOk : kInternal;
    }
  } catch (const Error &e) {
    io.err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const InvariantViolation &e) {
    io.err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace bpart::cli
