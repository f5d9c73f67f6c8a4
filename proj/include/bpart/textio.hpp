#pragma once

// Text form of a partition: one representative block per pair, blocks
// separated by " / ", members by ",". The empty partition is "()".
//
//   1 / 2 / 3,11,12 / 4,-7,9,10 / 5,6,-8
//
// Input may use either representative of a pair, arbitrary spacing around
// separators, and U+2212 (minus sign) in place of '-'.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bpart/core.hpp"
#include "bpart/peelpatch.hpp"

namespace bpart {

inline std::string format(const SignedPartition &p) {
  if (p.empty()) return "()";
  std::string out;
  bool first_block = true;
  for (const auto &block : p.blocks()) {
    if (!first_block) out += " / ";
    first_block = false;
    bool first_member = true;
    for (int m : block.members()) {
      if (!first_member) out += ',';
      first_member = false;
      out += std::to_string(m);
    }
  }
  return out;
}

/// "{1,2}", "{}"
inline std::string format_set(const std::vector<int> &elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + "}";
}

namespace detail {

class PartitionParser {
 public:
  explicit PartitionParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<int>> parse() {
    skip_space();
    if (consume('(')) {
      skip_space();
      expect(')');
      skip_space();
      if (pos_ != text_.size()) fail("trailing characters after ()");
      return {};
    }
    std::vector<std::vector<int>> blocks;
    blocks.push_back(block());
    skip_space();
    while (pos_ < text_.size()) {
      expect('/');
      skip_space();
      blocks.push_back(block());
      skip_space();
    }
    return blocks;
  }

 private:
  std::vector<int> block() {
    std::vector<int> members{element()};
    skip_space();
    while (consume(',')) {
      skip_space();
      members.push_back(element());
      skip_space();
    }
    return members;
  }

  int element() {
    const std::size_t start = pos_;
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      negative = true;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an element");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) fail("element too large", start);
      ++pos_;
    }
    if (value == 0) fail("0 is not a valid element", start);
    return static_cast<int>(negative ? -value : value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string &message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string &message, std::size_t at) {
    throw Error(ErrorKind::SyntaxError, message + " at position " + std::to_string(at));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and canonicalizes. Without a ground, the ground is the set of
/// absolute values present.
inline SignedPartition parse(std::string_view text, std::optional<GroundSet> ground = std::nullopt) {
  const auto blocks = detail::PartitionParser(text).parse();
  if (!ground) {
    std::vector<int> support;
    for (const auto &b : blocks)
      for (int m : b) support.push_back(std::abs(m));
    ground = GroundSet::from_unsorted(std::move(support));
  }
  return make_partition(blocks, *ground);
}

enum class TraceMode { table, records };

namespace detail {

inline const char *side_label(Side side) { return side == Side::left ? "L_j" : "R_j"; }

inline std::string table_header(Side side, const char *last) {
  // Column order follows the peel side: "S_j | L_j" when peeling left points,
  // "R_j | S_j" when peeling right points.
  std::string header = "j | ";
  header += side == Side::left ? std::string("S_j | ") + side_label(side) : std::string(side_label(side)) + " | S_j";
  return header + " | " + last;
}

inline std::string table_row(const PeelLayer &layer, const SignedPartition &p) {
  std::string row = std::to_string(layer.step) + " | ";
  if (layer.side == Side::left)
    row += format_set(layer.singletons) + " | " + format_set(layer.side_points);
  else
    row += format_set(layer.side_points) + " | " + format_set(layer.singletons);
  return row + " | " + format(p);
}

}  // namespace detail

/// Peel trace, one row per layer. Records mode emits one JSON object per
/// line and a terminal {"core": ...} record.
inline std::string format_trace(const PeelTrace &trace, TraceMode mode) {
  std::ostringstream out;
  if (mode == TraceMode::table) {
    out << detail::table_header(trace.side, "remainder") << '\n';
    for (const auto &layer : trace.layers) out << detail::table_row(layer, layer.remainder) << '\n';
    out << "core: " << format(trace.core) << '\n';
  } else {
    for (const auto &layer : trace.layers) {
      nlohmann::ordered_json record;
      record["step"] = layer.step;
      record["singletons"] = layer.singletons;
      record["side_points"] = layer.side_points;
      record["side"] = to_string(layer.side);
      record["remainder"] = format(layer.remainder);
      out << record.dump() << '\n';
    }
    nlohmann::ordered_json terminal;
    terminal["core"] = format(trace.core);
    out << terminal.dump() << '\n';
  }
  return out.str();
}

/// Patch stages in the order they are built (j = k down to 1): layer j next
/// to the stage it is patched into, then the final result.
inline std::string format_patch(const PeelTrace &trace, const std::vector<SignedPartition> &stages,
                                TraceMode mode) {
  std::ostringstream out;
  const std::size_t k = trace.layers.size();
  if (mode == TraceMode::table) {
    out << detail::table_header(trace.side, "stage") << '\n';
    for (std::size_t j = k; j >= 1; --j) out << detail::table_row(trace.layers[j - 1], stages[j]) << '\n';
    out << "result: " << format(stages.front()) << '\n';
  } else {
    for (std::size_t j = k; j >= 1; --j) {
      const auto &layer = trace.layers[j - 1];
      nlohmann::ordered_json record;
      record["patch_step"] = j;
      record["singletons"] = layer.singletons;
      record["side_points"] = layer.side_points;
      record["attach"] = to_string(opposite(layer.side));
      record["stage"] = format(stages[j]);
      out << record.dump() << '\n';
    }
    nlohmann::ordered_json terminal;
    terminal["result"] = format(stages.front());
    out << terminal.dump() << '\n';
  }
  return out.str();
}

}  // namespace bpart
