#pragma once

/*
 * Deterministic result documents.
 *
 * A Report carries the command that produced it, a digest of the canonical
 * input document, an ordered key/value payload and a list of named
 * pass/fail checks.  Identical inputs produce byte-identical text and JSON
 * renderings, so reports can be diffed and archived.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlie {

/// 64-bit FNV-1a hash.
std::uint64_t fnv1a64(std::string_view data);

/// fnv1a64 rendered as 16 lowercase hex digits.
std::string digest_hex(std::string_view data);

/// One named verification performed while producing a report.
struct ReportCheck {
  std::string label;
  bool pass = false;
};

/// Ordered, renderable result of one command.
struct Report {
  std::string command;
  std::string input_digest;  ///< empty when the command reads no document
  std::vector<std::pair<std::string, std::string>> payload;
  std::vector<ReportCheck> checks;

  void add(std::string key, std::string value);
  void add_check(std::string label, bool pass);

  /// True when every recorded check passed.
  bool ok() const;

  /// Line-oriented rendering: "key: value" pairs, then one "check" line per
  /// verification, then a final "status" line.
  std::string to_text() const;

  /// JSON object with the same content and a stable key order.
  std::string to_json() const;
};

}  // namespace nlie
