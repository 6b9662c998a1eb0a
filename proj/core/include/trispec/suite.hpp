#pragma once

// Exhaustive verification suites. Each entry names one law of the triring
// theory (e.g. "nilradical/trinilradical-is-intersection-of-primes") and
// carries a witness on failure. Suites mirror the library modules so that
// failures localize.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trispec/commring.hpp"
#include "trispec/document.hpp"
#include "trispec/triring.hpp"

namespace trispec {

enum class Suite { axioms, ideals, spectrum, nilradical, topology, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

enum class Status { pass, fail, info };

struct SuiteEntry {
  std::string suite;
  std::string check;
  Status status = Status::pass;
  std::string detail;
};

struct SuiteReport {
  std::string ring_name;
  Suite suite = Suite::all;
  std::vector<SuiteEntry> entries;

  bool all_passed() const;
  std::size_t count(Status status) const;
  const SuiteEntry* find(std::string_view suite, std::string_view check) const;
  /// One line per entry plus a summary line; byte-deterministic.
  std::string to_text() const;
};

struct SuiteOptions {
  Limits limits;
  std::size_t workers = 1;
};

/// Builds the document's triring and runs the selected suites. A document
/// whose triring fails validation yields a failing axioms report with the
/// witness rather than an exception. SizeLimit and input errors propagate.
SuiteReport run_suite(const TriringDocument& doc, Suite suite, const SuiteOptions& options = {});
SuiteReport run_suite(const Triring& ring, Suite suite, const SuiteOptions& options = {});

}  // namespace trispec
