#ifndef MSDECOMP_SCAN_HPP
#define MSDECOMP_SCAN_HPP

#include <string>
#include <vector>

#include "msdecomp/graph.hpp"

namespace msd {

struct ScanOptions {
  std::vector<std::string> extensions = {".java"};
  bool strict = false;           // unreadable file is an error instead of a skip
  bool include_comments = true;  // comment words feed the term bags
};

struct ScanReport {
  std::size_t files_scanned = 0;
  std::size_t files_skipped = 0;
  std::size_t ambiguous_calls_dropped = 0;
  LoadSummary load;
};

// Best-effort static scan of a source tree. One ClassNode per top-level
// class/interface/enum declaration; call edges inferred by simple-name
// resolution of constructor, static and member invocations; term bags built
// from identifiers and comments inside each class body. Calls whose simple
// name matches more than one class are dropped and counted in the report.
// Deterministic for a fixed directory snapshot: files are visited in path
// order.
MonolithGraph scan_sources(const std::string& root, const ScanOptions& options = {},
                           ScanReport* report = nullptr);

} // namespace msd

#endif
