#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "indroots/certify.hpp"

namespace indroots {

struct ScanOptions {
  unsigned jobs = 1;
  /// Report malformed lines and keep going instead of aborting.
  bool lenient = false;
  /// Graphs above this order are input errors (or skips under lenient).
  int max_order = 60;
  /// Lines per work unit handed to a worker.
  std::size_t chunk_lines = 4096;
};

struct ScanFlagged {
  std::size_t line_index;  // zero-based
  std::string graph6;
  ImaginaryRootCertificate certificate;
};

struct ScanSkipped {
  std::size_t line_index;
  std::string message;
};

struct ScanReport {
  std::size_t input_count = 0;
  std::vector<ScanFlagged> flagged;
  std::vector<ScanSkipped> skipped;
  int max_order_seen = 0;
  /// Wall-clock time; not part of the serialized report so runs compare
  /// byte-identical.
  double elapsed_seconds = 0.0;
};

/// Certifies every graph6 line; flagged entries are those whose independence
/// polynomial has a purely imaginary root. Lines are processed in fixed-size
/// chunks by a worker pool and merged by chunk index, so the report is
/// independent of the worker count.
ScanReport scan_lines(const std::vector<std::string>& lines, const ScanOptions& options);
ScanReport scan_stream(std::istream& in, const ScanOptions& options);
ScanReport scan_file(const std::string& path, const ScanOptions& options);

}  // namespace indroots
