#include "indroots/scan.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <optional>
#include <thread>

#include "indroots/graph.hpp"
#include "indroots/indpoly.hpp"

namespace indroots {

namespace {

struct ChunkResult {
  std::vector<ScanFlagged> flagged;
  std::vector<ScanSkipped> skipped;
  int max_order_seen = 0;
  // First hard failure in the chunk when not lenient.
  std::optional<ScanSkipped> fatal;
};

void scan_one(const std::string& line, std::size_t index, const ScanOptions& options,
              ChunkResult& out) {
  Graph g = parse_graph6(line);
  if (g.order() > options.max_order) {
    throw GuardError("order " + std::to_string(g.order()) + " exceeds the scan limit of " +
                     std::to_string(options.max_order));
  }
  if (g.order() > out.max_order_seen) out.max_order_seen = g.order();
  ImaginaryRootCertificate cert = certify_imaginary(ind_poly(g));
  if (cert.verdict == Verdict::exists) {
    out.flagged.push_back({index, line, std::move(cert)});
  }
}

ChunkResult scan_chunk(const std::vector<std::string>& lines, std::size_t begin,
                       std::size_t end, const ScanOptions& options) {
  ChunkResult result;
  for (std::size_t i = begin; i < end; ++i) {
    try {
      scan_one(lines[i], i, options, result);
    } catch (const Error& e) {
      if (options.lenient) {
        result.skipped.push_back({i, e.what()});
      } else {
        result.fatal = ScanSkipped{i, e.what()};
        return result;
      }
    }
  }
  return result;
}

}  // namespace

ScanReport scan_lines(const std::vector<std::string>& lines, const ScanOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::size_t chunk = options.chunk_lines > 0 ? options.chunk_lines : 4096;
  std::size_t chunk_count = (lines.size() + chunk - 1) / chunk;
  std::vector<ChunkResult> results(chunk_count);

  auto run_chunk = [&](std::size_t c) {
    std::size_t begin = c * chunk;
    std::size_t end = std::min(lines.size(), begin + chunk);
    results[c] = scan_chunk(lines, begin, end, options);
  };

  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || chunk_count <= 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t c = next.fetch_add(1);
        if (c >= chunk_count) break;
        run_chunk(c);
      }
    };
    std::vector<std::thread> pool;
    unsigned spawn = std::min<std::size_t>(jobs, chunk_count);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Deterministic merge in chunk order.
  ScanReport report;
  report.input_count = lines.size();
  for (auto& r : results) {
    if (r.fatal) {
      throw Error("scan: line " + std::to_string(r.fatal->line_index) + ": " +
                  r.fatal->message);
    }
    for (auto& f : r.flagged) report.flagged.push_back(std::move(f));
    for (auto& s : r.skipped) report.skipped.push_back(std::move(s));
    if (r.max_order_seen > report.max_order_seen) report.max_order_seen = r.max_order_seen;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanReport scan_stream(std::istream& in, const ScanOptions& options) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // A final newline is a terminator, not an empty record.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return scan_lines(lines, options);
}

ScanReport scan_file(const std::string& path, const ScanOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("scan: cannot open " + path);
  return scan_stream(in, options);
}

}  // namespace indroots
