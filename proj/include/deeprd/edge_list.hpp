#pragma once

#include <istream>
#include <string>
#include <vector>

#include "deeprd/graph.hpp"

namespace deeprd {

/// One edge per line, two fields split by a single-character delimiter.
/// Lines beginning with '#' are comments; blank lines are skipped.
/// With intern_strings, fields may be arbitrary strings and are assigned dense
/// ids in first-seen order; otherwise both fields must be non-negative integers.
/// declared_directed=false inserts each record in both directions.
struct EdgeListSource {
  std::string path;                 // read from file unless use_buffer
  std::string buffer;
  bool use_buffer = false;
  char delimiter = '\t';
  bool declared_directed = true;
  bool intern_strings = false;
};

struct IngestResult {
  DirectedGraph graph;
  std::vector<std::string> interned_names;  // index = NodeId; empty when not interning
  std::uint64_t records = 0;                // edge records parsed (before dedup)
};

/// Streams the source into a graph. Peak memory is proportional to the final
/// graph, not to the input text. Malformed records raise ParseError carrying
/// the 1-based line number; unreadable files raise IoError.
IngestResult ingest_stream(const EdgeListSource& source);
IngestResult ingest_stream(std::istream& in, const EdgeListSource& options);

}  // namespace deeprd
