#include "deeprd/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace deeprd {

namespace {

NodeId parse_node_field(std::string_view field, std::size_t line_no) {
  if (field.empty())
    throw ParseError("line " + std::to_string(line_no) + ": empty node field", line_no);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected non-negative integer, got '" +
                         std::string(field) + "'",
                     line_no);
  if (value > 0xffffffffULL)
    throw ParseError("line " + std::to_string(line_no) + ": node id out of range", line_no);
  return static_cast<NodeId>(value);
}

}  // namespace

IngestResult ingest_stream(std::istream& in, const EdgeListSource& options) {
  IngestResult result;
  GraphBuilder builder;
  std::unordered_map<std::string, NodeId> intern;
  std::string line;
  std::size_t line_no = 0;

  auto resolve = [&](std::string_view field) -> NodeId {
    if (!options.intern_strings) return parse_node_field(field, line_no);
    if (field.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty node field", line_no);
    auto [it, inserted] = intern.emplace(std::string(field), static_cast<NodeId>(intern.size()));
    if (inserted) result.interned_names.emplace_back(field);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t cut = line.find(options.delimiter);
    if (cut == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected two fields separated by '" +
                           std::string(1, options.delimiter) + "'",
                       line_no);
    if (line.find(options.delimiter, cut + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": more than two fields", line_no);
    const NodeId u = resolve(std::string_view(line).substr(0, cut));
    const NodeId v = resolve(std::string_view(line).substr(cut + 1));
    builder.add_edge(u, v);
    if (!options.declared_directed) builder.add_edge(v, u);
    result.records++;
  }
  if (in.bad()) throw IoError("I/O error while reading edge list");
  result.graph = builder.build();
  return result;
}

IngestResult ingest_stream(const EdgeListSource& source) {
  if (source.use_buffer) {
    std::istringstream in(source.buffer);
    return ingest_stream(in, source);
  }
  std::ifstream in(source.path);
  if (!in) throw IoError("cannot open edge list: " + source.path);
  return ingest_stream(in, source);
}

}  // namespace deeprd
