#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "deeprd/errors.hpp"

namespace deeprd {

/// Dense node index. Valid ids are < node_count() of the owning graph.
using NodeId = std::uint32_t;

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph in a compact CSR layout. Successor lists keep the
/// insertion order of construction and carry no duplicates. A built graph is
/// safe to share across concurrent readers; nothing mutates it after build()
/// (the lazy in-adjacency is built under a once_flag).
class DirectedGraph {
 public:
  DirectedGraph() = default;

  NodeId node_count() const { return node_count_; }
  std::uint64_t edge_count() const { return targets_.size(); }

  std::span<const NodeId> successors(NodeId v) const {
    check_node(v);
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::uint32_t out_degree(NodeId v) const {
    check_node(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  /// In-adjacency, materialized on first use and cached.
  std::span<const NodeId> predecessors(NodeId v) const;

  /// In-degrees without materializing the transpose (one pass over edges).
  std::vector<std::uint32_t> in_degrees() const;

  bool has_edge(NodeId u, NodeId v) const {
    for (NodeId t : successors(u))
      if (t == v) return true;
    return false;
  }

  /// Edge enumeration in (source id, insertion) order.
  std::vector<Edge> edges() const;

  /// Duplicate records dropped while building this graph.
  std::uint64_t duplicate_edges_dropped() const { return duplicates_dropped_; }

  void check_node(NodeId v) const {
    if (v >= node_count_)
      throw DomainError("invalid node id " + std::to_string(v) + " (node count " +
                        std::to_string(node_count_) + ")");
  }

 private:
  friend class GraphBuilder;

  struct Transpose {
    std::once_flag once;
    std::vector<std::uint64_t> offsets;
    std::vector<NodeId> targets;
  };

  NodeId node_count_ = 0;
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<NodeId> targets_;
  std::uint64_t duplicates_dropped_ = 0;
  // shared so copies of an immutable graph reuse one cached transpose
  std::shared_ptr<Transpose> transpose_ = std::make_shared<Transpose>();
};

/// Single-writer accumulator. Duplicate edges are dropped at build time and
/// counted; node_count ends up as 1 + max id seen (0 for no input).
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::uint64_t reserve_edges) { edges_.reserve(reserve_edges); }

  void add_edge(NodeId from, NodeId to) {
    edges_.push_back({from, to});
    const NodeId hi = from > to ? from : to;
    if (hi >= node_count_) node_count_ = hi + 1;
  }

  void ensure_node(NodeId v) {
    if (v >= node_count_) node_count_ = v + 1;
  }

  std::uint64_t pending_edges() const { return edges_.size(); }

  /// Finalizes into a CSR graph, consuming the accumulated edges.
  DirectedGraph build();

 private:
  std::vector<Edge> edges_;
  NodeId node_count_ = 0;
};

DirectedGraph from_edge_list(std::span<const Edge> edges);

inline DirectedGraph from_edge_list(const std::vector<Edge>& edges) {
  return from_edge_list(std::span<const Edge>(edges));
}

/// Relabels every node of `g` through `perm` (perm[old] = new). `perm` must be
/// a permutation of [0, node_count).
DirectedGraph apply_node_permutation(const DirectedGraph& g, std::span<const NodeId> perm);

}  // namespace deeprd
