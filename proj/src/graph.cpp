#include "deeprd/graph.hpp"

#include <algorithm>

namespace deeprd {

std::span<const NodeId> DirectedGraph::predecessors(NodeId v) const {
  check_node(v);
  Transpose& t = *transpose_;
  std::call_once(t.once, [&] {
    std::vector<std::uint64_t> offsets(node_count_ + 1, 0);
    for (NodeId target : targets_) offsets[target + 1]++;
    for (NodeId i = 0; i < node_count_; ++i) offsets[i + 1] += offsets[i];
    std::vector<NodeId> targets(targets_.size());
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (NodeId u = 0; u < node_count_; ++u)
      for (std::uint64_t i = offsets_[u]; i < offsets_[u + 1]; ++i)
        targets[cursor[targets_[i]]++] = u;
    t.offsets = std::move(offsets);
    t.targets = std::move(targets);
  });
  return {t.targets.data() + t.offsets[v], t.targets.data() + t.offsets[v + 1]};
}

std::vector<std::uint32_t> DirectedGraph::in_degrees() const {
  std::vector<std::uint32_t> deg(node_count_, 0);
  for (NodeId target : targets_) deg[target]++;
  return deg;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(targets_.size());
  for (NodeId u = 0; u < node_count_; ++u)
    for (std::uint64_t i = offsets_[u]; i < offsets_[u + 1]; ++i)
      out.push_back({u, targets_[i]});
  return out;
}

DirectedGraph GraphBuilder::build() {
  DirectedGraph g;
  g.node_count_ = node_count_;
  if (node_count_ == 0) return g;

  // Stable counting sort by source keeps each node's successors in insertion
  // order; duplicates are then dropped with an epoch-stamped seen array.
  std::vector<std::uint64_t> counts(node_count_ + 1, 0);
  for (const Edge& e : edges_) counts[e.from + 1]++;
  for (NodeId i = 0; i < node_count_; ++i) counts[i + 1] += counts[i];

  std::vector<NodeId> sorted(edges_.size());
  std::vector<std::uint64_t> cursor(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges_) sorted[cursor[e.from]++] = e.to;
  edges_.clear();
  edges_.shrink_to_fit();

  std::vector<NodeId> stamp(node_count_, 0);
  g.offsets_.assign(node_count_ + 1, 0);
  g.targets_.reserve(sorted.size());
  std::uint64_t dropped = 0;
  for (NodeId u = 0; u < node_count_; ++u) {
    const NodeId epoch = u + 1;
    for (std::uint64_t i = counts[u]; i < counts[u + 1]; ++i) {
      const NodeId v = sorted[i];
      if (stamp[v] == epoch) {
        dropped++;
        continue;
      }
      stamp[v] = epoch;
      g.targets_.push_back(v);
    }
    g.offsets_[u + 1] = g.targets_.size();
  }
  g.duplicates_dropped_ = dropped;
  return g;
}

DirectedGraph from_edge_list(std::span<const Edge> edges) {
  GraphBuilder b(edges.size());
  for (const Edge& e : edges) b.add_edge(e.from, e.to);
  return b.build();
}

DirectedGraph apply_node_permutation(const DirectedGraph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count())
    throw DomainError("permutation size does not match node count");
  GraphBuilder b(g.edge_count());
  for (NodeId v = 0; v < g.node_count(); ++v) b.ensure_node(perm[v]);
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.successors(u)) b.add_edge(perm[u], perm[v]);
  return b.build();
}

}  // namespace deeprd
