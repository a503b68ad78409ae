#include "deeprd/complexity.hpp"

#include <numeric>
#include <thread>

namespace deeprd {

namespace {

/// Splits [0, count) into contiguous chunks, one worker thread per chunk.
/// fn(chunk_begin, chunk_end, chunk_index) must only touch chunk-local state.
template <class F>
void parallel_chunks(std::size_t count, unsigned jobs, F&& fn) {
  if (jobs <= 1 || count <= 1) {
    if (count > 0) fn(std::size_t{0}, count, 0u);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

/// Per-depth tallies kept flat during a sweep and folded into the map once.
struct DepthTally {
  std::vector<std::uint64_t> by_depth;
  std::uint64_t unreachable = 0;

  void hit(std::uint64_t depth, std::uint64_t count = 1) {
    if (depth >= by_depth.size()) by_depth.resize(depth + 1, 0);
    by_depth[depth] += count;
  }
  void fold_into(HopHistogram& h) const {
    for (std::uint64_t d = 0; d < by_depth.size(); ++d)
      if (by_depth[d]) h.add(d, static_cast<double>(by_depth[d]));
    h.add_unreachable(static_cast<double>(unreachable));
  }
};

}  // namespace

HopHistogram pairwise_distance_distribution(const DirectedGraph& g,
                                            std::span<const NodeId> sources, unsigned jobs) {
  const NodeId n = g.node_count();
  for (NodeId s : sources) g.check_node(s);

  std::vector<HopHistogram> partial(std::max(1u, jobs));
  parallel_chunks(sources.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    DepthTally tally;
    std::vector<std::uint32_t> epoch_of(n, 0);
    std::uint32_t epoch = 0;
    std::vector<NodeId> frontier, next;
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId s = sources[i];
      ++epoch;
      epoch_of[s] = epoch;
      frontier.clear();
      for (NodeId c : g.successors(s)) {
        if (epoch_of[c] == epoch) continue;
        epoch_of[c] = epoch;
        frontier.push_back(c);
      }
      std::uint64_t d = 1;
      std::uint64_t reached = 0;
      while (!frontier.empty()) {
        tally.hit(d, frontier.size());
        reached += frontier.size();
        next.clear();
        for (NodeId v : frontier) {
          for (NodeId c : g.successors(v)) {
            if (epoch_of[c] == epoch) continue;
            epoch_of[c] = epoch;
            next.push_back(c);
          }
        }
        frontier.swap(next);
        ++d;
      }
      tally.unreachable += (n - 1) - reached;
    }
    tally.fold_into(partial[w]);
  });

  HopHistogram out;
  for (const HopHistogram& p : partial) out.merge(p);
  out.sampled_sources = sources.size();
  out.total_sources = n;
  return out;
}

HopHistogram pairwise_distance_distribution(const DirectedGraph& g, unsigned jobs) {
  std::vector<NodeId> all(g.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  return pairwise_distance_distribution(g, all, jobs);
}

HopHistogram lookahead_distribution(const DirectedGraph& g, std::span<const NodeId> sources,
                                    unsigned jobs) {
  if (sources.empty()) throw DomainError("lookahead_distribution: empty source sample");
  const NodeId n = g.node_count();
  for (NodeId s : sources) g.check_node(s);

  std::vector<HopHistogram> partial(std::max(1u, jobs));
  parallel_chunks(sources.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    DepthTally tally;
    detail::LookaheadScratch ws;
    std::vector<std::uint64_t> raw;
    for (std::size_t i = begin; i < end; ++i) {
      const NodeId s = sources[i];
      detail::lookaheads_from_source_raw(g, s, ws, raw);
      std::uint64_t finite = 0;
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || raw[v] == kUnreachableRaw) continue;
        tally.hit(raw[v]);
        ++finite;
      }
      tally.unreachable += (n - 1) - finite;
    }
    tally.fold_into(partial[w]);
  });

  HopHistogram out;
  for (const HopHistogram& p : partial) out.merge(p);
  out.sampled_sources = sources.size();
  out.total_sources = n;
  return out;
}

HopHistogram branch_distribution(const DirectedGraph& g) {
  HopHistogram h;
  for (NodeId v = 0; v < g.node_count(); ++v) h.add(g.out_degree(v));
  h.sampled_sources = g.node_count();
  h.total_sources = g.node_count();
  return h;
}

}  // namespace deeprd
