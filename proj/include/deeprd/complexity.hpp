#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "deeprd/graph.hpp"

namespace deeprd {

inline constexpr std::uint64_t kUnreachableRaw = ~std::uint64_t{0};

/// Count of BFS hops/iterations, or the distinguished Unreachable value.
/// Unreachable compares greater than every finite count and is never exposed
/// as a plain integer: hops() refuses to return it.
template <class Tag>
class HopCount {
 public:
  static constexpr HopCount finite(std::uint64_t h) { return HopCount(h); }
  static constexpr HopCount unreachable() { return HopCount(kUnreachableRaw); }
  static constexpr HopCount from_raw(std::uint64_t raw) { return HopCount(raw); }

  constexpr bool reachable() const { return raw_ != kUnreachableRaw; }
  constexpr std::uint64_t hops() const {
    if (!reachable()) throw DomainError("hops() on an Unreachable value");
    return raw_;
  }
  constexpr std::uint64_t raw() const { return raw_; }

  friend constexpr bool operator==(HopCount, HopCount) = default;
  friend constexpr auto operator<=>(HopCount a, HopCount b) { return a.raw_ <=> b.raw_; }

 private:
  explicit constexpr HopCount(std::uint64_t raw) : raw_(raw) {}
  std::uint64_t raw_;
};

using Hops = HopCount<struct HopsTag>;
using Lookahead = HopCount<struct LookaheadTag>;

/// Histogram over finite hop values plus an unreachable tally. Mass is stored
/// as double so merged (unit-normalized) profiles can reuse the type; every
/// non-merged path only ever adds whole occurrences.
class HopHistogram {
 public:
  void add(std::uint64_t value, double weight = 1.0) {
    counts_[value] += weight;
    finite_mass_ += weight;
  }
  void add_unreachable(double weight = 1.0) { unreachable_ += weight; }

  /// Additive merge; associative and commutative, so partial histograms from
  /// parallel workers combine to the same result in any order.
  void merge(const HopHistogram& other) {
    for (const auto& [value, mass] : other.counts_) {
      counts_[value] += mass;
      finite_mass_ += mass;
    }
    unreachable_ += other.unreachable_;
    sampled_sources += other.sampled_sources;
    total_sources += other.total_sources;
  }

  void scale(double factor) {
    for (auto& [value, mass] : counts_) mass *= factor;
    finite_mass_ *= factor;
    unreachable_ *= factor;
  }

  const std::map<std::uint64_t, double>& counts() const { return counts_; }
  double finite_mass() const { return finite_mass_; }
  double unreachable_count() const { return unreachable_; }
  double total_mass() const { return finite_mass_ + unreachable_; }
  bool empty() const { return counts_.empty(); }

  /// Nearest-rank percentile over finite values: the smallest value whose
  /// cumulative mass reaches q% of the finite mass. q=0 gives the minimum.
  std::uint64_t percentile(double q) const {
    if (counts_.empty()) throw DomainError("percentile of an empty histogram");
    if (q < 0.0 || q > 100.0) throw DomainError("quantile out of [0,100]");
    const double target = finite_mass_ * (q / 100.0);
    double cumulative = 0.0;
    for (const auto& [value, mass] : counts_) {
      cumulative += mass;
      if (cumulative + 1e-9 >= target) return value;
    }
    return counts_.rbegin()->first;
  }

  std::uint64_t sampled_sources = 0;
  std::uint64_t total_sources = 0;

 private:
  std::map<std::uint64_t, double> counts_;
  double unreachable_ = 0.0;
  double finite_mass_ = 0.0;
};

namespace detail {

inline void check_node_generic(std::uint32_t n, NodeId v) {
  if (v >= n)
    throw DomainError("invalid node id " + std::to_string(v) + " (node count " +
                      std::to_string(n) + ")");
}

/// Reusable buffers for repeated from-source sweeps over one graph.
struct LookaheadScratch {
  std::vector<std::uint64_t> origin;       // node_count * words, current stride
  std::vector<NodeId> touched;             // nodes with nonzero origin words
  std::vector<std::uint32_t> visit_epoch;  // epoch-stamped visited marks
  std::uint32_t epoch = 0;
  std::size_t words = 0;
  std::vector<NodeId> frontier, next_frontier, stack;

  void prepare(NodeId node_count, std::size_t mask_words) {
    if (visit_epoch.size() != node_count) {
      visit_epoch.assign(node_count, 0);
      epoch = 0;
    }
    ++epoch;
    if (epoch == 0) {  // wrapped
      visit_epoch.assign(node_count, 0);
      epoch = 1;
    }
    const std::size_t need = static_cast<std::size_t>(node_count) * mask_words;
    if (mask_words != words || origin.size() < need) {
      origin.assign(need, 0);
      words = mask_words;
    } else {
      for (NodeId v : touched) {
        std::uint64_t* m = origin.data() + static_cast<std::size_t>(v) * words;
        for (std::size_t w = 0; w < words; ++w) m[w] = 0;
      }
    }
    touched.clear();
    frontier.clear();
    next_frontier.clear();
    stack.clear();
  }

  bool visited(NodeId v) const { return visit_epoch[v] == epoch; }
  void mark(NodeId v) { visit_epoch[v] = epoch; }
  std::uint64_t* mask(NodeId v) { return origin.data() + static_cast<std::size_t>(v) * words; }
};

}  // namespace detail

/// Shortest-path distance from s to t by layered BFS: 0 when s == t,
/// Unreachable when no directed path exists.
template <class G>
Hops distance(const G& g, NodeId s, NodeId t) {
  const NodeId n = g.node_count();
  detail::check_node_generic(n, s);
  detail::check_node_generic(n, t);
  if (s == t) return Hops::finite(0);

  std::vector<char> visited(n, 0);
  visited[s] = 1;
  std::vector<NodeId> frontier, next;
  bool goal_in_frontier = false;
  for (NodeId c : g.successors(s)) {
    if (visited[c]) continue;
    visited[c] = 1;
    frontier.push_back(c);
    if (c == t) goal_in_frontier = true;
  }
  std::uint64_t d = 1;
  while (!frontier.empty()) {
    if (goal_in_frontier) return Hops::finite(d);
    next.clear();
    goal_in_frontier = false;
    for (NodeId v : frontier) {
      for (NodeId c : g.successors(v)) {
        if (visited[c]) continue;
        visited[c] = 1;
        next.push_back(c);
        if (c == t) goal_in_frontier = true;
      }
    }
    frontier.swap(next);
    ++d;
  }
  return Hops::unreachable();
}

/// Lookahead from s to t: the BFS layer at which either t enters the frontier
/// or some single child of s is an origin of every frontier node (the early
/// stop). Returns 0 when s == t and Unreachable when t cannot be reached at
/// all — when the early stop fires first, plain BFS keeps expanding to settle
/// reachability. Origin sets are fixed-width bitmasks over the children of s.
/// Self-loops on s are ignored (a self-loop is never a step toward t).
template <class G>
Lookahead lookahead(const G& g, NodeId s, NodeId t) {
  const NodeId n = g.node_count();
  detail::check_node_generic(n, s);
  detail::check_node_generic(n, t);
  if (s == t) return Lookahead::finite(0);

  std::vector<NodeId> children;
  for (NodeId c : g.successors(s))
    if (c != s) children.push_back(c);
  const std::size_t b = children.size();
  if (b == 0) return Lookahead::unreachable();
  const std::size_t words = (b + 63) / 64;

  std::vector<std::uint64_t> origin(static_cast<std::size_t>(n) * words, 0);
  std::vector<char> visited(n, 0);
  visited[s] = 1;
  std::vector<NodeId> frontier, next;
  bool goal_in_frontier = false;
  for (std::size_t i = 0; i < b; ++i) {
    const NodeId c = children[i];
    origin[static_cast<std::size_t>(c) * words + i / 64] |= std::uint64_t{1} << (i % 64);
    if (!visited[c]) {
      visited[c] = 1;
      frontier.push_back(c);
      if (c == t) goal_in_frontier = true;
    }
  }

  std::vector<std::uint64_t> common(words);
  std::uint64_t layer = 1;
  while (!frontier.empty()) {
    if (goal_in_frontier) return Lookahead::finite(layer);

    for (std::size_t w = 0; w < words; ++w) common[w] = ~std::uint64_t{0};
    common[words - 1] = (b % 64 == 0) ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << (b % 64)) - 1);
    bool any = true;
    for (NodeId v : frontier) {
      const std::uint64_t* m = origin.data() + static_cast<std::size_t>(v) * words;
      any = false;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] &= m[w];
        any = any || common[w] != 0;
      }
      if (!any) break;
    }
    if (any) {
      // Early stop: every surviving path runs through one child of s. The
      // layer index is the answer provided t is reachable at all.
      while (!frontier.empty()) {
        next.clear();
        for (NodeId v : frontier) {
          for (NodeId c : g.successors(v)) {
            if (visited[c]) continue;
            visited[c] = 1;
            if (c == t) return Lookahead::finite(layer);
            next.push_back(c);
          }
        }
        frontier.swap(next);
      }
      return Lookahead::unreachable();
    }

    next.clear();
    goal_in_frontier = false;
    for (NodeId v : frontier) {
      const std::uint64_t* mv = origin.data() + static_cast<std::size_t>(v) * words;
      for (NodeId c : g.successors(v)) {
        std::uint64_t* mc = origin.data() + static_cast<std::size_t>(c) * words;
        for (std::size_t w = 0; w < words; ++w) mc[w] |= mv[w];
        if (!visited[c]) {
          visited[c] = 1;
          next.push_back(c);
          if (c == t) goal_in_frontier = true;
        }
      }
    }
    frontier.swap(next);
    ++layer;
  }
  return Lookahead::unreachable();
}

namespace detail {

/// From-source sweep writing raw hop values (kUnreachableRaw when absent).
/// out[s] = 0; nodes entering the frontier at layer d get d; once the early
/// stop fires at layer l, every not-yet-assigned node reachable from the
/// frontier gets l; everything else stays unreachable. Matches the per-pair
/// lookahead for every target.
template <class G>
void lookaheads_from_source_raw(const G& g, NodeId s, LookaheadScratch& ws,
                                std::vector<std::uint64_t>& out) {
  const NodeId n = g.node_count();
  check_node_generic(n, s);
  out.assign(n, kUnreachableRaw);
  out[s] = 0;

  std::vector<NodeId> children;
  for (NodeId c : g.successors(s))
    if (c != s) children.push_back(c);
  const std::size_t b = children.size();
  if (b == 0) return;
  const std::size_t words = (b + 63) / 64;
  ws.prepare(n, words);

  ws.mark(s);
  for (std::size_t i = 0; i < b; ++i) {
    const NodeId c = children[i];
    ws.mask(c)[i / 64] |= std::uint64_t{1} << (i % 64);
    ws.touched.push_back(c);
    if (!ws.visited(c)) {
      ws.mark(c);
      ws.frontier.push_back(c);
    }
  }

  std::vector<std::uint64_t> common(words);
  std::uint64_t layer = 1;
  bool stopped = false;
  while (!ws.frontier.empty()) {
    for (std::size_t w = 0; w < words; ++w) common[w] = ~std::uint64_t{0};
    common[words - 1] = (b % 64 == 0) ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << (b % 64)) - 1);
    bool any = true;
    for (NodeId v : ws.frontier) {
      const std::uint64_t* m = ws.mask(v);
      any = false;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] &= m[w];
        any = any || common[w] != 0;
      }
      if (!any) break;
    }
    if (any) {
      stopped = true;
      break;
    }

    ws.next_frontier.clear();
    for (NodeId v : ws.frontier) {
      const std::uint64_t* mv = ws.mask(v);
      for (NodeId c : g.successors(v)) {
        std::uint64_t* mc = ws.mask(c);
        bool was_zero = true;
        for (std::size_t w = 0; w < words; ++w) {
          was_zero = was_zero && mc[w] == 0;
          mc[w] |= mv[w];
        }
        if (was_zero) ws.touched.push_back(c);
        if (!ws.visited(c)) {
          ws.mark(c);
          ws.next_frontier.push_back(c);
        }
      }
    }
    for (NodeId v : ws.frontier) out[v] = layer;
    ws.frontier.swap(ws.next_frontier);
    ++layer;
  }

  if (stopped) {
    ws.stack.clear();
    for (NodeId v : ws.frontier) {
      if (out[v] != kUnreachableRaw) continue;
      out[v] = layer;
      ws.stack.push_back(v);
    }
    while (!ws.stack.empty()) {
      const NodeId v = ws.stack.back();
      ws.stack.pop_back();
      for (NodeId c : g.successors(v)) {
        if (out[c] != kUnreachableRaw) continue;
        out[c] = layer;
        ws.stack.push_back(c);
      }
    }
  }
}

}  // namespace detail

/// Lookahead from s to every node, one sweep. Equal to calling lookahead()
/// per target; unreachable nodes carry the Unreachable value.
template <class G>
std::vector<Lookahead> lookaheads_from_source(const G& g, NodeId s) {
  detail::LookaheadScratch ws;
  std::vector<std::uint64_t> raw;
  detail::lookaheads_from_source_raw(g, s, ws, raw);
  std::vector<Lookahead> out;
  out.reserve(raw.size());
  for (std::uint64_t r : raw) out.push_back(Lookahead::from_raw(r));
  return out;
}

/// Histogram of shortest-path lengths from each source to every other node it
/// reaches (self-pairs excluded). Default sources: all nodes. Workers own
/// partial histograms merged by addition, so results do not depend on jobs.
HopHistogram pairwise_distance_distribution(const DirectedGraph& g,
                                            std::span<const NodeId> sources,
                                            unsigned jobs = 1);
HopHistogram pairwise_distance_distribution(const DirectedGraph& g, unsigned jobs = 1);

/// Aggregated lookaheads_from_source over the sample (self-pairs excluded).
HopHistogram lookahead_distribution(const DirectedGraph& g, std::span<const NodeId> sources,
                                    unsigned jobs = 1);

/// Out-degree histogram over all nodes.
HopHistogram branch_distribution(const DirectedGraph& g);

}  // namespace deeprd
